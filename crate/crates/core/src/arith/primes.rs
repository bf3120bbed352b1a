/// Primes in `[lo, hi]`, restricted to `p > 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeRange {
    pub lo: u64,
    pub hi: u64,
}

impl PrimeRange {
    pub fn new(lo: u64, hi: u64) -> Self {
        Self { lo, hi }
    }
}

/// Sieve of Eratosthenes over `[0, hi]`.
fn sieve(hi: u64) -> Vec<bool> {
    let n = hi as usize;
    let mut composite = vec![false; n + 1];
    let mut i = 2usize;
    while i * i <= n {
        if !composite[i] {
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
        i += 1;
    }
    composite
}

/// Ascending primes in the range, excluding 2 and 3.
pub fn primes_in(range: PrimeRange) -> Vec<u64> {
    assert!(range.hi < 1 << 31, "prime range must stay below 2^31");
    if range.hi < 5 || range.hi < range.lo {
        return Vec::new();
    }
    let composite = sieve(range.hi);
    (range.lo.max(5)..=range.hi)
        .filter(|&k| !composite[k as usize])
        .collect()
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// `phi(p^a) = p^{a-1}(p-1)`.
pub fn euler_totient_prime_power(p: u64, a: u32) -> u64 {
    assert!(a >= 1);
    p.pow(a - 1) * (p - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(primes_in(PrimeRange::new(5, 20)), vec![5, 7, 11, 13, 17, 19]);
        assert!(primes_in(PrimeRange::new(24, 28)).is_empty());
        assert_eq!(primes_in(PrimeRange::new(5, 5)), vec![5]);
        assert_eq!(primes_in(PrimeRange::new(1, 7)), vec![5, 7]);
        assert_eq!(primes_in(PrimeRange::new(5, 97)).len(), 23);
    }

    #[test]
    fn sieve_agrees_with_trial_division() {
        let listed = primes_in(PrimeRange::new(5, 2000));
        let brute: Vec<u64> = (5..=2000).filter(|&n| is_prime(n)).collect();
        assert_eq!(listed, brute);
    }

    #[test]
    fn totients() {
        assert_eq!(euler_totient_prime_power(5, 1), 4);
        assert_eq!(euler_totient_prime_power(5, 2), 20);
        assert_eq!(euler_totient_prime_power(7, 2), 42);
    }
}

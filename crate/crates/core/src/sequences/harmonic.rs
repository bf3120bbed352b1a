use crate::arith::{prime_power, Residue};

/// `H_0..H_{p-1}` modulo `p^e` (with `H_0 = 0`) and the odd harmonic sum
/// `H'_{p-1} = 1 + 1/3 + ... + 1/(p-2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HarmonicTable {
    pub p: u64,
    pub e: u32,
    pub h: Vec<Residue>,
    pub h_odd: Residue,
}

impl HarmonicTable {
    pub fn modulus(&self) -> u64 {
        prime_power(self.p, self.e)
    }

    pub fn from_values(p: u64, e: u32, values: &[u64]) -> Option<Self> {
        let m = prime_power(p, e);
        if values.len() != p as usize || values.iter().any(|&v| v >= m) {
            return None;
        }
        let h = values.iter().map(|&v| Residue::new(v, m)).collect();
        Some(Self {
            p,
            e,
            h,
            h_odd: odd_harmonic(p, m),
        })
    }
}

fn odd_harmonic(p: u64, m: u64) -> Residue {
    (1..p)
        .step_by(2)
        .map(|j| Residue::new(j, m).inv().expect("j < p is a unit"))
        .fold(Residue::zero(m), |a, b| a + b)
}

pub fn harmonic_table(p: u64, e: u32) -> HarmonicTable {
    let m = prime_power(p, e);
    let mut h = Vec::with_capacity(p as usize);
    let mut acc = Residue::zero(m);
    h.push(acc);
    for k in 1..p {
        acc += Residue::new(k, m).inv().expect("k < p is a unit");
        h.push(acc);
    }
    HarmonicTable {
        p,
        e,
        h,
        h_odd: odd_harmonic(p, m),
    }
}

/// `S_k = sum_{r=1}^{(p-1)/2} r^k mod p^e`.
pub fn power_sum(k: u64, p: u64, e: u32) -> Residue {
    let m = prime_power(p, e);
    (1..=(p - 1) / 2)
        .map(|r| Residue::new(r, m).pow(k))
        .fold(Residue::zero(m), |a, b| a + b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_tables() {
        let t = harmonic_table(5, 1);
        let vals: Vec<u64> = t.h.iter().map(|r| r.value()).collect();
        assert_eq!(vals, vec![0, 1, 4, 1, 0]);
        assert_eq!(t.h_odd.value(), 3);
        assert!(harmonic_table(5, 2).h[4].is_zero());
    }

    #[test]
    fn power_sums() {
        assert_eq!(power_sum(2, 5, 2).value(), 5);
        assert_eq!(power_sum(3, 5, 2).value(), 9);
        assert_eq!(power_sum(1, 7, 1).value(), 6);
    }
}

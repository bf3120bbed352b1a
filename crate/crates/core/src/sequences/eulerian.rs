use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::SequenceError;
use crate::arith::{binomial_exact, binomial_general, binomial_mod, factorial, prime_power, to_biguint, ArithError, Residue};

/// Rows `1..=n` of Euler's triangle, grown on demand through the
/// recurrence `E(n,m) = (n-m) E(n-1,m-1) + (m+1) E(n-1,m)`.
#[derive(Debug, Clone, Default)]
pub struct EulerianTable {
    rows: Vec<Vec<BigInt>>,
}

impl EulerianTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn extend_to(&mut self, n: usize) {
        if self.rows.is_empty() && n >= 1 {
            self.rows.push(vec![BigInt::one()]);
        }
        while self.rows.len() < n {
            let k = self.rows.len() + 1;
            let next = recurrence_step(self.rows.last().expect("nonempty"), k);
            self.rows.push(next);
        }
    }

    /// Row `n >= 1`, i.e. `[E(n,0), ..., E(n,n-1)]`.
    pub fn row(&mut self, n: usize) -> &[BigInt] {
        assert!(n >= 1, "Eulerian rows start at n = 1");
        self.extend_to(n);
        &self.rows[n - 1]
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

fn recurrence_step(prev: &[BigInt], n: usize) -> Vec<BigInt> {
    (0..n)
        .map(|m| {
            let mut v = BigInt::zero();
            if m >= 1 {
                v += &prev[m - 1] * (n - m);
            }
            if m < prev.len() {
                v += &prev[m] * (m + 1);
            }
            v
        })
        .collect()
}

pub fn eulerian_row(n: usize) -> Vec<BigInt> {
    let mut t = EulerianTable::new();
    t.row(n).to_vec()
}

/// The same recurrence over `Z/modulus`.
pub fn eulerian_row_mod(n: usize, modulus: u64) -> Vec<Residue> {
    assert!(n >= 1);
    let mut row = vec![Residue::one(modulus)];
    for k in 2..=n {
        row = (0..k)
            .map(|m| {
                let mut v = Residue::zero(modulus);
                if m >= 1 {
                    v += row[m - 1] * Residue::new((k - m) as u64, modulus);
                }
                if m < row.len() {
                    v += row[m] * Residue::new((m + 1) as u64, modulus);
                }
                v
            })
            .collect();
    }
    row
}

/// Closed form `E(n,m) = sum_{k=0}^{m+1} (-1)^k C(n+1,k) (m+1-k)^n`.
pub fn eulerian_closed(n: u64, m: u64) -> BigInt {
    let exp = u32::try_from(n).expect("exponent fits");
    (0..=m + 1)
        .map(|k| {
            let term = binomial_exact(n + 1, k) * BigInt::from(m + 1 - k).pow(exp);
            if k % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// `E(n,m) mod p^e` from the closed form, for arbitrarily large `n >= 1`.
/// Requires `m + 1 < p` so that every binomial stays in the small-`k` regime.
pub fn eulerian_mod(n: &BigInt, m: u64, p: u64, e: u32) -> Result<Residue, ArithError> {
    if m + 1 >= p {
        return Err(ArithError::KTooLarge { k: m + 1, p });
    }
    let modulus = prime_power(p, e);
    let exp = to_biguint(n).expect("n is nonnegative");
    let top = n + BigInt::one();
    let mut acc = Residue::zero(modulus);
    for k in 0..=m + 1 {
        let term = binomial_mod(&top, k, p, e)? * Residue::new(m + 1 - k, modulus).pow_big(&exp);
        if k % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// Size of the multiset `{1^i, ..., n^i}` arrangements, `(in)!/(i!)^n`.
pub fn multiset_count(n: u64, i: u64) -> BigInt {
    factorial(i * n) / factorial(i).pow(n as u32)
}

pub const GENERALIZED_EULERIAN_CAP: u64 = 10_000_000;

/// Row `[E^{(i)}(n,0), ..., E^{(i)}(n, i(n-1))]` of generalized Eulerian
/// numbers, solved from `C(x,i)^n = sum_m E^{(i)}(n,m) C(x+m, in)`.
///
/// Evaluating at `x = in - t` only involves unknowns with `m >= t`, so the
/// system is triangular and is solved from `t = i(n-1)` downwards.
pub fn generalized_eulerian_row(n: u64, i: u64) -> Result<Vec<BigInt>, SequenceError> {
    if n == 0 || i == 0 {
        return Err(SequenceError::OutOfRange(format!(
            "generalized Eulerian row needs n, i >= 1 (got n = {n}, i = {i})"
        )));
    }
    if multiset_count(n, i) > BigInt::from(GENERALIZED_EULERIAN_CAP) {
        return Err(SequenceError::OutOfRange(format!(
            "(in)!/(i!)^n exceeds {GENERALIZED_EULERIAN_CAP} at n = {n}, i = {i}"
        )));
    }
    let top = i * (n - 1);
    let width = i * n;
    let mut row = vec![BigInt::zero(); top as usize + 1];
    for t in (0..=top).rev() {
        let x = BigInt::from(width) - BigInt::from(t);
        let mut rhs = binomial_general(&x, i).pow(n as u32);
        for m in t + 1..=top {
            rhs -= &row[m as usize] * binomial_general(&(&x + BigInt::from(m)), width);
        }
        let diag = binomial_general(&(&x + BigInt::from(t)), width);
        let (q, r) = rhs.div_rem(&diag);
        if !r.is_zero() || q < BigInt::zero() {
            return Err(SequenceError::NonIntegerSolution { n, i, m: t });
        }
        row[t as usize] = q;
    }
    Ok(row)
}

/// `N_n`: permutations of `n` letters with an even number of ascents.
pub fn even_ascent_count(n: usize) -> BigInt {
    eulerian_row(n).iter().step_by(2).sum()
}

/// `sum_m (-1)^m E(n,m)`.
pub fn alternating_row_sum(row: &[BigInt]) -> BigInt {
    row.iter()
        .enumerate()
        .map(|(m, v)| if m % 2 == 0 { v.clone() } else { -v })
        .sum()
}

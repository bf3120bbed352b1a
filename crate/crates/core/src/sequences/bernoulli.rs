use num_bigint::BigInt;
use num_traits::Zero;

use super::zigzag::ZigzagMod;
use super::SequenceError;
use crate::arith::{binomial_exact, prime_power, ExactRat, Residue};

pub const BERNOULLI_CAP: usize = 400;

/// `B_0..=B_n` from `sum_{k=0}^{n} C(n+1,k) B_k = 0`, so `B_1 = -1/2`.
pub fn bernoulli_exact(n: usize) -> Vec<ExactRat> {
    let mut b = Vec::with_capacity(n + 1);
    b.push(ExactRat::from_integer(BigInt::from(1)));
    extend_bernoulli(&mut b, n);
    b
}

/// Grows `b` (already holding `B_0..`) up to index `n`.
pub(crate) fn extend_bernoulli(b: &mut Vec<ExactRat>, n: usize) {
    while b.len() <= n {
        let m = b.len();
        if m >= 3 && m % 2 == 1 {
            b.push(ExactRat::zero());
            continue;
        }
        let mut acc = ExactRat::zero();
        for (k, bk) in b.iter().enumerate() {
            if !bk.is_zero() {
                acc += bk * ExactRat::from_integer(binomial_exact(m as u64 + 1, k as u64));
            }
        }
        b.push(-acc / ExactRat::from_integer(BigInt::from(m + 1)));
    }
}

/// `B_n mod p^e` through the Genocchi route.
pub fn bernoulli_mod(n: usize, p: u64, e: u32) -> Result<Residue, SequenceError> {
    ZigzagMod::build(n.max(1), prime_power(p, e)).bernoulli(n)
}

/// `G_k / k mod p^e`.
pub fn divided_genocchi(k: usize, p: u64, e: u32) -> Result<Residue, SequenceError> {
    ZigzagMod::build(k.max(1), prime_power(p, e)).divided_genocchi(k)
}

/// `B_k / k mod p^e` for `k >= 1`.
pub fn divided_bernoulli(k: usize, p: u64, e: u32) -> Result<Residue, SequenceError> {
    ZigzagMod::build(k.max(1), prime_power(p, e)).divided_bernoulli(k)
}

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::ExactRat;

/// `C(n, k)` for nonnegative `n`, `k`; zero when `k > n`.
pub fn binomial_exact(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `C(y, k) = y (y-1) ... (y-k+1) / k!` for any integer `y`, the
/// polynomial binomial used by the Worpitsky and Shanks identities.
pub fn binomial_general(y: &BigInt, k: u64) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= y - BigInt::from(i);
        den *= i + 1;
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    q
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

pub fn to_biguint(n: &BigInt) -> Option<BigUint> {
    match n.sign() {
        Sign::Minus => None,
        _ => Some(n.magnitude().clone()),
    }
}

/// `a/b`, or just `a` for integral values.
pub fn rat_to_string(r: &ExactRat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

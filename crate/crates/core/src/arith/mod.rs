//! Exact integers and rationals, residue rings `Z/m`, and the small
//! number-theoretic toolkit the sequence engines and checks are built on.

mod exact;
mod primes;
mod residue;
mod sqrt;

pub use exact::{binomial_exact, binomial_general, factorial, rat_to_string, to_biguint};
pub use primes::{euler_totient_prime_power, is_prime, primes_in, PrimeRange};
pub use residue::{binomial_mod, fermat_quotient, mod_inverse, mod_pow, Residue};
pub use sqrt::{represent_a2_plus_4b2, sqrt_mod_prime};

use thiserror::Error;

/// Arbitrary-precision signed integer.
pub type ExactInt = num_bigint::BigInt;
/// Reduced rational with positive denominator.
pub type ExactRat = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("{value} is not invertible modulo {modulus}")]
    NotInvertible { value: u64, modulus: u64 },
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u64, right: u64 },
    #[error("k = {k} is not below p = {p}; k! is not a unit")]
    KTooLarge { k: u64, p: u64 },
    #[error("{p} divides {a}")]
    DivByP { a: i64, p: u64 },
    #[error("{value} is not a square modulo {p}")]
    NonResidue { value: u64, p: u64 },
    #[error("{p} is not congruent to 1 mod 4")]
    WrongResidueClass { p: u64 },
    #[error("modulus must be positive")]
    ZeroModulus,
}

/// `p^e` as a `u64`; panics on overflow, which cannot happen for the
/// prime sizes handled here (`p < 2^16`, `e <= 4`).
pub fn prime_power(p: u64, e: u32) -> u64 {
    p.checked_pow(e).expect("prime power overflows u64")
}

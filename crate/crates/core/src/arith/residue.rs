use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::{prime_power, ArithError, ExactRat};

/// An element of `Z/m`, stored as its least nonnegative representative.
///
/// Arithmetic through the operator traits panics when the moduli differ;
/// use the `checked_*` methods where mixing can legitimately occur.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    value: u64,
    modulus: u64,
}

#[inline]
fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

impl Residue {
    pub fn new(value: u64, modulus: u64) -> Self {
        assert!(modulus > 0, "modulus must be positive");
        Self {
            value: value % modulus,
            modulus,
        }
    }

    pub fn from_i64(value: i64, modulus: u64) -> Self {
        assert!(modulus > 0, "modulus must be positive");
        let v = (value as i128).rem_euclid(modulus as i128) as u64;
        Self { value: v, modulus }
    }

    pub fn from_bigint(value: &BigInt, modulus: u64) -> Self {
        assert!(modulus > 0, "modulus must be positive");
        let m = BigInt::from(modulus);
        let v = value.mod_floor(&m).to_u64().expect("reduced value fits");
        Self { value: v, modulus }
    }

    /// `num * den^{-1}`; fails when the denominator is not a unit.
    pub fn from_rat(value: &ExactRat, modulus: u64) -> Result<Self, ArithError> {
        let num = Self::from_bigint(value.numer(), modulus);
        let den = Self::from_bigint(value.denom(), modulus);
        let inv = den.inv().map_err(|_| ArithError::NotInvertible {
            value: (value.denom() % BigInt::from(modulus)).to_u64().unwrap_or(0),
            modulus,
        })?;
        Ok(num * inv)
    }

    pub fn zero(modulus: u64) -> Self {
        Self::new(0, modulus)
    }

    pub fn one(modulus: u64) -> Self {
        Self::new(1, modulus)
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    fn same_modulus(self, other: Self) -> Result<(), ArithError> {
        if self.modulus == other.modulus {
            Ok(())
        } else {
            Err(ArithError::ModulusMismatch {
                left: self.modulus,
                right: other.modulus,
            })
        }
    }

    pub fn checked_add(self, other: Self) -> Result<Self, ArithError> {
        self.same_modulus(other)?;
        let s = self.value + other.value;
        let v = if s >= self.modulus { s - self.modulus } else { s };
        Ok(Self {
            value: v,
            modulus: self.modulus,
        })
    }

    pub fn checked_sub(self, other: Self) -> Result<Self, ArithError> {
        self.same_modulus(other)?;
        let v = if self.value >= other.value {
            self.value - other.value
        } else {
            self.modulus - (other.value - self.value)
        };
        Ok(Self {
            value: v,
            modulus: self.modulus,
        })
    }

    pub fn checked_mul(self, other: Self) -> Result<Self, ArithError> {
        self.same_modulus(other)?;
        Ok(Self {
            value: mulmod(self.value, other.value, self.modulus),
            modulus: self.modulus,
        })
    }

    pub fn checked_div(self, other: Self) -> Result<Self, ArithError> {
        self.same_modulus(other)?;
        Ok(self * other.inv()?)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm.
    pub fn inv(self) -> Result<Self, ArithError> {
        let m = self.modulus as i128;
        let (mut r0, mut r1) = (m, self.value as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        if r0 != 1 {
            return Err(ArithError::NotInvertible {
                value: self.value,
                modulus: self.modulus,
            });
        }
        Ok(Self {
            value: t0.rem_euclid(m) as u64,
            modulus: self.modulus,
        })
    }

    pub fn pow(self, mut exp: u64) -> Self {
        let m = self.modulus;
        let mut base = self.value;
        let mut acc = 1 % m;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mulmod(acc, base, m);
            }
            base = mulmod(base, base, m);
            exp >>= 1;
        }
        Self {
            value: acc,
            modulus: m,
        }
    }

    pub fn pow_big(self, exp: &BigUint) -> Self {
        let m = self.modulus;
        let mut acc = 1 % m;
        for i in (0..exp.bits()).rev() {
            acc = mulmod(acc, acc, m);
            if exp.bit(i) {
                acc = mulmod(acc, self.value, m);
            }
        }
        Self {
            value: acc,
            modulus: m,
        }
    }

    /// Multiply by a small signed integer.
    pub fn scale(self, k: i64) -> Self {
        self * Self::from_i64(k, self.modulus)
    }

    /// Image under `Z/m -> Z/d` for a divisor `d` of `m`.
    pub fn reduce(self, modulus: u64) -> Result<Self, ArithError> {
        if modulus == 0 || self.modulus % modulus != 0 {
            return Err(ArithError::ModulusMismatch {
                left: self.modulus,
                right: modulus,
            });
        }
        Ok(Self::new(self.value, modulus))
    }

    /// For `d | value` and `d | modulus`, the residue `value/d` modulo
    /// `modulus/d`. This is exact division of a lifted integer.
    pub fn divide_exact(self, d: u64) -> Option<Self> {
        if d == 0 || self.modulus % d != 0 || self.value % d != 0 {
            return None;
        }
        Some(Self::new(self.value / d, self.modulus / d))
    }

    /// Representative in `(-m/2, m/2]`.
    pub fn centered(self) -> i64 {
        if self.value > self.modulus / 2 {
            -((self.modulus - self.value) as i64)
        } else {
            self.value as i64
        }
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

macro_rules! forward_op {
    ($tr:ident, $method:ident, $checked:ident, $tra:ident, $ma:ident) => {
        impl $tr for Residue {
            type Output = Residue;
            fn $method(self, rhs: Residue) -> Residue {
                match self.$checked(rhs) {
                    Ok(r) => r,
                    Err(e) => panic!("{e}"),
                }
            }
        }
        impl $tra for Residue {
            fn $ma(&mut self, rhs: Residue) {
                *self = $tr::$method(*self, rhs);
            }
        }
    };
}

forward_op!(Add, add, checked_add, AddAssign, add_assign);
forward_op!(Sub, sub, checked_sub, SubAssign, sub_assign);
forward_op!(Mul, mul, checked_mul, MulAssign, mul_assign);

impl Neg for Residue {
    type Output = Residue;
    fn neg(self) -> Residue {
        Residue::zero(self.modulus) - self
    }
}

pub fn mod_inverse(a: Residue) -> Result<Residue, ArithError> {
    a.inv()
}

pub fn mod_pow(a: Residue, e: &BigUint) -> Residue {
    a.pow_big(e)
}

/// `C(n, k) mod p^e` through the falling factorial, valid whenever `k < p`
/// (so that `k!` is a unit). `n` may be arbitrarily large or negative.
pub fn binomial_mod(n: &BigInt, k: u64, p: u64, e: u32) -> Result<Residue, ArithError> {
    if k >= p {
        return Err(ArithError::KTooLarge { k, p });
    }
    let m = prime_power(p, e);
    let base = Residue::from_bigint(n, m);
    let mut num = Residue::one(m);
    let mut den = Residue::one(m);
    for i in 0..k {
        num *= base - Residue::new(i, m);
        den *= Residue::new(i + 1, m);
    }
    Ok(num * den.inv()?)
}

/// The Fermat quotient `q_a(p) = (a^{p-1} - 1)/p` reduced mod `p^e`.
///
/// Computed from `a^{p-1} mod p^{e+1}`, so the result carries full
/// precision `p^e` rather than being lifted from a coarser residue.
pub fn fermat_quotient(a: i64, p: u64, e: u32) -> Result<Residue, ArithError> {
    if (a as i128).rem_euclid(p as i128) == 0 {
        return Err(ArithError::DivByP { a, p });
    }
    let big = prime_power(p, e + 1);
    let x = Residue::from_i64(a, big).pow(p - 1) - Residue::one(big);
    Ok(x.divide_exact(p).expect("Fermat's little theorem"))
}

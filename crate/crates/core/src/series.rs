//! Truncated formal power series with exact rational coefficients.
//!
//! A series of order `N` carries coefficients of `t^0 .. t^N`; every ring
//! operation truncates at `N`. Composition is deliberately absent: every
//! generating function used here is reachable from `exp`, inversion,
//! differentiation and the ring operations.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::arith::{factorial, ExactRat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("series orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("constant term is zero; series is not invertible")]
    ZeroConstantTerm,
    #[error("coefficient index {index} is past order {order}")]
    IndexPastOrder { index: usize, order: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<ExactRat>,
}

pub const DEFAULT_ORDER: usize = 16;

impl PowerSeries {
    pub fn from_coeffs(mut coeffs: Vec<ExactRat>, order: usize) -> Self {
        coeffs.resize(order + 1, ExactRat::zero());
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_coeffs(Vec::new(), order)
    }

    pub fn constant(c: ExactRat, order: usize) -> Self {
        Self::from_coeffs(vec![c], order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(ExactRat::one(), order)
    }

    /// `c t^k`, truncated.
    pub fn monomial(c: ExactRat, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// `e^{ct} = sum c^n t^n / n!`.
    pub fn exp(c: &ExactRat, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = ExactRat::one();
        for n in 0..=order {
            if n > 0 {
                term = term * c / ExactRat::from_integer(BigInt::from(n));
            }
            coeffs.push(term.clone());
        }
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[ExactRat] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Result<&ExactRat, SeriesError> {
        self.coeffs.get(n).ok_or(SeriesError::IndexPastOrder {
            index: n,
            order: self.order(),
        })
    }

    fn check_order(&self, other: &Self) -> Result<(), SeriesError> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(SeriesError::OrderMismatch(self.order(), other.order()))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Self { coeffs })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(Self { coeffs })
    }

    /// Cauchy product truncated at the common order.
    pub fn try_mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        let n = self.order();
        let mut coeffs = vec![ExactRat::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Ok(Self { coeffs })
    }

    pub fn scale(&self, c: &ExactRat) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplicative inverse by the coefficient recurrence
    /// `b_n = -(1/a_0) sum_{k=1}^{n} a_k b_{n-k}`.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let inv0 = a0.recip();
        let n = self.order();
        let mut b: Vec<ExactRat> = Vec::with_capacity(n + 1);
        b.push(inv0.clone());
        for m in 1..=n {
            let mut acc = ExactRat::zero();
            for k in 1..=m {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * &b[m - k];
                }
            }
            b.push(-acc * &inv0);
        }
        Ok(Self { coeffs: b })
    }

    /// Termwise derivative; the result has order `N - 1` (order 0 stays 0).
    pub fn derive(&self) -> Self {
        let n = self.order();
        if n == 0 {
            return Self::zero(0);
        }
        let coeffs = (1..=n)
            .map(|k| &self.coeffs[k] * ExactRat::from_integer(BigInt::from(k)))
            .collect();
        Self { coeffs }
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs.iter().take(order + 1).cloned().collect(), order)
    }

    /// `n! [t^n]`, the exponential-generating-function coefficient.
    pub fn nth_coeff_times_factorial(&self, n: usize) -> Result<ExactRat, SeriesError> {
        let c = self.coeff(n)?;
        Ok(c * ExactRat::from_integer(factorial(n as u64)))
    }

    /// All `n! [t^n]` for `n = 0..=N`.
    pub fn egf_values(&self) -> Vec<ExactRat> {
        (0..=self.order())
            .map(|n| self.nth_coeff_times_factorial(n).expect("in range"))
            .collect()
    }
}

/// Generating functions assembled from `exp`, inversion and ring operations.
pub mod gf {
    use super::*;

    fn rat(n: i64) -> ExactRat {
        ExactRat::from_integer(BigInt::from(n))
    }

    pub fn cosh(order: usize) -> PowerSeries {
        let e = PowerSeries::exp(&rat(1), order);
        let f = PowerSeries::exp(&rat(-1), order);
        e.try_add(&f).unwrap().scale(&ExactRat::new(1.into(), 2.into()))
    }

    pub fn sech(order: usize) -> PowerSeries {
        cosh(order).invert().expect("cosh(0) = 1")
    }

    /// `sin t` and `cos t` from their alternating exponential coefficients.
    pub fn sin(order: usize) -> PowerSeries {
        let coeffs = (0..=order)
            .map(|n| match n % 4 {
                1 => factorial(n as u64),
                3 => -factorial(n as u64),
                _ => BigInt::zero(),
            })
            .map(|f| if f.is_zero() { ExactRat::zero() } else { ExactRat::from_integer(f).recip() })
            .collect();
        PowerSeries::from_coeffs(coeffs, order)
    }

    pub fn cos(order: usize) -> PowerSeries {
        let coeffs = (0..=order)
            .map(|n| match n % 4 {
                0 => factorial(n as u64),
                2 => -factorial(n as u64),
                _ => BigInt::zero(),
            })
            .map(|f| if f.is_zero() { ExactRat::zero() } else { ExactRat::from_integer(f).recip() })
            .collect();
        PowerSeries::from_coeffs(coeffs, order)
    }

    pub fn sec(order: usize) -> PowerSeries {
        cos(order).invert().expect("cos(0) = 1")
    }

    pub fn tan(order: usize) -> PowerSeries {
        sin(order).try_mul(&sec(order)).unwrap()
    }

    /// `2t / (e^t + 1)`, the Genocchi generating function.
    pub fn genocchi(order: usize) -> PowerSeries {
        let den = PowerSeries::exp(&rat(1), order)
            .try_add(&PowerSeries::one(order))
            .unwrap()
            .invert()
            .unwrap();
        PowerSeries::monomial(rat(2), 1, order).try_mul(&den).unwrap()
    }

    /// `2 e^{xt} / (e^t + 1)`, the Euler polynomial generating function at `x`.
    pub fn euler_polynomial(x: &ExactRat, order: usize) -> PowerSeries {
        let den = PowerSeries::exp(&rat(1), order)
            .try_add(&PowerSeries::one(order))
            .unwrap()
            .invert()
            .unwrap();
        PowerSeries::exp(x, order).scale(&rat(2)).try_mul(&den).unwrap()
    }

    /// `(1 - x) / (e^t - x)` for a rational `x != 1`.
    pub fn eulerian(x: &ExactRat, order: usize) -> Result<PowerSeries, SeriesError> {
        let den = PowerSeries::exp(&rat(1), order)
            .try_sub(&PowerSeries::constant(x.clone(), order))?
            .invert()?;
        Ok(den.scale(&(ExactRat::one() - x)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> ExactRat {
        ExactRat::new(n.into(), d.into())
    }

    fn int(n: i64) -> ExactRat {
        r(n, 1)
    }

    #[test]
    fn ring_operations() {
        let a = PowerSeries::from_coeffs(vec![int(1), int(1)], 2);
        let b = PowerSeries::from_coeffs(vec![int(1), int(-1)], 2);
        assert_eq!(
            a.try_mul(&b).unwrap(),
            PowerSeries::from_coeffs(vec![int(1), int(0), int(-1)], 2)
        );
        let s = PowerSeries::exp(&int(1), 3)
            .try_add(&PowerSeries::exp(&int(-1), 3))
            .unwrap();
        assert_eq!(s, PowerSeries::from_coeffs(vec![int(2), int(0), int(1), int(0)], 3));
        assert_eq!(PowerSeries::zero(3).try_add(&s).unwrap(), s);
        assert_eq!(
            a.try_add(&PowerSeries::zero(3)),
            Err(SeriesError::OrderMismatch(2, 3))
        );
    }

    #[test]
    fn inversion() {
        let g = PowerSeries::from_coeffs(vec![int(1), int(-1)], 3).invert().unwrap();
        assert_eq!(g, PowerSeries::from_coeffs(vec![int(1); 4], 3));
        let e = PowerSeries::exp(&int(1), 8);
        assert_eq!(e.invert().unwrap(), PowerSeries::exp(&int(-1), 8));
        assert_eq!(
            e.try_mul(&e.invert().unwrap()).unwrap(),
            PowerSeries::one(8)
        );
        let t = PowerSeries::monomial(int(1), 1, 4);
        assert_eq!(t.invert(), Err(SeriesError::ZeroConstantTerm));
    }

    #[test]
    fn derivative() {
        let t2 = PowerSeries::monomial(int(1), 2, 4);
        assert_eq!(t2.derive(), PowerSeries::monomial(int(2), 1, 3));
        let e = PowerSeries::exp(&int(1), 6);
        assert_eq!(e.derive(), e.truncate(5));
        assert_eq!(PowerSeries::constant(int(7), 3).derive(), PowerSeries::zero(2));
    }

    #[test]
    fn exp_coefficients() {
        assert_eq!(
            PowerSeries::exp(&int(1), 2),
            PowerSeries::from_coeffs(vec![int(1), int(1), r(1, 2)], 2)
        );
        assert_eq!(PowerSeries::exp(&int(0), 4), PowerSeries::one(4));
        assert_eq!(PowerSeries::exp(&r(1, 2), 2).coeff(2).unwrap(), &r(1, 8));
    }

    #[test]
    fn egf_coefficients() {
        let s = gf::sech(16);
        assert_eq!(s.nth_coeff_times_factorial(2).unwrap(), int(-1));
        assert_eq!(s.nth_coeff_times_factorial(3).unwrap(), int(0));
        assert_eq!(gf::genocchi(16).nth_coeff_times_factorial(4).unwrap(), int(1));
        assert_eq!(
            s.nth_coeff_times_factorial(17),
            Err(SeriesError::IndexPastOrder { index: 17, order: 16 })
        );
    }

    #[test]
    fn sec_plus_tan_solves_the_riccati_equation() {
        let n = 16;
        let y = gf::sec(n).try_add(&gf::tan(n)).unwrap();
        let lhs = y.derive().scale(&int(2));
        let rhs = y
            .try_mul(&y)
            .unwrap()
            .try_add(&PowerSeries::one(n))
            .unwrap()
            .truncate(n - 1);
        assert_eq!(lhs, rhs);
    }
}

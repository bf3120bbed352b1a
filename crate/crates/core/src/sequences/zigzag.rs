//! The boustrophedon (Seidel-Entringer-Arnold) triangle and everything read
//! off it: zigzag, secant, tangent, Euler, generalized Euler and Genocchi
//! numbers, over exact integers and over `Z/m`.

use std::ops::Add;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::eulerian::{alternating_row_sum, eulerian_row};
use super::SequenceError;
use crate::arith::{ArithError, Residue};

/// Fills the triangle `A(k,0) = 0`, `A(k,j) = A(k,j-1) + A(k-1,k-j)` with a
/// rolling row and returns the diagonal `A(k,k)` for `k = 0..=n`.
fn boustrophedon<T>(n: usize, zero: T, one: T) -> Vec<T>
where
    T: Clone + Add<Output = T>,
{
    let mut out = Vec::with_capacity(n + 1);
    out.push(one.clone());
    let mut row = vec![one];
    for k in 1..=n {
        let mut next = Vec::with_capacity(k + 1);
        next.push(zero.clone());
        for j in 1..=k {
            let v = next[j - 1].clone() + row[k - j].clone();
            next.push(v);
        }
        out.push(next[k].clone());
        row = next;
    }
    out
}

/// Zigzag numbers `1, 1, 1, 2, 5, 16, 61, 272, ...` for indices `0..=n`.
pub fn zigzag(n: usize) -> Vec<BigInt> {
    boustrophedon(n, BigInt::zero(), BigInt::one())
}

fn sign_of_half(n: usize) -> i64 {
    if (n / 2) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Euler numbers `E_n`: zero at odd `n`, `(-1)^{n/2}` times the secant
/// number at even `n`.
pub fn euler_numbers(n: usize) -> Vec<BigInt> {
    zigzag(n)
        .into_iter()
        .enumerate()
        .map(|(k, z)| if k % 2 == 1 { BigInt::zero() } else { z * sign_of_half(k) })
        .collect()
}

pub fn euler_number(n: usize) -> BigInt {
    euler_numbers(n).pop().expect("nonempty")
}

/// `Ê_n`: `E_n` at even `n`, the alternating Eulerian row sum at odd `n`.
pub fn generalized_euler(n: usize) -> BigInt {
    if n % 2 == 0 {
        euler_number(n)
    } else {
        alternating_row_sum(&eulerian_row(n))
    }
}

pub fn tangent_number(n: usize) -> Result<BigInt, SequenceError> {
    if n % 2 == 0 {
        return Err(SequenceError::EvenIndex(n));
    }
    Ok(zigzag(n).pop().expect("nonempty"))
}

/// `G_n` from the tangent numbers: `G_1 = 1`, `G_{2k+1} = 0` for `k >= 1`, and
/// `G_{2k} = (-1)^k k T_{2k-1} / 4^{k-1}`.
pub fn genocchi_from_tangent(n: usize, tangent: &BigInt) -> Result<BigInt, SequenceError> {
    if n == 1 {
        return Ok(BigInt::one());
    }
    if n % 2 == 1 {
        return Ok(BigInt::zero());
    }
    let k = n / 2;
    let num = tangent * BigInt::from(k);
    let den = BigInt::from(4).pow(k as u32 - 1);
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(SequenceError::InexactDivision(n));
    }
    Ok(if k % 2 == 0 { q } else { -q })
}

/// `G_1, ..., G_n` (index 0 holds `G_0 = 0`).
pub fn genocchi_numbers(n: usize) -> Result<Vec<BigInt>, SequenceError> {
    let z = zigzag(n.max(1));
    let mut out = vec![BigInt::zero()];
    for k in 1..=n {
        let t = if k % 2 == 0 { &z[k - 1] } else { &z[0] };
        out.push(genocchi_from_tangent(k, t)?);
    }
    Ok(out)
}

pub fn genocchi_number(n: usize) -> Result<BigInt, SequenceError> {
    if n == 0 {
        return Err(SequenceError::OutOfRange("Genocchi numbers start at n = 1".into()));
    }
    Ok(genocchi_numbers(n)?.pop().expect("nonempty"))
}

/// Zigzag numbers reduced modulo `m`, with the derived families read off
/// them by residue arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZigzagMod {
    modulus: u64,
    values: Vec<u64>,
}

impl ZigzagMod {
    /// Fills the triangle to index `n` in `O(n^2)` additions mod `m`.
    pub fn build(n: usize, modulus: u64) -> Self {
        let values = boustrophedon(n, Residue::zero(modulus), Residue::one(modulus))
            .into_iter()
            .map(Residue::value)
            .collect();
        Self { modulus, values }
    }

    pub fn from_values(values: Vec<u64>, modulus: u64) -> Self {
        assert!(values.iter().all(|&v| v < modulus));
        Self { modulus, values }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// Largest available index.
    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }

    pub fn reduce(&self, modulus: u64) -> Result<Self, ArithError> {
        if self.modulus % modulus != 0 {
            return Err(ArithError::ModulusMismatch {
                left: self.modulus,
                right: modulus,
            });
        }
        Ok(Self {
            modulus,
            values: self.values.iter().map(|v| v % modulus).collect(),
        })
    }

    pub fn zigzag(&self, n: usize) -> Residue {
        Residue::new(self.values[n], self.modulus)
    }

    pub fn euler(&self, n: usize) -> Residue {
        if n % 2 == 1 {
            Residue::zero(self.modulus)
        } else {
            self.zigzag(n).scale(sign_of_half(n))
        }
    }

    pub fn ehat(&self, n: usize) -> Residue {
        self.zigzag(n).scale(sign_of_half(n))
    }

    pub fn tangent(&self, n: usize) -> Result<Residue, SequenceError> {
        if n % 2 == 0 {
            return Err(SequenceError::EvenIndex(n));
        }
        Ok(self.zigzag(n))
    }

    /// `G_n mod m`; needs `m` odd so that 4 is a unit.
    pub fn genocchi(&self, n: usize) -> Result<Residue, SequenceError> {
        let m = self.modulus;
        if n == 1 {
            return Ok(Residue::one(m));
        }
        if n == 0 || n % 2 == 1 {
            return Ok(Residue::zero(m));
        }
        let k = n / 2;
        let four_pow = Residue::new(4, m).pow(k as u64 - 1).inv()?;
        let v = self.zigzag(n - 1).scale(k as i64) * four_pow;
        Ok(if k % 2 == 0 { v } else { -v })
    }

    /// Divided Genocchi number `G_k / k`.
    pub fn divided_genocchi(&self, k: usize) -> Result<Residue, SequenceError> {
        let g = self.genocchi(k)?;
        Ok(g * Residue::new(k as u64, self.modulus).inv()?)
    }

    /// `B_n` via `B_n = G_n / (2 (1 - 2^n))`; fails when `1 - 2^n` is not a
    /// unit.
    pub fn bernoulli(&self, n: usize) -> Result<Residue, SequenceError> {
        let m = self.modulus;
        match n {
            0 => return Ok(Residue::one(m)),
            1 => return Ok(Residue::from_i64(-1, m) * Residue::new(2, m).inv()?),
            _ if n % 2 == 1 => return Ok(Residue::zero(m)),
            _ => {}
        }
        let den = (Residue::one(m) - Residue::new(2, m).pow(n as u64)).scale(2);
        Ok(self.genocchi(n)? * den.inv()?)
    }

    pub fn divided_bernoulli(&self, k: usize) -> Result<Residue, SequenceError> {
        let b = self.bernoulli(k)?;
        Ok(b * Residue::new(k as u64, self.modulus).inv()?)
    }
}

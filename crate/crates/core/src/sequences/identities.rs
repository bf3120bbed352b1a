//! Registry of exact identities tying the sequence engines to each other and
//! to the series module. Every identity is checked over `ExactInt`/`ExactRat`
//! at a finite set of instances.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::bernoulli::bernoulli_exact;
use super::eulerian::{alternating_row_sum, eulerian_closed, eulerian_row, generalized_eulerian_row, multiset_count};
use super::zigzag::{euler_number, euler_numbers, generalized_euler, genocchi_numbers, tangent_number, zigzag};
use super::{SequenceError, GENERALIZED_EULERIAN_CAP};
use crate::arith::{binomial_exact, binomial_general, rat_to_string, ExactRat};
use crate::params::Params;
use crate::series::{gf, PowerSeries, DEFAULT_ORDER};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentityId {
    I01,
    I02,
    I03,
    I04,
    I05,
    I06,
    I07,
    I08,
    I09,
    I10,
    I11,
    I12,
    I13,
    I14,
    I15,
    I16,
    I17,
    I18,
    I19,
    I20,
    I21a,
    I21b,
    I22,
}

use IdentityId::*;

impl IdentityId {
    pub const ALL: [IdentityId; 23] = [
        I01, I02, I03, I04, I05, I06, I07, I08, I09, I10, I11, I12, I13, I14, I15, I16, I17, I18, I19, I20, I21a,
        I21b, I22,
    ];

    pub fn code(self) -> &'static str {
        match self {
            I01 => "I01",
            I02 => "I02",
            I03 => "I03",
            I04 => "I04",
            I05 => "I05",
            I06 => "I06",
            I07 => "I07",
            I08 => "I08",
            I09 => "I09",
            I10 => "I10",
            I11 => "I11",
            I12 => "I12",
            I13 => "I13",
            I14 => "I14",
            I15 => "I15",
            I16 => "I16",
            I17 => "I17",
            I18 => "I18",
            I19 => "I19",
            I20 => "I20",
            I21a => "I21a",
            I21b => "I21b",
            I22 => "I22",
        }
    }

    pub fn title(self) -> &'static str {
        match self {
            I01 => "Worpitsky: x^n = sum_m E(n,m) C(x+m,n)",
            I02 => "Shanks: C(x,i)^n = sum_m E^(i)(n,m) C(x+m,in)",
            I03 => "2^(n+1)(2^(n+1)-1) B_(n+1)/(n+1) = sum_m (-1)^m E(n,m)",
            I04 => "closed form = recurrence for E(n,m)",
            I05 => "sum_s C(2n,2s) E_2s = 0",
            I06 => "E_n + 2^(n-1) sum_k C(n,k) E_k / 2^k = 1",
            I07 => "E_n = 2^n E_n(1/2)",
            I08 => "S_2k = (-1)^k E_2k",
            I09 => "2 z(n+1) = sum_k C(n,k) z(k) z(n-k)",
            I10 => "2y' = y^2 + 1 for y = sec + tan",
            I11 => "Ehat_n = -G_(n+1) 2^n/(n+1), n odd",
            I12 => "T_(2n+1) = |G_(2n+2)| 4^n/(n+1)",
            I13 => "G_n = 2(1-2^n) B_n",
            I14 => "E_n = 1 + sum_(k=2)^(n+1) C(n+1,k) 2^(k-1) G_k/(n+1)",
            I15 => "sum_k k^i (n-k)^j convolution formula",
            I16 => "sum_k C(n,k) H_k = 2^n (H_n - sum_k 1/(k 2^k))",
            I17 => "binomial transform relations for b_k = H_k and b_k = k H_k",
            I18 => "sum_j (n-2j) H_j C(n,j) = 1 - 2^n",
            I19 => "sum_m (-1)^m (2m+3) E(n,m) = (n+2) sum_m (-1)^m E(n,m), n odd",
            I20 => "generating-function table",
            I21a => "E_2n as a (2n)x(2n) determinant",
            I21b => "E_2n as a double sum",
            I22 => "sum_m (-1)^m E(n,m) = 0, n even",
        }
    }

    /// Identities expected to fail as stated.
    pub fn flagged(self) -> bool {
        matches!(self, I15 | I21b)
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for IdentityId {
    type Err = SequenceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.code().eq_ignore_ascii_case(s))
            .ok_or_else(|| SequenceError::UnknownIdentity(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityResult {
    pub holds: bool,
    pub lhs: String,
    pub rhs: String,
}

impl IdentityResult {
    fn ints(lhs: BigInt, rhs: BigInt) -> Self {
        Self {
            holds: lhs == rhs,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }

    fn rats(lhs: ExactRat, rhs: ExactRat) -> Self {
        Self {
            holds: lhs == rhs,
            lhs: rat_to_string(&lhs),
            rhs: rat_to_string(&rhs),
        }
    }
}

/// Instance bounds for a sweep. `max_n` lowers the primary index cap of
/// every identity; `series_order` is the truncation order handed to the
/// series-backed identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdentityCaps {
    pub max_n: Option<u64>,
    pub series_order: usize,
}

impl Default for IdentityCaps {
    fn default() -> Self {
        Self {
            max_n: None,
            series_order: DEFAULT_ORDER,
        }
    }
}

impl IdentityCaps {
    fn cap(&self, default: u64) -> u64 {
        self.max_n.map_or(default, |m| m.min(default))
    }
}

const I20_X: [&str; 4] = ["2", "3", "1/2", "-1"];

/// Instances visited by a sweep, in a fixed order.
pub fn identity_instances(id: IdentityId, caps: &IdentityCaps) -> Vec<Params> {
    let order = caps.series_order as u64;
    let ns = |lo: u64, default: u64| (lo..=caps.cap(default)).map(|n| Params::new().with("n", n as i64)).collect();
    let with_order = |v: Vec<Params>| -> Vec<Params> {
        v.into_iter().map(|p| p.with("order", order as i64)).collect()
    };
    match id {
        I01 => (1..=caps.cap(10))
            .flat_map(|n| (-3..=6).map(move |x| Params::new().with("n", n as i64).with("x", x)))
            .collect(),
        I02 => {
            let mut out = Vec::new();
            for i in 1..=3u64 {
                for n in 1..=caps.cap(4) {
                    if multiset_count(n, i) > BigInt::from(GENERALIZED_EULERIAN_CAP) {
                        continue;
                    }
                    for x in -3..=(i * n) as i64 + 3 {
                        out.push(Params::new().with("i", i as i64).with("n", n as i64).with("x", x));
                    }
                }
            }
            out
        }
        I03 => ns(1, 25),
        I04 => (1..=caps.cap(30))
            .flat_map(|n| (0..n).map(move |m| Params::new().with("m", m as i64).with("n", n as i64)))
            .collect(),
        I05 => ns(1, 15),
        I06 => ns(0, 20),
        I07 => with_order(ns(0, 12.min(order))),
        I08 => with_order(
            (0..=caps.cap(6).min(order / 2))
                .map(|k| Params::new().with("k", k as i64))
                .collect(),
        ),
        I09 => ns(1, 20),
        I10 => with_order(
            (0..order.min(caps.cap(order)))
                .map(|k| Params::new().with("k", k as i64))
                .collect(),
        ),
        I11 => (1..=caps.cap(13)).step_by(2).map(|n| Params::new().with("n", n as i64)).collect(),
        I12 => with_order(ns(0, 6.min(order.saturating_sub(2) / 2))),
        I13 => ns(1, 25),
        I14 => ns(0, 20),
        I15 => {
            let mut out = Vec::new();
            for i in 1..=4 {
                for j in 1..=4 {
                    for n in 0..=caps.cap(8) {
                        out.push(Params::new().with("i", i).with("j", j).with("n", n as i64));
                    }
                }
            }
            out
        }
        I16 => ns(0, 20),
        I17 => {
            let mut out = Vec::new();
            for b in ["H", "kH"] {
                for form in ["difference", "inverse"] {
                    for n in 0..=caps.cap(15) {
                        out.push(Params::new().with_text("b", b).with_text("form", form).with("n", n as i64));
                    }
                }
            }
            out
        }
        I18 => ns(0, 20),
        I19 => (1..=caps.cap(15)).step_by(2).map(|n| Params::new().with("n", n as i64)).collect(),
        I20 => {
            let mut out = Vec::new();
            let mut push = |gf: &str, ns: Vec<u64>, x: Option<&str>| {
                for n in ns {
                    let mut p = Params::new().with_text("gf", gf).with("n", n as i64).with("order", order as i64);
                    if let Some(x) = x {
                        p = p.with_text("x", x);
                    }
                    out.push(p);
                }
            };
            let upto = |c: u64| (0..=caps.cap(c).min(order)).collect::<Vec<_>>();
            push("sech", upto(12), None);
            push("tan", upto(13).into_iter().filter(|n| n % 2 == 1).collect(), None);
            push("sec", upto(12).into_iter().filter(|n| n % 2 == 0).collect(), None);
            push("genocchi", upto(12).into_iter().filter(|&n| n >= 1).collect(), None);
            push("euler-polynomial", upto(12), None);
            for x in I20_X {
                push("eulerian", upto(10).into_iter().filter(|&n| n >= 1).collect(), Some(x));
            }
            out
        }
        I21a | I21b => ns(1, 5),
        I22 => (2..=caps.cap(20)).step_by(2).map(|n| Params::new().with("n", n as i64)).collect(),
    }
}

fn rat(n: i64) -> ExactRat {
    ExactRat::from_integer(BigInt::from(n))
}

fn big_rat(n: BigInt) -> ExactRat {
    ExactRat::from_integer(n)
}

fn pow2(n: u64) -> BigInt {
    BigInt::one() << n as usize
}

fn parse_rat(s: &str) -> Result<ExactRat, SequenceError> {
    let bad = || SequenceError::OutOfRange(format!("`{s}` is not a rational"));
    match s.split_once('/') {
        Some((a, b)) => {
            let den: BigInt = b.parse().map_err(|_| bad())?;
            if den.is_zero() {
                return Err(bad());
            }
            Ok(ExactRat::new(a.parse().map_err(|_| bad())?, den))
        }
        None => Ok(big_rat(s.parse().map_err(|_| bad())?)),
    }
}

fn harmonic(n: u64) -> ExactRat {
    (1..=n as i64).map(|k| rat(k).recip()).sum()
}

/// `E(n, m)`, zero outside `0 <= m < n` (and `E(0, 0) = 1`).
fn eulerian_entry(n: u64, m: i64) -> BigInt {
    if n == 0 {
        return if m == 0 { BigInt::one() } else { BigInt::zero() };
    }
    if m < 0 || m as u64 >= n {
        return BigInt::zero();
    }
    eulerian_row(n as usize)[m as usize].clone()
}

/// Fraction-free (Bareiss) determinant with row pivoting.
fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

fn need_int(params: &Params, key: &str) -> Result<i64, SequenceError> {
    params
        .int(key)
        .ok_or_else(|| SequenceError::OutOfRange(format!("missing integer parameter `{key}`")))
}

fn need_u(params: &Params, key: &str) -> Result<u64, SequenceError> {
    let v = need_int(params, key)?;
    u64::try_from(v).map_err(|_| SequenceError::OutOfRange(format!("`{key}` must be nonnegative (got {v})")))
}

fn need_text<'a>(params: &'a Params, key: &str) -> Result<&'a str, SequenceError> {
    params
        .text(key)
        .ok_or_else(|| SequenceError::OutOfRange(format!("missing text parameter `{key}`")))
}

fn order_of(params: &Params) -> Result<usize, SequenceError> {
    Ok(params.int("order").map_or(DEFAULT_ORDER, |o| o.max(0) as usize))
}

/// Evaluates one instance of an identity.
pub fn verify_identity(id: IdentityId, params: &Params) -> Result<IdentityResult, SequenceError> {
    match id {
        I01 => {
            let n = need_u(params, "n")?;
            let x = BigInt::from(need_int(params, "x")?);
            let rhs = eulerian_row(n as usize)
                .iter()
                .enumerate()
                .map(|(m, e)| e * binomial_general(&(&x + m), n))
                .sum();
            Ok(IdentityResult::ints(x.pow(n as u32), rhs))
        }
        I02 => {
            let n = need_u(params, "n")?;
            let i = need_u(params, "i")?;
            let x = BigInt::from(need_int(params, "x")?);
            let row = generalized_eulerian_row(n, i)?;
            let rhs = row
                .iter()
                .enumerate()
                .map(|(m, e)| e * binomial_general(&(&x + m), i * n))
                .sum();
            Ok(IdentityResult::ints(binomial_general(&x, i).pow(n as u32), rhs))
        }
        I03 => {
            let n = need_u(params, "n")?;
            let b = bernoulli_exact(n as usize + 1).pop().expect("nonempty");
            let scale = big_rat(pow2(n + 1) * (pow2(n + 1) - 1)) / rat(n as i64 + 1);
            let rhs = alternating_row_sum(&eulerian_row(n as usize));
            Ok(IdentityResult::rats(scale * b, big_rat(rhs)))
        }
        I04 => {
            let n = need_u(params, "n")?;
            let m = need_u(params, "m")?;
            if m >= n {
                return Err(SequenceError::OutOfRange(format!("m = {m} must be below n = {n}")));
            }
            Ok(IdentityResult::ints(
                eulerian_closed(n, m),
                eulerian_row(n as usize)[m as usize].clone(),
            ))
        }
        I05 => {
            let n = need_u(params, "n")?;
            let e = euler_numbers(2 * n as usize);
            let lhs = (0..=n).map(|s| binomial_exact(2 * n, 2 * s) * &e[2 * s as usize]).sum();
            Ok(IdentityResult::ints(lhs, BigInt::zero()))
        }
        I06 => {
            let n = need_u(params, "n")?;
            let e = euler_numbers(n as usize);
            let sum: ExactRat = (0..n)
                .map(|k| big_rat(binomial_exact(n, k) * &e[k as usize]) / big_rat(pow2(k)))
                .sum();
            let half = if n == 0 {
                ExactRat::new(1.into(), 2.into())
            } else {
                big_rat(pow2(n - 1))
            };
            Ok(IdentityResult::rats(big_rat(e[n as usize].clone()) + half * sum, rat(1)))
        }
        I07 => {
            let n = need_u(params, "n")? as usize;
            let s = gf::euler_polynomial(&ExactRat::new(1.into(), 2.into()), order_of(params)?);
            let rhs = s.nth_coeff_times_factorial(n)? * big_rat(pow2(n as u64));
            Ok(IdentityResult::rats(big_rat(euler_number(n)), rhs))
        }
        I08 => {
            let k = need_u(params, "k")? as usize;
            let s = gf::sec(order_of(params)?).nth_coeff_times_factorial(2 * k)?;
            let e = euler_number(2 * k);
            Ok(IdentityResult::rats(s, big_rat(if k % 2 == 0 { e } else { -e })))
        }
        I09 => {
            let n = need_u(params, "n")? as usize;
            let z = zigzag(n + 1);
            let rhs = (0..=n).map(|k| binomial_exact(n as u64, k as u64) * &z[k] * &z[n - k]).sum();
            Ok(IdentityResult::ints(&z[n + 1] * 2, rhs))
        }
        I10 => {
            let k = need_u(params, "k")? as usize;
            let order = order_of(params)?;
            let y = gf::sec(order).try_add(&gf::tan(order))?;
            let lhs = y.derive().scale(&rat(2));
            let rhs = y.try_mul(&y)?.try_add(&PowerSeries::one(order))?;
            Ok(IdentityResult::rats(lhs.coeff(k)?.clone(), rhs.coeff(k)?.clone()))
        }
        I11 => {
            let n = need_u(params, "n")? as usize;
            if n % 2 == 0 {
                return Err(SequenceError::OutOfRange(format!("n = {n} must be odd")));
            }
            let g = genocchi_numbers(n + 1)?;
            let rhs = -big_rat(&g[n + 1] * pow2(n as u64)) / rat(n as i64 + 1);
            Ok(IdentityResult::rats(big_rat(generalized_euler(n)), rhs))
        }
        I12 => {
            let n = need_u(params, "n")? as usize;
            let g = gf::genocchi(order_of(params)?).nth_coeff_times_factorial(2 * n + 2)?;
            let rhs = g.abs() * big_rat(pow2(2 * n as u64)) / rat(n as i64 + 1);
            Ok(IdentityResult::rats(big_rat(tangent_number(2 * n + 1)?), rhs))
        }
        I13 => {
            let n = need_u(params, "n")? as usize;
            let g = genocchi_numbers(n)?;
            let b = bernoulli_exact(n).pop().expect("nonempty");
            let rhs = b * big_rat((BigInt::one() - pow2(n as u64)) * 2);
            Ok(IdentityResult::rats(big_rat(g[n].clone()), rhs))
        }
        I14 => {
            let n = need_u(params, "n")?;
            let g = genocchi_numbers(n as usize + 1)?;
            let sum: BigInt = (2..=n + 1)
                .map(|k| binomial_exact(n + 1, k) * pow2(k - 1) * &g[k as usize])
                .sum();
            let rhs = rat(1) + big_rat(sum) / rat(n as i64 + 1);
            Ok(IdentityResult::rats(big_rat(euler_number(n as usize)), rhs))
        }
        I15 => {
            let i = need_u(params, "i")?;
            let j = need_u(params, "j")?;
            let n = need_u(params, "n")?;
            let lhs: BigInt = (0..=n)
                .map(|k| BigInt::from(k).pow(i as u32) * BigInt::from(n - k).pow(j as u32))
                .sum();
            let w = i + j + 1;
            let rhs: BigInt = (0..=i + j)
                .map(|r| {
                    let conv: BigInt = (0..=r as i64)
                        .map(|s| eulerian_entry(i, s) * eulerian_entry(j, r as i64 - s))
                        .sum();
                    binomial_exact(w + n - r, w) * conv
                })
                .sum();
            Ok(IdentityResult::ints(lhs, rhs))
        }
        I16 => {
            let n = need_u(params, "n")?;
            let lhs: ExactRat = (0..=n).map(|k| big_rat(binomial_exact(n, k)) * harmonic(k)).sum();
            let tail: ExactRat = (1..=n).map(|k| big_rat(pow2(k) * k).recip()).sum();
            Ok(IdentityResult::rats(lhs, big_rat(pow2(n)) * (harmonic(n) - tail)))
        }
        I17 => {
            let n = need_u(params, "n")?;
            let (b, a): (fn(u64) -> ExactRat, fn(u64) -> ExactRat) = match need_text(params, "b")? {
                "H" => (harmonic, |k| rat(k as i64 + 1).recip()),
                "kH" => (|k| rat(k as i64) * harmonic(k), |k| rat(1) + harmonic(k)),
                other => return Err(SequenceError::OutOfRange(format!("unknown sequence b = {other}"))),
            };
            let h = |n: u64| -> ExactRat { (0..=n).map(|k| big_rat(binomial_exact(n, k)) * b(k)).sum() };
            let g = |n: u64| -> ExactRat { (0..=n).map(|k| big_rat(binomial_exact(n, k)) * a(k)).sum() };
            match need_text(params, "form")? {
                "difference" => Ok(IdentityResult::rats(g(n), h(n + 1) - h(n) * rat(2))),
                "inverse" => {
                    let sum: ExactRat = (1..=n).map(|k| g(k - 1) / big_rat(pow2(k))).sum();
                    Ok(IdentityResult::rats(h(n), big_rat(pow2(n)) * (b(0) + sum)))
                }
                other => Err(SequenceError::OutOfRange(format!("unknown form `{other}`"))),
            }
        }
        I18 => {
            let n = need_u(params, "n")?;
            let lhs: ExactRat = (0..=n)
                .map(|j| rat(n as i64 - 2 * j as i64) * harmonic(j) * big_rat(binomial_exact(n, j)))
                .sum();
            Ok(IdentityResult::rats(lhs, big_rat(BigInt::one() - pow2(n))))
        }
        I19 => {
            let n = need_u(params, "n")?;
            if n % 2 == 0 {
                return Err(SequenceError::OutOfRange(format!("n = {n} must be odd")));
            }
            let row = eulerian_row(n as usize);
            let lhs = row
                .iter()
                .enumerate()
                .map(|(m, e)| {
                    let t = e * (2 * m + 3);
                    if m % 2 == 0 {
                        t
                    } else {
                        -t
                    }
                })
                .sum();
            Ok(IdentityResult::ints(lhs, alternating_row_sum(&row) * (n + 2)))
        }
        I20 => verify_gf(params),
        I21a => {
            let n = need_u(params, "n")?;
            let size = 2 * n as usize;
            let matrix = (1..=size)
                .map(|i| {
                    (1..=size)
                        .map(|j| {
                            let d = i as i64 - j as i64 + 1;
                            let cos = match d.rem_euclid(4) {
                                0 => 1,
                                2 => -1,
                                _ => 0,
                            };
                            if cos == 0 || j - 1 > i {
                                BigInt::zero()
                            } else {
                                binomial_exact(i as u64, j as u64 - 1) * cos
                            }
                        })
                        .collect()
                })
                .collect();
            let det = bareiss_det(matrix);
            let rhs = if n % 2 == 0 { det } else { -det };
            Ok(IdentityResult::ints(euler_number(size), rhs))
        }
        I21b => {
            let n = need_u(params, "n")?;
            let sign = if n % 2 == 0 { rat(1) } else { rat(-1) };
            let sum: ExactRat = (1..=2 * n)
                .map(|l| {
                    let inner: BigInt = (0..=l)
                        .map(|q| binomial_exact(l, q) * BigInt::from(2 * q as i64 - l as i64).pow(2 * n as u32))
                        .sum();
                    big_rat(binomial_exact(2 * n, l) * inner) / big_rat(pow2(l) * (l + 1))
                })
                .sum();
            let rhs = rat(2 * n as i64 + 1) * sign * sum;
            Ok(IdentityResult::rats(big_rat(euler_number(2 * n as usize)), rhs))
        }
        I22 => {
            let n = need_u(params, "n")?;
            if n % 2 == 1 {
                return Err(SequenceError::OutOfRange(format!("n = {n} must be even")));
            }
            Ok(IdentityResult::ints(
                alternating_row_sum(&eulerian_row(n as usize)),
                BigInt::zero(),
            ))
        }
    }
}

fn verify_gf(params: &Params) -> Result<IdentityResult, SequenceError> {
    let n = need_u(params, "n")? as usize;
    let order = order_of(params)?;
    let gf_name = need_text(params, "gf")?;
    let (lhs, rhs) = match gf_name {
        "sech" => (gf::sech(order).nth_coeff_times_factorial(n)?, big_rat(euler_number(n))),
        "tan" => (gf::tan(order).nth_coeff_times_factorial(n)?, big_rat(tangent_number(n)?)),
        "sec" => {
            if n % 2 == 1 {
                return Err(SequenceError::OutOfRange(format!("n = {n} must be even")));
            }
            (gf::sec(order).nth_coeff_times_factorial(n)?, big_rat(zigzag(n)[n].clone()))
        }
        "genocchi" => {
            let g = genocchi_numbers(n)?;
            (gf::genocchi(order).nth_coeff_times_factorial(n)?, big_rat(g[n].clone()))
        }
        "euler-polynomial" => {
            let s = gf::euler_polynomial(&ExactRat::new(1.into(), 2.into()), order);
            (s.nth_coeff_times_factorial(n)? * big_rat(pow2(n as u64)), big_rat(euler_number(n)))
        }
        "eulerian" => {
            let x = parse_rat(need_text(params, "x")?)?;
            if n == 0 {
                return Err(SequenceError::OutOfRange("Eulerian polynomials start at n = 1".into()));
            }
            let h = gf::eulerian(&x, order)?.nth_coeff_times_factorial(n)?;
            let lhs = num_traits::pow(x.clone() - rat(1), n) * h;
            let mut xm = rat(1);
            let mut rhs = ExactRat::zero();
            for e in eulerian_row(n) {
                rhs += big_rat(e) * &xm;
                xm *= &x;
            }
            (lhs, rhs)
        }
        other => return Err(SequenceError::OutOfRange(format!("unknown generating function `{other}`"))),
    };
    Ok(IdentityResult::rats(lhs, rhs))
}

/// Outcome of running an identity over all of its instances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentitySweep {
    pub id: IdentityId,
    pub instances: usize,
    pub failures: usize,
    pub first_failure: Option<(Params, IdentityResult)>,
}

impl IdentitySweep {
    pub fn holds(&self) -> bool {
        self.failures == 0
    }
}

pub fn sweep_identity(id: IdentityId, caps: &IdentityCaps) -> Result<IdentitySweep, SequenceError> {
    let instances = identity_instances(id, caps);
    let mut sweep = IdentitySweep {
        id,
        instances: instances.len(),
        failures: 0,
        first_failure: None,
    };
    for params in instances {
        let r = verify_identity(id, &params)?;
        if !r.holds {
            sweep.failures += 1;
            if sweep.first_failure.is_none() {
                sweep.first_failure = Some((params, r));
            }
        }
    }
    Ok(sweep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(id: IdentityId, params: Params) -> IdentityResult {
        verify_identity(id, &params).unwrap()
    }

    #[test]
    fn worpitsky_example() {
        let r = check(I01, Params::new().with("n", 3).with("x", 2));
        assert!(r.holds);
        assert_eq!(r.lhs, "8");
    }

    #[test]
    fn tangent_from_series_genocchi() {
        let r = check(I12, Params::new().with("n", 3).with("order", 16));
        assert!(r.holds);
        assert_eq!(r.lhs, "272");
    }

    #[test]
    fn alternating_weighted_sum() {
        let r = check(I19, Params::new().with("n", 5));
        assert_eq!((r.lhs.as_str(), r.rhs.as_str()), ("112", "112"));
    }

    #[test]
    fn convolution_fails_at_first_instance() {
        let r = check(I15, Params::new().with("i", 1).with("j", 1).with("n", 2));
        assert!(!r.holds);
        assert_eq!((r.lhs.as_str(), r.rhs.as_str()), ("1", "10"));
    }

    #[test]
    fn double_sum_fails_at_one() {
        let r = check(I21b, Params::new().with("n", 1));
        assert!(!r.holds);
        assert_eq!((r.lhs.as_str(), r.rhs.as_str()), ("-1", "-5"));
    }

    #[test]
    fn determinant_small_cases() {
        assert!(check(I21a, Params::new().with("n", 1)).holds);
        assert_eq!(check(I21a, Params::new().with("n", 3)).rhs, "-61");
        let m = vec![
            vec![BigInt::from(0), BigInt::from(2), BigInt::from(1)],
            vec![BigInt::from(3), BigInt::from(1), BigInt::from(4)],
            vec![BigInt::from(5), BigInt::from(9), BigInt::from(2)],
        ];
        // cofactor expansion: 0 - 2(6 - 20) + (27 - 5) = 50
        assert_eq!(bareiss_det(m), BigInt::from(50));
    }

    #[test]
    fn registry_outcomes_at_default_caps() {
        let caps = IdentityCaps::default();
        for id in IdentityId::ALL {
            let sweep = sweep_identity(id, &caps).unwrap();
            assert!(sweep.instances > 0, "{id} has no instances");
            assert_eq!(sweep.holds(), !id.flagged(), "{id}: {:?}", sweep.first_failure);
        }
    }

    #[test]
    fn first_convolution_failure_is_smallest() {
        let sweep = sweep_identity(I15, &IdentityCaps::default()).unwrap();
        let (params, _) = sweep.first_failure.unwrap();
        assert_eq!(params, Params::new().with("i", 1).with("j", 1).with("n", 0));
    }

    #[test]
    fn caps_shrink_instances() {
        let small = IdentityCaps {
            max_n: Some(5),
            series_order: 8,
        };
        for p in identity_instances(I20, &small) {
            assert!(p.int("n").unwrap() <= 5);
        }
        let order8 = IdentityCaps {
            max_n: None,
            series_order: 8,
        };
        assert!(identity_instances(I20, &order8).iter().all(|p| p.int("n").unwrap() <= 8));
        assert!(sweep_identity(I20, &order8).unwrap().holds());
    }

    #[test]
    fn parse_codes() {
        assert_eq!("i21a".parse::<IdentityId>().unwrap(), I21a);
        assert!("I99".parse::<IdentityId>().is_err());
    }
}

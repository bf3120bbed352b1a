use num_bigint::BigInt;

use super::{always, one_instance, sum, unit, verified, CheckDefinition, CheckError, Ctx, Domain, Eval, Evaluator, Flag, Group};
use crate::arith::{fermat_quotient, prime_power, Residue};
use crate::params::Params;

const CAP: u64 = 997;

fn def(id: &'static str, title: &'static str, modulus: &'static str, eval: super::PrimeEval) -> CheckDefinition {
    CheckDefinition {
        id,
        title,
        group: Group::Harmonic,
        modulus,
        domain: Domain::Primes { cap: CAP },
        applies: always,
        instances: one_instance,
        flag: verified,
        eval: Evaluator::Prime(eval),
    }
}

pub(super) fn definitions() -> Vec<CheckDefinition> {
    vec![
        def("C01", "H_{p-1} = 0", "p^2", c01),
        def("C02", "(p-1)! = -1", "p", c02),
        def("C03", "E(p-2,k) = H_{k+1} for 0 <= k <= p-3", "p", c03),
        def("C04", "sum_m (-1)^m (2m+3) E(p-2,m) = 0", "p", c04),
        CheckDefinition {
            domain: Domain::Primes { cap: 199 },
            flag: |_| Flag::DiscrepancyExpected,
            ..def("C04L", "sum_{m=1}^{p-4} (-1)^m (2m+3) E(p-2,m) + p = 0", "exact", c04l)
        },
        def("C05", "-2 sum (-1)^k k H_k = sum (-1)^k H_k", "p", c05),
        def("C06", "sum_{k<p} H_k = 1", "p", c06),
        def("C07", "sum_{k even} H_k = (1 - H')/2", "p", c07),
        def("C08", "q_2 = 2 N_{p-2} - 1", "p", c08),
        def("C09", "H_{(p-1)/2} = -2 q_2", "p", c09),
        def("C10", "q_2 = (1/2) sum_l (-1)^{l-1}/l", "p", c10),
        def("C11", "q_2 = H'", "p", c11),
        def("C12", "sum (-1)^k k H_k = H'/2", "p", c12),
        def("C13", "sum_{k even} k H_k = (H' - 1)/4", "p", c13),
        def("C14", "sum k H_k = -1/2", "p", c14),
        def("C15", "sum 1/(k 2^k) = H'", "p", c15),
        def("C16", "sum 2^k/k = -2 q_2", "p", c16),
        CheckDefinition {
            domain: Domain::Primes { cap: 199 },
            instances: |_| (1..=3).map(|e| Params::new().with("e", e)).collect(),
            flag: |ps| {
                if ps.int("e") == Some(3) {
                    Flag::DiscrepancyExpected
                } else {
                    Flag::Verified
                }
            },
            ..def("C17", "sum 2^k/k^2 = -q_2^2 + p(2/3 q_2^3 + 7/6 B_{p-3})", "p^e", c17)
        },
        def("C37", "sum H_k/(k 2^k) = 0", "p", c37),
    ]
}

fn r(v: i64, m: u64) -> Residue {
    Residue::from_i64(v, m)
}

fn alt(k: u64, v: Residue) -> Residue {
    if k % 2 == 0 {
        v
    } else {
        -v
    }
}

fn c01(ctx: &Ctx, p: u64, _: &Params) -> Result<Eval, CheckError> {
    let h = ctx.cache.harmonic(p, 2);
    Ok(Eval::residues(h.h[p as usize - 1], Residue::zero(h.modulus())))
}

fn c02(_: &Ctx, p: u64, _: &Params) -> Result<Eval, CheckError> {
    let f = (1..p).fold(Residue::one(p), |a, k| a * Residue::new(k, p));
    Ok(Eval::residues(f, r(-1, p)))
}

fn c03(ctx: &Ctx, p: u64, _: &Params) -> Result<Eval, CheckError> {
    let row = ctx.cache.eulerian_row_mod(p, 1);
    let h = ctx.cache.harmonic(p, 1);
    let cases = (0..=p as usize - 3).map(|k| (format!("k = {k}"), row[k], h.h[k + 1]));
    Ok(Eval::quantified("k in [0, p-3]", cases))
}

fn c04(ctx: &Ctx, p: u64, _: &Params) -> Result<Eval, CheckError> {
    let row = ctx.cache.eulerian_row_mod(p, 1);
    let lhs = sum(row.iter().enumerate().map(|(m, &e)| alt(m as u64, e.scale(2 * m as i64 + 3))), p);
    Ok(Eval::residues(lhs, Residue::zero(p)))
}

fn c04l(ctx: &Ctx, p: u64, _: &Params) -> Result<Eval, CheckError> {
    let row = ctx.cache.eulerian_row(p as usize - 2);
    let mut total = BigInt::from(p);
    for m in 1..=p as usize - 4 {
        let t = &row[m] * (2 * m + 3);
        if m % 2 == 0 {
            total += t;
        } else {
            total -= t;
        }
    }
    let holds = total == BigInt::from(0);
    Ok(Eval::exact(total, 0, holds))
}

fn c05(ctx: &Ctx, p: u64, _: &Params) -> Result<Eval, CheckError> {
    let h = ctx.cache.harmonic(p, 1);
    let lhs = sum((0..p).map(|k| alt(k, h.h[k as usize].scale(k as i64))), p).scale(-2);
    let rhs = sum((0..p).map(|k| alt(k, h.h[k as usize])), p);
    Ok(Eval::residues(lhs, rhs))
}

fn c06(ctx: &Ctx, p: u64, _: &Params) -> Result<Eval, CheckError> {
    let h = ctx.cache.harmonic(p, 1);
    Ok(Eval::residues(sum(h.h.iter().copied(), p), Residue::one(p)))
}

fn c07(ctx: &Ctx, p: u64, _: &Params) -> Result<Eval, CheckError> {
    let h = ctx.cache.harmonic(p, 1);
    let lhs = sum(h.h.iter().step_by(2).copied(), p);
    Ok(Eval::residues(lhs, (Residue::one(p) - h.h_odd) * unit(2, p)?))
}

fn even_ascents_mod_p(ctx: &Ctx, p: u64) -> Residue {
    sum(ctx.cache.eulerian_row_mod(p, 1).iter().step_by(2).copied(), p)
}

fn c08(ctx: &Ctx, p: u64, _: &Params) -> Result<Eval, CheckError> {
    let n = even_ascents_mod_p(ctx, p);
    Ok(Eval::residues(fermat_quotient(2, p, 1)?, n.scale(2) - Residue::one(p)))
}

fn c09(ctx: &Ctx, p: u64, _: &Params) -> Result<Eval, CheckError> {
    let h = ctx.cache.harmonic(p, 1);
    Ok(Eval::residues(h.h[(p as usize - 1) / 2], fermat_quotient(2, p, 1)?.scale(-2)))
}

fn c10(_: &Ctx, p: u64, _: &Params) -> Result<Eval, CheckError> {
    let mut acc = Residue::zero(p);
    for l in 1..p {
        acc += alt(l - 1, unit(l, p)?);
    }
    Ok(Eval::residues(fermat_quotient(2, p, 1)?, acc * unit(2, p)?))
}

fn c11(ctx: &Ctx, p: u64, _: &Params) -> Result<Eval, CheckError> {
    let h = ctx.cache.harmonic(p, 1);
    Ok(Eval::residues(fermat_quotient(2, p, 1)?, h.h_odd))
}

fn c12(ctx: &Ctx, p: u64, _: &Params) -> Result<Eval, CheckError> {
    let h = ctx.cache.harmonic(p, 1);
    let lhs = sum((0..p).map(|k| alt(k, h.h[k as usize].scale(k as i64))), p);
    Ok(Eval::residues(lhs, h.h_odd * unit(2, p)?))
}

fn c13(ctx: &Ctx, p: u64, _: &Params) -> Result<Eval, CheckError> {
    let h = ctx.cache.harmonic(p, 1);
    let lhs = sum((0..p).step_by(2).map(|k| h.h[k as usize].scale(k as i64)), p);
    Ok(Eval::residues(lhs, (h.h_odd - Residue::one(p)) * unit(4, p)?))
}

fn c14(ctx: &Ctx, p: u64, _: &Params) -> Result<Eval, CheckError> {
    let h = ctx.cache.harmonic(p, 1);
    let lhs = sum((0..p).map(|k| h.h[k as usize].scale(k as i64)), p);
    Ok(Eval::residues(lhs, -unit(2, p)?))
}

fn c15(ctx: &Ctx, p: u64, _: &Params) -> Result<Eval, CheckError> {
    let h = ctx.cache.harmonic(p, 1);
    let half = unit(2, p)?;
    let mut lhs = Residue::zero(p);
    for k in 1..p {
        lhs += unit(k, p)? * half.pow(k);
    }
    Ok(Eval::residues(lhs, h.h_odd))
}

fn c16(_: &Ctx, p: u64, _: &Params) -> Result<Eval, CheckError> {
    let mut lhs = Residue::zero(p);
    for k in 1..p {
        lhs += Residue::new(2, p).pow(k) * unit(k, p)?;
    }
    Ok(Eval::residues(lhs, fermat_quotient(2, p, 1)?.scale(-2)))
}

fn c17_sides(ctx: &Ctx, p: u64, e: u32) -> Result<(Residue, Residue), CheckError> {
    let m = prime_power(p, e);
    let mut lhs = Residue::zero(m);
    for k in 1..p {
        let ik = unit(k, m)?;
        lhs += Residue::new(2, m).pow(k) * ik * ik;
    }
    let q = fermat_quotient(2, p, e)?;
    let b = ctx.cache.zigzag_mod(p, e).bernoulli(p as usize - 3)?;
    let inner = q * q * q * Residue::new(2, m) * unit(3, m)? + b * Residue::new(7, m) * unit(6, m)?;
    let rhs = -(q * q) + inner.scale(p as i64);
    Ok((lhs, rhs))
}

/// Largest `e <= 3` such that the statement holds modulo `p^{e'}` for every
/// `e' <= e`.
pub(super) fn maximal_exponent(mut holds_at: impl FnMut(u32) -> Result<bool, CheckError>) -> Result<u32, CheckError> {
    let mut best = 0;
    for e in 1..=3 {
        if !holds_at(e)? {
            break;
        }
        best = e;
    }
    Ok(best)
}

pub(super) fn exponent_note(best: u32) -> String {
    format!("maximal verified exponent {best}")
}

fn c17(ctx: &Ctx, p: u64, params: &Params) -> Result<Eval, CheckError> {
    let e = params
        .int("e")
        .filter(|e| (1..=3).contains(e))
        .ok_or_else(|| CheckError::BadParams("C17 needs e in {1, 2, 3}".into()))? as u32;
    let (lhs, rhs) = c17_sides(ctx, p, e)?;
    let best = maximal_exponent(|e| c17_sides(ctx, p, e).map(|(l, r)| l == r))?;
    Ok(Eval::residues(lhs, rhs).note(exponent_note(best)))
}

fn c37(ctx: &Ctx, p: u64, _: &Params) -> Result<Eval, CheckError> {
    let h = ctx.cache.harmonic(p, 1);
    let half = unit(2, p)?;
    let mut lhs = Residue::zero(p);
    for k in 1..p {
        lhs += h.h[k as usize] * unit(k, p)? * half.pow(k);
    }
    Ok(Eval::residues(lhs, Residue::zero(p)))
}

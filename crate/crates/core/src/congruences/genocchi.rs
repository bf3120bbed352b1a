use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::{always, one_instance, sum, unit, verified, CheckDefinition, CheckError, Ctx, Domain, Eval, Evaluator, Group};
use crate::arith::{fermat_quotient, prime_power, ExactRat, Residue};
use crate::params::Params;
use crate::sequences::power_sum;

/// Primes up to this bound check C33 at every `k in [2, p-1]`; larger
/// primes check `k in [2, 12]`.
pub(super) const C33_FULL_K: u64 = 97;
const C33_SAMPLE_K: u64 = 12;

fn def(id: &'static str, title: &'static str, modulus: &'static str, cap: u64, eval: super::PrimeEval) -> CheckDefinition {
    CheckDefinition {
        id,
        title,
        group: Group::Genocchi,
        modulus,
        domain: Domain::Primes { cap },
        applies: always,
        instances: one_instance,
        flag: verified,
        eval: Evaluator::Prime(eval),
    }
}

fn forms(names: &'static [&'static str]) -> Vec<Params> {
    names.iter().map(|f| Params::new().with_text("form", f)).collect()
}

pub(super) fn definitions() -> Vec<CheckDefinition> {
    vec![
        def("C26", "sum_{k=2}^{p-1} 2^k G_k/k = 2 or -2 by p mod 4", "p", 997, c26),
        def("C27", "sum_{k=2}^{p-3} 2^k G_k/k = 4 N_{p-2} or 4(N_{p-2} - 1)", "p", 997, c27),
        def("C28", "G_{p-1} = 2 q_2", "p", 997, c28),
        def("C29", "sum_{k=2}^{p-1} 2^k G_k = 2", "p", 997, c29),
        def("C30", "sum_{k odd <= p-2} (k+1) Ehat_k = -1", "p", 997, c30),
        def("C31", "sum_{k odd <= p-2} k Ehat_k = -1 + (1/2) sum 2^k G_k/k", "p", 997, c31),
        CheckDefinition {
            instances: |_| forms(&["ehat", "tangent"]),
            ..def("C32", "sum_{m odd} (-1)^{(m+1)/2} m T_m = 0 or 2 by p mod 4", "p", 997, c32)
        },
        def("C33", "Lehmer-Mirimanoff formulas for S_k", "p^2", 997, c33),
        def("C34", "sum_{k=4}^{p-1} G_k/(k 2^k) = S_3 + S_5 + ... + S_{p-2}", "p^2", 997, c34),
        def("C35", "S_1 + S_3 + ... + S_{p-2} = -1/2", "p", 997, c35),
        def("C36", "sum_{k=1}^{p-1} G_k/(k 2^k) = 0", "p", 997, c36),
        CheckDefinition {
            instances: |_| forms(&["full", "inner"]),
            ..def("C38", "sum_{k<p} B_k/(k 2^k) = 0 with B_0/0 read as -1/p", "p", 199, c38)
        },
    ]
}

fn plus_minus(p: u64, plus: i64, minus: i64) -> i64 {
    if p % 4 == 1 {
        plus
    } else {
        minus
    }
}

/// `sum_{k=2}^{top} 2^k G_k / k` mod p.
fn weighted_divided(ctx: &Ctx, p: u64, top: u64) -> Result<Residue, CheckError> {
    let z = ctx.cache.zigzag_mod(p, 1);
    let mut acc = Residue::zero(p);
    for k in 2..=top {
        acc += Residue::new(2, p).pow(k) * z.divided_genocchi(k as usize)?;
    }
    Ok(acc)
}

fn c26(ctx: &Ctx, p: u64, _: &Params) -> Result<Eval, CheckError> {
    let lhs = weighted_divided(ctx, p, p - 1)?;
    Ok(Eval::residues(lhs, Residue::from_i64(plus_minus(p, 2, -2), p)))
}

fn c27(ctx: &Ctx, p: u64, _: &Params) -> Result<Eval, CheckError> {
    let lhs = weighted_divided(ctx, p, p - 3)?;
    let n = sum(ctx.cache.eulerian_row_mod(p, 1).iter().step_by(2).copied(), p);
    let n = if p % 4 == 1 { n } else { n - Residue::one(p) };
    Ok(Eval::residues(lhs, n.scale(4)))
}

fn c28(ctx: &Ctx, p: u64, _: &Params) -> Result<Eval, CheckError> {
    let g = ctx.cache.zigzag_mod(p, 1).genocchi(p as usize - 1)?;
    Ok(Eval::residues(g, fermat_quotient(2, p, 1)?.scale(2)))
}

fn c29(ctx: &Ctx, p: u64, _: &Params) -> Result<Eval, CheckError> {
    let z = ctx.cache.zigzag_mod(p, 1);
    let mut lhs = Residue::zero(p);
    for k in 2..p {
        lhs += Residue::new(2, p).pow(k) * z.genocchi(k as usize)?;
    }
    Ok(Eval::residues(lhs, Residue::new(2, p)))
}

fn odd_ehat_sum(ctx: &Ctx, p: u64, weight: impl Fn(u64) -> i64) -> Residue {
    let z = ctx.cache.zigzag_mod(p, 1);
    sum((1..=p - 2).step_by(2).map(|k| z.ehat(k as usize).scale(weight(k))), p)
}

fn c30(ctx: &Ctx, p: u64, _: &Params) -> Result<Eval, CheckError> {
    let lhs = odd_ehat_sum(ctx, p, |k| k as i64 + 1);
    Ok(Eval::residues(lhs, Residue::from_i64(-1, p)))
}

fn c31(ctx: &Ctx, p: u64, _: &Params) -> Result<Eval, CheckError> {
    let lhs = odd_ehat_sum(ctx, p, |k| k as i64);
    let rhs = weighted_divided(ctx, p, p - 1)? * unit(2, p)? - Residue::one(p);
    Ok(Eval::residues(lhs, rhs))
}

fn c32(ctx: &Ctx, p: u64, params: &Params) -> Result<Eval, CheckError> {
    let z = ctx.cache.zigzag_mod(p, 1);
    match params.text("form").unwrap_or("tangent") {
        "tangent" => {
            let mut lhs = Residue::zero(p);
            for m in (1..p).step_by(2) {
                let sign = if ((m + 1) / 2) % 2 == 0 { 1 } else { -1 };
                lhs += z.tangent(m as usize)?.scale(sign * m as i64);
            }
            Ok(Eval::residues(lhs, Residue::from_i64(plus_minus(p, 0, 2), p)))
        }
        "ehat" => {
            let lhs = sum(
                (1..=(p - 1) / 2).map(|k| z.ehat(2 * k as usize - 1).scale(2 * k as i64 - 1)),
                p,
            );
            Ok(Eval::residues(lhs, Residue::from_i64(plus_minus(p, 0, -2), p)))
        }
        other => Err(CheckError::BadParams(format!("unknown form `{other}`"))),
    }
}

fn rat(n: i64) -> ExactRat {
    ExactRat::from_integer(BigInt::from(n))
}

fn pow2(k: u64) -> ExactRat {
    ExactRat::from_integer(BigInt::one() << k as usize)
}

/// Right-hand side of the `S_k` formula as an exact rational.
fn lehmer_mirimanoff(ctx: &Ctx, p: u64, k: u64) -> ExactRat {
    if k % 2 == 0 {
        (pow2(k - 1).recip() - rat(1)) * ExactRat::new(BigInt::from(p), BigInt::from(2)) * ctx.cache.bernoulli(k as usize)
    } else {
        (pow2(k + 1).recip() - rat(1)) * rat(2) * ctx.cache.bernoulli(k as usize + 1) / rat(k as i64 + 1)
    }
}

fn c33(ctx: &Ctx, p: u64, params: &Params) -> Result<Eval, CheckError> {
    let m = prime_power(p, 2);
    let (ks, domain): (Vec<u64>, String) = match params.int("k") {
        Some(k) if k >= 1 => (vec![k as u64], format!("k = {k}")),
        Some(k) => return Err(CheckError::BadParams(format!("k = {k} must be positive"))),
        None if p <= C33_FULL_K => ((2..p).collect(), "k in [2, p-1]".into()),
        None => ((2..=C33_SAMPLE_K).collect(), format!("k in [2, {C33_SAMPLE_K}] (sampled)")),
    };
    let mut cases = Vec::new();
    for k in ks {
        if (k - 1) % (p - 1) == 0 {
            continue;
        }
        let rhs = Residue::from_rat(&lehmer_mirimanoff(ctx, p, k), m)?;
        cases.push((format!("k = {k}"), power_sum(k, p, 2), rhs));
    }
    Ok(Eval::quantified(&domain, cases))
}

fn c34(ctx: &Ctx, p: u64, _: &Params) -> Result<Eval, CheckError> {
    let m = prime_power(p, 2);
    let z = ctx.cache.zigzag_mod(p, 2);
    let half = unit(2, m)?;
    let mut lhs = Residue::zero(m);
    for k in 4..p {
        lhs += z.divided_genocchi(k as usize)? * half.pow(k);
    }
    let rhs = sum((3..=p - 2).step_by(2).map(|k| power_sum(k, p, 2)), m);
    Ok(Eval::residues(lhs, rhs))
}

fn c35(_: &Ctx, p: u64, _: &Params) -> Result<Eval, CheckError> {
    let lhs = sum((1..=p - 2).step_by(2).map(|k| power_sum(k, p, 1)), p);
    Ok(Eval::residues(lhs, -unit(2, p)?))
}

fn c36(ctx: &Ctx, p: u64, _: &Params) -> Result<Eval, CheckError> {
    let z = ctx.cache.zigzag_mod(p, 1);
    let half = unit(2, p)?;
    let mut lhs = Residue::zero(p);
    for k in 1..p {
        lhs += z.divided_genocchi(k as usize)? * half.pow(k);
    }
    Ok(Eval::residues(lhs, Residue::zero(p)))
}

/// `sum_{k=lo}^{hi} B_k / (k 2^k)` over the rationals.
fn divided_bernoulli_sum(ctx: &Ctx, lo: u64, hi: u64) -> ExactRat {
    (lo..=hi)
        .map(|k| ctx.cache.bernoulli(k as usize) / (pow2(k) * rat(k as i64)))
        .sum()
}

fn c38(ctx: &Ctx, p: u64, params: &Params) -> Result<Eval, CheckError> {
    let pb = BigInt::from(p);
    match params.text("form").unwrap_or("full") {
        "full" => {
            let total = divided_bernoulli_sum(ctx, 1, p - 1) - ExactRat::new(BigInt::one(), pb.clone());
            if total.denom().is_multiple_of(&pb) {
                return Ok(Eval::failed(p, "denominator of the sum is divisible by p"));
            }
            let lhs = Residue::from_rat(&total, p)?;
            let holds = total.numer().is_multiple_of(&pb);
            debug_assert_eq!(holds, lhs.is_zero());
            Ok(Eval::residues(lhs, Residue::zero(p)))
        }
        "inner" => {
            let lhs = Residue::from_rat(&divided_bernoulli_sum(ctx, 1, p - 2), p)?;
            let h = ctx.cache.harmonic(p, 1).h[(p as usize - 1) / 2];
            let vsc = (ctx.cache.bernoulli(p as usize - 1) * rat(p as i64) + rat(1)) / rat(p as i64);
            let rhs = -h * unit(2, p)? + Residue::from_rat(&vsc, p)? - Residue::one(p);
            Ok(Eval::residues(lhs, rhs))
        }
        other => Err(CheckError::BadParams(format!("unknown form `{other}`"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::SequenceCache;
    use num_traits::Zero;

    #[test]
    fn full_sum_at_five_is_minus_55_over_128() {
        let cache = SequenceCache::new();
        let ctx = Ctx {
            cache: &cache,
            caps: Default::default(),
        };
        let total = divided_bernoulli_sum(&ctx, 1, 4) - ExactRat::new(1.into(), 5.into());
        assert_eq!(total, ExactRat::new((-55).into(), 128.into()));
        assert!(!total.is_zero());
    }
}

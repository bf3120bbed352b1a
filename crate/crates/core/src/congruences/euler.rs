use super::harmonic::{exponent_note, maximal_exponent};
use super::{
    always, legendre_minus_one, one_instance, sum, unit, verified, CheckDefinition, CheckError, Ctx, Domain, Eval,
    Evaluator, Flag, Group,
};
use crate::arith::{euler_totient_prime_power, fermat_quotient, prime_power, represent_a2_plus_4b2, Residue};
use crate::params::Params;
use crate::sequences::{euler_numbers, ZigzagMod};

/// Largest prime for which the `a = 2` instances of C22/C23 run; they need
/// Euler numbers up to index `2 p (p-1) + 6`.
pub(super) const A2_CAP: u64 = 31;

fn def(id: &'static str, title: &'static str, modulus: &'static str, cap: u64, eval: super::PrimeEval) -> CheckDefinition {
    CheckDefinition {
        id,
        title,
        group: Group::Euler,
        modulus,
        domain: Domain::Primes { cap },
        applies: always,
        instances: one_instance,
        flag: verified,
        eval: Evaluator::Prime(eval),
    }
}

pub(super) fn definitions() -> Vec<CheckDefinition> {
    vec![
        def(
            "C18",
            "sum_{p/4<k<p/2} 1/k = q_2 - p(q_2^2/2 + (-1)^{(p-1)/2}(E_{2p-4} - 2E_{p-3})) + p^2 q_2^3/3",
            "p^3",
            199,
            c18,
        ),
        def("C19", "sum_{r <= p/4} 1/r^2 = (-1)^{(p-1)/2} 4 E_{p-3}", "p", 199, c19),
        CheckDefinition {
            applies: |p| if p % 4 == 1 { Ok(()) } else { Err("p ≡ 3 mod 4") },
            instances: |p| match represent_a2_plus_4b2(p) {
                Ok((a, b)) => vec![Params::new().with("a", a as i64).with("b", b as i64)],
                Err(_) => Vec::new(),
            },
            ..def("C20", "Jakubec relation for p = a^2 + 4b^2", "p", 199, c20)
        },
        def("C21", "E_{p-1} = 0 or 2 by p mod 4", "p", 997, c21),
        CheckDefinition {
            instances: c22_instances,
            flag: |ps| {
                if ps.int("e") == ps.int("a").map(|a| a + 1) {
                    Flag::DiscrepancyExpected
                } else {
                    Flag::Verified
                }
            },
            ..def("C22", "E_n = 0 or 2 mod p^{a+1} for phi(p^a) | n", "p^e", 199, c22)
        },
        CheckDefinition {
            instances: |p| {
                let top = if p <= A2_CAP { 2 } else { 1 };
                (1..=top).map(|a| Params::new().with("a", a)).collect()
            },
            ..def("C23", "E_{k phi(p^a) + 2n} = (1 - (-1)^{(p-1)/2} p^{2n}) E_{2n}", "p^a", 997, c23)
        },
        CheckDefinition {
            domain: Domain::OddModuli { max: 99 },
            ..def("C24", "E_n = sum_{l<m} (-1)^l (2l+1)^n mod odd m", "m", 0, c24)
        },
        def("C25", "sum_{j<p} (-1)^j (2j+1)^{p-2} = 0", "p", 997, c25),
    ]
}

fn zz(ctx: &Ctx, p: u64, e: u32) -> std::sync::Arc<ZigzagMod> {
    ctx.cache.zigzag_mod(p, e)
}

fn c18(ctx: &Ctx, p: u64, _: &Params) -> Result<Eval, CheckError> {
    let m = prime_power(p, 3);
    let z = zz(ctx, p, 3);
    let mut lhs = Residue::zero(m);
    for k in p / 4 + 1..=(p - 1) / 2 {
        lhs += unit(k, m)?;
    }
    let q = fermat_quotient(2, p, 3)?;
    let bracket = q * q * unit(2, m)?
        + (z.euler(2 * p as usize - 4) - z.euler(p as usize - 3).scale(2)).scale(legendre_minus_one(p));
    let rhs = q - bracket.scale(p as i64) + (q * q * q * unit(3, m)?).scale((p * p) as i64);
    Ok(Eval::residues(lhs, rhs))
}

fn c19(ctx: &Ctx, p: u64, _: &Params) -> Result<Eval, CheckError> {
    let mut lhs = Residue::zero(p);
    for r in 1..=p / 4 {
        let i = unit(r, p)?;
        lhs += i * i;
    }
    let rhs = zz(ctx, p, 1).euler(p as usize - 3).scale(4 * legendre_minus_one(p));
    Ok(Eval::residues(lhs, rhs))
}

fn c20(ctx: &Ctx, p: u64, params: &Params) -> Result<Eval, CheckError> {
    let a = match params.int("a") {
        Some(a) => a as u64,
        None => represent_a2_plus_4b2(p)?.0,
    };
    let z = zz(ctx, p, 3);
    let e1 = z.euler(p as usize - 1);
    let x = e1.scale(2) - z.euler(2 * p as usize - 2);
    let Some(x) = x.divide_exact(p * p) else {
        return Ok(Eval::failed(p, "p^2 does not divide 2E_{p-1} - E_{2p-2}"));
    };
    let Some(e1_over_p) = e1.divide_exact(p) else {
        return Ok(Eval::failed(p, "p does not divide E_{p-1}"));
    };
    let m2 = prime_power(p, 2);
    let y = e1_over_p.scale(2) + (fermat_quotient(2, p, 2)? + fermat_quotient(a as i64, p, 2)?).scale(4)
        + unit(a * a, m2)?;
    let Some(y) = y.divide_exact(p) else {
        return Ok(Eval::failed(p, "p does not divide 2E_{p-1}/p + 4(q_2 + q_a) + 1/a^2"));
    };
    let q2 = fermat_quotient(2, p, 1)?;
    let qa = fermat_quotient(a as i64, p, 1)?;
    let ia2 = unit(a * a, p)?;
    let total = x + y - ia2 - (q2 * q2 + qa * qa).scale(2) + ia2 * ia2 * Residue::new(3, p) * unit(8, p)?;
    Ok(Eval::residues(total, Residue::zero(p)))
}

fn target(p: u64, m: u64) -> Residue {
    if p % 4 == 1 {
        Residue::zero(m)
    } else {
        Residue::new(2, m)
    }
}

fn c21(ctx: &Ctx, p: u64, _: &Params) -> Result<Eval, CheckError> {
    Ok(Eval::residues(zz(ctx, p, 1).euler(p as usize - 1), target(p, p)))
}

fn c22_instances(p: u64) -> Vec<Params> {
    let mut out = Vec::new();
    let top = if p <= A2_CAP { 2 } else { 1 };
    for a in 1..=top {
        for k in 1..=2 {
            for e in [a, a + 1] {
                out.push(Params::new().with("a", a).with("k", k).with("e", e));
            }
        }
    }
    out
}

/// Euler numbers modulo `p^3` covering index `k phi(p^a)`.
fn carlitz_table(ctx: &Ctx, p: u64, a: u32) -> std::sync::Arc<ZigzagMod> {
    if a == 1 {
        ctx.cache.zigzag_mod(p, 3)
    } else {
        ctx.cache.zigzag_long_mod(p, 3)
    }
}

fn needs_a(params: &Params, p: u64) -> Result<u32, CheckError> {
    match params.int("a") {
        Some(1) => Ok(1),
        Some(2) if p <= A2_CAP => Ok(2),
        Some(2) => Err(CheckError::NotApplicable(format!("a = 2 runs for p <= {A2_CAP}"))),
        _ => Err(CheckError::BadParams("a must be 1 or 2".into())),
    }
}

fn c22(ctx: &Ctx, p: u64, params: &Params) -> Result<Eval, CheckError> {
    let a = needs_a(params, p)?;
    let k = params.int("k").unwrap_or(1).max(1) as usize;
    let e = params.int("e").unwrap_or(a as i64 + 1);
    if !(1..=3).contains(&e) {
        return Err(CheckError::BadParams("e must be in 1..=3".into()));
    }
    let n = k * euler_totient_prime_power(p, a) as usize;
    let table = carlitz_table(ctx, p, a);
    if n > table.max_index() {
        return Err(CheckError::NotApplicable(format!("index {n} is past the table")));
    }
    let v = table.euler(n);
    let at = |e: u32| -> Result<(Residue, Residue), CheckError> {
        let m = prime_power(p, e);
        Ok((v.reduce(m)?, target(p, m)))
    };
    let (lhs, rhs) = at(e as u32)?;
    let best = maximal_exponent(|e| at(e).map(|(l, r)| l == r))?;
    Ok(Eval::residues(lhs, rhs).note(exponent_note(best)))
}

fn c23(ctx: &Ctx, p: u64, params: &Params) -> Result<Eval, CheckError> {
    let a = needs_a(params, p)?;
    let m = prime_power(p, a);
    let table = if a == 1 {
        ctx.cache.zigzag_mod(p, 1)
    } else {
        ctx.cache.zigzag_long_mod(p, 2)
    };
    let phi = euler_totient_prime_power(p, a) as usize;
    let sign = legendre_minus_one(p);
    let mut cases = Vec::new();
    for k in 1..=2usize {
        for n in 0..=3usize {
            let lhs = table.euler(k * phi + 2 * n);
            let factor = Residue::one(m) - Residue::new(p, m).pow(2 * n as u64).scale(sign);
            cases.push((format!("k = {k}, n = {n}"), lhs, factor * table.euler(2 * n)));
        }
    }
    Ok(Eval::quantified("k in [1, 2], n in [0, 3]", cases))
}

fn c24(_: &Ctx, m: u64, params: &Params) -> Result<Eval, CheckError> {
    let m = params.int("m").map_or(m, |v| v as u64);
    if m % 2 == 0 || m == 0 {
        return Err(CheckError::BadParams(format!("m = {m} must be odd")));
    }
    let e = euler_numbers(30);
    let cases = (0..=30u64).map(|n| {
        let lhs = Residue::from_bigint(&e[n as usize], m);
        let rhs = sum(
            (0..m).map(|l| {
                let t = Residue::new((2 * l + 1) % m, m).pow(n);
                if l % 2 == 0 {
                    t
                } else {
                    -t
                }
            }),
            m,
        );
        (format!("n = {n}"), lhs, rhs)
    });
    Ok(Eval::quantified("n in [0, 30]", cases))
}

fn c25(_: &Ctx, p: u64, _: &Params) -> Result<Eval, CheckError> {
    let lhs = sum(
        (0..p).map(|j| {
            let t = Residue::new((2 * j + 1) % p, p).pow(p - 2);
            if j % 2 == 0 {
                t
            } else {
                -t
            }
        }),
        p,
    );
    Ok(Eval::residues(lhs, Residue::zero(p)))
}

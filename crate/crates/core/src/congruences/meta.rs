//! Report rows for the identity registry and the enumerative oracles.

use num_bigint::BigInt;
use num_traits::Signed;

use super::{always, one_instance, verified, CheckDefinition, CheckError, Domain, Eval, Evaluator, Flag, Group};
use crate::oracles::{
    alternating_count, ascent_distribution, dumont_count, gun_count, multiset_descent_distribution,
    newcomb_distribution, DUMONT_CAP, GUN_CAP, MULTISET_CAP,
};
use crate::params::Params;
use crate::sequences::{
    eulerian_row, generalized_eulerian_row, genocchi_number, multiset_count, sweep_identity, zigzag, IdentityCaps,
    IdentityId,
};

const IDENTITY_TITLES: usize = IdentityId::ALL.len();

pub(super) fn definitions() -> Vec<CheckDefinition> {
    let mut out = Vec::with_capacity(IDENTITY_TITLES + 6);
    for id in IdentityId::ALL {
        out.push(CheckDefinition {
            id: id.code(),
            title: id.title(),
            group: Group::Identities,
            modulus: "exact",
            domain: Domain::Single,
            applies: always,
            instances: one_instance,
            flag: if id.flagged() {
                |_| Flag::DiscrepancyExpected
            } else {
                verified
            },
            eval: Evaluator::Identity(id),
        });
    }
    let oracle = |id, title, f| CheckDefinition {
        id,
        title,
        group: Group::Oracles,
        modulus: "exact",
        domain: Domain::Single,
        applies: always,
        instances: one_instance,
        flag: verified,
        eval: Evaluator::Oracle(f),
    };
    out.push(oracle("O01", "ascent distribution = Eulerian row, n <= 8", o01));
    out.push(oracle("O02", "alternating permutations = zigzag numbers, n <= 10", o02));
    out.push(oracle("O03", "Dumont permutations = |G_2n|, n <= 5", o03));
    out.push(oracle("O04", "alternating guns = |G_2n|, n <= 8", o04));
    out.push(oracle("O05", "Newcomb pile counts = Eulerian row, n <= 7", o05));
    out.push(oracle("O06", "multiset descents = generalized Eulerian rows", o06));
    out
}

pub(super) fn identity_row(id: IdentityId, caps: &IdentityCaps) -> Result<Eval, CheckError> {
    let sweep = sweep_identity(id, caps)?;
    let (params, result) = match sweep.first_failure.clone() {
        Some(f) => f,
        None => {
            let instances = crate::sequences::identity_instances(id, caps);
            let last = instances.last().cloned().unwrap_or_default();
            let r = crate::sequences::verify_identity(id, &last)?;
            (last, r)
        }
    };
    let note = if sweep.holds() {
        format!("{} instances", sweep.instances)
    } else {
        format!("{} of {} instances fail; first failure shown", sweep.failures, sweep.instances)
    };
    Ok(Eval::exact(&result.lhs, &result.rhs, sweep.holds()).note(note).params(params))
}

fn join(v: &[BigInt]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

/// Folds exact comparisons over a family of sizes into one oracle row.
fn compare<I>(cases: I) -> Result<Eval, CheckError>
where
    I: IntoIterator<Item = Result<(Params, String, String), CheckError>>,
{
    let mut count = 0;
    let mut last = None;
    for case in cases {
        let (params, lhs, rhs) = case?;
        count += 1;
        if lhs != rhs {
            return Ok(Eval::exact(lhs, rhs, false).params(params).note("oracle mismatch"));
        }
        last = Some((params, lhs, rhs));
    }
    let (params, lhs, rhs) = last.unwrap_or_default();
    Ok(Eval::exact(lhs, rhs, true).params(params).note(format!("{count} sizes")))
}

fn n(n: usize) -> Params {
    Params::new().with("n", n as i64)
}

fn o01() -> Result<Eval, CheckError> {
    compare((1..=8).map(|k| Ok((n(k), join(&ascent_distribution(k)?.counts), join(&eulerian_row(k))))))
}

fn o02() -> Result<Eval, CheckError> {
    compare((0..=10).map(|k| Ok((n(k), alternating_count(k)?.to_string(), zigzag(k)[k].to_string()))))
}

fn unsigned_genocchi(k: usize) -> Result<String, CheckError> {
    Ok(genocchi_number(2 * k)?.abs().to_string())
}

fn o03() -> Result<Eval, CheckError> {
    compare((1..=DUMONT_CAP).map(|k| Ok((n(k), dumont_count(k)?.to_string(), unsigned_genocchi(k)?))))
}

fn o04() -> Result<Eval, CheckError> {
    compare((1..=GUN_CAP).map(|k| Ok((n(k), gun_count(k)?.to_string(), unsigned_genocchi(k)?))))
}

fn o05() -> Result<Eval, CheckError> {
    compare((1..=7).map(|k| Ok((n(k), join(&newcomb_distribution(k)?.counts), join(&eulerian_row(k))))))
}

fn o06() -> Result<Eval, CheckError> {
    let mut cases = Vec::new();
    for i in 1..=4u64 {
        for k in 1..=8u64 {
            if multiset_count(k, i) > BigInt::from(MULTISET_CAP) {
                break;
            }
            cases.push((k, i));
        }
    }
    compare(cases.into_iter().map(|(k, i)| {
        let oracle = multiset_descent_distribution(k as usize, i as usize)?;
        let row = generalized_eulerian_row(k, i)?;
        Ok((Params::new().with("i", i as i64).with("n", k as i64), join(&oracle.counts), join(&row)))
    }))
}

use num_bigint::BigInt;

use super::{always, verified, CheckDefinition, CheckError, Ctx, Domain, Eval, Evaluator, Group};
use crate::arith::{prime_power, Residue};
use crate::params::Params;
use crate::sequences::{eulerian_closed, eulerian_mod, generalized_eulerian_row, SequenceError};

pub(super) const PRIMES: [u64; 3] = [3, 5, 7];
const MAX_M: i64 = 4;
const MAX_N: u64 = 12;

pub(super) fn definitions() -> Vec<CheckDefinition> {
    vec![CheckDefinition {
        id: "C39",
        title: "E(n,m) = E(n + p^{i+j-1}(p-1), m) mod p^j with i = ceil(log_p(m+1))",
        group: Group::Periodicity,
        modulus: "p^j",
        domain: Domain::FixedPrimes(&PRIMES),
        applies: always,
        instances: |_| {
            let mut out = Vec::new();
            for form in ["E", "E(i)"] {
                for m in 0..=MAX_M {
                    for j in 1..=2 {
                        out.push(Params::new().with_text("form", form).with("j", j).with("m", m));
                    }
                }
            }
            out
        },
        flag: verified,
        eval: Evaluator::Prime(c39),
    }]
}

/// Smallest `i` with `p^i >= m + 1`.
fn log_index(p: u64, m: u64) -> u32 {
    let mut i = 0;
    let mut pow = 1u64;
    while pow < m + 1 {
        pow *= p;
        i += 1;
    }
    i
}

fn eulerian_residue(n: u64, m: u64, p: u64, j: u32) -> Result<Residue, CheckError> {
    if m + 1 < p {
        Ok(eulerian_mod(&BigInt::from(n), m, p, j)?)
    } else {
        Ok(Residue::from_bigint(&eulerian_closed(n, m), prime_power(p, j)))
    }
}

/// `E^{(i)}(n, m)` read off the generalized row, zero past its end.
fn generalized_residue(n: u64, i: u64, m: u64, modulus: u64) -> Result<Residue, SequenceError> {
    let row = generalized_eulerian_row(n, i)?;
    Ok(row
        .get(m as usize)
        .map_or(Residue::zero(modulus), |v| Residue::from_bigint(v, modulus)))
}

fn c39(_: &Ctx, p: u64, params: &Params) -> Result<Eval, CheckError> {
    let m = params.int("m").unwrap_or(1);
    let j = params.int("j").unwrap_or(1);
    if m < 0 || !(1..=3).contains(&j) {
        return Err(CheckError::BadParams("need m >= 0 and j in 1..=3".into()));
    }
    let (m, j) = (m as u64, j as u32);
    let i = log_index(p, m);
    let shift = prime_power(p, i + j - 1) * (p - 1);
    let modulus = prime_power(p, j);
    let form = params.text("form").unwrap_or("E");
    let eval = match form {
        "E" => {
            let mut cases = Vec::new();
            for n in (j as u64).max(1)..=MAX_N {
                let lhs = eulerian_residue(n, m, p, j)?;
                let rhs = eulerian_residue(n + shift, m, p, j)?;
                cases.push((format!("n = {n}"), lhs, rhs));
            }
            Eval::quantified(&format!("n in [{}, {MAX_N}]", j.max(1)), cases)
        }
        "E(i)" => {
            if i == 0 {
                return Err(CheckError::NotApplicable("i = 0: no generalized Eulerian row".into()));
            }
            let mut cases = Vec::new();
            for n in (j as u64).max(1)..=MAX_N {
                let lhs = generalized_residue(n, i as u64, m, modulus);
                let rhs = generalized_residue(n + shift, i as u64, m, modulus);
                match (lhs, rhs) {
                    (Ok(l), Ok(r)) => cases.push((format!("n = {n}"), l, r)),
                    (Err(SequenceError::OutOfRange(_)), _) | (_, Err(SequenceError::OutOfRange(_))) => {}
                    (Err(e), _) | (_, Err(e)) => return Err(e.into()),
                }
            }
            if cases.is_empty() {
                return Err(CheckError::NotApplicable(format!(
                    "n + {shift} is past the generalized Eulerian cap for i = {i}"
                )));
            }
            let covered = format!("n with both rows in cap ({} values)", cases.len());
            Eval::quantified(&covered, cases)
        }
        other => return Err(CheckError::BadParams(format!("unknown form `{other}`"))),
    };
    Ok(eval.note_prefix(&format!("i = {i}, shift = {shift}")))
}

//! The check registry: one entry per congruence statement, evaluated per
//! prime into [`CheckResult`] rows.

mod euler;
mod genocchi;
mod harmonic;
mod meta;
mod periodicity;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use rayon::prelude::*;
use thiserror::Error;

use crate::arith::{primes_in, ArithError, PrimeRange, Residue};
use crate::oracles::OracleError;
use crate::params::Params;
use crate::sequences::{IdentityCaps, IdentityId, SequenceCache, SequenceError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Pass,
    Fail,
    Skip,
    Discrepancy,
}

impl Status {
    pub const ALL: [Status; 4] = [Status::Pass, Status::Fail, Status::Skip, Status::Discrepancy];

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
            Status::Discrepancy => "DISCREPANCY",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Whether a statement is expected to hold as printed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flag {
    Verified,
    DiscrepancyExpected,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Group {
    Harmonic,
    Euler,
    Genocchi,
    Periodicity,
    Identities,
    Oracles,
}

impl Group {
    pub const ALL: [Group; 6] = [
        Group::Harmonic,
        Group::Euler,
        Group::Genocchi,
        Group::Periodicity,
        Group::Identities,
        Group::Oracles,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Group::Harmonic => "harmonic",
            Group::Euler => "euler",
            Group::Genocchi => "genocchi",
            Group::Periodicity => "periodicity",
            Group::Identities => "identities",
            Group::Oracles => "oracles",
        }
    }
}

impl FromStr for Group {
    type Err = CheckError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Group::ALL
            .into_iter()
            .find(|g| g.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| CheckError::UnknownCheck(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("unknown check or group `{0}`")]
    UnknownCheck(String),
    #[error("{0}")]
    NotApplicable(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Sequence(#[from] SequenceError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// One evaluated (check, instance) pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub check: String,
    /// `None` for rows not tied to a prime (C24, identities, oracles).
    pub p: Option<u64>,
    pub params: Params,
    /// `None` when both sides are exact values.
    pub modulus: Option<u64>,
    pub lhs: String,
    pub rhs: String,
    pub status: Status,
    pub note: String,
}

/// Raw outcome of an evaluator before a status is assigned.
#[derive(Debug, Clone)]
pub(crate) struct Eval {
    modulus: Option<u64>,
    lhs: String,
    rhs: String,
    holds: bool,
    note: String,
    params: Option<Params>,
}

impl Eval {
    pub(crate) fn residues(lhs: Residue, rhs: Residue) -> Self {
        debug_assert_eq!(lhs.modulus(), rhs.modulus());
        Self {
            modulus: Some(lhs.modulus()),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            holds: lhs == rhs,
            note: String::new(),
            params: None,
        }
    }

    pub(crate) fn exact(lhs: impl fmt::Display, rhs: impl fmt::Display, holds: bool) -> Self {
        Self {
            modulus: None,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            holds,
            note: String::new(),
            params: None,
        }
    }

    /// A failure that is not a mismatch of the two sides, e.g. a failed
    /// divisibility precondition.
    pub(crate) fn failed(modulus: u64, note: impl Into<String>) -> Self {
        Self {
            modulus: Some(modulus),
            lhs: String::new(),
            rhs: String::new(),
            holds: false,
            note: note.into(),
            params: None,
        }
    }

    pub(crate) fn note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }

    pub(crate) fn note_prefix(mut self, prefix: &str) -> Self {
        self.note = join_notes(prefix, &self.note);
        self
    }

    pub(crate) fn params(mut self, params: Params) -> Self {
        self.params = Some(params);
        self
    }

    /// Folds a family of residue comparisons into one row: the first
    /// failing case if any, else the last one. `domain` describes the whole
    /// family for the note; each case carries its own label.
    pub(crate) fn quantified(domain: &str, cases: impl IntoIterator<Item = (String, Residue, Residue)>) -> Self {
        let mut first: Option<(String, Residue, Residue)> = None;
        let mut last: Option<(Residue, Residue)> = None;
        let mut failures = 0usize;
        for (label, l, r) in cases {
            if l != r {
                failures += 1;
                if first.is_none() {
                    first = Some((label, l, r));
                }
            }
            last = Some((l, r));
        }
        match (first, last) {
            (Some((label, l, r)), _) => Eval::residues(l, r).note(format!("fails at {label} ({failures} failing)")),
            (None, Some((l, r))) => Eval::residues(l, r).note(format!("all {domain}")),
            (None, None) => Eval::exact("", "", true).note(format!("empty range: {domain}")),
        }
    }
}

pub(crate) struct Ctx<'a> {
    pub cache: &'a SequenceCache,
    pub caps: IdentityCaps,
}

type PrimeEval = fn(&Ctx, u64, &Params) -> Result<Eval, CheckError>;

#[derive(Clone, Copy)]
pub(crate) enum Evaluator {
    Prime(PrimeEval),
    Identity(IdentityId),
    Oracle(fn() -> Result<Eval, CheckError>),
}

/// Where a check's instances come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    /// Primes of the requested range up to a cost cap.
    Primes { cap: u64 },
    /// Odd moduli `m <= max`, independent of the prime range.
    OddModuli { max: u64 },
    /// A fixed list of primes, independent of the prime range.
    FixedPrimes(&'static [u64]),
    /// One row per run.
    Single,
}

pub struct CheckDefinition {
    pub id: &'static str,
    pub title: &'static str,
    pub group: Group,
    /// Human-readable modulus: `p`, `p^2`, `p^e`, `m`, `exact`, ...
    pub modulus: &'static str,
    pub domain: Domain,
    pub(crate) applies: fn(u64) -> Result<(), &'static str>,
    pub(crate) instances: fn(u64) -> Vec<Params>,
    pub(crate) flag: fn(&Params) -> Flag,
    pub(crate) eval: Evaluator,
}

impl CheckDefinition {
    pub fn flag(&self, params: &Params) -> Flag {
        (self.flag)(params)
    }
}

pub(crate) fn always(_: u64) -> Result<(), &'static str> {
    Ok(())
}

pub(crate) fn one_instance(_: u64) -> Vec<Params> {
    vec![Params::new()]
}

pub(crate) fn verified(_: &Params) -> Flag {
    Flag::Verified
}

pub(crate) fn unit(n: u64, m: u64) -> Result<Residue, CheckError> {
    Ok(Residue::new(n % m, m).inv()?)
}

/// `(-1)^{(p-1)/2}`.
pub(crate) fn legendre_minus_one(p: u64) -> i64 {
    if p % 4 == 1 {
        1
    } else {
        -1
    }
}

pub(crate) fn sum(it: impl Iterator<Item = Residue>, m: u64) -> Residue {
    it.fold(Residue::zero(m), |a, b| a + b)
}

/// Every registered check in id order.
pub fn registry() -> &'static [CheckDefinition] {
    static REGISTRY: OnceLock<Vec<CheckDefinition>> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        let mut all = Vec::new();
        all.extend(harmonic::definitions());
        all.extend(euler::definitions());
        all.extend(genocchi::definitions());
        all.extend(periodicity::definitions());
        all.extend(meta::definitions());
        all.sort_by_key(|d| d.id);
        all
    })
}

pub fn find_check(id: &str) -> Result<&'static CheckDefinition, CheckError> {
    registry()
        .iter()
        .find(|d| d.id.eq_ignore_ascii_case(id))
        .ok_or_else(|| CheckError::UnknownCheck(id.to_string()))
}

/// Expands check ids and group names (`all` included) into registry
/// entries, deduplicated, in id order.
pub fn resolve_suite<S: AsRef<str>>(names: &[S]) -> Result<Vec<&'static CheckDefinition>, CheckError> {
    let mut picked = vec![false; registry().len()];
    for name in names {
        let name = name.as_ref().trim();
        if name.eq_ignore_ascii_case("all") {
            picked.iter_mut().for_each(|x| *x = true);
        } else if let Ok(group) = name.parse::<Group>() {
            for (i, d) in registry().iter().enumerate() {
                picked[i] |= d.group == group;
            }
        } else {
            let d = find_check(name)?;
            let i = registry().iter().position(|x| x.id == d.id).expect("registered");
            picked[i] = true;
        }
    }
    Ok(registry()
        .iter()
        .zip(picked)
        .filter_map(|(d, keep)| keep.then_some(d))
        .collect())
}

fn finish(def: &CheckDefinition, p: Option<u64>, params: &Params, outcome: Result<Eval, CheckError>) -> CheckResult {
    let mut row = CheckResult {
        check: def.id.to_string(),
        p,
        params: params.clone(),
        modulus: None,
        lhs: String::new(),
        rhs: String::new(),
        status: Status::Skip,
        note: String::new(),
    };
    match outcome {
        Err(e) => row.note = e.to_string(),
        Ok(ev) => {
            if let Some(ps) = ev.params {
                row.params = ps;
            }
            let flag = def.flag(&row.params);
            row.modulus = ev.modulus;
            row.lhs = ev.lhs;
            row.rhs = ev.rhs;
            row.note = ev.note;
            row.status = match (flag, ev.holds) {
                (Flag::Verified, true) => Status::Pass,
                (Flag::Verified, false) => Status::Fail,
                (Flag::DiscrepancyExpected, false) => Status::Discrepancy,
                (Flag::DiscrepancyExpected, true) => {
                    row.note = join_notes("flagged statement holds here", &row.note);
                    Status::Pass
                }
            };
        }
    }
    row
}

fn join_notes(a: &str, b: &str) -> String {
    if b.is_empty() {
        a.to_string()
    } else {
        format!("{a}; {b}")
    }
}

fn run_one(ctx: &Ctx, def: &CheckDefinition, p: u64, params: &Params) -> CheckResult {
    let row_p = match def.domain {
        Domain::OddModuli { .. } | Domain::Single => None,
        _ => Some(p),
    };
    let outcome = match (def.applies)(p) {
        Err(reason) => Err(CheckError::NotApplicable(reason.to_string())),
        Ok(()) => match def.eval {
            Evaluator::Prime(f) => f(ctx, p, params),
            Evaluator::Identity(id) => meta::identity_row(id, &ctx.caps),
            Evaluator::Oracle(f) => f(),
        },
    };
    finish(def, row_p, params, outcome)
}

/// Evaluates one instance. For C24 `p` is the odd modulus `m`; for
/// identity and oracle rows it is ignored.
pub fn evaluate_check(
    cache: &SequenceCache,
    id: &str,
    p: u64,
    params: &Params,
) -> Result<CheckResult, CheckError> {
    let def = find_check(id)?;
    let ctx = Ctx {
        cache,
        caps: IdentityCaps::default(),
    };
    let params = match def.domain {
        Domain::OddModuli { .. } if params.int("m").is_none() => params.clone().with("m", p as i64),
        _ => params.clone(),
    };
    Ok(run_one(&ctx, def, p, &params))
}

#[derive(Debug, Clone)]
pub struct SuiteOptions {
    pub range: PrimeRange,
    /// Restricts parametric-exponent rows (C17, C22) to this exponent.
    pub mod_exp: Option<u32>,
    pub jobs: usize,
    pub identity_caps: IdentityCaps,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self {
            range: PrimeRange::new(5, 997),
            mod_exp: None,
            jobs: 1,
            identity_caps: IdentityCaps::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub results: Vec<CheckResult>,
    pub summary: BTreeMap<Status, usize>,
}

impl SuiteOutcome {
    pub fn count(&self, status: Status) -> usize {
        self.summary.get(&status).copied().unwrap_or(0)
    }
}

pub fn summarize(results: &[CheckResult]) -> BTreeMap<Status, usize> {
    let mut summary: BTreeMap<Status, usize> = Status::ALL.iter().map(|&s| (s, 0)).collect();
    for r in results {
        *summary.entry(r.status).or_default() += 1;
    }
    summary
}

/// The (check, p, params) tasks a suite run evaluates, in report order.
fn plan(defs: &[&'static CheckDefinition], options: &SuiteOptions) -> Vec<(&'static CheckDefinition, u64, Params)> {
    let primes = primes_in(options.range);
    let mut tasks = Vec::new();
    for &def in defs {
        let points: Vec<u64> = match def.domain {
            Domain::Primes { cap } => primes.iter().copied().filter(|&p| p <= cap).collect(),
            Domain::OddModuli { max } => (1..=max).step_by(2).collect(),
            Domain::FixedPrimes(ps) => ps.to_vec(),
            Domain::Single => vec![0],
        };
        for p in points {
            if (def.applies)(p).is_err() {
                continue;
            }
            for params in (def.instances)(p) {
                let keep = match (options.mod_exp, params.int("e")) {
                    (Some(want), Some(e)) => e == want as i64,
                    _ => true,
                };
                if keep {
                    tasks.push((def, p, params));
                }
            }
        }
    }
    tasks
}

/// Runs every applicable instance of the selected checks. Rows come back
/// sorted by check id, then by p, rows of equal key in instance order.
pub fn run_suite(
    cache: &SequenceCache,
    defs: &[&'static CheckDefinition],
    options: &SuiteOptions,
) -> SuiteOutcome {
    let ctx = Ctx {
        cache,
        caps: options.identity_caps,
    };
    let tasks = plan(defs, options);
    let evaluate = || -> Vec<CheckResult> {
        tasks
            .par_iter()
            .map(|(def, p, params)| {
                let mut row = run_one(&ctx, def, *p, params);
                if let Domain::OddModuli { .. } = def.domain {
                    row.params = params.clone().with("m", *p as i64);
                }
                row
            })
            .collect()
    };
    let mut results = match rayon::ThreadPoolBuilder::new().num_threads(options.jobs.max(1)).build() {
        Ok(pool) => pool.install(evaluate),
        Err(_) => evaluate(),
    };
    results.sort_by(|a, b| (a.check.as_str(), a.p).cmp(&(b.check.as_str(), b.p)));
    let summary = summarize(&results);
    SuiteOutcome { results, summary }
}

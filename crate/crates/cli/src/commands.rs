use std::fs;
use std::io::Write;
use std::time::Instant;

use congruence_lab::arith::{is_prime, rat_to_string, represent_a2_plus_4b2, Residue};
use congruence_lab::congruences::{resolve_suite, run_suite, Status, SuiteOptions};
use congruence_lab::oracles::{
    alternating_count, ascent_distribution, dumont_count, gun_count, multiset_descent_distribution,
    newcomb_distribution,
};
use congruence_lab::sequences::{
    bernoulli_exact, eulerian_row, euler_numbers, generalized_euler, generalized_eulerian_row, genocchi_number,
    genocchi_numbers, zigzag, IdentityCaps, SequenceCache, BERNOULLI_CAP,
};
use num_bigint::BigInt;
use num_traits::Signed;

use crate::config::{FileConfig, SuiteConfig};
use crate::report::{Report, Summary};
use crate::store::{default_cache_dir, FileStore};
use crate::{CliError, Exit, IdentitiesArgs, OracleArgs, OracleFamily, RepresentArgs, SeqArgs, SeqFamily, VerifyArgs};

/// Largest index `seq` prints for the zigzag-based families.
pub const SEQ_MAX: usize = 5000;
/// Largest Eulerian row and `Ê` index `seq` prints.
pub const TRIANGLE_MAX: usize = 300;
const DEFAULT_SEQ_MAX: usize = 12;
const DEFAULT_TRIANGLE_ROWS: usize = 7;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

pub fn verify(args: VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<Exit, CliError> {
    let file = args.config.as_deref().map(FileConfig::load).transpose()?;
    let mut config = SuiteConfig::resolve(file, args.flags())?;
    let defs = resolve_suite(&config.selection()).map_err(|e| usage(e.to_string()))?;
    config.cache_dir = config.cache_dir.take().or_else(default_cache_dir);
    let cache = match &config.cache_dir {
        Some(dir) => SequenceCache::with_store(Box::new(FileStore::new(dir))),
        None => SequenceCache::new(),
    };
    let options = SuiteOptions {
        range: config.range(),
        mod_exp: config.mod_exp.as_filter(),
        jobs: config.jobs,
        identity_caps: IdentityCaps::default(),
    };
    let start = Instant::now();
    let outcome = run_suite(&cache, &defs, &options);
    let elapsed = start.elapsed().as_millis() as u64;
    let report = Report::new(&config, &outcome, elapsed);
    let text = report.render(config.format);
    match &config.out {
        Some(path) => fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    let s = report.summary;
    writeln!(
        err,
        "{} rows: {} PASS, {} FAIL, {} SKIP, {} DISCREPANCY ({elapsed} ms)",
        s.total(),
        s.pass,
        s.fail,
        s.skip,
        s.discrepancy
    )?;
    Ok(if s.fail > 0 { Exit::Failure } else { Exit::Ok })
}

fn reduce(v: &BigInt, modulus: Option<u64>) -> String {
    match modulus {
        Some(m) => Residue::from_bigint(v, m).to_string(),
        None => v.to_string(),
    }
}

fn join(v: &[BigInt], modulus: Option<u64>) -> String {
    v.iter().map(|x| reduce(x, modulus)).collect::<Vec<_>>().join(" ")
}

pub fn seq(args: SeqArgs, out: &mut dyn Write) -> Result<Exit, CliError> {
    let family = args
        .family
        .or(args.family_flag)
        .ok_or_else(|| usage("seq needs a family: eulerian, euler, genocchi, tangent, zigzag, bernoulli or ehat"))?;
    let modulus = args.modulus;
    if modulus.is_some_and(|m| m < 2) {
        return Err(usage("modulus must be at least 2"));
    }
    let cap = match family {
        SeqFamily::Eulerian | SeqFamily::Ehat => TRIANGLE_MAX,
        SeqFamily::Bernoulli => BERNOULLI_CAP,
        _ => SEQ_MAX,
    };
    let default_top = if family == SeqFamily::Eulerian {
        DEFAULT_TRIANGLE_ROWS
    } else {
        DEFAULT_SEQ_MAX
    };
    let top = args.n.or(args.max).unwrap_or(default_top);
    if top > cap {
        return Err(usage(format!("{family:?} is limited to index {cap}")));
    }
    let first = match family {
        SeqFamily::Eulerian | SeqFamily::Genocchi | SeqFamily::Tangent => 1,
        _ => 0,
    };
    let indices: Vec<usize> = match args.n {
        Some(n) if n < first => return Err(usage(format!("{family:?} starts at index {first}"))),
        Some(n) => vec![n],
        None => (first..=top).collect(),
    };
    let lines: Vec<String> = match family {
        SeqFamily::Eulerian => indices.iter().map(|&n| join(&eulerian_row(n), modulus)).collect(),
        SeqFamily::Euler => {
            let e = euler_numbers(top);
            indices.iter().map(|&n| reduce(&e[n], modulus)).collect()
        }
        SeqFamily::Zigzag => {
            let z = zigzag(top);
            indices.iter().map(|&n| reduce(&z[n], modulus)).collect()
        }
        SeqFamily::Tangent => {
            if args.n.is_some_and(|n| n % 2 == 0) {
                return Err(usage("tangent numbers have odd indices"));
            }
            let z = zigzag(top);
            indices.iter().filter(|&&n| n % 2 == 1).map(|&n| reduce(&z[n], modulus)).collect()
        }
        SeqFamily::Ehat => indices.iter().map(|&n| reduce(&generalized_euler(n), modulus)).collect(),
        SeqFamily::Genocchi => {
            let g = genocchi_numbers(top).map_err(|e| usage(e.to_string()))?;
            indices.iter().map(|&n| reduce(&g[n], modulus)).collect()
        }
        SeqFamily::Bernoulli => {
            let b = bernoulli_exact(top);
            indices
                .iter()
                .map(|&n| match modulus {
                    None => rat_to_string(&b[n]),
                    Some(m) => Residue::from_rat(&b[n], m).map_or_else(|_| "undefined".into(), |r| r.to_string()),
                })
                .collect()
        }
    };
    for line in lines {
        writeln!(out, "{line}")?;
    }
    Ok(Exit::Ok)
}

enum Comparison {
    Scalar(BigInt, BigInt),
    Vector(Vec<BigInt>, Vec<BigInt>),
}

fn unsigned_genocchi(n: usize) -> Result<BigInt, CliError> {
    Ok(genocchi_number(2 * n).map_err(|e| usage(e.to_string()))?.abs())
}

pub fn oracle(args: OracleArgs, out: &mut dyn Write) -> Result<Exit, CliError> {
    let family = args
        .family
        .or(args.family_flag)
        .ok_or_else(|| usage("oracle needs a family: ascents, alternating, dumont, guns, newcomb or multiset"))?;
    let n = args.n;
    if n == 0 && family != OracleFamily::Alternating {
        return Err(usage("n must be at least 1"));
    }
    let cap = |e: congruence_lab::oracles::OracleError| usage(e.to_string());
    let cmp = match family {
        OracleFamily::Ascents => Comparison::Vector(ascent_distribution(n).map_err(cap)?.counts, eulerian_row(n)),
        OracleFamily::Alternating => {
            let count = alternating_count(n).map_err(cap)?;
            Comparison::Scalar(count, zigzag(n).swap_remove(n))
        }
        OracleFamily::Dumont => Comparison::Scalar(dumont_count(n).map_err(cap)?, unsigned_genocchi(n)?),
        OracleFamily::Guns => Comparison::Scalar(gun_count(n).map_err(cap)?, unsigned_genocchi(n)?),
        OracleFamily::Newcomb => Comparison::Vector(newcomb_distribution(n).map_err(cap)?.counts, eulerian_row(n)),
        OracleFamily::Multiset => {
            if args.i == 0 {
                return Err(usage("i must be at least 1"));
            }
            let counts = multiset_descent_distribution(n, args.i).map_err(cap)?.counts;
            let row = generalized_eulerian_row(n as u64, args.i as u64).map_err(|e| usage(e.to_string()))?;
            Comparison::Vector(counts, row)
        }
    };
    let (line, same) = match &cmp {
        Comparison::Scalar(a, b) => (format!("{a} {b}"), a == b),
        Comparison::Vector(a, b) => (format!("{} | {}", join(a, None), join(b, None)), a == b),
    };
    writeln!(out, "{line} {}", if same { "OK" } else { "MISMATCH" })?;
    Ok(if same { Exit::Ok } else { Exit::Failure })
}

pub fn identities(args: IdentitiesArgs, out: &mut dyn Write) -> Result<Exit, CliError> {
    if args.series_order == 0 {
        return Err(usage("series order must be at least 1"));
    }
    let options = SuiteOptions {
        identity_caps: IdentityCaps {
            max_n: args.max_n,
            series_order: args.series_order,
        },
        ..SuiteOptions::default()
    };
    let defs = resolve_suite(&["identities"]).expect("identities group exists");
    let outcome = run_suite(&SequenceCache::new(), &defs, &options);
    for r in &outcome.results {
        let detail = match r.status {
            Status::Pass | Status::Skip => format!("({})", r.note),
            _ => format!("lhs = {}, rhs = {} at {} ({})", r.lhs, r.rhs, r.params, r.note),
        };
        writeln!(out, "{:<4} {:<11} {detail}", r.check, r.status.as_str())?;
    }
    let s = Summary::of(&outcome);
    writeln!(
        out,
        "{} PASS, {} FAIL, {} SKIP, {} DISCREPANCY",
        s.pass, s.fail, s.skip, s.discrepancy
    )?;
    Ok(if s.fail > 0 { Exit::Failure } else { Exit::Ok })
}

pub fn represent(args: RepresentArgs, out: &mut dyn Write) -> Result<Exit, CliError> {
    if !is_prime(args.p) {
        return Err(usage(format!("{} is not prime", args.p)));
    }
    let (a, b) = represent_a2_plus_4b2(args.p).map_err(|e| usage(e.to_string()))?;
    writeln!(out, "{a} {b}")?;
    Ok(Exit::Ok)
}

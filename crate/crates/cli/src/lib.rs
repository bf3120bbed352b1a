//! `congruence-lab`: run the congruence suites, print sequences, compare the
//! enumerative oracles and verify the identity registry.

pub mod commands;
pub mod config;
pub mod report;
pub mod store;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::config::{split_names, ConfigError, Format, ModExp};

/// Process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Ok = 0,
    Failure = 1,
    Usage = 2,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Parser)]
#[command(name = "congruence-lab", version, about = "Check congruences for Eulerian, Euler, Genocchi and Bernoulli numbers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run check suites over a prime range and write a report.
    Verify(VerifyArgs),
    /// Print a sequence, exactly or reduced modulo m.
    Seq(SeqArgs),
    /// Compare an enumerative oracle with the formula engine.
    Oracle(OracleArgs),
    /// Verify the exact identity registry.
    Identities(IdentitiesArgs),
    /// Write a prime p = 1 mod 4 as a^2 + 4b^2 with a odd.
    Represent(RepresentArgs),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Groups or check ids: all, harmonic, euler, genocchi, periodicity, identities, oracles.
    #[arg(long, value_delimiter = ',')]
    pub suite: Vec<String>,
    /// Individual check ids, e.g. C02,C17.
    #[arg(long, value_delimiter = ',')]
    pub checks: Vec<String>,
    #[arg(long)]
    pub pmin: Option<u64>,
    #[arg(long)]
    pub pmax: Option<u64>,
    /// Exponent for the parametric-modulus checks: auto, 1, 2 or 3.
    #[arg(long)]
    pub mod_exp: Option<ModExp>,
    #[arg(long)]
    pub jobs: Option<usize>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Report path; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Residue cache directory (default: $CONGRUENCE_LAB_CACHE or ~/.cache/congruence-lab).
    #[arg(long)]
    pub cache_dir: Option<PathBuf>,
    /// JSON file with keys mirroring these flags.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeqFamily {
    Eulerian,
    Euler,
    Genocchi,
    Tangent,
    Zigzag,
    Bernoulli,
    Ehat,
}

#[derive(Debug, Args)]
pub struct SeqArgs {
    #[arg(value_enum)]
    pub family: Option<SeqFamily>,
    #[arg(long = "family", value_enum, conflicts_with = "family")]
    pub family_flag: Option<SeqFamily>,
    /// Largest index (for eulerian: last row).
    #[arg(long)]
    pub max: Option<usize>,
    /// A single index (for eulerian: one row).
    #[arg(long)]
    pub n: Option<usize>,
    /// Reduce every value modulo this integer.
    #[arg(long)]
    pub modulus: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OracleFamily {
    Ascents,
    Alternating,
    Dumont,
    Guns,
    Newcomb,
    Multiset,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(value_enum)]
    pub family: Option<OracleFamily>,
    #[arg(long = "family", value_enum, conflicts_with = "family")]
    pub family_flag: Option<OracleFamily>,
    #[arg(long)]
    pub n: usize,
    /// Copies of each letter for the multiset oracle.
    #[arg(long, default_value_t = 2)]
    pub i: usize,
}

#[derive(Debug, Args)]
pub struct IdentitiesArgs {
    /// Upper bound on every size parameter.
    #[arg(long)]
    pub max_n: Option<u64>,
    /// Truncation order for the generating-function identities.
    #[arg(long, default_value_t = congruence_lab::series::DEFAULT_ORDER)]
    pub series_order: usize,
}

#[derive(Debug, Args)]
pub struct RepresentArgs {
    pub p: u64,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> Exit
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                Exit::Usage
            } else {
                let _ = write!(out, "{text}");
                Exit::Ok
            };
        }
    };
    let result = match cli.command {
        Command::Verify(a) => commands::verify(a, out, err),
        Command::Seq(a) => commands::seq(a, out),
        Command::Oracle(a) => commands::oracle(a, out),
        Command::Identities(a) => commands::identities(a, out),
        Command::Represent(a) => commands::represent(a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            Exit::Usage
        }
    }
}

impl VerifyArgs {
    fn flags(&self) -> config::FlagConfig {
        let names = |v: &[String]| v.iter().flat_map(|s| split_names(s)).collect();
        config::FlagConfig {
            suite: names(&self.suite),
            checks: names(&self.checks),
            pmin: self.pmin,
            pmax: self.pmax,
            mod_exp: self.mod_exp,
            jobs: self.jobs,
            format: self.format,
            out: self.out.clone(),
            cache_dir: self.cache_dir.clone(),
        }
    }
}

//! Suite configuration: built-in defaults, then an optional JSON file, then
//! command-line flags.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use congruence_lab::arith::PrimeRange;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const DEFAULT_PMIN: u64 = 5;
pub const DEFAULT_PMAX: u64 = 997;
const PMAX_LIMIT: u64 = (1 << 31) - 1;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read config {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("invalid config {path}: {source}")]
    Parse { path: PathBuf, source: serde_json::Error },
    #[error("{0}")]
    Invalid(String),
}

/// Which exponent the parametric-modulus checks run at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ModExp {
    #[default]
    Auto,
    Fixed(u32),
}

impl ModExp {
    pub fn as_filter(self) -> Option<u32> {
        match self {
            ModExp::Auto => None,
            ModExp::Fixed(e) => Some(e),
        }
    }
}

impl FromStr for ModExp {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "auto" => Ok(ModExp::Auto),
            "1" => Ok(ModExp::Fixed(1)),
            "2" => Ok(ModExp::Fixed(2)),
            "3" => Ok(ModExp::Fixed(3)),
            other => Err(format!("mod-exp must be auto, 1, 2 or 3 (got `{other}`)")),
        }
    }
}

impl fmt::Display for ModExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModExp::Auto => f.write_str("auto"),
            ModExp::Fixed(e) => write!(f, "{e}"),
        }
    }
}

impl Serialize for ModExp {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ModExp {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Int(u64),
            Text(String),
        }
        let text = match Repr::deserialize(d)? {
            Repr::Int(v) => v.to_string(),
            Repr::Text(s) => s,
        };
        text.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
    #[value(alias = "markdown")]
    #[serde(alias = "markdown")]
    Md,
}

/// A list given either as a JSON array or as one comma-separated string.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NameList(pub Vec<String>);

impl<'de> Deserialize<'de> for NameList {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            One(String),
            Many(Vec<String>),
        }
        Ok(NameList(match Repr::deserialize(d)? {
            Repr::One(s) => split_names(&s),
            Repr::Many(v) => v.iter().flat_map(|s| split_names(s)).collect(),
        }))
    }
}

pub fn split_names(s: &str) -> Vec<String> {
    s.split(',').map(str::trim).filter(|x| !x.is_empty()).map(String::from).collect()
}

/// Contents of a `--config` file; keys mirror the flags.
#[derive(Debug, Default, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub struct FileConfig {
    pub suite: Option<NameList>,
    pub checks: Option<NameList>,
    pub pmin: Option<u64>,
    pub pmax: Option<u64>,
    #[serde(alias = "mod_exp")]
    pub mod_exp: Option<ModExp>,
    pub jobs: Option<usize>,
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
    #[serde(alias = "cache_dir")]
    pub cache_dir: Option<PathBuf>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = fs::read_to_string(path).map_err(|source| ConfigError::Read {
            path: path.to_path_buf(),
            source,
        })?;
        serde_json::from_str(&text).map_err(|source| ConfigError::Parse {
            path: path.to_path_buf(),
            source,
        })
    }
}

/// Flag values as given on the command line; `None` means "not given".
#[derive(Debug, Clone, Default)]
pub struct FlagConfig {
    pub suite: Vec<String>,
    pub checks: Vec<String>,
    pub pmin: Option<u64>,
    pub pmax: Option<u64>,
    pub mod_exp: Option<ModExp>,
    pub jobs: Option<usize>,
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
    pub cache_dir: Option<PathBuf>,
}

/// A fully resolved and validated `verify` configuration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub suite: Vec<String>,
    pub checks: Vec<String>,
    pub pmin: u64,
    pub pmax: u64,
    pub mod_exp: ModExp,
    pub jobs: usize,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub cache_dir: Option<PathBuf>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            suite: Vec::new(),
            checks: Vec::new(),
            pmin: DEFAULT_PMIN,
            pmax: DEFAULT_PMAX,
            mod_exp: ModExp::Auto,
            jobs: 1,
            format: Format::Json,
            out: None,
            cache_dir: None,
        }
    }
}

impl SuiteConfig {
    pub fn resolve(file: Option<FileConfig>, flags: FlagConfig) -> Result<Self, ConfigError> {
        let mut c = SuiteConfig::default();
        if let Some(f) = file {
            if let Some(v) = f.suite {
                c.suite = v.0;
            }
            if let Some(v) = f.checks {
                c.checks = v.0;
            }
            c.pmin = f.pmin.unwrap_or(c.pmin);
            c.pmax = f.pmax.unwrap_or(c.pmax);
            c.mod_exp = f.mod_exp.unwrap_or(c.mod_exp);
            c.jobs = f.jobs.unwrap_or(c.jobs);
            c.format = f.format.unwrap_or(c.format);
            c.out = f.out.or(c.out);
            c.cache_dir = f.cache_dir.or(c.cache_dir);
        }
        if !flags.suite.is_empty() {
            c.suite = flags.suite;
        }
        if !flags.checks.is_empty() {
            c.checks = flags.checks;
        }
        c.pmin = flags.pmin.unwrap_or(c.pmin);
        c.pmax = flags.pmax.unwrap_or(c.pmax);
        c.mod_exp = flags.mod_exp.unwrap_or(c.mod_exp);
        c.jobs = flags.jobs.unwrap_or(c.jobs);
        c.format = flags.format.unwrap_or(c.format);
        c.out = flags.out.or(c.out);
        c.cache_dir = flags.cache_dir.or(c.cache_dir);
        c.validate()?;
        Ok(c)
    }

    fn validate(&self) -> Result<(), ConfigError> {
        if self.pmin < 5 {
            return Err(ConfigError::Invalid(format!("pmin must be at least 5 (got {})", self.pmin)));
        }
        if self.pmax < self.pmin {
            return Err(ConfigError::Invalid(format!(
                "pmax ({}) must not be below pmin ({})",
                self.pmax, self.pmin
            )));
        }
        if self.pmax > PMAX_LIMIT {
            return Err(ConfigError::Invalid(format!("pmax must be below 2^31 (got {})", self.pmax)));
        }
        if self.jobs == 0 {
            return Err(ConfigError::Invalid("jobs must be at least 1".into()));
        }
        Ok(())
    }

    /// Suite names and check ids together; `all` when neither was given.
    pub fn selection(&self) -> Vec<String> {
        let mut names: Vec<String> = self.suite.iter().chain(&self.checks).cloned().collect();
        if names.is_empty() {
            names.push("all".into());
        }
        names
    }

    pub fn range(&self) -> PrimeRange {
        PrimeRange::new(self.pmin, self.pmax)
    }
}

//! Report assembly and the three output formats.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use congruence_lab::congruences::{find_check, CheckResult, Status, SuiteOutcome};
use congruence_lab::params::ParamValue;
use serde::Serialize;

use crate::config::{Format, SuiteConfig};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Tool {
    pub name: &'static str,
    pub version: &'static str,
}

pub const TOOL: Tool = Tool {
    name: "congruence-lab",
    version: env!("CARGO_PKG_VERSION"),
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Record {
    pub check: String,
    pub p: Option<u64>,
    pub params: BTreeMap<String, serde_json::Value>,
    pub modulus: Option<String>,
    pub lhs: String,
    pub rhs: String,
    pub status: &'static str,
    pub note: String,
}

impl From<&CheckResult> for Record {
    fn from(r: &CheckResult) -> Self {
        let params = r
            .params
            .iter()
            .map(|(k, v)| {
                let v = match v {
                    ParamValue::Int(i) => serde_json::Value::from(*i),
                    ParamValue::Text(s) => serde_json::Value::from(s.as_str()),
                };
                (k.clone(), v)
            })
            .collect();
        Record {
            check: r.check.clone(),
            p: r.p,
            params,
            modulus: r.modulus.map(|m| m.to_string()),
            lhs: r.lhs.clone(),
            rhs: r.rhs.clone(),
            status: r.status.as_str(),
            note: r.note.clone(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Summary {
    #[serde(rename = "PASS")]
    pub pass: usize,
    #[serde(rename = "FAIL")]
    pub fail: usize,
    #[serde(rename = "SKIP")]
    pub skip: usize,
    #[serde(rename = "DISCREPANCY")]
    pub discrepancy: usize,
}

impl Summary {
    pub fn of(outcome: &SuiteOutcome) -> Self {
        Summary {
            pass: outcome.count(Status::Pass),
            fail: outcome.count(Status::Fail),
            skip: outcome.count(Status::Skip),
            discrepancy: outcome.count(Status::Discrepancy),
        }
    }

    pub fn total(&self) -> usize {
        self.pass + self.fail + self.skip + self.discrepancy
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub tool: Tool,
    pub config: SuiteConfig,
    pub results: Vec<Record>,
    pub summary: Summary,
    pub duration_ms: u64,
}

impl Report {
    pub fn new(config: &SuiteConfig, outcome: &SuiteOutcome, duration_ms: u64) -> Self {
        Report {
            tool: TOOL,
            config: config.clone(),
            results: outcome.results.iter().map(Record::from).collect(),
            summary: Summary::of(outcome),
            duration_ms,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
            Format::Md => self.to_markdown(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["check", "p", "params", "modulus", "lhs", "rhs", "status", "note"])
            .expect("in-memory write");
        for r in &self.results {
            w.write_record([
                r.check.as_str(),
                &r.p.map(|p| p.to_string()).unwrap_or_default(),
                &params_text(&r.params),
                r.modulus.as_deref().unwrap_or(""),
                &r.lhs,
                &r.rhs,
                r.status,
                &r.note,
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# {} {} report\n", self.tool.name, self.tool.version);
        let c = &self.config;
        let _ = writeln!(
            out,
            "Selection `{}`, primes {}..={}, mod-exp {}, {} rows in {} ms.\n",
            c.selection().join(","),
            c.pmin,
            c.pmax,
            c.mod_exp,
            self.summary.total(),
            self.duration_ms
        );
        let s = &self.summary;
        out.push_str("| PASS | FAIL | SKIP | DISCREPANCY |\n|---:|---:|---:|---:|\n");
        let _ = writeln!(out, "| {} | {} | {} | {} |\n", s.pass, s.fail, s.skip, s.discrepancy);
        out.push_str("| Check | Statement | Modulus | Rows | PASS | FAIL | SKIP | DISCREPANCY |\n");
        out.push_str("|---|---|---|---:|---:|---:|---:|---:|\n");
        let mut per_check: BTreeMap<&str, [usize; 4]> = BTreeMap::new();
        for r in &self.results {
            let slot = match r.status {
                "PASS" => 0,
                "FAIL" => 1,
                "SKIP" => 2,
                _ => 3,
            };
            per_check.entry(&r.check).or_default()[slot] += 1;
        }
        for (id, [pass, fail, skip, disc]) in &per_check {
            let (title, modulus) = find_check(id).map_or(("", ""), |d| (d.title, d.modulus));
            let _ = writeln!(
                out,
                "| {id} | {} | {} | {} | {pass} | {fail} | {skip} | {disc} |",
                cell(title),
                cell(modulus),
                pass + fail + skip + disc
            );
        }
        let flagged: Vec<&Record> = self.results.iter().filter(|r| r.status != "PASS").collect();
        if !flagged.is_empty() {
            out.push_str("\n## Rows not passing\n\n| Check | p | Params | Modulus | LHS | RHS | Status | Note |\n");
            out.push_str("|---|---:|---|---:|---|---|---|---|\n");
            for r in flagged {
                let _ = writeln!(
                    out,
                    "| {} | {} | {} | {} | {} | {} | {} | {} |",
                    r.check,
                    r.p.map(|p| p.to_string()).unwrap_or_default(),
                    cell(&params_text(&r.params)),
                    r.modulus.as_deref().unwrap_or("exact"),
                    cell(&r.lhs),
                    cell(&r.rhs),
                    r.status,
                    cell(&r.note)
                );
            }
        }
        out
    }
}

fn params_text(params: &BTreeMap<String, serde_json::Value>) -> String {
    params
        .iter()
        .map(|(k, v)| match v {
            serde_json::Value::String(s) => format!("{k}={s}"),
            other => format!("{k}={other}"),
        })
        .collect::<Vec<_>>()
        .join(";")
}

fn cell(s: &str) -> String {
    s.replace('|', "\\|")
}

#[cfg(test)]
mod tests {
    use super::*;
    use congruence_lab::congruences::{resolve_suite, run_suite, SuiteOptions};
    use congruence_lab::sequences::SequenceCache;

    fn sample() -> Report {
        let config = SuiteConfig {
            pmax: 7,
            ..SuiteConfig::default()
        };
        let options = SuiteOptions {
            range: config.range(),
            ..SuiteOptions::default()
        };
        let outcome = run_suite(&SequenceCache::new(), &resolve_suite(&["C02", "C04L", "O03"]).unwrap(), &options);
        Report::new(&config, &outcome, 12)
    }

    #[test]
    fn json_fields() {
        let v: serde_json::Value = serde_json::from_str(&sample().to_json()).unwrap();
        let first = &v["results"][0];
        for key in ["check", "p", "params", "modulus", "lhs", "rhs", "status", "note"] {
            assert!(first.get(key).is_some(), "missing {key}");
        }
        assert_eq!(first["modulus"], "5");
        assert_eq!(v["summary"]["DISCREPANCY"], 2);
        assert_eq!(v["duration_ms"], 12);
        assert_eq!(v["tool"]["name"], "congruence-lab");
        assert_eq!(v["config"]["mod_exp"], "auto");
    }

    #[test]
    fn csv_quotes_notes() {
        let csv = sample().to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("check,p,params,modulus,lhs,rhs,status,note"));
        assert_eq!(lines.next(), Some("C02,5,,5,4,4,PASS,"));
        let mut rdr = csv::Reader::from_reader(csv.as_bytes());
        assert_eq!(rdr.records().count(), sample().results.len());
    }

    #[test]
    fn markdown_escapes_pipes() {
        let md = sample().to_markdown();
        assert!(md.contains("| C04L |"));
        assert!(md.contains("\\|G_2n\\|"));
        assert!(md.contains("## Rows not passing"));
    }
}

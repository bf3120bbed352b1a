use std::fs;
use std::path::Path;
use std::process::Command;

use serde_json::Value;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run_in(cache: &Path, args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_congruence-lab"))
        .args(args)
        .env("CONGRUENCE_LAB_CACHE", cache)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn run(args: &[&str]) -> Run {
    let cache = tempfile::tempdir().unwrap();
    run_in(cache.path(), args)
}

fn json(text: &str) -> Value {
    serde_json::from_str(text).expect("valid JSON report")
}

fn without_duration(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("duration_ms");
    v
}

#[test]
fn harmonic_suite_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let r = run(&[
        "verify", "--suite", "harmonic", "--pmin", "5", "--pmax", "97", "--format", "json", "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v = json(&fs::read_to_string(&out).unwrap());
    let rows = v["results"].as_array().unwrap();
    for id in 5..=16 {
        let id = format!("C{id:02}");
        let pass = rows.iter().filter(|r| r["check"] == id.as_str() && r["status"] == "PASS").count();
        assert_eq!(pass, 23, "{id}");
    }
    assert_eq!(v["summary"]["FAIL"], 0);
    let total: u64 = ["PASS", "FAIL", "SKIP", "DISCREPANCY"].iter().map(|k| v["summary"][k].as_u64().unwrap()).sum();
    assert_eq!(total as usize, rows.len());
}

#[test]
fn csv_rows() {
    let r = run(&["verify", "--checks", "C02", "--pmin", "5", "--pmax", "7", "--format", "csv"]);
    assert_eq!(r.code, 0);
    let lines: Vec<&str> = r.stdout.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[1..].iter().all(|l| l.contains(",PASS,")));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify", "--pmin", "4", "--pmax", "3"][..],
        &["verify", "--pmin", "11", "--pmax", "7"],
        &["verify", "--jobs", "0"],
        &["verify", "--checks", "C99"],
        &["verify", "--mod-exp", "4"],
        &["seq", "catalan"],
        &["oracle", "guns", "--n", "9"],
        &["represent", "7"],
        &["represent", "9"],
        &["frobnicate"],
    ] {
        let r = run(args);
        assert_eq!(r.code, 2, "{args:?}: {}", r.stderr);
        assert!(!r.stderr.is_empty());
    }
    assert_eq!(run(&["--help"]).code, 0);
}

#[test]
fn seq_outputs() {
    let tokens = |args: &[&str]| -> String { run(args).stdout.split_whitespace().collect::<Vec<_>>().join(" ") };
    assert!(run(&["seq", "euler", "--max", "12"]).stdout.ends_with("2702765\n"));
    assert_eq!(tokens(&["seq", "genocchi", "--max", "12"]), "1 -1 0 1 0 -3 0 17 0 -155 0 2073");
    assert_eq!(run(&["seq", "eulerian", "--n", "5"]).stdout, "1 26 66 26 1\n");
    assert_eq!(tokens(&["seq", "--family", "zigzag", "--max", "7"]), "1 1 1 2 5 16 61 272");
    assert_eq!(tokens(&["seq", "tangent", "--max", "7"]), "1 2 16 272");
    assert_eq!(tokens(&["seq", "bernoulli", "--max", "4"]), "1 -1/2 1/6 0 -1/30");
    assert_eq!(tokens(&["seq", "euler", "--max", "6", "--modulus", "7"]), "1 0 6 0 5 0 2");
    assert_eq!(tokens(&["seq", "bernoulli", "--max", "2", "--modulus", "3"]), "1 1 undefined");
}

#[test]
fn oracle_outputs() {
    assert_eq!(run(&["oracle", "dumont", "--n", "4"]).stdout, "17 17 OK\n");
    assert_eq!(run(&["oracle", "ascents", "--n", "3"]).stdout, "1 4 1 | 1 4 1 OK\n");
    assert_eq!(run(&["oracle", "alternating", "--n", "0"]).stdout, "1 1 OK\n");
    assert_eq!(run(&["oracle", "newcomb", "--n", "4"]).stdout, "1 11 11 1 | 1 11 11 1 OK\n");
    assert_eq!(run(&["oracle", "multiset", "--n", "2", "--i", "2"]).stdout, "1 4 1 | 1 4 1 OK\n");
}

#[test]
fn represent_outputs() {
    assert_eq!(run(&["represent", "13"]).stdout, "3 1\n");
    assert_eq!(run(&["represent", "5"]).stdout, "1 1\n");
}

#[test]
fn identities_command() {
    let r = run(&["identities"]);
    assert_eq!(r.code, 0);
    let status = |id: &str| -> String {
        let line = r.stdout.lines().find(|l| l.split_whitespace().next() == Some(id)).unwrap();
        line.split_whitespace().nth(1).unwrap().to_string()
    };
    assert_eq!(status("I15"), "DISCREPANCY");
    assert_eq!(status("I21b"), "DISCREPANCY");
    for id in ["I01", "I12", "I19", "I20", "I21a", "I22"] {
        assert_eq!(status(id), "PASS", "{id}");
    }
    let small = run(&["identities", "--max-n", "5", "--series-order", "8"]);
    assert_eq!(small.code, 0);
    assert!(small.stdout.contains("I20  PASS"));
}

#[test]
fn config_file_with_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("c.json");
    fs::write(&cfg, r#"{"checks": "C02,C06", "pmax": 11, "format": "csv", "jobs": 2}"#).unwrap();
    let r = run(&["verify", "--config", cfg.to_str().unwrap(), "--format", "json"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v = json(&r.stdout);
    assert_eq!(v["config"]["pmax"], 11);
    assert_eq!(v["config"]["jobs"], 2);
    assert_eq!(v["results"].as_array().unwrap().len(), 6);
    fs::write(&cfg, r#"{"pmaxx": 11}"#).unwrap();
    assert_eq!(run(&["verify", "--config", cfg.to_str().unwrap()]).code, 2);
    assert_eq!(run(&["verify", "--config", "/nonexistent/c.json"]).code, 2);
}

#[test]
fn reports_are_deterministic() {
    let cache = tempfile::tempdir().unwrap();
    let args = ["verify", "--suite", "genocchi,euler", "--pmax", "61"];
    let a = without_duration(json(&run_in(cache.path(), &args).stdout));
    let b = without_duration(json(&run_in(cache.path(), &args).stdout));
    assert_eq!(a, b);
    let mut par = args.to_vec();
    par.extend(["--jobs", "3"]);
    let c = json(&run(&par).stdout);
    assert_eq!(a["results"], c["results"]);
}

#[test]
fn cold_and_warm_cache_agree() {
    let cache = tempfile::tempdir().unwrap();
    let args = ["verify", "--suite", "harmonic,euler,genocchi", "--pmax", "41"];
    let cold = json(&run_in(cache.path(), &args).stdout);
    let entry = cache.path().join("zigzag").join("7_3.json");
    let stored = json(&fs::read_to_string(&entry).unwrap());
    assert_eq!(stored["schema_version"], 1);
    assert_eq!(stored["modulus"], "343");
    let warm = json(&run_in(cache.path(), &args).stdout);
    assert_eq!(cold["results"], warm["results"]);
    fs::write(&entry, "garbage").unwrap();
    fs::write(cache.path().join("harmonic").join("11_1.json"), r#"{"schema_version":1}"#).unwrap();
    let repaired = json(&run_in(cache.path(), &args).stdout);
    assert_eq!(cold["results"], repaired["results"]);
}

#[test]
fn cache_dir_flag_beats_environment() {
    let env_dir = tempfile::tempdir().unwrap();
    let flag_dir = tempfile::tempdir().unwrap();
    let r = run_in(env_dir.path(), &["verify", "--checks", "C01", "--pmax", "7", "--cache-dir", flag_dir.path().to_str().unwrap()]);
    assert_eq!(r.code, 0);
    assert!(flag_dir.path().join("harmonic").join("5_2.json").is_file());
    assert!(fs::read_dir(env_dir.path()).unwrap().next().is_none());
}

#[test]
fn markdown_report() {
    let r = run(&["verify", "--checks", "C04L,C02", "--pmax", "13", "--format", "md"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("# congruence-lab"));
    assert!(r.stdout.contains("| C04L |"));
    assert!(r.stdout.contains("| C04L | 5 |  | exact | -15 | 0 | DISCREPANCY |"));
}

#[test]
fn mod_exp_selects_exponent() {
    let v = json(&run(&["verify", "--checks", "C17,C22", "--pmax", "13", "--mod-exp", "2"]).stdout);
    let rows = v["results"].as_array().unwrap();
    assert!(!rows.is_empty());
    assert!(rows.iter().all(|r| r["params"]["e"] == 2));
}

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn kmt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kmt")).args(args).output().expect("kmt runs")
}

fn write_gcm(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn validator() -> jsonschema::JSONSchema {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../schema/report.json");
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::JSONSchema::compile(&schema).expect("schema compiles")
}

fn assert_valid(v: &Value) {
    let schema = validator();
    let msgs: Vec<String> = match schema.validate(v) {
        Ok(()) => Vec::new(),
        Err(errors) => errors.map(|e| format!("{} at {}", e, e.instance_path)).collect(),
    };
    assert!(msgs.is_empty(), "schema violations: {msgs:?}");
}

#[test]
fn certify_a2_mod_5() {
    let dir = TempDir::new().unwrap();
    let a2 = write_gcm(&dir, "a2.gcm", "2\n2 -1\n-1 2\n");
    let out = kmt(&["certify", "--gcm", s(&a2), "--ring", "Z/5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["report"]["verdict"], "certified");
    assert_valid(&v);
}

#[test]
fn hypothesis_failure_exits_one() {
    let dir = TempDir::new().unwrap();
    let b2 = write_gcm(&dir, "b2.gcm", "2\n2 -1\n-2 2\n");
    let out = kmt(&["certify", "--gcm", s(&b2), "--ring", "Z/5"]);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    assert_eq!(v["status"], "hypothesis_failure");
    assert_eq!(v["report"]["verdict"], "failed");
    assert_valid(&v);
}

#[test]
fn axiom_violation_exits_two_with_position() {
    let dir = TempDir::new().unwrap();
    let bad = write_gcm(&dir, "bad.gcm", "# zero pattern broken\n2\n2 -1\n0 2\n");
    let out = kmt(&["classify", "--gcm", s(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 3, column 3"), "{err}");
}

#[test]
fn malformed_inputs_name_line_and_column() {
    let dir = TempDir::new().unwrap();
    let bad = write_gcm(&dir, "typo.gcm", "2\n2 -1\n-1 x\n");
    let out = kmt(&["classify", "--gcm", s(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3, column 4"));

    let a2 = write_gcm(&dir, "a2.gcm", "2\n2 -1\n-1 2\n");
    let out = kmt(&["certify", "--gcm", s(&a2), "--ring", "Z/x"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("column 3"));
}

#[test]
fn transport_rejects_modulus_six() {
    let out = kmt(&["verify", "transport", "--q", "6"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("modulus must be coprime to 6"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(kmt(&["bounds"]).status.code(), Some(2));
    assert_eq!(kmt(&["verify", "chevalley", "--type", "f4", "--q", "5"]).status.code(), Some(2));
}

#[test]
fn identical_runs_are_byte_identical() {
    let args = ["verify", "transport", "--q", "5", "--samples", "500", "--seed", "7"];
    let (a, b) = (kmt(&args), kmt(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let c = kmt(&["verify", "chevalley", "--type", "b2", "--q", "3", "--seed", "3"]);
    let d = kmt(&["verify", "chevalley", "--type", "b2", "--q", "3", "--seed", "3"]);
    assert_eq!(c.stdout, d.stdout);
}

#[test]
fn every_command_matches_schema() {
    let dir = TempDir::new().unwrap();
    let a2 = write_gcm(&dir, "a2.gcm", "2\n2 -1\n-1 2\n");
    let a3 = write_gcm(&dir, "a3.gcm", "3\n2 -1 0\n-1 2 -1\n0 -1 2\n");
    let runs: Vec<Vec<&str>> = vec![
        vec!["classify", "--gcm", s(&a3)],
        vec!["roots", "--gcm", s(&a3), "--height-cap", "3"],
        vec!["sigma", "--gcm", s(&a3)],
        vec!["sigma", "--gcm", s(&a3), "--pseudo", "0,1"],
        vec!["bounds", "--m", "53"],
        vec!["bounds", "--ring", "Z/35"],
        vec!["certify", "--gcm", s(&a2), "--ring", "poly(Zloc!4)"],
        vec!["verify", "chevalley", "--type", "a2", "--q", "3"],
        vec!["verify", "generation", "--group", "sp4", "--q", "3"],
        vec!["verify", "affine", "--d", "3", "--q", "3", "--window", "6"],
        vec!["verify", "symrep", "--n", "4", "--q", "7"],
        vec!["verify", "transport", "--q", "5", "--samples", "200"],
        vec!["verify", "ledger"],
    ];
    for args in runs {
        let out = kmt(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        assert_valid(&stdout_json(&out));
    }
}

#[test]
fn bounds_mark_missing_units() {
    let v = stdout_json(&kmt(&["bounds", "--ring", "Z/35"]));
    assert_eq!(v["report"]["m"], 5);
    assert!(v["report"]["orth"]["G2"]["bound"].is_number());
    let v = stdout_json(&kmt(&["bounds", "--ring", "Z/6"]));
    assert_eq!(v["report"]["m"], 2);
    assert!(v["report"]["orth"]["A2"]["bound"].is_number());
    assert!(v["report"]["orth"]["B2"]["bound"].is_null());
    assert_eq!(v["report"]["orth"]["G2"]["unmet"], "2 is not invertible in the ring");
    assert_valid(&v);
}

#[test]
fn text_format_lists_checks() {
    let out = kmt(&["--format", "text", "verify", "ledger"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.lines().filter(|l| l.starts_with("PASS")).count() >= 7, "{text}");
}

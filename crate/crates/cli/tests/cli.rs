use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_artinchar"))
        .args(args)
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn group_info_reports_classes() {
    let out = run(&["grp", "info", "S4"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["order"], 24);
    assert_eq!(v["num_classes"], 5);
}

#[test]
fn s3_search_is_exhaustive_and_clean() {
    let out = run(&[
        "heilbronn",
        "search",
        "S3",
        "--bound",
        "3",
        "--mode",
        "weak",
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v = json(&out);
    assert_eq!(v["candidates"], 343);
    assert_eq!(v["violations"], 0);
}

#[test]
fn unknown_group_is_an_input_error() {
    let out = run(&["grp", "info", "no-such-group"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn output_is_deterministic_across_job_counts() {
    let a = run(&["--jobs", "1", "sct", "enumerate", "D4"]);
    let b = run(&["--jobs", "4", "sct", "enumerate", "D4"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn cache_directory_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let first = run(&["--cache-dir", cache, "chartab", "compute", "Q8"]);
    assert_eq!(first.status.code(), Some(0));
    let entries: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(entries.len(), 1);
    let second = run(&["--cache-dir", cache, "chartab", "compute", "Q8"]);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn out_flag_writes_the_document() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("uvdw.json");
    let out = run(&[
        "--out",
        path.to_str().unwrap(),
        "mono",
        "uvdw",
        "S3",
        "--subgroup",
        "(1,2)",
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(v.is_object());
}

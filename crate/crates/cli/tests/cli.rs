use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn weylpol(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weylpol")).args(args).output().expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn temp_manifest(name: &str, body: &Value) -> PathBuf {
    let path = std::env::temp_dir().join(format!("weylpol-{}-{name}.json", std::process::id()));
    std::fs::write(&path, serde_json::to_string(body).unwrap()).unwrap();
    path
}

#[test]
fn slice_prints_pieces() {
    let out = weylpol(&["partitions", "slice", "--lambda", "8,8,7,4", "--n", "4", "--k", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["command"], "partitions slice");
    assert_eq!(v["result"]["pieces"], json!([[3, 3, 3, 3], [3, 3, 3, 1], [2, 2, 1]]));
    assert!(v["elapsed_ms"].is_u64());
}

#[test]
fn failed_identity_exits_one() {
    let out = weylpol(&["--field", "fp:2", "polarize", "check", "--lambda", "2", "--a", "1", "--b", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json_of(&out);
    assert_eq!(v["result"]["equal"], false);
    assert_eq!(v["result"]["dims"], json!([2, 3]));
    assert_eq!(v["params"]["field"], "fp:2");
}

#[test]
fn cauchy_sides_agree() {
    let out = weylpol(&["tableaux", "cauchy", "--n", "2", "--m", "2", "--d", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["result"]["lhs"], v["result"]["rhs"]);
    assert_eq!(v["result"]["holds"], true);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["partitions", "slice", "--bogus"][..],
        &["polarize", "check", "--lambda", "2,1", "--a", "3", "--b", "1"],
        &["--field", "fp:4", "schur", "dim", "--lambda", "2", "--m", "2"],
        &["invariants", "space", "--action", "cyclic:3", "--d", "2"],
    ] {
        let out = weylpol(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn help_exits_zero() {
    let out = weylpol(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("manifest"));
}

#[test]
fn pretty_prints_a_table() {
    let out = weylpol(&["--pretty", "partitions", "conjugate", "--lambda", "3,1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("command") && l.ends_with("partitions conjugate")));
    assert!(text.lines().any(|l| l.starts_with("result")));
}

#[test]
fn empty_manifest_passes() {
    let path = temp_manifest("empty", &json!({"jobs": []}));
    let out = weylpol(&["manifest", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["result"], json!({"total": 0, "passed": 0, "failed": 0, "jobs": []}));
}

#[test]
fn manifest_verdicts() {
    let ok = temp_manifest(
        "ok",
        &json!({"jobs": [
            {"name": "two", "command": "polarize check", "params": {"lambda": [2], "a": 1, "b": 2, "field": "fp:2"},
             "expected": {"equal": false, "dims": [2, 3]}},
            {"name": "zero", "command": "polarize check", "params": {"lambda": [2], "a": 1, "b": 2},
             "expected": {"equal": true}}
        ]}),
    );
    let out = weylpol(&["manifest", ok.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["result"]["passed"], 2);
    assert!(v.get("elapsed_ms").is_none());

    let wrong = temp_manifest(
        "wrong",
        &json!({"jobs": [{"name": "w", "command": "tableaux count", "params": {"lambda": [2, 1], "m": 3},
                          "expected": {"ssyt_count": 9}}]}),
    );
    let out = weylpol(&["manifest", wrong.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json_of(&out)["result"]["jobs"][0]["mismatches"], json!(["/ssyt_count"]));

    let bad = temp_manifest("bad", &json!({"jobs": [{"name": "b", "command": "tableaux count", "params": {"nope": 1}}]}));
    let out = weylpol(&["manifest", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());

    for p in [ok, wrong, bad] {
        let _ = std::fs::remove_file(p);
    }
}

#[test]
fn thread_count_does_not_change_output() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/manifests/04_counterexample.json");
    let run = |t: &str| {
        Command::new(env!("CARGO_BIN_EXE_weylpol"))
            .args(["manifest", path])
            .env("WEYLPOL_THREADS", t)
            .output()
            .unwrap()
    };
    let (a, b) = (run("1"), run("3"));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn in_process_run_matches_binary() {
    let exec = weylpol_cli::run(["weylpol", "tableaux", "count", "--lambda", "2,1", "--m", "3"]);
    assert_eq!(exec.code, weylpol_cli::EXIT_OK);
    let v: Value = serde_json::from_str(&exec.stdout).unwrap();
    assert_eq!(v["result"]["ssyt_count"], 8);
}

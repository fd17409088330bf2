//! End-to-end checks of the binary: verbs, JSON shapes, exit codes, and
//! byte-level determinism.

use std::io::Write;
use std::process::{Command, Output};

fn logmat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_logmat"))
        .args(args)
        .env("RUST_BACKTRACE", "0")
        .output()
        .expect("binary runs")
}

fn write_temp(name: &str, contents: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join("logmat-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    path
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|_| {
        panic!(
            "stdout is not JSON: {}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

const SKEW_PENCIL: &str = r#"{
  "shape": [3, 3],
  "components": [
    {"sym": "x1", "m": [[{"n":"0","d":"1"},{"n":"1","d":"1"},{"n":"0","d":"1"}],
                         [{"n":"-1","d":"1"},{"n":"0","d":"1"},{"n":"0","d":"1"}],
                         [{"n":"0","d":"1"},{"n":"0","d":"1"},{"n":"0","d":"1"}]]},
    {"sym": "x2", "m": [[{"n":"0","d":"1"},{"n":"0","d":"1"},{"n":"1","d":"1"}],
                         [{"n":"0","d":"1"},{"n":"0","d":"1"},{"n":"0","d":"1"}],
                         [{"n":"-1","d":"1"},{"n":"0","d":"1"},{"n":"0","d":"1"}]]},
    {"sym": "x3", "m": [[{"n":"0","d":"1"},{"n":"0","d":"1"},{"n":"0","d":"1"}],
                         [{"n":"0","d":"1"},{"n":"0","d":"1"},{"n":"1","d":"1"}],
                         [{"n":"0","d":"1"},{"n":"-1","d":"1"},{"n":"0","d":"1"}]]}
  ]
}"#;

#[test]
fn rank_of_skew_pencil() {
    let path = write_temp("skew.json", SKEW_PENCIL);
    let out = logmat(&[
        "rank",
        "--pencil",
        path.to_str().unwrap(),
        "--mode",
        "exact",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["rank"], 2);
    assert_eq!(v["exact"], true);
}

#[test]
fn witness_found_and_none_exit_codes() {
    // rank-deficient log pencil: witness exists
    let q = write_temp(
        "logm.json",
        r#"[[{"n":"4","d":"1"},{"n":"8","d":"1"}],[{"n":"16","d":"1"},{"n":"64","d":"1"}]]"#,
    );
    let built = logmat(&["pencil", "--log-matrix", q.to_str().unwrap()]);
    assert!(built.status.success());
    let pencil_path = write_temp("built.json", &String::from_utf8_lossy(&built.stdout));
    let found = logmat(&[
        "witness",
        "pencil",
        "--in",
        pencil_path.to_str().unwrap(),
        "--height",
        "3",
    ]);
    assert_eq!(found.status.code(), Some(0));
    let v = stdout_json(&found);
    assert_eq!(v["v"][0]["n"], "3");
    assert_eq!(v["v"][1]["n"], "-2");

    // independent primes: no witness, exit 10
    let q2 = write_temp(
        "indep.json",
        r#"[[{"n":"2","d":"1"},{"n":"3","d":"1"}],[{"n":"5","d":"1"},{"n":"7","d":"1"}]]"#,
    );
    let built2 = logmat(&["pencil", "--log-matrix", q2.to_str().unwrap()]);
    let pencil2 = write_temp("built2.json", &String::from_utf8_lossy(&built2.stdout));
    let none = logmat(&[
        "witness",
        "pencil",
        "--in",
        pencil2.to_str().unwrap(),
        "--height",
        "3",
    ]);
    assert_eq!(none.status.code(), Some(10));
}

#[test]
fn padic_log_and_exp_roundtrip() {
    let out = logmat(&["padic", "log", "--x", "6", "--p", "5", "--prec", "8"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["p"], 5);
    assert_eq!(v["val"], 1);
    let log_path = write_temp("log6.json", &String::from_utf8_lossy(&out.stdout));
    let exp = logmat(&["padic", "exp", "--in", log_path.to_str().unwrap()]);
    assert!(exp.status.success());
    // exp(log 6) = 6 * (root of unity part absorbed): valuation 0
    let ev = stdout_json(&exp);
    assert_eq!(ev["val"], 0);
}

#[test]
fn padic_log_of_zero_is_bad_input() {
    let out = logmat(&["padic", "log", "--x", "0", "--p", "5"]);
    assert_eq!(out.status.code(), Some(2));
    let err: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert!(err["error"].as_str().unwrap().contains("zero"));
}

#[test]
fn unknown_verb_is_usage_error() {
    let out = logmat(&["frobenicate"]);
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn enumeration_cap_is_limit_exit() {
    let group = write_temp("biggroup.json", r#"{"gens": [[{"n":"2","d":"1"}]]}"#);
    let out = logmat(&["xn", "--group", group.to_str().unwrap(), "--n", "2000000"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn condition_o_verbs() {
    let dep = write_temp(
        "dep.json",
        r#"{"gens": [[{"n":"2","d":"1"},{"n":"2","d":"1"}],[{"n":"2","d":"1"},{"n":"2","d":"1"}]]}"#,
    );
    let hit = logmat(&[
        "cond",
        "o",
        "--group",
        dep.to_str().unwrap(),
        "--height",
        "2",
    ]);
    assert_eq!(hit.status.code(), Some(0));
    let v = stdout_json(&hit);
    assert_eq!(v["holds"], true);

    let indep = write_temp(
        "indep_group.json",
        r#"{"gens": [[{"n":"2","d":"1"},{"n":"3","d":"1"}],[{"n":"5","d":"1"},{"n":"7","d":"1"}]]}"#,
    );
    let miss = logmat(&[
        "cond",
        "o",
        "--group",
        indep.to_str().unwrap(),
        "--height",
        "3",
    ]);
    assert_eq!(miss.status.code(), Some(10));
}

#[test]
fn polytope_verbs() {
    let supports = write_temp("sup.json", "[[[0,0],[1,0],[0,1]],[[0,0],[2,0],[0,2]]]");
    let out = logmat(&["polytope", "bk", "--supports", supports.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["bk"], 2);

    let pts = write_temp("pts.json", "[[0,0],[2,0],[0,2],[1,1]]");
    let vol = logmat(&["polytope", "volume", "--points", pts.to_str().unwrap()]);
    let v = stdout_json(&vol);
    assert_eq!(v["volume"]["n"], "2");
}

#[test]
fn group_rank_experiment_verb() {
    let out = logmat(&[
        "group",
        "rank-experiment",
        "--kind",
        "leopoldt",
        "--name",
        "S3",
        "--trials",
        "3",
        "--seed",
        "7",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["predicted"], 5);
    assert_eq!(v["pass"], true);

    let gross = logmat(&[
        "group",
        "rank-experiment",
        "--kind",
        "gross",
        "--name",
        "C4",
        "--c",
        "2",
        "--trials",
        "3",
        "--seed",
        "7",
    ]);
    assert!(gross.status.success());
    assert_eq!(stdout_json(&gross)["predicted"], 2);

    // a transposition in S3 is not central: precondition error
    let bad = logmat(&[
        "group",
        "rank-experiment",
        "--kind",
        "gross",
        "--name",
        "S3",
        "--c",
        "1",
    ]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn auxpoly_gap_verb() {
    let out = logmat(&[
        "auxpoly", "gap", "--alpha", "4", "--beta", "7", "--p", "3", "--n", "1",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["degree"], 9);
    assert_eq!(v["product_exceeds_one"], true);
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = [
        "auxpoly", "gap", "--alpha", "4", "--beta", "7", "--p", "3", "--n", "2",
    ];
    let a = logmat(&args);
    let b = logmat(&args);
    assert_eq!(a.stdout, b.stdout);

    let dep = write_temp(
        "det.json",
        r#"{"gens": [[{"n":"2","d":"1"},{"n":"4","d":"1"}],[{"n":"8","d":"1"},{"n":"16","d":"1"}]]}"#,
    );
    let run = || {
        logmat(&[
            "cond",
            "o",
            "--group",
            dep.to_str().unwrap(),
            "--height",
            "3",
        ])
        .stdout
    };
    assert_eq!(run(), run());
}

#[test]
fn corrupted_group_table_is_diagnosed() {
    let bad = write_temp(
        "badgroup.json",
        r#"{"order": 2, "table": [[0, 0], [1, 1]], "labels": ["e", "g"]}"#,
    );
    let out = logmat(&[
        "group",
        "predict",
        "--kind",
        "leopoldt",
        "--file",
        bad.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert!(err["error"].as_str().unwrap().contains("repeats"));
}

#[test]
fn suite_runs_green() {
    let out = logmat(&["suite", "--seed", "42"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["all_pass"], true);
    assert_eq!(v["seed"], 42);
    assert!(v["checks"].as_array().unwrap().len() >= 20);
}

//! End-to-end tests of the `tri` binary: exit codes, report content, and
//! output determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn tri(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tri"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn tmp(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("tri-cli-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn verify_eq8_geometric_root_of_the_dissection() {
    let out = tri(&[
        "verify", "eq8", "--n", "19", "--k", "12", "--l", "20", "--t", "-12", "--mode", "n20",
        "--sense", "geom",
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(stdout(&out).contains("true"));
}

#[test]
fn verify_accepts_equals_form_for_negatives() {
    let out = tri(&[
        "verify", "eq8", "--n", "19", "--k", "12", "--l", "20", "--t=-12", "--sense", "arith",
    ]);
    assert_eq!(code(&out), 0);
}

#[test]
fn verify_eq8_degenerate_is_true() {
    let out = tri(&[
        "verify", "eq8", "--n", "0", "--k", "0", "--l", "0", "--t", "0", "--mode", "n20",
        "--sense", "geom",
    ]);
    assert_eq!(code(&out), 0);
}

#[test]
fn false_identity_exits_one() {
    // the unbased sum rule always misses the count component
    let out = tri(&[
        "verify", "identity", "--family", "eq3", "--params", "1,1,2", "--mode", "n20",
    ]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("count=1"));
}

#[test]
fn identity_family_arity_is_checked() {
    let out = tri(&["verify", "identity", "--family", "eq26", "--params", "3,4"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("1 parameter"));
}

#[test]
fn eq26_verifies_both_senses() {
    let arith = tri(&[
        "verify", "identity", "--family", "eq26", "--params", "3", "--mode", "n20", "--sense",
        "arith",
    ]);
    assert_eq!(code(&arith), 0);
    let geom = tri(&[
        "verify", "identity", "--family", "eq26", "--params", "5", "--sense", "geom",
    ]);
    assert_eq!(code(&geom), 0);
}

#[test]
fn classification_examples() {
    let out = tri(&["classify", "--n", "1", "--k", "1", "--l", "1", "--t", "1"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("case 1, canonical 1"));

    let out = tri(&["classify", "--n", "1", "--k", "1", "--l", "1", "--t", "-4"]);
    assert!(stdout(&out).contains("case 10, canonical 1"));

    let out = tri(&["classify", "--n", "-2", "--k", "2", "--l", "2", "--t", "1"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("normalization"));
}

#[test]
fn solve_prints_increments() {
    let out = tri(&["solve", "--base", "0,0,2", "--target", "-1,-2,6"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "1 1 2");

    let out = tri(&["solve", "--base", "0,0,1", "--target", "-1/2,-1/2,2"]);
    assert_eq!(stdout(&out).trim(), "0 1/2 1/2");
}

#[test]
fn builtin_dissections_pass_and_report() {
    let svg_path = tmp("a.svg");
    let out = tri(&[
        "dissect",
        "--builtin",
        "a",
        "--svg",
        svg_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("15 pieces"));
    assert!(text.contains("1521"));
    assert!(text.contains("PASS"));
    let svg = std::fs::read_to_string(&svg_path).expect("svg written");
    assert!(svg.starts_with("<svg"));
    std::fs::remove_file(&svg_path).ok();

    let out = tri(&["dissect", "--builtin", "b", "--json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(v["piece_count"], 15);
    assert_eq!(v["sum_squares"], 1521);
    assert_eq!(v["perfect"]["pass"], true);
    let sizes: Vec<i64> = v["signed_sizes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_i64().unwrap())
        .collect();
    let mut expect = vec![19, 20, -7, -12, 7, 5, -2, -5, 2, 3, 9, -11, 11, 8, -8];
    expect.sort_by_key(|s: &i64| (s.abs(), *s));
    assert_eq!(sizes, expect);
}

#[test]
fn parse_errors_exit_two_with_line_numbers() {
    let path = tmp("bad.tri");
    std::fs::write(&path, "target 4\nexpand root = 1 1 2 0 tags n=once\n").unwrap();
    let out = tri(&["dissect", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("line 2"));
    assert!(stderr(&out).contains("unpaired"));
    std::fs::remove_file(&path).ok();
}

#[test]
fn script_files_round_trip_like_builtins() {
    let path = tmp("copy-of-a.tri");
    // a hand-rolled script: one valid expansion step
    std::fs::write(&path, "target 4 at 2,3\nexpand root = 1 1 2 0\n").unwrap();
    let out = tri(&["dissect", path.to_str().unwrap()]);
    // interprets fine but is no perfect dissection
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("FAIL"));
    std::fs::remove_file(&path).ok();
}

#[test]
fn usage_errors_exit_two() {
    let out = tri(&["dissect"]);
    assert_eq!(code(&out), 2);
    let out = tri(&["verify", "eq8", "--n", "1"]);
    assert_eq!(code(&out), 2);
    let out = tri(&["sweep", "--mode", "q7"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn json_reports_are_schema_stable() {
    let args = [
        "verify", "eq8", "--n", "2", "--k", "3", "--l", "-1", "--t", "-2", "--sense", "geom",
        "--json",
    ];
    let mut a: serde_json::Value = serde_json::from_str(&stdout(&tri(&args))).unwrap();
    let mut b: serde_json::Value = serde_json::from_str(&stdout(&tri(&args))).unwrap();
    a["timing_ms"] = 0.into();
    b["timing_ms"] = 0.into();
    assert_eq!(a, b);
}

#[test]
fn sweep_small_window_passes() {
    let out = tri(&[
        "sweep", "--mode", "n20", "--nkl", "2", "--t", "4", "--json",
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["configs"], 1125);
    assert_eq!(v["nonempty_residuals"], 0);
    assert_eq!(v["cases_seen"].as_array().unwrap().len(), 10);
}

#[test]
fn rendered_figures_are_deterministic() {
    let p1 = tmp("fig1.svg");
    let p2 = tmp("fig2.svg");
    for p in [&p1, &p2] {
        let out = tri(&["render", "eq26", "--n", "3", "-o", p.to_str().unwrap()]);
        assert_eq!(code(&out), 0);
    }
    let a = std::fs::read(&p1).unwrap();
    let b = std::fs::read(&p2).unwrap();
    assert_eq!(a, b);
    std::fs::remove_file(&p1).ok();
    std::fs::remove_file(&p2).ok();
}

use std::process::{Command, Output};

use serde_json::Value;

fn freealg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_freealg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf-8 stderr")
}

fn json(output: &Output) -> Value {
    serde_json::from_str(&stdout(output)).expect("json stdout")
}

#[test]
fn thm31_text_report_passes() {
    let out = freealg(&["verify", "thm31", "--k", "2"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.starts_with("thm31 (k=2)"), "{text}");
    assert!(text.contains("ok    commutator_ratio = 9/10"), "{text}");
    assert!(text.contains("\n  pass ("), "{text}");
}

#[test]
fn thm42_json_schema_is_fixed() {
    let out = freealg(&["verify", "thm42", "--k", "2", "--json"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let report = json(&out);
    let mut keys: Vec<&str> = report.as_object().unwrap().keys().map(|k| k.as_str()).collect();
    keys.sort_unstable();
    assert_eq!(keys, ["citation", "claim", "computed", "expected", "millis", "params", "status"]);
    assert_eq!(report["claim"], "thm42");
    assert_eq!(report["status"], "pass");
    assert_eq!(report["params"]["cutoff"], "-10");
    assert_eq!(report["computed"]["a1"], "x^-1y^-1x^-1");
}

#[test]
fn ex23_reports_are_deterministic_for_a_seed() {
    let args = ["verify", "ex23", "--u", "xyx", "--l", "1", "--m", "3", "--n", "2", "--seed",
        "5", "--json"];
    let mut first = json(&freealg(&args));
    let mut second = json(&freealg(&args));
    first.as_object_mut().unwrap().remove("millis");
    second.as_object_mut().unwrap().remove("millis");
    assert_eq!(first, second);
    assert_eq!(first["computed"]["solution_space_dimension"], "7");
}

#[test]
fn ex24_runs_the_k_grid() {
    let out = freealg(&["verify", "ex24", "--json"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let reports = json(&out);
    let reports = reports.as_array().unwrap();
    assert_eq!(reports.len(), 3);
    for (report, k) in reports.iter().zip(["2", "3", "4"]) {
        assert_eq!(report["claim"], "ex24");
        assert_eq!(report["params"]["k"], k);
        assert_eq!(report["status"], "pass");
    }
}

#[test]
fn solve_builds_the_smallest_overlap_solution() {
    let out = freealg(&["solve", "--u", "xyx", "--l", "1", "--m", "3", "--n", "2", "--overlap",
        "0:0:1"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("r = xyxxy + xyxyx + yxxyx"), "{text}");
    assert!(text.contains("s = xy + yx"), "{text}");
    assert!(text.contains("[u^3, s] = [u^2, r] verified exactly"), "{text}");
}

#[test]
fn solve_accepts_every_block_kind() {
    let out = freealg(&["solve", "--u", "xyx", "--l", "1", "--m", "3", "--n", "2", "--r1",
        "u^2 + 1", "--s1", "u", "--free", "yy:a + 2b", "--overlap", "0:2:1/2:a", "--json"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let value = json(&out);
    assert_eq!(value["verified"], true);
    assert_eq!(value["u"], "xyx");
    assert!(!value["r"].as_str().unwrap().is_empty());
}

#[test]
fn decompose_lists_the_components() {
    let out = freealg(&["bimodule", "decompose", "--u", "xyx", "--poly",
        "xyxxy + xyxyx + yxxyx + yy"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("pair 0 (t1 = xy, t2 = yx):"), "{text}");
    assert!(text.contains("t1 part: u1"), "{text}");
    assert!(text.contains("t2 part: u1 + u2"), "{text}");
    assert!(text.contains("free yy: 1"), "{text}");
}

#[test]
fn gap_handles_the_simplest_pair() {
    let out = freealg(&["gap", "--f", "x", "--g", "y", "--json"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let report = json(&out);
    assert_eq!(report["computed"]["gap"], "1");
    assert_eq!(report["status"], "pass");
}

#[test]
fn operational_failures_exit_with_two() {
    let out = freealg(&["verify", "ex23", "--u", "xyxy", "--l", "1", "--m", "3", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("not primitive"), "{}", stderr(&out));

    let out = freealg(&["gap", "--f", "x", "--g", "x"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("algebraically dependent"), "{}", stderr(&out));

    let out = freealg(&["solve", "--u", "xyx", "--l", "1", "--m", "3", "--n", "2", "--overlap",
        "0:0:1:a"]);
    assert_eq!(out.status.code(), Some(2), "s3 of the wrong degree must be rejected");
}

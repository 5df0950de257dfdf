//! Drives the built binary end to end.

use std::process::Command;

fn cyclepoly(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_cyclepoly"))
        .args(args)
        .output()
        .expect("spawn cyclepoly");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn verify_three_cycle() {
    let (code, stdout, _) = cyclepoly(&["verify", "--lambda", "3"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["F"], "1+q");
    assert_eq!(v["F_coeffs"], serde_json::json!(["1", "1"]));
    assert_eq!(v["P_coeffs"], serde_json::json!(["0", "1", "0", "1"]));
}

#[test]
fn sweep_three_reports() {
    let (code, stdout, _) = cyclepoly(&["sweep", "--max-n", "3", "--oracle"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["reports"].as_array().unwrap().len(), 6);
    assert_eq!(v["summary"]["failures"], 0);
}

#[test]
fn zero_part_is_usage_error() {
    let (code, stdout, stderr) = cyclepoly(&["verify", "--lambda", "0"]);
    assert_eq!(code, 2);
    assert!(stdout.is_empty());
    assert!(stderr.contains("\"0\""), "{stderr}");
}

#[test]
fn budget_error_has_one_line_diagnostic() {
    let (code, _, stderr) = cyclepoly(&["compute", "--lambda", "7", "--enum-budget", "100"]);
    assert_eq!(code, 2);
    assert_eq!(stderr.lines().count(), 1);
    assert!(stderr.contains("720"));
}

#[test]
fn thread_count_does_not_change_output() {
    let (c1, one, _) = cyclepoly(&["sweep", "--max-n", "7", "--threads", "1"]);
    let (c4, four, _) = cyclepoly(&["sweep", "--max-n", "7", "--threads", "4"]);
    assert_eq!((c1, c4), (0, 0));
    assert_eq!(one, four);
}

#[test]
fn csv_and_text_formats() {
    let (code, csv, _) = cyclepoly(&["sweep", "--max-n", "4", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(csv.lines().count(), 1 + 1 + 2 + 3 + 5);
    let (code, text, _) = cyclepoly(&["verify", "--lambda", "2,2", "--format", "text", "--oracle"]);
    assert_eq!(code, 0);
    assert!(text.contains("π = (1 2)(3 4)"));
    assert!(text.contains("even case"));
    let (_, text, _) = cyclepoly(&["verify", "--lambda", "2,1,1", "--format", "text"]);
    assert!(text.contains("odd case: P = (n/z)·q²·F(q²)"));
}

#[test]
fn oracle_subcommand() {
    let (code, out, _) = cyclepoly(&["oracle", "--lambda", "3,2,1"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["agree"], true);
    assert_eq!(v["p_class_sum"], v["p_histogram"]);
}

#[test]
fn timings_are_opt_in() {
    let (_, plain, _) = cyclepoly(&["verify", "--lambda", "4"]);
    let (_, timed, _) = cyclepoly(&["verify", "--lambda", "4", "--timings"]);
    let plain: serde_json::Value = serde_json::from_str(&plain).unwrap();
    let timed: serde_json::Value = serde_json::from_str(&timed).unwrap();
    assert!(plain["timings_ms"].is_null());
    assert!(timed["timings_ms"]["histogram"].is_number());
}

//! Smoke tests for the command-line runner: report files, exit codes and
//! the chart CSV, driven through the actual binary.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pseudosphere"))
}

#[test]
fn verify_writes_reports_and_exits_zero() {
    let dir = std::env::temp_dir().join("pseudosphere-cli-verify");
    let _ = std::fs::remove_dir_all(&dir);
    let output = bin()
        .args(["verify", "--suite", "ga", "--seed", "3", "--out"])
        .arg(&dir)
        .output()
        .expect("binary runs");
    assert!(output.status.success(), "stderr: {}", String::from_utf8_lossy(&output.stderr));
    let json = std::fs::read_to_string(dir.join("report.json")).expect("json written");
    let parsed: serde_json::Value = serde_json::from_str(&json).expect("valid json");
    assert_eq!(parsed["schema"], 1);
    assert_eq!(parsed["passed"], true);
    assert!(parsed["checks"].as_array().unwrap().len() >= 8);
    let md = std::fs::read_to_string(dir.join("report.md")).expect("markdown written");
    assert!(md.contains("| ga/oracle-equivalence |"));
}

#[test]
fn identical_seeds_give_identical_reports() {
    let run = |dir: &std::path::Path| {
        let output = bin()
            .args(["verify", "--suite", "algebras", "--seed", "11", "--out"])
            .arg(dir)
            .output()
            .expect("binary runs");
        assert!(output.status.success());
        std::fs::read(dir.join("report.json")).expect("json written")
    };
    let d1 = std::env::temp_dir().join("pseudosphere-cli-det1");
    let d2 = std::env::temp_dir().join("pseudosphere-cli-det2");
    assert_eq!(run(&d1), run(&d2));
}

#[test]
fn chart_emits_the_grid() {
    let output = bin()
        .args(["chart", "--ell", "1", "--extent", "3", "--resolution", "3"])
        .output()
        .expect("binary runs");
    assert!(output.status.success());
    let csv = String::from_utf8(output.stdout).expect("utf8");
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("t,x1,region"));
    assert_eq!(lines.count(), 9);
    assert!(csv.contains("0,0,inside"));
}

#[test]
fn invalid_configurations_exit_with_usage_errors() {
    let bad_suite = bin().args(["verify", "--suite", "bogus"]).output().expect("runs");
    assert_eq!(bad_suite.status.code(), Some(2));
    let bad_ell = bin().args(["chart", "--ell", "-1"]).output().expect("runs");
    assert_eq!(bad_ell.status.code(), Some(2));
    let bad_resolution =
        bin().args(["chart", "--resolution", "1"]).output().expect("runs");
    assert_eq!(bad_resolution.status.code(), Some(2));
}

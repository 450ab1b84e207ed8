//! The `bcdy` binary: exit codes, config files, flag overrides and emitted series.

use bcd_yangian::report::{Report, Status};
use std::path::PathBuf;
use std::process::{Command, Output};

fn bcdy(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bcdy")).args(args).output().expect("bcdy runs")
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn center_suite_passes_at_critical_level() {
    let out = bcdy(&["center", "--algebra", "o", "--N", "3", "--level", "crit", "--hord", "2", "--deg", "3", "--udeg", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let report = Report::from_json(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert!(report.checks.iter().all(|c| c.status != Status::Fail && c.status != Status::Error));
    assert_eq!(report.summary.failed, 0);
}

#[test]
fn config_file_with_flag_override() {
    let cfg = scratch("sp4.json");
    std::fs::write(&cfg, r#"{"algebra": "sp", "N": 4, "level": "crit", "suite": "brauer"}"#).unwrap();
    let out_path = scratch("sp4_report.json");
    let out = bcdy(&["suite", "--config", cfg.to_str().unwrap(), "--seed", "5", "--out", out_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let report = Report::from_json(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(report.config.seed, 5);
    assert!(report.checks.iter().all(|c| c.name.contains("symmetrizer") || c.name.contains("trace")));
}

#[test]
fn config_errors_exit_2() {
    let bad = scratch("bad.json");
    std::fs::write(&bad, r#"{"algebra": "o", "N": 3, "frobnicate": 1}"#).unwrap();
    assert_eq!(bcdy(&["suite", "--config", bad.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(bcdy(&["rmatrix", "--algebra", "sp", "--N", "3"]).status.code(), Some(2));
    assert_eq!(bcdy(&["engine", "--level", "x/0"]).status.code(), Some(2));
    assert_eq!(bcdy(&["center", "--negative", "--level", "crit"]).status.code(), Some(2));
    assert_eq!(bcdy(&["fseries", "--emit", "nothing"]).status.code(), Some(2));
}

#[test]
fn negative_center_run_passes_at_level_zero() {
    let out = bcdy(&["center", "--negative", "--level", "0"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn failing_report_exits_1() {
    let out = bcdy(&["rmatrix", "--N", "3"]);
    let mut report = Report::from_json(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(report.exit_code(), 0);
    report.summary.failed = 1;
    assert_eq!(report.exit_code(), 1);
    report.summary.errors = 1;
    assert_eq!(report.exit_code(), 2);
}

#[test]
fn emitted_fseries_matches_golden() {
    let out = bcdy(&["fseries", "--emit", "fseries", "--forder", "8"]);
    assert_eq!(out.status.code(), Some(0));
    let golden = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/golden/fseries_o3_M8.json")).unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), golden);
}

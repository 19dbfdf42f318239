//! Binary contract: output shape, override plumbing, and exit codes.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ris-admit"))
}

fn write_config(dir: &Path, body: &str) -> PathBuf {
    let path = dir.join("scenario.json");
    std::fs::write(&path, body).unwrap();
    path
}

fn stdout_json(output: &Output) -> serde_json::Value {
    serde_json::from_slice(&output.stdout).expect("stdout is JSON")
}

#[test]
fn test_run_prints_result_json() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), r#"{"n_users": 25, "seed": 3}"#);
    let output = bin().args(["run", "--config"]).arg(&cfg).output().unwrap();
    assert!(output.status.success());
    let value = stdout_json(&output);
    assert_eq!(value["outcomes"].as_array().unwrap().len(), 25);
    assert!(value["objective_value"].is_f64());
}

#[test]
fn test_run_csv_has_per_user_rows() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), r#"{"n_users": 12}"#);
    let output =
        bin().args(["run", "--format", "csv", "--config"]).arg(&cfg).output().unwrap();
    assert!(output.status.success());
    let text = String::from_utf8(output.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "user_id,class,sector,admitted,ris_assigned,ris_elements,compute_share,rate_bps,delay_s,utility"
    );
    assert_eq!(lines.count(), 12);
}

#[test]
fn test_run_overrides_apply() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), r#"{"n_users": 40, "seed": 5}"#);
    let output = bin()
        .args(["run", "--users", "17", "--config"])
        .arg(&cfg)
        .output()
        .unwrap();
    assert_eq!(stdout_json(&output)["outcomes"].as_array().unwrap().len(), 17);

    // Panel off forces every outcome onto the direct path.
    let off = bin()
        .args(["run", "--ris", "off", "--config"])
        .arg(&cfg)
        .output()
        .unwrap();
    let served = stdout_json(&off)["outcomes"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|o| o["ris_assigned"].as_bool().unwrap())
        .count();
    assert_eq!(served, 0);
}

#[test]
fn test_oracle_reports_objective() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), r#"{"n_users": 8, "seed": 2}"#);
    let output = bin().args(["oracle", "--config"]).arg(&cfg).output().unwrap();
    assert!(output.status.success());
    let value = stdout_json(&output);
    assert!(value["best_objective"].as_f64().unwrap().is_finite());
    assert_eq!(value["explored_count"].as_u64().unwrap(), 1 << 8);
}

#[test]
fn test_oracle_refuses_large_instance() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), r#"{"n_users": 20}"#);
    let output = bin().args(["oracle", "--config"]).arg(&cfg).output().unwrap();
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn test_sweep_writes_both_reports() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("sweep.json");
    std::fs::write(&cfg, r#"{"user_counts": [10], "replications": 1}"#).unwrap();
    let out = dir.path().join("reports");
    let status = bin()
        .args(["sweep", "--config"])
        .arg(&cfg)
        .arg("--out")
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    assert!(out.join("report.csv").is_file());
    assert!(out.join("report.json").is_file());
}

#[test]
fn test_missing_config_exits_two() {
    let output =
        bin().args(["run", "--config", "/nonexistent/scenario.json"]).output().unwrap();
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn test_unwritable_out_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), r#"{"n_users": 10}"#);
    let output = bin()
        .args(["run", "--out", "/nonexistent/out.json", "--config"])
        .arg(&cfg)
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn test_malformed_config_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "{this is not json");
    let output = bin().args(["run", "--config"]).arg(&cfg).output().unwrap();
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn test_invalid_override_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), r#"{"n_users": 10}"#);
    let output = bin()
        .args(["run", "--sectors", "5", "--config"])
        .arg(&cfg)
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn test_help_and_version_exit_zero() {
    for flag in ["--help", "--version"] {
        let output = bin().arg(flag).output().unwrap();
        assert_eq!(output.status.code(), Some(0), "{flag}");
    }
}

#[test]
fn test_unknown_flag_exits_one() {
    let output = bin().args(["run", "--bogus"]).output().unwrap();
    assert_eq!(output.status.code(), Some(1));
}

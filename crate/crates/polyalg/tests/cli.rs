use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn polyalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polyalg")).args(args).output().expect("binary runs")
}

fn write_config(dir: &Path, name: &str, body: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("report on stdout")
}

fn without_timing(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("timing");
    v
}

#[test]
fn axes_lattice_passes() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(dir.path(), "axes.json", r#"{"n": 3, "lines": [[1,0,0],[0,1,0],[0,0,1]]}"#);
    let out = polyalg(&["lattice", "--config", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let report = stdout_json(&out);
    assert_eq!(report["summary"]["verdict"], "pass");
    assert_eq!(report["results"][0]["profile"], serde_json::json!([1, 3, 3, 1]));
}

#[test]
fn bad_configs_exit_with_two() {
    let dir = TempDir::new().unwrap();
    let unknown = write_config(dir.path(), "unknown.json", r#"{"n": 3, "colour": "red"}"#);
    let out = polyalg(&["lattice", "--config", unknown.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let degenerate = write_config(dir.path(), "flat.json", r#"{"n": 3, "lines": [[1,0,0],[0,1,0]]}"#);
    let out = polyalg(&["lattice", "--config", degenerate.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let missing = dir.path().join("missing.json");
    let out = polyalg(&["lattice", "--config", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn command_mismatch_is_rejected() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(dir.path(), "af.json", r#"{"command": "af_fuzz", "n": 3}"#);
    let out = polyalg(&["lattice", "--config", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("af_fuzz"));
}

#[test]
fn out_flag_writes_report_file() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(dir.path(), "alg.json", r#"{"n": 3, "trials": 2}"#);
    let report = dir.path().join("report.json");
    let out = polyalg(&["algebra-table", "--config", cfg.to_str().unwrap(), "--out", report.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("algebra_table"));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["command"], "algebra_table");
    assert_eq!(v["results"].as_array().unwrap().len(), 2);
}

#[test]
fn runs_are_deterministic_and_seeded() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(dir.path(), "af.json", r#"{"command": "af_fuzz", "n": 3, "trials": 2, "seed": 7}"#);
    let path = cfg.to_str().unwrap();
    let first = without_timing(stdout_json(&polyalg(&["af_fuzz", "--config", path])));
    let second = without_timing(stdout_json(&polyalg(&["af_fuzz", "--config", path])));
    assert_eq!(first, second);
    let reseeded = without_timing(stdout_json(&polyalg(&["af_fuzz", "--config", path, "--seed", "8"])));
    assert_ne!(first["results"], reseeded["results"]);
    assert_eq!(reseeded["config"]["seed"], 8);
}

#[test]
fn float_mode_matches_exact_ranks() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(dir.path(), "lef.json", r#"{"n": 4, "k": 1, "trials": 1, "seed": 3}"#);
    let path = cfg.to_str().unwrap();
    let exact = stdout_json(&polyalg(&["lefschetz", "--config", path]));
    let float = stdout_json(&polyalg(&["lefschetz", "--config", path, "--mode", "float"]));
    let ranks = |v: &Value| -> Vec<Value> {
        v["results"][0]["levels"].as_array().unwrap().iter().map(|l| l["rank"].clone()).collect()
    };
    assert_eq!(ranks(&exact), ranks(&float));
}

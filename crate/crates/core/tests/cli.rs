use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_quaplectic"));
    c.env_remove("QUAPLECTIC_CONFIG");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn scales_natural_are_unity() {
    let out = run(&["scales", "--natural"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    for k in ["lambda_t", "lambda_x", "lambda_p", "lambda_e", "lambda_a"] {
        assert_eq!(v["result"]["scales"][k], 1.0);
    }
    assert_eq!(v["config"]["seed"], 42);
}

#[test]
fn planck_scales_reproduce_newton_constant() {
    let v = json(&run(&["scales"]));
    let g = v["result"]["newton_constant"].as_f64().unwrap();
    assert!((g - 6.674_30e-11).abs() / 6.674_30e-11 < 1e-12);
    let lx = v["result"]["scales"]["lambda_x"].as_f64().unwrap();
    assert!((lx - 1.616_255e-35).abs() / 1.616_255e-35 < 1e-5);
}

#[test]
fn state_covariance_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let state = dir.path().join("state.json");
    let cov = dir.path().join("cov.json");
    let phi = dir.path().join("phi.json");
    let mut a = vec![vec![0.0; 8]; 8];
    a[1][5] = 0.1;
    a[5][1] = 0.1;
    std::fs::write(&phi, serde_json::to_string(&a).unwrap()).unwrap();

    let out = run(&["state", "--phi", p(&phi), "--zeta", "[[0.1,0],[0,0],[0,0],[0,0]]", "--out", p(&state)]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(json(&out)["result"]["leakage"].as_f64().unwrap() < 1e-6);

    let out = run(&["covariance", "--state", p(&state)]);
    assert_eq!(out.status.code(), Some(0));
    let c = json(&out)["result"].clone();
    let sigma = &c["sigma"];
    assert_eq!(sigma.as_array().unwrap().len(), 8);
    let s11 = sigma[1][1].as_f64().unwrap();
    assert!((s11 - 0.5 * (-0.2f64).exp()).abs() < 1e-6, "{s11}");
    std::fs::write(&cov, serde_json::to_string(&c).unwrap()).unwrap();

    let out = run(&["sr-check", "--cov", p(&cov)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["result"]["report"]["saturated"], true);

    let out = run(&["williamson", "--state", p(&state)]);
    assert_eq!(out.status.code(), Some(0));
    for nu in json(&out)["result"]["williamson"]["nus"].as_array().unwrap() {
        assert!((nu.as_f64().unwrap() - 0.5).abs() < 1e-6);
    }

    let out = run(&["reciprocity", "--cov", p(&cov)]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert!(r["result"]["relative_deviation"].as_f64().unwrap() < 1e-12);
    let mapped = &r["result"]["covariance"]["sigma"];
    assert!((mapped[5][5].as_f64().unwrap() - s11).abs() < 1e-12);
}

#[test]
fn config_errors_exit_two() {
    assert_eq!(run(&["verify-rep", "--cutoff", "1"]).status.code(), Some(2));
    assert_eq!(run(&["--config", "/nonexistent/cfg.json", "scales"]).status.code(), Some(2));
    assert_eq!(run(&["sweep", "--group", "lorentz"]).status.code(), Some(2));
    assert_eq!(run(&["scales", "--alpha-hbar", "-1"]).status.code(), Some(2));
    assert_eq!(run(&["sr-check"]).status.code(), Some(2));
}

#[test]
fn config_file_from_environment_is_echoed() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    std::fs::write(&cfg, r#"{"seed": 7, "samples": 3}"#).unwrap();
    let out = bin().env("QUAPLECTIC_CONFIG", &cfg).args(["sweep", "--group", "u31"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["config"]["seed"], 7);
    assert_eq!(v["result"]["samples"].as_array().unwrap().len(), 3);
}

#[test]
fn sweep_reports_are_byte_identical() {
    let args = ["sweep", "--group", "sp8", "--samples", "4", "--seed", "3"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn output_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = run(&["spectrum", "--cutoff", "4", "--output", p(&path)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(std::fs::read(&path).unwrap(), out.stdout);
}

#[test]
fn verify_all_default_passes_and_tiny_tolerance_fails() {
    let out = run(&["verify-all"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    let names: Vec<&str> = v["suites"].as_array().unwrap().iter().map(|s| s["name"].as_str().unwrap()).collect();
    assert_eq!(
        names,
        [
            "units",
            "algebra",
            "contraction",
            "representation",
            "casimir",
            "williamson",
            "oracle",
            "schrodinger_robertson",
            "uncorrelated",
            "invariance",
            "spectrum"
        ]
    );
    assert!(v["suites"][0].get("seconds").is_none());

    let out = run(&["verify-all", "--tolerance", "1e-300"]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("invariance"), "{stderr}");
    assert!(stderr.contains("representation"), "{stderr}");
}

#[test]
fn verify_all_cutoff_one_is_a_controlled_failure() {
    let out = run(&["verify-all", "--cutoff", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    let rep = v["suites"].as_array().unwrap().iter().find(|s| s["name"] == "representation").unwrap();
    assert_eq!(rep["passed"], false);
    assert!(rep["error"].as_str().unwrap().contains("interior"));
}

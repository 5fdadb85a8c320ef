//! Report determinism and the `verify` exit-code contract.

use std::process::Command;

use serde_json::Value;

use cyclic_sra::harness::{emit_report, exit_code, run_suite, Format, Status, Suite, SuiteConfig};

fn strip_elapsed(mut doc: Value) -> Value {
    for row in doc["results"].as_array_mut().expect("results array") {
        row.as_object_mut().expect("row object").remove("elapsed_ms");
    }
    doc
}

fn small(suite: Suite, n: usize, ell: u32, seed: u64) -> SuiteConfig {
    let mut cfg = SuiteConfig::new(suite, n, ell).unwrap();
    cfg.trials = 12;
    cfg.degree_cap = 3;
    cfg.seed = seed;
    cfg
}

#[test]
fn json_reports_are_deterministic() {
    let cfg = small(Suite::All, 2, 2, 7);
    let a = emit_report(&cfg, &run_suite(&cfg).unwrap(), Format::Json);
    let b = emit_report(&cfg, &run_suite(&cfg).unwrap(), Format::Json);
    let (a, b): (Value, Value) = (serde_json::from_str(&a).unwrap(), serde_json::from_str(&b).unwrap());
    assert_eq!(strip_elapsed(a.clone()), strip_elapsed(b));
    assert_eq!(a["version"], 1);

    let other = small(Suite::All, 2, 2, 8);
    let c: Value = serde_json::from_str(&emit_report(&other, &run_suite(&other).unwrap(), Format::Json)).unwrap();
    assert_ne!(
        strip_elapsed(a),
        strip_elapsed(c),
        "seed should change sampled parameters"
    );
}

#[test]
fn full_run_covers_every_module() {
    let mut cfg = SuiteConfig::new(Suite::All, 2, 2).unwrap();
    cfg.seed = 7;
    cfg.trials = 30;
    let results = run_suite(&cfg).unwrap();
    let groups: std::collections::BTreeSet<_> = results.iter().map(|r| r.suite.as_str()).collect();
    assert_eq!(groups.len(), 5);
    for r in &results {
        assert_eq!(r.status, Status::Pass, "{r:?}");
    }
    assert_eq!(exit_code(&results), 0);
}

#[test]
fn user_parameters_are_used() {
    let cfg = small(Suite::Sra, 2, 3, 1)
        .with_params(Some("-1/2"), Some("eta, 2"))
        .unwrap();
    let results = run_suite(&cfg).unwrap();
    assert!(results.iter().any(|r| r.params.starts_with("k=-1/2 c=[eta, 2]")));
    assert_eq!(exit_code(&results), 0);
}

fn verify(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_verify"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
    )
}

#[test]
fn cli_exit_codes() {
    let (code, text) = verify(&["characters", "--ell", "3", "--seed", "1", "--trials", "20"]);
    assert_eq!(code, 0);
    assert!(text.contains("0 failed"));

    let (code, json) = verify(&[
        "quiver",
        "--degree-cap",
        "7",
        "--size-guard",
        "500",
        "--trials",
        "5",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let doc: Value = serde_json::from_str(&json).unwrap();
    let skipped = doc["results"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["status"] == "skipped")
        .count();
    assert!(skipped > 0);

    assert_eq!(verify(&["sra", "--n", "1"]).0, 2);
    assert_eq!(verify(&["sra", "--ell", "3", "--c", "1"]).0, 2);
    assert_eq!(verify(&["sra", "--k", "eta^"]).0, 2);
    assert_eq!(verify(&["nonsense"]).0, 2);
    assert_eq!(verify(&["wreath", "--trials", "0"]).0, 2);
}

use std::fmt::Write;
use std::str::FromStr;

use serde_json::{json, Value};

use super::{CheckResult, Status, SuiteConfig};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            other => Err(Error::Parse(format!(
                "unknown format '{other}' (expected text or json)"
            ))),
        }
    }
}

fn config_json(cfg: &SuiteConfig) -> Value {
    json!({
        "suite": cfg.suite,
        "n": cfg.n,
        "ell": cfg.ell,
        "k": cfg.k,
        "c": cfg.c,
        "degree_cap": cfg.degree_cap,
        "trials": cfg.trials,
        "seed": cfg.seed,
        "size_guard": cfg.size_guard.to_string(),
    })
}

fn short(v: &Value) -> String {
    let s = match v {
        Value::Null => "-".to_string(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    if s.chars().count() > 48 {
        let head: String = s.chars().take(45).collect();
        format!("{head}...")
    } else {
        s
    }
}

fn text(cfg: &SuiteConfig, results: &[CheckResult]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "suite={} n={} ell={} degree_cap={} trials={} seed={} size_guard={}",
        cfg.suite, cfg.n, cfg.ell, cfg.degree_cap, cfg.trials, cfg.seed, cfg.size_guard
    );
    if results.is_empty() {
        out.push_str("(no checks)\n");
        return out;
    }
    let width = results
        .iter()
        .map(|r| r.suite.len() + r.check.len() + 1)
        .max()
        .unwrap_or(0);
    for r in results {
        let name = format!("{}/{}", r.suite, r.check);
        let _ = write!(out, "{:<7} {name:<width$}", r.status.to_string());
        if !r.params.is_empty() {
            let _ = write!(out, "  [{}]", r.params);
        }
        match r.status {
            Status::Pass => {}
            Status::Fail => {
                let _ = write!(out, "  expected {} got {}", short(&r.expected), short(&r.actual));
            }
            Status::Skipped => {
                let _ = write!(out, "  ({})", short(&r.actual));
            }
        }
        out.push('\n');
    }
    let count = |s| results.iter().filter(|r| r.status == s).count();
    let _ = writeln!(
        out,
        "{} passed, {} failed, {} skipped",
        count(Status::Pass),
        count(Status::Fail),
        count(Status::Skipped)
    );
    out
}

/// Renders a report. JSON has the shape `{"version": 1, "config": {...}, "results": [...]}`.
pub fn emit_report(cfg: &SuiteConfig, results: &[CheckResult], format: Format) -> String {
    match format {
        Format::Text => text(cfg, results),
        Format::Json => {
            let doc = json!({
                "version": 1,
                "config": config_json(cfg),
                "results": results,
            });
            serde_json::to_string_pretty(&doc).expect("report values serialise")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::Suite;

    fn row(status: Status) -> CheckResult {
        CheckResult {
            suite: "quiver".into(),
            check: "fiber_dim".into(),
            params: "d=3".into(),
            status,
            expected: json!(2),
            actual: json!(3),
            paper_ref: String::new(),
            elapsed_ms: 1.5,
        }
    }

    #[test]
    fn empty_report_is_valid() {
        let cfg = SuiteConfig::new(Suite::Wreath, 2, 2).unwrap();
        let doc: Value = serde_json::from_str(&emit_report(&cfg, &[], Format::Json)).unwrap();
        assert_eq!(doc["version"], 1);
        assert_eq!(doc["results"], json!([]));
        assert_eq!(doc["config"]["suite"], "wreath");
        assert!(emit_report(&cfg, &[], Format::Text).contains("no checks"));
    }

    #[test]
    fn fail_and_skip_rows() {
        let cfg = SuiteConfig::new(Suite::Quiver, 2, 2).unwrap();
        let text = emit_report(&cfg, &[row(Status::Fail), row(Status::Skipped)], Format::Text);
        assert!(text.contains("fail    quiver/fiber_dim  [d=3]  expected 2 got 3"));
        assert!(text.contains("skipped quiver/fiber_dim  [d=3]  (3)"));
        let doc: Value = serde_json::from_str(&emit_report(&cfg, &[row(Status::Fail)], Format::Json)).unwrap();
        assert_eq!(doc["results"][0]["status"], "fail");
        assert_eq!(doc["results"][0]["expected"], 2);
        assert_eq!(doc["results"][0]["actual"], 3);
    }

    #[test]
    fn format_parse() {
        assert_eq!("json".parse::<Format>().unwrap(), Format::Json);
        assert!("yaml".parse::<Format>().is_err());
    }
}

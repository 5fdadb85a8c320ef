//! Seeded verification suites and their reports.
//!
//! [`run_suite`] turns a [`SuiteConfig`] into a list of [`CheckResult`]s; [`emit_report`]
//! renders them as a text table or as JSON. The `verify` binary is a thin wrapper around
//! these two calls.

mod report;
mod suites;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::quiver::DEFAULT_SIZE_GUARD;
use crate::scalars::Cyclotomic;

pub use report::{emit_report, Format};

/// Which module's checks to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Characters,
    Wreath,
    Sra,
    Quiver,
    Radial,
    All,
}

impl Suite {
    pub const MODULES: [Suite; 5] = [
        Suite::Characters,
        Suite::Wreath,
        Suite::Sra,
        Suite::Quiver,
        Suite::Radial,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Characters => "characters",
            Suite::Wreath => "wreath",
            Suite::Sra => "sra",
            Suite::Quiver => "quiver",
            Suite::Radial => "radial",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "characters" => Ok(Suite::Characters),
            "wreath" => Ok(Suite::Wreath),
            "sra" => Ok(Suite::Sra),
            "quiver" => Ok(Suite::Quiver),
            "radial" => Ok(Suite::Radial),
            "all" => Ok(Suite::All),
            other => Err(Error::Parse(format!(
                "unknown suite '{other}' (expected characters, wreath, sra, quiver, radial or all)"
            ))),
        }
    }
}

impl Serialize for Suite {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// A validated run configuration.
///
/// When `k`/`c` are given they become the first parameter point of every
/// parameter-dependent check; the remaining points are drawn from the seed.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub n: usize,
    pub ell: u32,
    pub k: Option<Cyclotomic>,
    pub c: Option<Vec<Cyclotomic>>,
    pub degree_cap: usize,
    pub trials: usize,
    pub seed: u64,
    pub size_guard: u128,
}

impl SuiteConfig {
    /// Defaults: degree cap 4, 200 trials, seed 0, the crate-wide size guard.
    pub fn new(suite: Suite, n: usize, ell: u32) -> Result<Self> {
        let cfg = SuiteConfig {
            suite,
            n,
            ell,
            k: None,
            c: None,
            degree_cap: 4,
            trials: 200,
            seed: 0,
            size_guard: DEFAULT_SIZE_GUARD,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Parses `k` and the comma-separated `c` list in Q(η_ℓ).
    pub fn with_params(mut self, k: Option<&str>, c: Option<&str>) -> Result<Self> {
        self.k = k.map(|s| crate::scalars::parse_cyclotomic(s, self.ell)).transpose()?;
        self.c = c
            .map(|s| crate::scalars::parse_cyclotomic_list(s, self.ell))
            .transpose()?;
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 || self.ell < 2 {
            return Err(Error::InvalidParams(format!(
                "need n >= 2 and l >= 2 (got n={}, l={})",
                self.n, self.ell
            )));
        }
        if self.trials == 0 {
            return Err(Error::InvalidParams("trials must be at least 1".into()));
        }
        if let Some(c) = &self.c {
            if c.len() + 1 != self.ell as usize {
                return Err(Error::InvalidParams(format!(
                    "c needs {} entries for l={}, got {}",
                    self.ell - 1,
                    self.ell,
                    c.len()
                )));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

/// One row of a report. `elapsed_ms` is wall-clock and therefore the only
/// non-deterministic field.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub suite: String,
    pub check: String,
    pub params: String,
    pub status: Status,
    pub expected: Value,
    pub actual: Value,
    pub paper_ref: String,
    pub elapsed_ms: f64,
}

/// A check that has not run yet.
pub(crate) struct Job {
    suite: Suite,
    check: String,
    params: String,
    reference: &'static str,
    body: Box<dyn Fn() -> Result<(Value, Value)> + Send + Sync>,
}

impl Job {
    pub(crate) fn new(
        suite: Suite,
        check: impl Into<String>,
        params: impl Into<String>,
        reference: &'static str,
        body: impl Fn() -> Result<(Value, Value)> + Send + Sync + 'static,
    ) -> Self {
        Job {
            suite,
            check: check.into(),
            params: params.into(),
            reference,
            body: Box::new(body),
        }
    }

    fn run(&self) -> CheckResult {
        let start = Instant::now();
        let outcome = (self.body)();
        let elapsed_ms = (start.elapsed().as_secs_f64() * 1e6).round() / 1e3;
        let (status, expected, actual) = match outcome {
            Ok((e, a)) if e == a => (Status::Pass, e, a),
            Ok((e, a)) => (Status::Fail, e, a),
            Err(err @ Error::SizeGuard { .. }) => (Status::Skipped, Value::Null, Value::String(err.to_string())),
            Err(err) => (Status::Fail, Value::Null, Value::String(err.to_string())),
        };
        CheckResult {
            suite: self.suite.name().to_string(),
            check: self.check.clone(),
            params: self.params.clone(),
            status,
            expected,
            actual,
            paper_ref: self.reference.to_string(),
            elapsed_ms,
        }
    }
}

/// Runs every check of the selected suite(s). Checks run in parallel; each draws its
/// randomness from a seed derived from `cfg.seed` and its own name, and results come
/// back in a fixed order, so two runs with the same config differ only in `elapsed_ms`.
pub fn run_suite(cfg: &SuiteConfig) -> Result<Vec<CheckResult>> {
    cfg.validate()?;
    let suites: Vec<Suite> = match cfg.suite {
        Suite::All => Suite::MODULES.to_vec(),
        s => vec![s],
    };
    let mut jobs = Vec::new();
    for s in suites {
        jobs.extend(suites::jobs(s, cfg)?);
    }
    Ok(jobs.par_iter().map(Job::run).collect())
}

/// 0 when nothing failed (skips allowed), 1 otherwise.
pub fn exit_code(results: &[CheckResult]) -> i32 {
    if results.iter().any(|r| r.status == Status::Fail) {
        1
    } else {
        0
    }
}

/// Exit code for configurations rejected before any check runs.
pub const USAGE_ERROR: i32 = 2;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in [
            Suite::Characters,
            Suite::Wreath,
            Suite::Sra,
            Suite::Quiver,
            Suite::Radial,
            Suite::All,
        ] {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("cherednik".parse::<Suite>().is_err());
    }

    #[test]
    fn config_validation() {
        assert!(SuiteConfig::new(Suite::All, 1, 2).is_err());
        assert!(SuiteConfig::new(Suite::All, 2, 1).is_err());
        let cfg = SuiteConfig::new(Suite::Sra, 2, 3).unwrap();
        assert!(cfg.clone().with_params(Some("1/2"), Some("eta")).is_err());
        let cfg = cfg.with_params(Some("1/2"), Some("eta, 1 - eta^2")).unwrap();
        assert_eq!(cfg.c.as_ref().unwrap().len(), 2);
        let mut bad = cfg;
        bad.trials = 0;
        assert!(run_suite(&bad).is_err());
    }

    #[test]
    fn exit_codes() {
        let row = |status| CheckResult {
            suite: "wreath".into(),
            check: "x".into(),
            params: String::new(),
            status,
            expected: Value::Null,
            actual: Value::Null,
            paper_ref: String::new(),
            elapsed_ms: 0.0,
        };
        assert_eq!(exit_code(&[]), 0);
        assert_eq!(exit_code(&[row(Status::Pass), row(Status::Skipped)]), 0);
        assert_eq!(exit_code(&[row(Status::Pass), row(Status::Fail)]), 1);
    }

    #[test]
    fn characters_suite_passes() {
        let mut cfg = SuiteConfig::new(Suite::Characters, 2, 3).unwrap();
        cfg.seed = 1;
        cfg.trials = 20;
        let results = run_suite(&cfg).unwrap();
        assert!(!results.is_empty());
        for r in &results {
            assert_eq!(r.status, Status::Pass, "{r:?}");
        }
    }
}

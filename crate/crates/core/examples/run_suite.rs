//! Drives the verification harness from code and prints a JSON report.
//!
//! Run with `cargo run --release --example run_suite -- sra`.

use cyclic_sra::harness::{emit_report, exit_code, run_suite, Format, Suite, SuiteConfig};

fn main() -> cyclic_sra::Result<()> {
    let suite: Suite = std::env::args().nth(1).as_deref().unwrap_or("characters").parse()?;
    let mut cfg = SuiteConfig::new(suite, 2, 3)?.with_params(Some("1/2"), Some("eta, -1"))?;
    cfg.trials = 25;
    cfg.degree_cap = 3;
    cfg.seed = 11;
    let results = run_suite(&cfg)?;
    println!("{}", emit_report(&cfg, &results, Format::Json));
    eprintln!("exit code would be {}", exit_code(&results));
    Ok(())
}

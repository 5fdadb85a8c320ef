use std::process::ExitCode;

use clap::Parser;
use cyclic_sra::harness::{emit_report, exit_code, run_suite, Format, Status, Suite, SuiteConfig, USAGE_ERROR};

/// Run seeded exact-arithmetic verification suites and print a report.
#[derive(Parser, Debug)]
#[command(name = "verify", version)]
struct Args {
    /// characters, wreath, sra, quiver, radial or all
    suite: Suite,
    #[arg(long, default_value_t = 2)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    ell: u32,
    /// k as a scalar in Q(eta), e.g. "1/2" or "1 - eta"
    #[arg(long, allow_hyphen_values = true)]
    k: Option<String>,
    /// c_1, ..., c_{l-1}, comma separated
    #[arg(long, allow_hyphen_values = true)]
    c: Option<String>,
    #[arg(long, default_value_t = 4)]
    degree_cap: usize,
    #[arg(long, default_value_t = 200)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = cyclic_sra::quiver::DEFAULT_SIZE_GUARD)]
    size_guard: u128,
    #[arg(long, default_value = "text")]
    format: Format,
}

fn config(args: &Args) -> cyclic_sra::error::Result<SuiteConfig> {
    let mut cfg = SuiteConfig::new(args.suite, args.n, args.ell)?;
    cfg.degree_cap = args.degree_cap;
    cfg.trials = args.trials;
    cfg.seed = args.seed;
    cfg.size_guard = args.size_guard;
    cfg.with_params(args.k.as_deref(), args.c.as_deref())
}

fn main() -> ExitCode {
    let args = Args::parse();
    let cfg = match config(&args) {
        Ok(cfg) => cfg,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(USAGE_ERROR as u8);
        }
    };
    let results = match run_suite(&cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(USAGE_ERROR as u8);
        }
    };
    print!("{}", emit_report(&cfg, &results, args.format));
    if args.format == Format::Json {
        println!();
    }
    let skipped = results.iter().filter(|r| r.status == Status::Skipped).count();
    if skipped > 0 {
        eprintln!("warning: {skipped} check(s) skipped by the size guard");
    }
    ExitCode::from(exit_code(&results) as u8)
}

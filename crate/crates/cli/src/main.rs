use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use bidiff_core::operators::{build_operator_text, BuildRequest, OperatorKind};
use bidiff_core::suite::{run_suite, IntRange, SuiteConfig, SuiteName};
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "bidiff", version, about = "Exact covariant bi-differential operators on matrix space")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and write a JSON report.
    Verify {
        /// `all` or a comma-separated list of suites.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Matrix size range, `lo..hi` (inclusive) or a single value.
        #[arg(long, default_value = "1..2")]
        m: String,
        #[arg(long, default_value = "1..2")]
        k: String,
        #[arg(long, default_value = "-2..3", allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, default_value = "-2..3", allow_hyphen_values = true)]
        mu: String,
        #[arg(long, default_value_t = 20)]
        points: usize,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 5)]
        exploratory_samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Report path; `-` writes to stdout.
        #[arg(long, default_value = "-")]
        out: PathBuf,
        /// Harness self-test: flip the sign of every compared right-hand side.
        #[arg(long)]
        inject_fault: bool,
    },
    /// Build an operator and write its canonical serialization.
    Build {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, allow_hyphen_values = true, requires = "mu")]
        lambda: Option<i64>,
        #[arg(long, allow_hyphen_values = true, requires = "lambda")]
        mu: Option<i64>,
        #[arg(long, default_value = "-")]
        out: PathBuf,
    },
}

fn write_out(path: &PathBuf, text: &str) -> Result<()> {
    if path.as_os_str() == "-" {
        print!("{text}");
        Ok(())
    } else {
        fs::write(path, text).with_context(|| format!("writing {}", path.display()))
    }
}

#[allow(clippy::too_many_arguments)]
fn verify(
    suite: &str,
    m: &str,
    k: &str,
    lambda: &str,
    mu: &str,
    points: usize,
    samples: usize,
    exploratory_samples: usize,
    seed: u64,
    out: &PathBuf,
    inject_fault: bool,
) -> Result<i32> {
    let config = SuiteConfig {
        suites: SuiteName::parse_list(suite)?,
        m: m.parse::<IntRange>()?,
        k: k.parse::<IntRange>()?,
        lambda: lambda.parse::<IntRange>()?,
        mu: mu.parse::<IntRange>()?,
        points,
        samples,
        exploratory_samples,
        seed,
        inject_fault,
    };
    let report = run_suite(&config)?;
    write_out(out, &report.to_json())?;
    for (name, secs) in &report.timings {
        let s = report.suite(*name).map(|r| r.summary).unwrap_or_default();
        eprintln!(
            "{name:<14} pass {:>6}  fail {:>4}  exploratory {:>4}  {secs:.2}s",
            s.pass, s.fail, s.exploratory
        );
    }
    for suite in &report.suites {
        for f in suite.failures().take(3) {
            eprintln!("FAIL {}: {}", f.id, f.witness.as_ref().map(|w| w.to_string()).unwrap_or_default());
        }
    }
    eprintln!("{}", if report.passed() { "all checks passed" } else { "FAILURES present" });
    Ok(report.exit_code())
}

fn build(kind: &str, m: usize, k: Option<usize>, lambda: Option<i64>, mu: Option<i64>, out: &PathBuf) -> Result<()> {
    let kind: OperatorKind = kind.parse()?;
    if kind == OperatorKind::B && k.is_none() {
        bail!("--kind B requires --k");
    }
    let req = BuildRequest { kind, m, k, params: lambda.zip(mu) };
    let text = build_operator_text(&req)?;
    write_out(out, &text)?;
    let terms = text.lines().filter(|l| !l.starts_with('#')).count();
    eprintln!("{kind} m={m}: {terms} terms");
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Verify { suite, m, k, lambda, mu, points, samples, exploratory_samples, seed, out, inject_fault } => {
            verify(suite, m, k, lambda, mu, *points, *samples, *exploratory_samples, *seed, out, *inject_fault)
        }
        Command::Build { kind, m, k, lambda, mu, out } => build(kind, *m, *k, *lambda, *mu, out).map(|_| 0),
    };
    match outcome {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

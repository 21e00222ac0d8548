use std::process::ExitCode;

use clap::Parser;
use shilov_cli::{emit, run, Format, Mutation, RunConfig, Suite};

/// Verify the quantum symmetric-matrix ball identities at finite truncation.
#[derive(Parser, Debug)]
#[command(name = "shilov", version)]
struct Args {
    /// Deformation parameter, strictly between 0 and 1.
    #[arg(long, default_value_t = 0.5)]
    q: f64,
    /// Truncation for one-leg representations.
    #[arg(long, default_value_t = 64)]
    n1: usize,
    /// Truncation per leg for two-leg representations.
    #[arg(long, default_value_t = 32)]
    n2: usize,
    /// Truncation per leg for three-leg representations.
    #[arg(long, default_value_t = 16)]
    n3: usize,
    /// Phase grid for the maximum-modulus sup.
    #[arg(long = "phi-grid", default_value_t = 128)]
    phi_grid: usize,
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    #[arg(long, default_value_t = 2024)]
    seed: u64,
    /// Suite to run; repeat for several. All suites when omitted.
    #[arg(long = "suite", value_parser = parse_suite)]
    suites: Vec<Suite>,
    /// text or json.
    #[arg(long, default_value = "text")]
    format: Format,
    /// Run with a deliberately broken input (dropped-relation or dropped-summand).
    #[arg(long, hide = true, value_parser = parse_mutation)]
    mutate: Option<Mutation>,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: shilov_core::Error| e.to_string())
}

fn parse_mutation(s: &str) -> Result<Mutation, String> {
    s.parse().map_err(|e: shilov_core::Error| e.to_string())
}

fn main() -> ExitCode {
    let a = Args::parse();
    let mut cfg = RunConfig {
        q: a.q,
        n1: a.n1,
        n2: a.n2,
        n3: a.n3,
        phi_grid: a.phi_grid,
        tol: a.tol,
        seed: a.seed,
        mutation: a.mutate,
        ..RunConfig::default()
    };
    if !a.suites.is_empty() {
        cfg.suites = a.suites;
    }
    match run(&cfg) {
        Ok(report) => {
            print!("{}", emit(&report, a.format));
            if a.format == Format::Json {
                println!();
            }
            if report.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

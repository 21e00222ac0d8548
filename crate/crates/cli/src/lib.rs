//! Batch verification harness: configuration, the named check suites and
//! text or JSON reports.

pub mod config;
pub mod report;
mod suites;

use std::time::Instant;

pub use config::{Mutation, RunConfig, Suite, ALL_SUITES};
pub use report::{emit, parse_json, Format, Report, Summary};
pub use shilov_core::boundary::CheckEntry;

/// Runs one suite on its own, without the report wrapper.
pub fn run_suite(suite: Suite, cfg: &RunConfig) -> Vec<CheckEntry> {
    suites::run_suite(suite, cfg)
}

/// Runs the configured suites, one thread per suite. The result does not
/// depend on scheduling because each suite is pure and entries are sorted.
pub fn run(cfg: &RunConfig) -> shilov_core::Result<Report> {
    cfg.validate()?;
    let start = Instant::now();
    let mut suites = cfg.suites.clone();
    suites.sort();
    suites.dedup();
    let entries: Vec<CheckEntry> = std::thread::scope(|s| {
        let handles: Vec<_> = suites
            .iter()
            .map(|&x| s.spawn(move || run_suite(x, cfg)))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("suite thread panicked"))
            .collect()
    });
    Ok(Report::new(
        cfg.clone(),
        entries,
        start.elapsed().as_secs_f64(),
    ))
}

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use shilov_core::boundary::{CheckEntry, Comparison};

use crate::config::RunConfig;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

/// Result of a run. `wall_time_s` is the only field that varies between
/// runs with the same configuration.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub config: RunConfig,
    pub entries: Vec<CheckEntry>,
    pub summary: Summary,
    pub wall_time_s: f64,
}

impl Report {
    /// Sorts the entries by name then parameters and recomputes the summary.
    pub fn new(config: RunConfig, mut entries: Vec<CheckEntry>, wall_time_s: f64) -> Self {
        entries.sort_by(|a, b| (&a.name, &a.params).cmp(&(&b.name, &b.params)));
        let passed = entries.iter().filter(|e| e.pass).count();
        let summary = Summary {
            total: entries.len(),
            passed,
            failed: entries.len() - passed,
        };
        Report {
            config,
            entries,
            summary,
            wall_time_s,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.summary.failed == 0
    }

    /// The report with its timing zeroed, for comparing runs.
    pub fn without_timing(&self) -> Report {
        Report {
            wall_time_s: 0.0,
            ..self.clone()
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| !e.pass)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(Format::Text),
            "json" | "structured" => Ok(Format::Json),
            _ => Err(format!("unknown format `{s}`")),
        }
    }
}

fn text_line(e: &CheckEntry) -> String {
    let op = match e.comparison {
        Comparison::AtMost => "<=",
        Comparison::AtLeast => ">=",
    };
    let mut line = format!(
        "{} {} [{}] value={:.3e} {op} {:.3e}",
        if e.pass { "PASS" } else { "FAIL" },
        e.name,
        e.params,
        e.value,
        e.tol
    );
    if let Some(n) = &e.note {
        let _ = write!(line, " ({n})");
    }
    line
}

pub fn emit(report: &Report, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(report).expect("report serializes"),
        Format::Text => {
            let mut out = String::new();
            for e in &report.entries {
                out.push_str(&text_line(e));
                out.push('\n');
            }
            let s = &report.summary;
            let _ = writeln!(
                out,
                "{} checks, {} passed, {} failed in {:.1}s",
                s.total, s.passed, s.failed, report.wall_time_s
            );
            out
        }
    }
}

pub fn parse_json(text: &str) -> serde_json::Result<Report> {
    serde_json::from_str(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_passes_and_round_trips() {
        let r = Report::new(RunConfig::default().with_suites(&[]), vec![], 0.25);
        assert!(r.all_pass());
        assert_eq!(r.summary.total, 0);
        let back = parse_json(&emit(&r, Format::Json)).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn text_is_one_line_per_check() {
        let entries = vec![
            CheckEntry::at_most("b", "x", "n=1".into(), 0.5, 1.0),
            CheckEntry::at_least("a", "y", "n=2".into(), 0.5, 1.0).with_note("short"),
        ];
        let r = Report::new(RunConfig::default(), entries, 1.0);
        assert_eq!(r.entries[0].name, "a");
        assert_eq!(r.summary.failed, 1);
        let text = emit(&r, Format::Text);
        assert_eq!(text.lines().count(), 3);
        assert!(text.lines().next().unwrap().starts_with("FAIL a [n=2]"));
    }
}

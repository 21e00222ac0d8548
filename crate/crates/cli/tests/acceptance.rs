//! Acceptance criteria at the default configuration. Prints one PASS/FAIL
//! line per criterion and exits nonzero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use shilov_cli::{run, CheckEntry, Mutation, Report, RunConfig, Suite};

struct Criterion {
    label: &'static str,
    /// Entry-name prefixes that make up the criterion.
    names: &'static [&'static str],
}

const CRITERIA: [Criterion; 9] = [
    Criterion {
        label: "1 relations",
        names: &["relations."],
    },
    Criterion {
        label: "2 hopf layer",
        names: &["hopf."],
    },
    Criterion {
        label: "3 coaction",
        names: &["coaction.hom", "coaction.action"],
    },
    Criterion {
        label: "4 wick equivalence",
        names: &["wick."],
    },
    Criterion {
        label: "5 character chain",
        names: &["characters."],
    },
    Criterion {
        label: "6 boundary ideal",
        names: &[
            "annihilators.vanish",
            "annihilators.witness",
            "dilation.",
            "inequalities.",
        ],
    },
    Criterion {
        label: "7 maximum modulus",
        names: &["shilov-norm."],
    },
    Criterion {
        label: "8 character identity",
        names: &["annihilators.character-identity"],
    },
    Criterion {
        label: "9 regular functions",
        names: &["regular."],
    },
];

fn select<'a>(r: &'a Report, c: &Criterion) -> Vec<&'a CheckEntry> {
    r.entries
        .iter()
        .filter(|e| c.names.iter().any(|n| e.name.starts_with(n)))
        .collect()
}

fn line(label: &str, pass: bool, detail: String) -> bool {
    println!("{} {label}: {detail}", if pass { "PASS" } else { "FAIL" });
    pass
}

fn summarize(label: &str, entries: &[&CheckEntry]) -> bool {
    let failed: Vec<_> = entries.iter().filter(|e| !e.pass).collect();
    let detail = match failed.first() {
        None => format!("{} checks", entries.len()),
        Some(e) => format!(
            "{} of {} checks failed, first {} [{}] value={:.3e} tol={:.3e}{}",
            failed.len(),
            entries.len(),
            e.name,
            e.params,
            e.value,
            e.tol,
            e.note
                .as_deref()
                .map(|n| format!(" ({n})"))
                .unwrap_or_default()
        ),
    };
    line(label, !entries.is_empty() && failed.is_empty(), detail)
}

fn main() -> ExitCode {
    let start = Instant::now();
    let cfg = RunConfig::default();
    let report = match run(&cfg) {
        Ok(r) => r,
        Err(e) => {
            println!("FAIL run: {e}");
            return ExitCode::FAILURE;
        }
    };
    let mut ok = true;
    for c in &CRITERIA {
        ok &= summarize(c.label, &select(&report, c));
    }

    let clean: Vec<_> = report
        .entries
        .iter()
        .filter(|e| e.name == "confluence.clean")
        .collect();
    let clean_ok = clean.len() == 4 && clean.iter().all(|e| e.pass);
    let mut detected = Vec::new();
    for m in [Mutation::DroppedRelation, Mutation::DroppedSummand] {
        let mcfg = RunConfig {
            mutation: Some(m),
            ..cfg.clone()
        }
        .with_suites(&[Suite::Confluence, Suite::Coaction]);
        let caught = run(&mcfg)
            .map(|r| r.failures().map(|e| e.name.clone()).collect::<Vec<_>>())
            .unwrap_or_default();
        detected.push((m, caught));
    }
    let all_caught = detected.iter().all(|(_, c)| !c.is_empty());
    let detail = format!(
        "{} presets clean; mutations caught by {}",
        clean.iter().filter(|e| e.pass).count(),
        detected
            .iter()
            .map(|(m, c)| format!("{m:?} -> {:?}", c))
            .collect::<Vec<_>>()
            .join(", ")
    );
    ok &= line("10 robustness", clean_ok && all_caught, detail);

    ok &= line(
        "report size",
        report.summary.total >= 40 && report.all_pass(),
        format!(
            "{} entries, {} failed",
            report.summary.total, report.summary.failed
        ),
    );
    println!(
        "acceptance finished in {:.1}s",
        start.elapsed().as_secs_f64()
    );
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

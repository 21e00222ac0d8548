use std::process::Command;

use shilov_cli::{parse_json, run, Mutation, RunConfig, Suite};

fn shilov(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_shilov"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn empty_suite_list_passes() {
    let r = run(&RunConfig::default().with_suites(&[])).unwrap();
    assert_eq!(r.summary.total, 0);
    assert!(r.all_pass());
}

#[test]
fn coarse_grid_still_near_two() {
    let out = shilov(&[
        "--suite",
        "shilov-norm",
        "--phi-grid",
        "16",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let r = parse_json(&String::from_utf8(out.stdout).unwrap()).unwrap();
    let lower: Vec<_> = r
        .entries
        .iter()
        .filter(|e| e.name == "shilov-norm.lower")
        .collect();
    assert_eq!(lower.len(), 3);
    for e in lower {
        assert!(e.value >= 1.98, "{e:?}");
    }
}

#[test]
fn structured_output_round_trips_and_is_deterministic() {
    let cfg = RunConfig::default().with_suites(&[
        Suite::Confluence,
        Suite::RegularFunctions,
        Suite::Hopf,
    ]);
    let a = run(&cfg).unwrap();
    let b = run(&cfg).unwrap();
    assert_eq!(a.without_timing(), b.without_timing());
    let text = shilov_cli::emit(&a, shilov_cli::Format::Json);
    assert_eq!(parse_json(&text).unwrap(), a);
    for e in &a.entries {
        assert!(!e.anchor.is_empty() && e.pass, "{e:?}");
    }
}

#[test]
fn every_suite_reports_checks() {
    for s in shilov_cli::ALL_SUITES {
        if s == Suite::Inequalities {
            continue;
        }
        let cfg = RunConfig {
            n1: 32,
            n2: 16,
            n3: 12,
            ..Default::default()
        };
        assert!(!shilov_cli::run_suite(s, &cfg).is_empty(), "{s}");
    }
}

#[test]
fn mutations_fail_with_nonzero_exit() {
    for (m, suite) in [
        ("dropped-relation", "confluence"),
        ("dropped-summand", "coaction"),
    ] {
        let out = shilov(&["--mutate", m, "--suite", suite]);
        assert!(!out.status.success(), "{m}");
        let text = String::from_utf8(out.stdout).unwrap();
        assert!(text.lines().any(|l| l.starts_with("FAIL")), "{text}");
    }
    let cfg = RunConfig {
        mutation: Some(Mutation::DroppedSummand),
        ..Default::default()
    }
    .with_suites(&[Suite::Coaction]);
    let r = run(&cfg).unwrap();
    assert!(r.failures().any(|e| e.name == "coaction.hom"));
}

#[test]
fn bad_input_is_rejected() {
    let out = shilov(&["--q", "1.5", "--suite", "confluence"]);
    assert_eq!(out.status.code(), Some(2));
    let out = shilov(&["--suite", "no-such-suite"]);
    assert!(!out.status.success());
    assert!(run(&RunConfig {
        phi_grid: 2,
        ..Default::default()
    })
    .is_err());
}

#[test]
fn high_q_relations_hold_and_series_slack_grows() {
    let cfg = RunConfig {
        q: 0.99,
        ..Default::default()
    }
    .with_suites(&[Suite::Relations, Suite::Characters]);
    let r = run(&cfg).unwrap();
    for e in r
        .entries
        .iter()
        .filter(|e| e.name.starts_with("relations."))
    {
        assert!(e.pass, "{e:?}");
    }
    let series: Vec<_> = r
        .entries
        .iter()
        .filter(|e| e.name == "characters.series")
        .collect();
    assert_eq!(series.len(), 3);
    for e in series {
        assert!(e.pass && e.tol > 1e-3, "{e:?}");
    }
}

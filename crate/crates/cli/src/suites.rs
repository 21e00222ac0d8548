//! The check suites. Each returns report entries; internal errors become
//! failed entries rather than aborting the run.

use std::f64::consts::{PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use shilov_core::boundary::{
    annihilation_residuals, det_unitarity_check, holo_matrix_inequalities, j_generators,
    lemma_bound_check, non_annihilation_witness, norm_domination, regular_involution_check,
    sample_holomorphic_arrays, sample_words, shilov_norm, theta_det, CheckEntry, NormConfig,
    DOMINATED_FAMILIES,
};
use shilov_core::ncalg::presets::{self, F, KINV, UQ_SL2, Z21, Z21S, Z22};
use shilov_core::ncalg::{local_confluence_check, preset, Presentation, PRESET_NAMES};
use shilov_core::oprep::{
    base_op, character_chain, coherent_check, cstar_identity_residual, default_dims,
    dilation_report, egervary_dilation, guard_residual, moment_match, op_word,
    psi_compression_residual, ratio, relation_residual, rep_image, Family, Phase, PsiVariant,
    RepSpec, Series, SparseMatrix, ALL_FAMILIES,
};
use shilov_core::qgroups::{
    action_kills_relations, action_table_check, coassociativity, hom_generators,
    module_algebra_law, pairing_generator_values, pairing_laws, star_compatibility, uq_words,
    verify_coaction_action, verify_coaction_hom, ActionTable, Coaction, HopfTables, LawReport,
    Pairing,
};
use shilov_core::{NcExpr, Result};

use crate::config::{Mutation, RunConfig, Suite};

/// Phase-grid size used wherever a family is swept over its phases.
const PHASE_GRID: usize = 8;
/// Truncation and dilation order for the compressed `Ψ` maps.
const PSI_N: usize = 8;
const DILATION_ORDER: usize = 4;
const SERIES_TERMS: usize = 40;

fn guarded(
    name: &str,
    anchor: &str,
    params: String,
    f: impl FnOnce() -> Result<CheckEntry>,
) -> CheckEntry {
    f().unwrap_or_else(|e| CheckEntry::failed(name, anchor, params, &e))
}

fn law(name: &str, anchor: &str, params: String, r: Result<LawReport>) -> CheckEntry {
    guarded(name, anchor, params.clone(), || {
        let r = r?;
        let mut e = CheckEntry::at_most(name, anchor, params, r.mismatches.len() as f64, 0.0)
            .with_note(format!("{} checked", r.checked));
        if let Some(m) = r.mismatches.first() {
            e = e.with_note(format!("{} checked, first mismatch {m}", r.checked));
        }
        Ok(e)
    })
}

fn suite_rng(cfg: &RunConfig, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(cfg.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

/// `k`-th grid point and, for two-phase families, a decorrelated partner.
fn grid_vals(arity: usize, k: usize, n: usize) -> Vec<f64> {
    let at = |j: usize| TAU * (j % n) as f64 / n as f64;
    match arity {
        0 => vec![],
        1 => vec![at(k)],
        _ => vec![at(k), at(3 * k + 1)],
    }
}

fn pol(cfg: &RunConfig) -> Presentation {
    let p = presets::pol_matsym();
    match cfg.mutation {
        Some(Mutation::DroppedRelation) => p.without_rule(Z21S, Z21),
        _ => p,
    }
}

fn coaction(cfg: &RunConfig) -> Result<Coaction> {
    let c = Coaction::new()?;
    Ok(match cfg.mutation {
        Some(Mutation::DroppedSummand) => c.with_dropped_summand(Z22, 0),
        _ => c,
    })
}

fn preset_for(cfg: &RunConfig, name: &str) -> Result<Presentation> {
    if name == presets::POL_MATSYM {
        Ok(pol(cfg))
    } else {
        preset(name)
    }
}

fn norm_config(cfg: &RunConfig) -> NormConfig {
    NormConfig {
        q: cfg.q,
        n1: cfg.n1,
        n2: cfg.n2,
        n3: cfg.n3,
        phase_points: PHASE_GRID,
        sup_grid: 16,
        refine: 8,
    }
}

pub fn run_suite(suite: Suite, cfg: &RunConfig) -> Vec<CheckEntry> {
    match suite {
        Suite::Relations => relations(cfg),
        Suite::Hopf => hopf(cfg),
        Suite::Coaction => coaction_suite(cfg),
        Suite::Wick => wick(cfg),
        Suite::Characters => characters(cfg),
        Suite::Annihilators => annihilators(cfg),
        Suite::ShilovNorm => shilov(cfg),
        Suite::Dilation => dilation(cfg),
        Suite::Inequalities => inequalities(cfg),
        Suite::RegularFunctions => regular_functions(cfg),
        Suite::Confluence => confluence(cfg),
    }
}

fn relations(cfg: &RunConfig) -> Vec<CheckEntry> {
    const TOL: f64 = 1e-10;
    let anchor = "defining relations hold in each representation";
    let mut out = Vec::new();
    for name in PRESET_NAMES {
        if name == UQ_SL2 {
            let params = format!("{name} fundamental q={}", cfg.q);
            out.push(guarded(
                "relations.residual",
                anchor,
                params.clone(),
                || {
                    let p = preset(name)?;
                    let rep = Pairing::new().rep;
                    let mut worst: f64 = 0.0;
                    for (_, rel) in p.relation_elements() {
                        for x in rep.expr(&rel).iter().flatten() {
                            worst = worst.max(x.eval(cfg.q)?.norm());
                        }
                    }
                    Ok(CheckEntry::at_most(
                        "relations.residual",
                        anchor,
                        params,
                        worst,
                        TOL,
                    ))
                },
            ));
            continue;
        }
        for family in ALL_FAMILIES.into_iter().filter(|f| f.algebra() == name) {
            let dims = default_dims(family.legs(), cfg.n1, cfg.n2, cfg.n3);
            let points = if family.arity() == 0 { 1 } else { PHASE_GRID };
            let params = format!("{name} {} N={dims:?} grid={points}", family.name());
            out.push(guarded(
                "relations.residual",
                anchor,
                params.clone(),
                || {
                    let p = preset_for(cfg, name)?;
                    let spec = RepSpec::symbolic(family);
                    let mut worst: f64 = 0.0;
                    for k in 0..points {
                        worst = worst.max(relation_residual(
                            &p,
                            &spec,
                            &dims,
                            cfg.q,
                            &grid_vals(family.arity(), k, PHASE_GRID),
                        )?);
                    }
                    Ok(CheckEntry::at_most(
                        "relations.residual",
                        anchor,
                        params,
                        worst,
                        TOL,
                    ))
                },
            ));
        }
    }
    let params = format!("pi0(pi/3) N={}", cfg.n1);
    out.push(guarded(
        "relations.uncorrected-su2",
        "the uncorrected t22 t21 relation fails in pi_phi",
        params.clone(),
        || {
            let spec = RepSpec::new(Family::Pi0, vec![Phase::pi(ratio(1, 3))])?;
            let e = rep_image(&presets::uncorrected_t22_t21(), &spec)?;
            let r = guard_residual(&e, &[cfg.n1], cfg.q, &[])?;
            Ok(CheckEntry::at_least(
                "relations.uncorrected-su2",
                "the uncorrected t22 t21 relation fails in pi_phi",
                params,
                r,
                0.1,
            ))
        },
    ));
    out
}

fn hopf(_cfg: &RunConfig) -> Vec<CheckEntry> {
    let h = HopfTables::new();
    let p = Pairing::new();
    let mut out = vec![
        law(
            "hopf.coassociativity",
            "coproduct is coassociative",
            "uq words len<=3".into(),
            coassociativity(&h, 3),
        ),
        law(
            "hopf.pairing-values",
            "pairing of t_ij with E, F, K",
            "generators".into(),
            pairing_generator_values(&p),
        ),
        law(
            "hopf.pairing-bialgebra",
            "pairing is a bialgebra pairing",
            "uq words len<=3".into(),
            pairing_laws(&p, 3),
        ),
    ];
    let anchor = "pairing vanishes on the relations of C[SU2]_q";
    out.push(guarded(
        "hopf.pairing-kills-relations",
        anchor,
        "uq words len<=2".into(),
        || {
            let mut bad = 0usize;
            for (_, rel) in p.su2.relation_elements() {
                for w in uq_words(2) {
                    if !p.pair(&rel, &NcExpr::word(w))?.is_zero() {
                        bad += 1;
                    }
                }
            }
            Ok(CheckEntry::at_most(
                "hopf.pairing-kills-relations",
                anchor,
                "uq words len<=2".into(),
                bad as f64,
                0.0,
            ))
        },
    ));
    let anchor = "pairing detects the uncorrected t22 t21 relation";
    out.push(guarded(
        "hopf.pairing-uncorrected",
        anchor,
        "xi=F".into(),
        || {
            let v = p.pair(&presets::uncorrected_t22_t21(), &NcExpr::letter(F))?;
            Ok(CheckEntry::flag(
                "hopf.pairing-uncorrected",
                anchor,
                "xi=F".into(),
                !v.is_zero(),
            ))
        },
    ));
    match ActionTable::new() {
        Ok(a) => out.extend([
            law(
                "hopf.action-table",
                "action of E, F, K on the generators",
                "z11 z21 z22".into(),
                action_table_check(&a),
            ),
            law(
                "hopf.action-kills-relations",
                "action annihilates every defining relation",
                "E F K".into(),
                action_kills_relations(&a),
            ),
            law(
                "hopf.module-algebra",
                "action is a module-algebra action",
                "words len<=2".into(),
                module_algebra_law(&a, 2),
            ),
            law(
                "hopf.star-compatibility",
                "action is compatible with the involution",
                "words len<=3".into(),
                star_compatibility(&a, 3),
            ),
        ]),
        Err(e) => out.push(CheckEntry::failed(
            "hopf.action-table",
            "action of E, F, K on the generators",
            String::new(),
            &e,
        )),
    }
    out
}

fn coaction_suite(cfg: &RunConfig) -> Vec<CheckEntry> {
    let c = match coaction(cfg) {
        Ok(c) => c,
        Err(e) => {
            return vec![CheckEntry::failed(
                "coaction.hom",
                "coaction is an algebra homomorphism",
                String::new(),
                &e,
            )]
        }
    };
    let hom =
        |name: &str, anchor: &str, params: &str, r: Result<shilov_core::qgroups::HomReport>| {
            law(
                name,
                anchor,
                params.into(),
                r.map(|r| LawReport {
                    checked: r.products_checked,
                    mismatches: r.mismatches,
                }),
            )
        };
    let mut out = vec![hom(
        "coaction.hom",
        "coaction is an algebra homomorphism",
        "generator pairs and letter triples",
        verify_coaction_hom(&c, 3),
    )];
    let action_check = || {
        let a = ActionTable::new()?;
        verify_coaction_action(&c, &a, &Pairing::new(), &hom_generators(&c.pol), 3)
    };
    out.push(hom(
        "coaction.action",
        "evaluating the coaction reproduces the action",
        "uq words len<=3",
        action_check(),
    ));
    if cfg.mutation.is_none() {
        let anchor = "a coaction with a dropped summand is rejected";
        out.push(guarded(
            "coaction.mutation-detected",
            anchor,
            "z22 summand 0".into(),
            || {
                let r = verify_coaction_hom(&c.with_dropped_summand(Z22, 0), 2)?;
                Ok(CheckEntry::flag(
                    "coaction.mutation-detected",
                    anchor,
                    "z22 summand 0".into(),
                    !r.is_clean(),
                ))
            },
        ));
    }
    out
}

fn wick(cfg: &RunConfig) -> Vec<CheckEntry> {
    let mut out = Vec::new();
    let phases = [(0, 1), (1, 3), (1, 1)];
    for (a, b) in phases {
        let phi = Phase::pi(ratio(a, b));
        for family in [Family::Tau, Family::FphiCoact] {
            let params = format!("{}({phi}) N={} d=3", family.name(), cfg.n2);
            let anchor = "coherent vector is an eigenvector of the adjoint generators";
            out.push(guarded("wick.coherent", anchor, params.clone(), || {
                let spec = RepSpec::new(family, vec![phi.clone()])?;
                let r = coherent_check(&spec, cfg.n2, 3, cfg.q, &[])?;
                let worst = r.residuals.iter().copied().fold(0.0, f64::max);
                Ok(CheckEntry::at_most(
                    "wick.coherent",
                    anchor,
                    params,
                    worst,
                    1e-12,
                ))
            }));
        }
        let params = format!("phi={phi} N={} d=3", cfg.n2);
        let anchor = "coherent vector is cyclic on the low-degree block";
        out.push(guarded("wick.cyclic", anchor, params.clone(), || {
            let t = coherent_check(
                &RepSpec::new(Family::Tau, vec![phi.clone()])?,
                cfg.n2,
                3,
                cfg.q,
                &[],
            )?;
            let f = coherent_check(
                &RepSpec::new(Family::FphiCoact, vec![phi.clone()])?,
                cfg.n2,
                3,
                cfg.q,
                &[],
            )?;
            let ok = t.covers_low_block && t.span_rank == f.span_rank;
            Ok(
                CheckEntry::flag("wick.cyclic", anchor, params, ok).with_note(format!(
                    "span rank {} for tau, {} for Fphi-coact",
                    t.span_rank, f.span_rank
                )),
            )
        }));
        let params = format!("tau vs Fphi-composed phi={phi} deg<=4 N={}", cfg.n3);
        let anchor = "vacuum moments agree on all star words";
        out.push(guarded("wick.moments", anchor, params.clone(), || {
            let t = RepSpec::new(Family::Tau, vec![phi.clone()])?;
            let f = RepSpec::new(Family::FphiComposed, vec![phi.clone()])?;
            let r = moment_match(&t, &f, 4, cfg.n3, cfg.q, &[])?;
            Ok(
                CheckEntry::at_most("wick.moments", anchor, params, r.max_deviation, 1e-10)
                    .with_note(format!("{} words", r.words_checked)),
            )
        }));
    }
    let params = format!("tau(0) vs tau(pi) deg<=4 N={}", cfg.n3);
    let anchor = "moments separate inequivalent phases";
    out.push(guarded(
        "wick.moments-separate",
        anchor,
        params.clone(),
        || {
            let a = RepSpec::new(Family::Tau, vec![Phase::zero()])?;
            let b = RepSpec::new(Family::Tau, vec![Phase::pi(ratio(1, 1))])?;
            let r = moment_match(&a, &b, 4, cfg.n3, cfg.q, &[])?;
            Ok(CheckEntry::at_least(
                "wick.moments-separate",
                anchor,
                params,
                r.max_deviation,
                0.5,
            ))
        },
    ));
    out
}

fn characters(cfg: &RunConfig) -> Vec<CheckEntry> {
    let mut out = Vec::new();
    let anchor = "character substitution maps one family onto the next";
    match character_chain() {
        Ok(steps) => {
            for s in steps {
                let e = CheckEntry::at_most(
                    "characters.chain",
                    anchor,
                    s.label.clone(),
                    s.mismatches.len() as f64,
                    0.0,
                )
                .with_note(format!("{} generators", s.generators_checked));
                out.push(e);
            }
        }
        Err(e) => out.push(CheckEntry::failed(
            "characters.chain",
            anchor,
            String::new(),
            &e,
        )),
    }
    for (kind, label, step) in [
        (Series::C(2), "C2^2", 2),
        (Series::C(4), "C4^2", 4),
        (Series::D, "D", 1),
    ] {
        let params = format!("{label} terms={SERIES_TERMS} N={}", cfg.n1);
        let anchor = "C*(S) series identity";
        // Norm of the omitted terms; it only exceeds 1e-12 for q near 1.
        let tail = cfg.q.powi(step * SERIES_TERMS as i32);
        out.push(guarded("characters.series", anchor, params.clone(), || {
            let r = cstar_identity_residual(kind, cfg.n1, SERIES_TERMS, cfg.q)?;
            Ok(CheckEntry::at_most(
                "characters.series",
                anchor,
                params,
                r,
                (tail * (1.0 + 1e-9)).max(1e-12),
            )
            .with_note(format!("series tail {tail:.3e}")))
        }));
    }
    let anchor = "every representation is dominated by the Fock norm";
    let letters: Vec<_> = (0..6).collect();
    let samples = sample_words(&mut suite_rng(cfg, 1), 50, 3, &letters);
    let ncfg = norm_config(cfg);
    match norm_domination(&pol(cfg), &samples, &ncfg) {
        Ok(entries) => {
            for family in DOMINATED_FAMILIES {
                let mine: Vec<_> = entries
                    .iter()
                    .filter(|e| e.family == family.name())
                    .collect();
                let worst = mine.iter().max_by(|a, b| a.slack().total_cmp(&b.slack()));
                let params = format!("{} samples=50 grid={PHASE_GRID}", family.name());
                let slack = worst.map_or(f64::MIN, |e| e.slack());
                let mut e =
                    CheckEntry::at_most("characters.domination", anchor, params, slack, cfg.tol);
                if let Some(w) = worst {
                    e = e.with_note(match w.fock_tail {
                        Some(t) => format!("worst {}, Fock tail {t:.1e}", w.element),
                        None => format!(
                            "worst {}, Fock truncation n3={} not converged",
                            w.element, cfg.n3
                        ),
                    });
                }
                out.push(e);
            }
        }
        Err(e) => out.push(CheckEntry::failed(
            "characters.domination",
            anchor,
            String::new(),
            &e,
        )),
    }
    out
}

fn annihilators(cfg: &RunConfig) -> Vec<CheckEntry> {
    let mut out = Vec::new();
    let p = pol(cfg);
    let anchor = "representation annihilates the ideal J";
    for family in [Family::Omega, Family::Theta, Family::ChiCoact] {
        let dims = default_dims(family.legs(), cfg.n1, cfg.n2, cfg.n3);
        let params = format!("{} N={dims:?} g*w deg w<=2 grid=4", family.name());
        out.push(guarded(
            "annihilators.vanish",
            anchor,
            params.clone(),
            || {
                let spec = RepSpec::symbolic(family);
                let mut worst: f64 = 0.0;
                for k in 0..4 {
                    let r = annihilation_residuals(
                        &p,
                        &spec,
                        &dims,
                        2,
                        cfg.q,
                        &grid_vals(family.arity(), k, 4),
                    )?;
                    worst = r.iter().map(|a| a.residual).fold(worst, f64::max);
                }
                Ok(CheckEntry::at_most(
                    "annihilators.vanish",
                    anchor,
                    params,
                    worst,
                    1e-10,
                ))
            },
        ));
    }
    let anchor = "representation does not annihilate J";
    for family in [Family::Fock, Family::Tau, Family::Nu] {
        let dims = default_dims(family.legs(), cfg.n1, cfg.n2, cfg.n3);
        let params = format!("{} N={dims:?}", family.name());
        out.push(guarded(
            "annihilators.witness",
            anchor,
            params.clone(),
            || {
                let spec = RepSpec::symbolic(family);
                let w = non_annihilation_witness(
                    &p,
                    &spec,
                    &dims,
                    cfg.q,
                    &grid_vals(family.arity(), 1, PHASE_GRID),
                )?;
                Ok(CheckEntry::at_least(
                    "annihilators.witness",
                    anchor,
                    params,
                    w,
                    cfg.q.powi(4) / 2.0,
                ))
            },
        ));
    }
    let anchor = "generators of J are self-adjoint up to the swap g12 <-> g21";
    out.push(guarded(
        "annihilators.ideal-adjoint",
        anchor,
        String::new(),
        || {
            let g = j_generators(&p)?.gens;
            let ok = p.star(&g[0])? == g[0] && p.star(&g[3])? == g[3] && p.star(&g[1])? == g[2];
            Ok(CheckEntry::flag(
                "annihilators.ideal-adjoint",
                anchor,
                String::new(),
                ok,
            ))
        },
    ));
    let anchor = "character substitution maps omega onto theta";
    let params = "16 seeded rational phase pairs".to_string();
    out.push(guarded(
        "annihilators.character-identity",
        anchor,
        params.clone(),
        || {
            let mut rng = suite_rng(cfg, 2);
            let mut bad = 0;
            let mut checked = 0;
            for _ in 0..16 {
                let mut draw = || {
                    let den = rng.random_range(1..=12i64);
                    Phase::pi(ratio(rng.random_range(0..2 * den), den))
                };
                let (a, b) = (draw(), draw());
                let r = lemma_bound_check(&a, &b)?;
                checked += r.generators_checked;
                bad += r.mismatches.len();
            }
            Ok(CheckEntry::at_most(
                "annihilators.character-identity",
                anchor,
                params,
                bad as f64,
                0.0,
            )
            .with_note(format!("{checked} generators")))
        },
    ));
    out
}

fn shilov(cfg: &RunConfig) -> Vec<CheckEntry> {
    let mut qs = vec![cfg.q, 0.3, 0.5, 0.7];
    qs.sort_by(f64::total_cmp);
    qs.dedup();
    let g = cfg.phi_grid;
    let mut out = Vec::new();
    for q in qs {
        let params = format!(
            "q={q} grid={g} N={} theta in {{0, pi/2, pi, 3pi/2}}",
            cfg.n1
        );
        let values: Result<Vec<f64>> = (0..4)
            .map(|k| shilov_norm(k as f64 * PI / 2.0, g, cfg.n1, q))
            .collect();
        match values {
            Ok(v) => {
                let lo = v.iter().copied().fold(f64::INFINITY, f64::min);
                let hi = v.iter().copied().fold(f64::NEG_INFINITY, f64::max);
                let lower = 2.0 - 10.0 / (g * g) as f64;
                out.push(CheckEntry::at_least(
                    "shilov-norm.lower",
                    "maximum modulus on the boundary is 2",
                    params.clone(),
                    lo,
                    lower,
                ));
                out.push(CheckEntry::at_most(
                    "shilov-norm.upper",
                    "maximum modulus on the boundary is 2",
                    params,
                    hi,
                    2.0 + cfg.tol,
                ));
            }
            Err(e) => out.push(CheckEntry::failed(
                "shilov-norm.lower",
                "maximum modulus on the boundary is 2",
                params,
                &e,
            )),
        }
    }
    out
}

fn shift_word(s: &str, n: usize, q: f64) -> Result<SparseMatrix> {
    op_word(s)
        .iter()
        .try_fold(SparseMatrix::identity(n), |acc, &l| {
            acc.mul(&base_op(l, n, q))
        })
}

fn dilation(cfg: &RunConfig) -> Vec<CheckEntry> {
    let mut out = Vec::new();
    let m = DILATION_ORDER;
    let cases: [(&str, Result<SparseMatrix>); 3] = [
        ("C4 S", shift_word("C4 S", cfg.n3, cfg.q)),
        ("D", shift_word("D", cfg.n3, cfg.q)),
        ("0", Ok(SparseMatrix::zeros(cfg.n3, cfg.n3))),
    ];
    for (label, t) in cases {
        let params = format!("T={label} N={} m={m}", cfg.n3);
        let res = t.and_then(|t| dilation_report(&t, m));
        match res {
            Ok(r) => {
                out.push(CheckEntry::at_most(
                    "dilation.unitarity",
                    "the dilation is unitary",
                    params.clone(),
                    r.unitarity,
                    1e-12,
                ));
                out.push(CheckEntry::at_most(
                    "dilation.compression",
                    "powers compress to powers",
                    params,
                    r.compression,
                    1e-12,
                ));
            }
            Err(e) => out.push(CheckEntry::failed(
                "dilation.unitarity",
                "the dilation is unitary",
                params,
                &e,
            )),
        }
    }
    let anchor = "only contractions are dilated";
    out.push(guarded(
        "dilation.rejects-expansion",
        anchor,
        "T=2I".into(),
        || {
            let t = SparseMatrix::identity(2).scale(num_complex::Complex64::new(2.0, 0.0));
            Ok(CheckEntry::flag(
                "dilation.rejects-expansion",
                anchor,
                "T=2I".into(),
                egervary_dilation(&t, 1).is_err(),
            ))
        },
    ));
    let anchor = "compressed dilated images reproduce the holomorphic words";
    let variants = [
        ("Psi".to_string(), PsiVariant::Psi),
        ("Psi_phi(0)".to_string(), PsiVariant::PsiPhi(0.0)),
        ("Psi_phi(pi/3)".to_string(), PsiVariant::PsiPhi(PI / 3.0)),
    ];
    for (label, v) in variants {
        let params = format!("{label} N={PSI_N} m={m}");
        out.push(guarded(
            "dilation.psi-compression",
            anchor,
            params.clone(),
            || {
                let r = psi_compression_residual(&v, PSI_N, m, cfg.q)?;
                Ok(CheckEntry::at_most(
                    "dilation.psi-compression",
                    anchor,
                    params,
                    r,
                    1e-12,
                ))
            },
        ));
    }
    out
}

fn inequalities(cfg: &RunConfig) -> Vec<CheckEntry> {
    let ncfg = norm_config(cfg);
    let p = pol(cfg);
    let mut out = Vec::new();
    let anchor = "Fock norm <= sup over tau <= sup over chi-coact";
    for n in [1, 2] {
        let params = format!(
            "n={n} samples=20 sup_grid={} refine={}",
            ncfg.sup_grid, ncfg.refine
        );
        out.push(guarded(
            "inequalities.chain",
            anchor,
            params.clone(),
            || {
                let arrays = sample_holomorphic_arrays(&mut suite_rng(cfg, 10 + n as u64), 20, n);
                let r = holo_matrix_inequalities(&p, &arrays, &ncfg)?;
                let worst = r
                    .iter()
                    .max_by(|a, b| a.violation().total_cmp(&b.violation()));
                let v = worst.map_or(f64::MIN, |e| e.violation());
                let mut e = CheckEntry::at_most("inequalities.chain", anchor, params, v, 1e-6);
                if let Some(w) = worst {
                    e = e.with_note(format!("worst {}", w.array));
                }
                Ok(e)
            },
        ));
    }
    out
}

fn regular_functions(cfg: &RunConfig) -> Vec<CheckEntry> {
    let p = pol(cfg);
    let mut out = Vec::new();
    let params = format!("omega N={} grid={PHASE_GRID}", cfg.n1);
    let (mut unit, mut closed, mut inv) = (0.0f64, 0.0f64, 0.0f64);
    let mut err = None;
    for k in 0..PHASE_GRID {
        let phi = grid_vals(1, k, PHASE_GRID)[0];
        match det_unitarity_check(&p, phi, cfg.n1, cfg.q)
            .and_then(|d| regular_involution_check(&p, phi, cfg.n1, cfg.q).map(|i| (d, i)))
        {
            Ok((d, i)) => {
                unit = unit.max(d.unitarity[0]).max(d.unitarity[1]);
                closed = closed.max(d.closed_form);
                inv = i.residuals.iter().copied().fold(inv, f64::max);
            }
            Err(e) => err = Some(e),
        }
    }
    if let Some(e) = err {
        out.push(CheckEntry::failed(
            "regular.det-unitary",
            "q det is unitary in omega",
            params,
            &e,
        ));
        return out;
    }
    out.push(CheckEntry::at_most(
        "regular.det-unitary",
        "q det is unitary in omega",
        params.clone(),
        unit,
        1e-10,
    ));
    out.push(CheckEntry::at_most(
        "regular.det-closed-form",
        "omega(det) = -q^-1 e^{2i phi}",
        params.clone(),
        closed,
        1e-10,
    ));
    out.push(CheckEntry::at_most(
        "regular.involution",
        "involution through the inverse determinant",
        params,
        inv,
        1e-10,
    ));
    let anchor = "|theta(det)| = q^-1";
    let params = format!("grid={PHASE_GRID}");
    out.push(guarded("regular.theta-det", anchor, params.clone(), || {
        let mut worst: f64 = 0.0;
        for k in 0..PHASE_GRID {
            let v = grid_vals(2, k, PHASE_GRID);
            worst = worst.max((theta_det(&p, v[0], v[1], cfg.q)?.norm() - 1.0 / cfg.q).abs());
        }
        Ok(CheckEntry::at_most(
            "regular.theta-det",
            anchor,
            params,
            worst,
            1e-12,
        ))
    }));
    out
}

fn confluence(cfg: &RunConfig) -> Vec<CheckEntry> {
    let anchor = "rewriting system is locally confluent";
    let mut out: Vec<CheckEntry> = PRESET_NAMES
        .iter()
        .map(|&name| {
            let params = format!("{name} deg<=3");
            guarded("confluence.clean", anchor, params.clone(), || {
                let r = local_confluence_check(&preset_for(cfg, name)?, 3)?;
                let mut e = CheckEntry::at_most(
                    "confluence.clean",
                    anchor,
                    params,
                    r.violations.len() as f64,
                    0.0,
                )
                .with_note(format!("{} words", r.words_checked));
                if let Some(v) = r.violations.first() {
                    e = e.with_note(format!("{} words, first violation {v:?}", r.words_checked));
                }
                Ok(e)
            })
        })
        .collect();
    if cfg.mutation.is_none() {
        let anchor = "a presentation with a dropped relation is rejected";
        out.push(guarded(
            "confluence.mutation-detected",
            anchor,
            "z21* z21".into(),
            || {
                let r = local_confluence_check(&presets::pol_matsym().without_rule(Z21S, Z21), 3)?;
                Ok(CheckEntry::flag(
                    "confluence.mutation-detected",
                    anchor,
                    "z21* z21".into(),
                    !r.is_clean(),
                ))
            },
        ));
        let anchor = "a dropped uq-sl2 relation is rejected";
        out.push(guarded(
            "confluence.mutation-detected",
            anchor,
            "E Kinv".into(),
            || {
                let p = presets::uq_sl2();
                let r = local_confluence_check(&p.without_rule(presets::E, KINV), 3)?;
                Ok(CheckEntry::flag(
                    "confluence.mutation-detected",
                    anchor,
                    "E Kinv".into(),
                    !r.is_clean(),
                ))
            },
        ));
    }
    out
}

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ncalg::{NcExpr, Presentation};
use crate::qscalar::LaurentScalar;

use super::catalog::{image_with, images, RepSpec};
use super::matrix::{guard_mask, materialize, SparseMatrix};
use super::norm::op_norm;
use super::phase::Coeff;
use super::symbol::{OpLetter, OpSymbolExpr};

/// Residual of `x` under a representation, measured on the guard block.
///
/// The value is the Frobenius norm of the guard-block columns, an upper
/// bound for the operator norm. Expressions that cancel symbolically give 0.
pub fn guard_residual(e: &OpSymbolExpr, dims: &[usize], q: f64, vals: &[f64]) -> Result<f64> {
    if e.is_zero() {
        return Ok(0.0);
    }
    let m = materialize(e, dims, q, vals)?;
    let mask = guard_mask(dims, &e.guard());
    Ok(m.select_cols(&mask).frobenius())
}

/// Operator norm of `e` restricted to its guard block.
pub fn guard_norm(e: &OpSymbolExpr, dims: &[usize], q: f64, vals: &[f64]) -> Result<f64> {
    if e.is_zero() {
        return Ok(0.0);
    }
    let m = materialize(e, dims, q, vals)?;
    let mask = guard_mask(dims, &e.guard());
    Ok(op_norm(&m.select_cols(&mask)))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RelationResidual {
    pub relation: String,
    pub residual: f64,
}

/// Guard-block residual of every defining relation of `p` under `spec`.
pub fn relation_residuals(
    p: &Presentation,
    spec: &RepSpec,
    dims: &[usize],
    q: f64,
    vals: &[f64],
) -> Result<Vec<RelationResidual>> {
    if spec.family.algebra() != p.name() {
        return Err(Error::AlgebraMismatch {
            expected: spec.family.algebra().into(),
            found: p.name().into(),
        });
    }
    let imgs = images(spec)?;
    p.relation_elements()
        .into_iter()
        .map(|(label, rel)| {
            let e = image_with(&rel, &imgs, spec.legs())?;
            Ok(RelationResidual {
                relation: label,
                residual: guard_residual(&e, dims, q, vals)?,
            })
        })
        .collect()
}

/// Largest relation residual.
pub fn relation_residual(
    p: &Presentation,
    spec: &RepSpec,
    dims: &[usize],
    q: f64,
    vals: &[f64],
) -> Result<f64> {
    Ok(relation_residuals(p, spec, dims, q, vals)?
        .iter()
        .map(|r| r.residual)
        .fold(0.0, f64::max))
}

/// Which series identity to test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Series {
    /// `C_n² = (1 - q^n) Σ_k q^{nk} S^{k+1} S*^{k+1}`
    C(u8),
    /// `D = Σ_k q^k (S^k S*^k - S^{k+1} S*^{k+1})`
    D,
}

fn shift_projection(k: usize) -> Vec<OpLetter> {
    let mut w = vec![OpLetter::S; k];
    w.extend(std::iter::repeat_n(OpLetter::Sd, k));
    w
}

/// The series identity truncated after `terms` summands, as `lhs - rhs`.
pub fn cstar_series_expr(kind: Series, terms: usize) -> OpSymbolExpr {
    let mut e = match kind {
        Series::C(n) => {
            OpSymbolExpr::term(vec![vec![OpLetter::C(n), OpLetter::C(n)]], Coeff::one())
        }
        Series::D => OpSymbolExpr::term(vec![vec![OpLetter::D]], Coeff::one()),
    };
    for k in 0..terms {
        match kind {
            Series::C(n) => {
                let nk = n as i32 * k as i32;
                let c = LaurentScalar::q_poly(&[(nk, -1), (nk + n as i32, 1)]);
                e.add_term(vec![shift_projection(k + 1)], Coeff::scalar(c));
            }
            Series::D => {
                let c = LaurentScalar::q_pow(k as i32);
                e.add_term(vec![shift_projection(k)], Coeff::scalar(-c.clone()));
                e.add_term(vec![shift_projection(k + 1)], Coeff::scalar(c));
            }
        }
    }
    e
}

/// Operator-norm residual of the truncated series on the guard block.
pub fn cstar_identity_residual(kind: Series, n: usize, terms: usize, q: f64) -> Result<f64> {
    if terms == 0 {
        return Err(Error::InvalidConfig(
            "series needs at least one term".into(),
        ));
    }
    guard_norm(&cstar_series_expr(kind, terms), &[n], q, &[])
}

/// Materialized images of the six generator letters.
pub fn generator_matrices(
    spec: &RepSpec,
    dims: &[usize],
    q: f64,
    vals: &[f64],
) -> Result<Vec<SparseMatrix>> {
    images(spec)?
        .iter()
        .map(|e| materialize(e, dims, q, vals))
        .collect()
}

fn vacuum(dim: usize) -> Vec<Complex64> {
    let mut v = vec![Complex64::new(0.0, 0.0); dim];
    v[0] = Complex64::new(1.0, 0.0);
    v
}

fn vnorm(v: &[Complex64]) -> f64 {
    v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoherentReport {
    pub spec: String,
    /// `‖z11* Ω - e^{-iφ} Ω‖`, `‖z21* Ω‖`, `‖z22* Ω‖`.
    pub residuals: [f64; 3],
    /// Rank of `{π(w) Ω : deg w ≤ d}`.
    pub span_rank: usize,
    /// Whether every `e_i ⊗ e_j` with `i + j ≤ d` lies in that span.
    pub covers_low_block: bool,
}

/// Coherent-vector equalities for a two-leg family and the cyclicity
/// evidence at word degree `d`.
pub fn coherent_check(
    spec: &RepSpec,
    n: usize,
    d: usize,
    q: f64,
    vals: &[f64],
) -> Result<CoherentReport> {
    if spec.legs() != 2 {
        return Err(Error::InvalidConfig(format!(
            "{} is not a two-leg family",
            spec.label()
        )));
    }
    let dims = [n, n];
    let gens = generator_matrices(spec, &dims, q, vals)?;
    let omega = vacuum(n * n);
    let phase = Complex64::from_polar(1.0, -spec.phases[0].eval(vals));
    let mut r1 = gens[3].matvec(&omega);
    r1[0] -= phase;
    let residuals = [
        vnorm(&r1),
        vnorm(&gens[4].matvec(&omega)),
        vnorm(&gens[5].matvec(&omega)),
    ];

    let mut basis: Vec<Vec<Complex64>> = Vec::new();
    let mut layer = vec![omega];
    let push = |v: &Vec<Complex64>, basis: &mut Vec<Vec<Complex64>>| {
        let mut w = v.clone();
        for _ in 0..2 {
            for b in basis.iter() {
                let p: Complex64 = b.iter().zip(&w).map(|(x, y)| x.conj() * y).sum();
                w.iter_mut().zip(b).for_each(|(x, y)| *x -= p * y);
            }
        }
        let nw = vnorm(&w);
        if nw > 1e-9 * vnorm(v).max(1e-300) && nw > 1e-12 {
            basis.push(w.into_iter().map(|x| x / nw).collect());
        }
    };
    push(&layer[0], &mut basis);
    for _ in 0..d {
        let mut next = Vec::new();
        for v in &layer {
            for g in &gens {
                let w = g.matvec(v);
                if vnorm(&w) > 1e-14 {
                    push(&w, &mut basis);
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    let mut covers = true;
    for i in 0..=d {
        for j in 0..=(d - i) {
            if i >= n || j >= n {
                continue;
            }
            let mut e = vec![Complex64::new(0.0, 0.0); n * n];
            e[i * n + j] = Complex64::new(1.0, 0.0);
            let mut w = e.clone();
            for b in &basis {
                let p: Complex64 = b.iter().zip(&w).map(|(x, y)| x.conj() * y).sum();
                w.iter_mut().zip(b).for_each(|(x, y)| *x -= p * y);
            }
            covers &= vnorm(&w) < 1e-8;
        }
    }
    Ok(CoherentReport {
        spec: spec.label(),
        residuals,
        span_rank: basis.len(),
        covers_low_block: covers,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MomentReport {
    pub words_checked: usize,
    pub max_deviation: f64,
    pub worst_word: Vec<u8>,
}

/// Compares vacuum moments `⟨A(w) Ω, Ω⟩` and `⟨B(w) Ω, Ω⟩` over all words
/// in the six generator letters of degree at most `max_deg`.
pub fn moment_match(
    a: &RepSpec,
    b: &RepSpec,
    max_deg: usize,
    n: usize,
    q: f64,
    vals: &[f64],
) -> Result<MomentReport> {
    if a.legs() != 2 || b.legs() != 2 {
        return Err(Error::InvalidConfig(
            "moment matching needs two-leg families".into(),
        ));
    }
    if n <= max_deg {
        return Err(Error::TruncationTooSmall(n));
    }
    let dims = [n, n];
    let ga = generator_matrices(a, &dims, q, vals)?;
    let gb = generator_matrices(b, &dims, q, vals)?;
    let mut rep = MomentReport {
        words_checked: 0,
        max_deviation: 0.0,
        worst_word: Vec::new(),
    };
    let mut word = Vec::new();
    dfs(
        &ga,
        &gb,
        &vacuum(n * n),
        &vacuum(n * n),
        max_deg,
        &mut word,
        &mut rep,
    );
    Ok(rep)
}

/// Words are grown on the left: `v = A(l) A(w) Ω`.
fn dfs(
    ga: &[SparseMatrix],
    gb: &[SparseMatrix],
    va: &[Complex64],
    vb: &[Complex64],
    depth: usize,
    word: &mut Vec<u8>,
    rep: &mut MomentReport,
) {
    if depth == 0 {
        return;
    }
    for l in 0..ga.len() {
        let na = ga[l].matvec(va);
        let nb = gb[l].matvec(vb);
        word.insert(0, l as u8);
        rep.words_checked += 1;
        let dev = (na[0] - nb[0]).norm();
        if dev > rep.max_deviation {
            rep.max_deviation = dev;
            rep.worst_word = word.clone();
        }
        dfs(ga, gb, &na, &nb, depth - 1, word, rep);
        word.remove(0);
    }
}

/// Checks `rep_image(a b) = rep_image(a) rep_image(b)` after materialization.
pub fn multiplicativity_residual(
    p: &Presentation,
    spec: &RepSpec,
    a: &NcExpr,
    b: &NcExpr,
    dims: &[usize],
    q: f64,
    vals: &[f64],
) -> Result<f64> {
    let imgs = images(spec)?;
    let prod = image_with(&p.mul(a, b)?, &imgs, spec.legs())?;
    let split = image_with(a, &imgs, spec.legs())?.mul(&image_with(b, &imgs, spec.legs())?)?;
    guard_residual(&prod.sub(&split)?, dims, q, vals)
}

#[cfg(test)]
mod tests {
    use super::super::catalog::Family;
    use super::super::phase::{ratio, Phase};
    use super::*;
    use crate::ncalg::presets;

    const Q: f64 = 0.5;

    #[test]
    fn fock_relations_hold_on_guard_block() {
        let p = presets::pol_matsym();
        let spec = RepSpec::symbolic(Family::Fock);
        let r = relation_residual(&p, &spec, &[8, 8, 8], Q, &[]).unwrap();
        assert!(r <= 1e-10, "{r}");
    }

    #[test]
    fn corrected_su2_relation_holds_and_typo_fails() {
        let p = presets::c_su2();
        let spec = RepSpec::new(Family::Pi0, vec![Phase::pi(ratio(1, 3))]).unwrap();
        assert!(relation_residual(&p, &spec, &[64], Q, &[]).unwrap() <= 1e-12);
        let e = crate::oprep::rep_image(&presets::uncorrected_t22_t21(), &spec).unwrap();
        assert!(guard_residual(&e, &[64], Q, &[]).unwrap() > 0.1);
    }

    #[test]
    fn series_residuals() {
        assert!(cstar_identity_residual(Series::C(4), 64, 40, Q).unwrap() <= 1e-12);
        assert!(cstar_identity_residual(Series::D, 64, 40, Q).unwrap() <= 1e-12);
        let one_term = cstar_identity_residual(Series::C(2), 64, 1, Q).unwrap();
        assert!((one_term - Q * Q).abs() < 1e-12, "{one_term}");
    }

    #[test]
    fn tau_vacuum_and_span() {
        let spec = RepSpec::symbolic(Family::Tau);
        let r = coherent_check(&spec, 8, 3, Q, &[0.7]).unwrap();
        assert!(r.residuals.iter().all(|&x| x <= 1e-12), "{:?}", r.residuals);
        assert!(r.covers_low_block);
    }

    #[test]
    fn moments_distinguish_phases() {
        let a = RepSpec::new(Family::Tau, vec![Phase::zero()]).unwrap();
        let b = RepSpec::new(Family::Tau, vec![Phase::pi(ratio(1, 1))]).unwrap();
        let r = moment_match(&a, &b, 1, 8, Q, &[]).unwrap();
        assert!((r.max_deviation - 2.0).abs() < 1e-12);
        let same = moment_match(&a, &a, 3, 8, Q, &[]).unwrap();
        assert_eq!(same.max_deviation, 0.0);
    }
}

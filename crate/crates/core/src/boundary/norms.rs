use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ncalg::presets::{Z11, Z22};
use crate::ncalg::{Letter, NcExpr, Presentation, Word};
use crate::oprep::{
    guard_mask, image_with, images, materialize, op_norm, Family, OpSymbolExpr, Phase, RepSpec,
    SparseMatrix,
};
use crate::qscalar::LaurentScalar;

const GOLDEN: f64 = 0.618_033_988_749_894_8;

/// Golden-section search for a local maximum of `f` on `[a, b]`.
fn golden_max(
    f: &mut dyn FnMut(f64) -> Result<f64>,
    mut a: f64,
    mut b: f64,
    iters: usize,
) -> Result<(f64, f64)> {
    let mut x1 = b - GOLDEN * (b - a);
    let mut x2 = a + GOLDEN * (b - a);
    let mut f1 = f(x1)?;
    let mut f2 = f(x2)?;
    for _ in 0..iters {
        if f1 < f2 {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + GOLDEN * (b - a);
            f2 = f(x2)?;
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - GOLDEN * (b - a);
            f1 = f(x1)?;
        }
    }
    Ok(if f1 >= f2 { (x1, f1) } else { (x2, f2) })
}

/// Sup of `f` over the circle: an n-point grid, then a golden-section
/// refinement around the best grid point. Every returned value is attained.
pub fn sup_over_circle(
    f: &mut dyn FnMut(f64) -> Result<f64>,
    grid: usize,
    refine: usize,
) -> Result<(f64, f64)> {
    let h = TAU / grid as f64;
    let mut best = (0.0, f64::NEG_INFINITY);
    for k in 0..grid {
        let phi = k as f64 * h;
        let v = f(phi)?;
        if v > best.1 {
            best = (phi, v);
        }
    }
    if refine > 0 {
        let r = golden_max(f, best.0 - h, best.0 + h, refine)?;
        if r.1 > best.1 {
            best = r;
        }
    }
    Ok(best)
}

/// Sup over the torus: a `grid × grid` scan followed by alternating
/// golden-section sweeps in each coordinate.
pub fn sup_over_torus(
    f: &mut dyn FnMut(f64, f64) -> Result<f64>,
    grid: usize,
    refine: usize,
) -> Result<f64> {
    let h = TAU / grid as f64;
    let mut best = (0.0, 0.0, f64::NEG_INFINITY);
    for i in 0..grid {
        for j in 0..grid {
            let (a, b) = (i as f64 * h, j as f64 * h);
            let v = f(a, b)?;
            if v > best.2 {
                best = (a, b, v);
            }
        }
    }
    if refine > 0 {
        for _ in 0..2 {
            let b = best.1;
            let r = golden_max(&mut |x| f(x, b), best.0 - h, best.0 + h, refine)?;
            if r.1 > best.2 {
                best = (r.0, b, r.1);
            }
            let a = best.0;
            let r = golden_max(&mut |y| f(a, y), best.1 - h, best.1 + h, refine)?;
            if r.1 > best.2 {
                best = (a, r.0, r.1);
            }
        }
    }
    Ok(best.2)
}

/// `sup_φ ‖ω_φ(z21) + e^{iθ} I‖` over an n-point grid of `φ`.
pub fn shilov_norm(theta: f64, grid: usize, n: usize, q: f64) -> Result<f64> {
    if grid < 4 {
        return Err(Error::InvalidConfig(format!(
            "phase grid {grid} is below 4"
        )));
    }
    let spec = RepSpec::new(Family::Omega, vec![Phase::var(0)])?;
    let z21 = crate::oprep::rep_image(&NcExpr::letter(crate::ncalg::presets::Z21), &spec)?;
    let base = materialize(&z21, &[n], q, &[0.0])?;
    let shift = SparseMatrix::identity(n).scale(Complex64::from_polar(1.0, theta));
    let mut best: f64 = 0.0;
    for k in 0..grid {
        let phi = TAU * k as f64 / grid as f64;
        let m = base.scale(Complex64::from_polar(1.0, phi)).add(&shift)?;
        best = best.max(op_norm(&m));
    }
    Ok(best)
}

/// Seeded words in `letters` with degree uniform on `1..=max_deg`.
pub fn sample_words(
    rng: &mut ChaCha8Rng,
    count: usize,
    max_deg: usize,
    letters: &[Letter],
) -> Vec<NcExpr> {
    (0..count)
        .map(|_| {
            let d = rng.random_range(1..=max_deg);
            NcExpr::word(
                (0..d)
                    .map(|_| letters[rng.random_range(0..letters.len())])
                    .collect::<Vec<_>>(),
            )
        })
        .collect()
}

/// Truncations for the norm comparisons.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NormConfig {
    pub q: f64,
    pub n1: usize,
    pub n2: usize,
    pub n3: usize,
    /// Points per phase for the domination sweep.
    pub phase_points: usize,
    /// Points per phase for the sup in the matrix inequalities.
    pub sup_grid: usize,
    pub refine: usize,
}

impl NormConfig {
    /// Fock legs: the middle leg carries `C2 S C2 S` and gets twice the room.
    pub fn fock_dims(&self) -> Vec<usize> {
        vec![self.n3, 2 * self.n3, self.n3]
    }

    fn dims(&self, family: Family) -> Vec<usize> {
        match family.legs() {
            0 => vec![],
            1 => vec![self.n1],
            2 => vec![self.n2; 2],
            _ => self.fock_dims(),
        }
    }
}

/// Block matrix `(π(a_ij))` restricted to guard columns.
fn block_norm(entries: &[Vec<OpSymbolExpr>], dims: &[usize], q: f64, vals: &[f64]) -> Result<f64> {
    let legs = dims.len();
    let mut guard = vec![0; legs];
    for e in entries.iter().flatten() {
        for (g, x) in guard.iter_mut().zip(e.guard()) {
            *g = (*g).max(x);
        }
    }
    let mask = guard_mask(dims, &guard);
    let blocks: Vec<Vec<SparseMatrix>> = entries
        .iter()
        .map(|row| {
            row.iter()
                .map(|e| Ok(materialize(e, dims, q, vals)?.select_cols(&mask)))
                .collect()
        })
        .collect::<Result<_>>()?;
    Ok(op_norm(&SparseMatrix::block(&blocks)?))
}

fn symbolic_entries(a: &[Vec<NcExpr>], spec: &RepSpec) -> Result<Vec<Vec<OpSymbolExpr>>> {
    let imgs = images(spec)?;
    a.iter()
        .map(|row| {
            row.iter()
                .map(|x| image_with(x, &imgs, spec.legs()))
                .collect()
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DominationEntry {
    pub element: String,
    pub family: String,
    pub fock_norm: f64,
    /// Estimated shortfall of the truncated Fock norm; `None` when the
    /// truncation sequence has not reached its geometric regime.
    pub fock_tail: Option<f64>,
    /// Largest norm over the phase sweep.
    pub rep_norm: f64,
}

impl DominationEntry {
    /// `rep_norm` minus the extrapolated Fock norm.
    pub fn slack(&self) -> f64 {
        self.rep_norm - self.fock_norm - self.fock_tail.unwrap_or(0.0)
    }
}

/// Aitken extrapolation of `‖π_F(x)‖` from Fock truncations `n3 - 8`,
/// `n3 - 4` and `n3`. The truncated norm increases with `n3`.
fn fock_tail(x: &[Vec<OpSymbolExpr>], cfg: &NormConfig, at_n3: f64) -> Result<Option<f64>> {
    if cfg.n3 < 12 {
        return Ok(None);
    }
    let at = |n3: usize| block_norm(x, &NormConfig { n3, ..cfg.clone() }.fock_dims(), cfg.q, &[]);
    let (f0, f1) = (at(cfg.n3 - 8)?, at(cfg.n3 - 4)?);
    let (d1, d2) = (f1 - f0, at_n3 - f1);
    if d2.abs() <= 1e-14 * at_n3.max(1.0) {
        return Ok(Some(0.0));
    }
    let r = d2 / d1;
    Ok((d1 > 0.0 && d2 > 0.0 && r < 0.25).then(|| d2 * r / (1.0 - r)))
}

pub const DOMINATED_FAMILIES: [Family; 6] = [
    Family::Tau,
    Family::Omega,
    Family::Nu,
    Family::Theta,
    Family::ChiCoact,
    Family::FphiCoact,
];

/// `‖π(x)‖` against `‖π_F(x)‖` for every sample and family, phases on a grid.
pub fn norm_domination(
    p: &Presentation,
    samples: &[NcExpr],
    cfg: &NormConfig,
) -> Result<Vec<DominationEntry>> {
    let fock = RepSpec::new(Family::Fock, vec![])?;
    let pts = cfg.phase_points.max(1);
    let grid: Vec<f64> = (0..pts).map(|k| TAU * k as f64 / pts as f64).collect();
    let mut out = Vec::new();
    for x in samples {
        let fx = symbolic_entries(&[vec![x.clone()]], &fock)?;
        let fock_norm = block_norm(&fx, &cfg.fock_dims(), cfg.q, &[])?;
        let tail = fock_tail(&fx, cfg, fock_norm)?;
        for family in DOMINATED_FAMILIES {
            let spec = RepSpec::symbolic(family);
            let ex = symbolic_entries(&[vec![x.clone()]], &spec)?;
            let dims = cfg.dims(family);
            let mut best: f64 = 0.0;
            if family.arity() == 1 {
                for &a in &grid {
                    best = best.max(block_norm(&ex, &dims, cfg.q, &[a])?);
                }
            } else {
                for &a in &grid {
                    for &b in &grid {
                        best = best.max(block_norm(&ex, &dims, cfg.q, &[a, b])?);
                    }
                }
            }
            out.push(DominationEntry {
                element: x.show(p).to_string(),
                family: family.name().into(),
                fock_norm,
                fock_tail: tail,
                rep_norm: best,
            });
        }
    }
    Ok(out)
}

/// Seeded `n × n` arrays whose entries are `±w` with `w` a holomorphic
/// word of degree at most 2 (the empty word included).
pub fn sample_holomorphic_arrays(
    rng: &mut ChaCha8Rng,
    count: usize,
    n: usize,
) -> Vec<Vec<Vec<NcExpr>>> {
    (0..count)
        .map(|_| {
            (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| {
                            let d = rng.random_range(0..=2);
                            let w: Vec<Letter> =
                                (0..d).map(|_| rng.random_range(Z11..=Z22)).collect();
                            let sign = if rng.random_bool(0.5) { 1 } else { -1 };
                            NcExpr::term(Word(w), LaurentScalar::from_int(sign))
                        })
                        .collect()
                })
                .collect()
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InequalityEntry {
    pub size: usize,
    pub array: String,
    pub fock: f64,
    pub tau_sup: f64,
    pub chi_sup: f64,
}

impl InequalityEntry {
    /// Largest violation of `fock ≤ tau_sup ≤ chi_sup`; non-positive when both hold.
    pub fn violation(&self) -> f64 {
        (self.fock - self.tau_sup).max(self.tau_sup - self.chi_sup)
    }
}

/// The chain `‖(π_F(a_ij))‖ ≤ sup_φ ‖(τ_φ(a_ij))‖ ≤ sup_{φ1,φ2} ‖(χ-coact(a_ij))‖`.
pub fn holo_matrix_inequalities(
    p: &Presentation,
    arrays: &[Vec<Vec<NcExpr>>],
    cfg: &NormConfig,
) -> Result<Vec<InequalityEntry>> {
    let fock = RepSpec::new(Family::Fock, vec![])?;
    let tau = RepSpec::symbolic(Family::Tau);
    let chi = RepSpec::symbolic(Family::ChiCoact);
    let mut out = Vec::new();
    for a in arrays {
        for x in a.iter().flatten() {
            if x.terms().keys().flat_map(|w| w.letters()).any(|&l| l > Z22) {
                return Err(Error::NonHolomorphic(x.show(p).to_string()));
            }
        }
        let f = block_norm(&symbolic_entries(a, &fock)?, &cfg.fock_dims(), cfg.q, &[])?;
        let te = symbolic_entries(a, &tau)?;
        let tdims = cfg.dims(Family::Tau);
        let (_, t) = sup_over_circle(
            &mut |phi| block_norm(&te, &tdims, cfg.q, &[phi]),
            cfg.sup_grid,
            cfg.refine,
        )?;
        let ce = symbolic_entries(a, &chi)?;
        let cdims = cfg.dims(Family::ChiCoact);
        let c = sup_over_torus(
            &mut |x, y| block_norm(&ce, &cdims, cfg.q, &[x, y]),
            cfg.sup_grid,
            cfg.refine,
        )?;
        let shown: Vec<String> = a
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| x.show(p).to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            })
            .collect();
        out.push(InequalityEntry {
            size: a.len(),
            array: format!("[{}]", shown.join("; ")),
            fock: f,
            tau_sup: t,
            chi_sup: c,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::presets;
    use rand::SeedableRng;

    fn cfg() -> NormConfig {
        NormConfig {
            q: 0.5,
            n1: 32,
            n2: 12,
            n3: 8,
            phase_points: 4,
            sup_grid: 8,
            refine: 6,
        }
    }

    #[test]
    fn shilov_value_is_two_on_aligned_grid() {
        let v = shilov_norm(0.0, 16, 64, 0.5).unwrap();
        assert!((v - 2.0).abs() < 1e-12);
        let w = shilov_norm(std::f64::consts::PI, 256, 64, 0.5).unwrap();
        assert!((w - 2.0).abs() < 1e-12);
    }

    #[test]
    fn golden_section_finds_peak() {
        let (_, v) = sup_over_circle(&mut |x| Ok((x - 1.0).cos()), 8, 30).unwrap();
        assert!((v - 1.0).abs() < 1e-10);
    }

    #[test]
    fn unit_is_dominated_with_equality() {
        let p = presets::pol_matsym();
        let r = norm_domination(&p, &[NcExpr::one()], &cfg()).unwrap();
        for e in r {
            assert!(
                (e.fock_norm - 1.0).abs() < 1e-12 && (e.rep_norm - 1.0).abs() < 1e-12,
                "{e:?}"
            );
        }
    }

    #[test]
    fn fock_tail_closes_the_truncation_gap() {
        // At q = 0.7 the n3 = 16 Fock norm of z11*^3 is short of its limit by about 4e-8.
        let p = presets::pol_matsym();
        let x = p.parse_word("z11* z11* z11*").unwrap();
        let at = |n3| {
            let c = NormConfig {
                q: 0.7,
                n1: 64,
                n2: 32,
                n3,
                phase_points: 1,
                sup_grid: 8,
                refine: 4,
            };
            norm_domination(&p, std::slice::from_ref(&x), &c)
                .unwrap()
                .remove(0)
        };
        let (e, far) = (at(16), at(28));
        let tail = e.fock_tail.unwrap();
        assert!(tail > 1e-8);
        assert!(
            (e.fock_norm + tail - far.fock_norm).abs() < 1e-9,
            "{e:?} {far:?}"
        );
    }

    #[test]
    fn identity_array_has_norm_one() {
        let p = presets::pol_matsym();
        let one = NcExpr::one();
        let a = vec![vec![one.clone(), NcExpr::zero()], vec![NcExpr::zero(), one]];
        let r = holo_matrix_inequalities(&p, &[a], &cfg()).unwrap();
        assert!((r[0].fock - 1.0).abs() < 1e-12 && (r[0].chi_sup - 1.0).abs() < 1e-12);
    }

    #[test]
    fn starred_entries_are_rejected() {
        let p = presets::pol_matsym();
        let a = vec![vec![p.parse_word("z11*").unwrap()]];
        assert!(holo_matrix_inequalities(&p, &[a], &cfg()).is_err());
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert_eq!(sample_holomorphic_arrays(&mut rng, 3, 2).len(), 3);
    }
}

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::ncalg::{NcExpr, Presentation, Word};
use crate::oprep::{guard_residual, image_with, images, materialize, RepSpec};
use crate::qscalar::LaurentScalar;

/// The four generators `g_ij = Σ_k q^{4-i-j} z_ik z_jk* - δ_ij` of the ideal,
/// in the order `g11, g12, g21, g22`.
#[derive(Clone, Debug, PartialEq)]
pub struct IdealGens {
    pub gens: [NcExpr; 4],
}

impl IdealGens {
    pub fn labels() -> [&'static str; 4] {
        ["g11", "g12", "g21", "g22"]
    }
}

/// `z_ik` with `z12 = q z21`.
fn z(p: &Presentation, i: usize, k: usize) -> Result<NcExpr> {
    p.gen(&format!("z{i}{k}"))
}

pub fn j_generators(p: &Presentation) -> Result<IdealGens> {
    let mut gens: [NcExpr; 4] = Default::default();
    for (slot, (i, j)) in [(1, 1), (1, 2), (2, 1), (2, 2)].into_iter().enumerate() {
        let mut g = NcExpr::zero();
        for k in 1..=2 {
            let zjk_star = p.star(&z(p, j, k)?)?;
            let term = p.mul(&z(p, i, k)?, &zjk_star)?;
            g.add_scaled(&term, &LaurentScalar::q_pow(4 - i as i32 - j as i32));
        }
        if i == j {
            g.add_term(Word::unit(), LaurentScalar::from_int(-1));
        }
        gens[slot] = p.normal_form(&g)?;
    }
    Ok(IdealGens { gens })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Annihilation {
    pub element: String,
    pub residual: f64,
}

/// All words of length at most `max_len` in the six generator letters.
pub fn all_words(max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::unit()];
    let mut layer = vec![Word::unit()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for l in 0..6 {
                let mut v = w.letters().to_vec();
                v.push(l);
                next.push(Word(v));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Guard-block residual of every `g_ij · w` with `deg w ≤ max_len`.
pub fn annihilation_residuals(
    p: &Presentation,
    spec: &RepSpec,
    dims: &[usize],
    max_len: usize,
    q: f64,
    vals: &[f64],
) -> Result<Vec<Annihilation>> {
    let ideal = j_generators(p)?;
    let imgs = images(spec)?;
    let mut out = Vec::new();
    for (g, label) in ideal.gens.iter().zip(IdealGens::labels()) {
        let gi = image_with(g, &imgs, spec.legs())?;
        for w in all_words(max_len) {
            let e = gi.mul(&image_with(&NcExpr::word(w.clone()), &imgs, spec.legs())?)?;
            let element = if w.is_empty() {
                label.to_string()
            } else {
                format!("{label}·{}", w.show(p))
            };
            out.push(Annihilation {
                element,
                residual: guard_residual(&e, dims, q, vals)?,
            });
        }
    }
    Ok(out)
}

/// `max_ij |⟨π(g_ij) e_0, e_0⟩|`, the vacuum-entry witness that a
/// representation does not annihilate the ideal.
pub fn non_annihilation_witness(
    p: &Presentation,
    spec: &RepSpec,
    dims: &[usize],
    q: f64,
    vals: &[f64],
) -> Result<f64> {
    let ideal = j_generators(p)?;
    let imgs = images(spec)?;
    let mut best: f64 = 0.0;
    for g in &ideal.gens {
        let m = materialize(&image_with(g, &imgs, spec.legs())?, dims, q, vals)?;
        best = best.max(m.get(0, 0).norm());
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::presets;
    use crate::oprep::{Family, Phase};

    fn p() -> Presentation {
        presets::pol_matsym()
    }

    #[test]
    fn generator_shapes() {
        let p = p();
        let g = j_generators(&p).unwrap();
        let mut g22 = p.parse_word("z21 z21*").unwrap();
        g22 = &(&g22 + &p.parse_word("z22 z22*").unwrap()) - &NcExpr::one();
        assert_eq!(g.gens[3], g22);
        let mut g11 = p
            .parse_word("z11 z11*")
            .unwrap()
            .scale(&LaurentScalar::q_pow(2));
        g11 = &(&g11
            + &p.parse_word("z21 z21*")
                .unwrap()
                .scale(&LaurentScalar::q_pow(4)))
            - &NcExpr::one();
        assert_eq!(g.gens[0], g11);
        assert!(g.gens[1].coeff(&Word::unit()).is_zero());
    }

    #[test]
    fn self_adjointness() {
        let p = p();
        let g = j_generators(&p).unwrap();
        assert_eq!(p.star(&g.gens[0]).unwrap(), g.gens[0]);
        assert_eq!(p.star(&g.gens[3]).unwrap(), g.gens[3]);
        assert_eq!(p.star(&g.gens[1]).unwrap(), g.gens[2]);
    }

    #[test]
    fn omega_annihilates_and_nu_does_not() {
        let p = p();
        let om = RepSpec::new(Family::Omega, vec![Phase::var(0)]).unwrap();
        let r = annihilation_residuals(&p, &om, &[32], 1, 0.5, &[0.3]).unwrap();
        assert!(r.iter().all(|a| a.residual <= 1e-10), "{r:?}");
        let nu = RepSpec::new(Family::Nu, vec![Phase::var(0)]).unwrap();
        let w = non_annihilation_witness(&p, &nu, &[32], 0.5, &[0.3]).unwrap();
        assert!(w >= 0.5f64.powi(4) / 2.0);
    }
}

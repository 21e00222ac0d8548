use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::ncalg::presets::{self, t_letter, Z11, Z11S, Z21, Z21S, Z22, Z22S};
use crate::ncalg::{
    tensor_mul, tensor_normal_form, Letter, NcExpr, Presentation, TensorExpr, Word,
};
use crate::qscalar::LaurentScalar;

use super::action::ActionTable;
use super::pairing::Pairing;

/// The coaction Pol(Mat2sym)_q → Pol(Mat2sym)_q ⊗ C[SU2]_q, given on the six
/// generator letters and extended multiplicatively.
#[derive(Debug)]
pub struct Coaction {
    pub pol: Presentation,
    pub su2: Presentation,
    pub images: Vec<TensorExpr>,
}

/// `z_kl` as an expression, with `z12 = q z21`.
fn z(k: usize, l: usize) -> NcExpr {
    match (k, l) {
        (1, 1) => NcExpr::letter(Z11),
        (2, 1) => NcExpr::letter(Z21),
        (1, 2) => NcExpr::term(Word(vec![Z21]), LaurentScalar::q_pow(1)),
        (2, 2) => NcExpr::letter(Z22),
        _ => unreachable!(),
    }
}

impl Coaction {
    pub fn new() -> Result<Self> {
        let pol = presets::pol_matsym();
        let su2 = presets::c_su2();
        let mut images = vec![TensorExpr::zero(); 6];
        for (letter, i, j) in [(Z11, 1, 1), (Z21, 2, 1), (Z22, 2, 2)] {
            let mut t = TensorExpr::zero();
            for k in 1..=2 {
                for l in 1..=2 {
                    let right = NcExpr::word(vec![t_letter(k, i), t_letter(l, j)]);
                    t.add_scaled(
                        &TensorExpr::product_of(&[&z(k, l), &right]),
                        &LaurentScalar::one(),
                    );
                }
            }
            images[letter as usize] = tensor_normal_form(&t, &[&pol, &su2])?;
        }
        let mut out = Coaction { pol, su2, images };
        for (h, s) in [(Z11, Z11S), (Z21, Z21S), (Z22, Z22S)] {
            out.images[s as usize] = out.star(&out.images[h as usize])?;
        }
        Ok(out)
    }

    /// Copy with summand `k` (in term order) removed from the image of `letter`.
    pub fn with_dropped_summand(&self, letter: Letter, k: usize) -> Coaction {
        let mut images = self.images.clone();
        let mut t = TensorExpr::zero();
        for (n, (legs, c)) in self.images[letter as usize].terms().iter().enumerate() {
            if n != k {
                t.add_term(legs.clone(), c.clone());
            }
        }
        images[letter as usize] = t;
        Coaction {
            pol: self.pol.clone(),
            su2: self.su2.clone(),
            images,
        }
    }

    /// Legwise involution of the tensor product.
    pub fn star(&self, t: &TensorExpr) -> Result<TensorExpr> {
        let mut out = TensorExpr::zero();
        for (legs, c) in t.terms() {
            let a = self.pol.star(&NcExpr::word(legs[0].clone()))?;
            let b = self.su2.star(&NcExpr::word(legs[1].clone()))?;
            out.add_scaled(&TensorExpr::product_of(&[&a, &b]), &c.conj());
        }
        Ok(out)
    }

    pub fn apply(&self, f: &NcExpr) -> Result<TensorExpr> {
        let ps = [&self.pol, &self.su2];
        let mut out = TensorExpr::zero();
        for (w, c) in f.terms() {
            let mut acc = TensorExpr::unit(2);
            for &l in w.letters() {
                acc = tensor_mul(&acc, &self.images[l as usize], &ps)?;
            }
            out.add_scaled(&acc, c);
        }
        Ok(out)
    }

    /// Pairs the second leg of `apply(f)` with `ξ`.
    pub fn eval(&self, f: &NcExpr, xi: &NcExpr, pairing: &Pairing) -> Result<NcExpr> {
        let t = self.apply(f)?;
        let mut out = NcExpr::zero();
        for (legs, c) in t.terms() {
            let v = pairing.pair(&NcExpr::word(legs[1].clone()), xi)?;
            if !v.is_zero() {
                out.add_term(legs[0].clone(), c * &v);
            }
        }
        self.pol.normal_form(&out)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomReport {
    pub products_checked: usize,
    pub mismatches: Vec<String>,
}

impl HomReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Generators used for the multiplicativity check: the six letters plus
/// `z12 = q z21` and its adjoint.
pub fn hom_generators(pol: &Presentation) -> Vec<(String, NcExpr)> {
    let mut g: Vec<(String, NcExpr)> = (0..6)
        .map(|l| (pol.generator(l).name.clone(), NcExpr::letter(l)))
        .collect();
    for (n, v) in pol.aliases() {
        g.push((n.clone(), v.clone()));
    }
    g
}

/// Checks `D(normal_form(f g)) = D(f) D(g)` over all ordered pairs of
/// generators, and for `max_deg >= 3` over all ordered triples of letters.
pub fn verify_coaction_hom(c: &Coaction, max_deg: usize) -> Result<HomReport> {
    let ps = [&c.pol, &c.su2];
    let gens = hom_generators(&c.pol);
    let mut rep = HomReport::default();
    for (nf, f) in &gens {
        for (ng, g) in &gens {
            let prod = c.pol.mul(f, g)?;
            let lhs = c.apply(&prod)?;
            let rhs = tensor_mul(&c.apply(f)?, &c.apply(g)?, &ps)?;
            rep.products_checked += 1;
            if lhs != rhs {
                rep.mismatches.push(format!("{nf} {ng}"));
            }
        }
    }
    if max_deg >= 3 {
        for a in 0..6 {
            for b in 0..6 {
                for d in 0..6 {
                    let prod = c.pol.normal_form(&NcExpr::word(vec![a, b, d]))?;
                    let lhs = c.apply(&prod)?;
                    let ab = tensor_mul(&c.images[a as usize], &c.images[b as usize], &ps)?;
                    let rhs = tensor_mul(&ab, &c.images[d as usize], &ps)?;
                    rep.products_checked += 1;
                    if lhs != rhs {
                        let n = |l: Letter| c.pol.generator(l).name.clone();
                        rep.mismatches.push(format!("{} {} {}", n(a), n(b), n(d)));
                    }
                }
            }
        }
    }
    Ok(rep)
}

/// All words over `{E, F, K, Kinv}` of length at most `max_len`, shortest first.
pub fn uq_words(max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::unit()];
    let mut layer = vec![Word::unit()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for l in 0..4 {
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

/// Compares `D(f)(ξ)` with `ξ f` for each generator `f` and every ξ-word of
/// length at most `max_len`.
pub fn verify_coaction_action(
    c: &Coaction,
    action: &ActionTable,
    pairing: &Pairing,
    gens: &[(String, NcExpr)],
    max_len: usize,
) -> Result<HomReport> {
    let mut rep = HomReport::default();
    for w in uq_words(max_len) {
        let xi = NcExpr::word(w.clone());
        for (name, f) in gens {
            let lhs = c.eval(f, &xi, pairing)?;
            let rhs = action.act(&xi, f)?;
            rep.products_checked += 1;
            if lhs != rhs {
                rep.mismatches
                    .push(format!("{} on {name}", w.show(&pairing.hopf.uq)));
            }
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::presets::{E, F, K, T12, T22};

    #[test]
    fn image_of_z22() {
        // z11 ⊗ t12^2 + (q + q^-1) z21 ⊗ t12 t22 + z22 ⊗ t22^2
        let c = Coaction::new().unwrap();
        let mut want = TensorExpr::zero();
        let one = LaurentScalar::one();
        want.add_term(vec![Word(vec![Z11]), Word(vec![T12, T12])], one.clone());
        want.add_term(
            vec![Word(vec![Z21]), Word(vec![T12, T22])],
            &LaurentScalar::q_pow(1) + &LaurentScalar::q_pow(-1),
        );
        want.add_term(vec![Word(vec![Z22]), Word(vec![T22, T22])], one);
        assert_eq!(c.images[Z22 as usize], want);
        assert_eq!(c.apply(&NcExpr::one()).unwrap(), TensorExpr::unit(2));
    }

    #[test]
    fn evaluation_matches_action_on_generators() {
        let c = Coaction::new().unwrap();
        let a = ActionTable::new().unwrap();
        let p = Pairing::new();
        let z21 = NcExpr::letter(Z21);
        let got = c.eval(&z21, &NcExpr::letter(E), &p).unwrap();
        assert_eq!(got, NcExpr::term(Word(vec![Z11]), LaurentScalar::s_pow(-1)));
        let z22 = NcExpr::letter(Z22);
        let got = c.eval(&z22, &NcExpr::letter(K), &p).unwrap();
        assert_eq!(got, NcExpr::term(Word(vec![Z22]), LaurentScalar::q_pow(-2)));
        let f = a.pol.parse_word("z11 z22").unwrap();
        assert_eq!(c.eval(&f, &NcExpr::one(), &p).unwrap(), f);
        let fe = NcExpr::word(vec![F, E]);
        assert_eq!(c.eval(&f, &fe, &p).unwrap(), a.act(&fe, &f).unwrap());
    }

    #[test]
    fn multiplicative_on_pairs() {
        let c = Coaction::new().unwrap();
        let r = verify_coaction_hom(&c, 2).unwrap();
        assert_eq!(r.products_checked, 64);
        assert!(r.is_clean(), "{:?}", r.mismatches);
    }

    #[test]
    fn dropped_summand_is_detected() {
        let c = Coaction::new().unwrap().with_dropped_summand(Z22, 0);
        let r = verify_coaction_hom(&c, 2).unwrap();
        assert!(!r.is_clean());
    }
}

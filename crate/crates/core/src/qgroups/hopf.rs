use crate::error::Result;
use crate::ncalg::presets::{self, E, F, K, KINV};
use crate::ncalg::{
    tensor_mul, tensor_normal_form, Letter, NcExpr, Presentation, TensorExpr, Word,
};
use crate::qscalar::LaurentScalar;

/// Coproduct, counit and antipode of U_q(sl2) on generators.
#[derive(Clone, Debug)]
pub struct HopfTables {
    pub uq: Presentation,
    pub coproduct: Vec<TensorExpr>,
    pub counit: Vec<LaurentScalar>,
    pub antipode: Vec<NcExpr>,
}

fn t2(a: &[Letter], b: &[Letter], c: LaurentScalar) -> TensorExpr {
    let mut t = TensorExpr::zero();
    t.add_term(vec![Word(a.to_vec()), Word(b.to_vec())], c);
    t
}

impl Default for HopfTables {
    fn default() -> Self {
        Self::new()
    }
}

impl HopfTables {
    pub fn new() -> Self {
        let uq = presets::uq_sl2();
        let one = LaurentScalar::one;
        let mut coproduct = vec![TensorExpr::zero(); 4];
        coproduct[E as usize] = &t2(&[E], &[], one()) + &t2(&[K], &[E], one());
        coproduct[F as usize] = &t2(&[F], &[KINV], one()) + &t2(&[], &[F], one());
        coproduct[K as usize] = t2(&[K], &[K], one());
        coproduct[KINV as usize] = t2(&[KINV], &[KINV], one());

        let mut counit = vec![LaurentScalar::zero(); 4];
        counit[K as usize] = one();
        counit[KINV as usize] = one();

        let minus = LaurentScalar::from_int(-1);
        let mut antipode = vec![NcExpr::zero(); 4];
        antipode[E as usize] = NcExpr::term(Word(vec![KINV, E]), minus.clone());
        antipode[F as usize] = NcExpr::term(Word(vec![F, K]), minus);
        antipode[K as usize] = NcExpr::letter(KINV);
        antipode[KINV as usize] = NcExpr::letter(K);

        HopfTables {
            uq,
            coproduct,
            counit,
            antipode,
        }
    }

    /// Δ extended multiplicatively; both legs in normal form.
    pub fn coproduct(&self, x: &NcExpr) -> Result<TensorExpr> {
        let ps = [&self.uq, &self.uq];
        let mut out = TensorExpr::zero();
        for (w, c) in x.terms() {
            let mut acc = TensorExpr::unit(2);
            for &l in w.letters() {
                acc = tensor_mul(&acc, &self.coproduct[l as usize], &ps)?;
            }
            out.add_scaled(&acc, c);
        }
        Ok(out)
    }

    /// Applies Δ to one leg of a tensor, producing one more leg.
    pub fn coproduct_on_leg(&self, t: &TensorExpr, leg: usize) -> Result<TensorExpr> {
        let mut out = TensorExpr::zero();
        for (ws, c) in t.terms() {
            let d = self.coproduct(&NcExpr::word(ws[leg].clone()))?;
            for (dw, dc) in d.terms() {
                let mut legs = Vec::with_capacity(ws.len() + 1);
                legs.extend_from_slice(&ws[..leg]);
                legs.extend(dw.iter().cloned());
                legs.extend_from_slice(&ws[leg + 1..]);
                out.add_term(legs, c * dc);
            }
        }
        Ok(out)
    }

    /// `Δ^(n-1)(x)` with `n` legs.
    pub fn iterated_coproduct(&self, x: &NcExpr, legs: usize) -> Result<TensorExpr> {
        let mut t = TensorExpr::zero();
        for (w, c) in self.uq.normal_form(x)?.terms() {
            t.add_term(vec![w.clone()], c.clone());
        }
        if legs == 0 {
            let mut s = TensorExpr::zero();
            s.add_term(Vec::new(), self.counit(x)?);
            return Ok(s);
        }
        for k in 1..legs {
            t = self.coproduct_on_leg(&t, k - 1)?;
        }
        let ps = vec![&self.uq; legs];
        tensor_normal_form(&t, &ps)
    }

    pub fn counit(&self, x: &NcExpr) -> Result<LaurentScalar> {
        let mut out = LaurentScalar::zero();
        for (w, c) in x.terms() {
            let mut v = c.clone();
            for &l in w.letters() {
                v = &v * &self.counit[l as usize];
            }
            out += &v;
        }
        Ok(out)
    }

    /// The antipode, an anti-homomorphism.
    pub fn antipode(&self, x: &NcExpr) -> Result<NcExpr> {
        let mut out = NcExpr::zero();
        for (w, c) in x.terms() {
            let mut acc = NcExpr::scalar(c.clone());
            for &l in w.letters().iter().rev() {
                acc = self.uq.mul(&acc, &self.antipode[l as usize])?;
            }
            out.add_scaled(&acc, &LaurentScalar::one());
        }
        Ok(out)
    }

    /// `m (S ⊗ id) Δ(x)`; equals `ε(x) 1` for a Hopf algebra.
    pub fn antipode_axiom_left(&self, x: &NcExpr) -> Result<NcExpr> {
        let d = self.coproduct(x)?;
        let mut out = NcExpr::zero();
        for (ws, c) in d.terms() {
            let s = self.antipode(&NcExpr::word(ws[0].clone()))?;
            let prod = self.uq.mul(&s, &NcExpr::word(ws[1].clone()))?;
            out.add_scaled(&prod, c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h() -> HopfTables {
        HopfTables::new()
    }

    #[test]
    fn delta_of_e_and_unit() {
        let h = h();
        let d = h.coproduct(&NcExpr::letter(E)).unwrap();
        assert_eq!(d, h.coproduct[E as usize]);
        assert_eq!(h.coproduct(&NcExpr::one()).unwrap(), TensorExpr::unit(2));
    }

    #[test]
    fn delta_of_ke() {
        // Δ(KE) = q^2 E K ⊗ K + K^2 ⊗ K E
        let h = h();
        let ke = h.uq.parse_word("K E").unwrap();
        let d = h.coproduct(&ke).unwrap();
        let mut want = TensorExpr::zero();
        want.add_term(
            vec![Word(vec![E, K]), Word(vec![K])],
            LaurentScalar::q_pow(2),
        );
        want.add_term(
            vec![Word(vec![K, K]), Word(vec![K, E])],
            LaurentScalar::one(),
        );
        let want = tensor_normal_form(&want, &[&h.uq, &h.uq]).unwrap();
        assert_eq!(d, want);
    }

    #[test]
    fn counit_and_antipode_on_generators() {
        let h = h();
        assert!(h
            .counit(&h.uq.parse_word("E F").unwrap())
            .unwrap()
            .is_zero());
        assert!(h
            .counit(&h.uq.parse_word("K Kinv K").unwrap())
            .unwrap()
            .is_one());
        assert_eq!(
            h.antipode(&NcExpr::letter(K)).unwrap(),
            NcExpr::letter(KINV)
        );
    }

    #[test]
    fn antipode_squared_is_conjugation_by_k() {
        let h = h();
        let e = NcExpr::letter(E);
        let s2 = h.antipode(&h.antipode(&e).unwrap()).unwrap();
        let conj = h.uq.parse_word("Kinv E K").unwrap();
        assert_eq!(s2, conj);
        assert_eq!(s2, e.scale(&LaurentScalar::q_pow(-2)));
    }

    #[test]
    fn antipode_axiom_on_generators() {
        let h = h();
        for l in [E, F, K, KINV] {
            let x = NcExpr::letter(l);
            let lhs = h.antipode_axiom_left(&x).unwrap();
            assert_eq!(lhs, NcExpr::scalar(h.counit(&x).unwrap()));
        }
    }

    #[test]
    fn iterated_coproduct_of_k_is_grouplike() {
        let h = h();
        let t = h.iterated_coproduct(&NcExpr::letter(K), 3).unwrap();
        assert_eq!(t.len(), 1);
        let (legs, c) = t.terms().iter().next().unwrap();
        assert!(c.is_one());
        assert!(legs.iter().all(|w| w.letters() == [K]));
    }
}

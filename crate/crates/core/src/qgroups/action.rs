use std::collections::HashMap;
use std::sync::Mutex;

use crate::error::Result;
use crate::ncalg::presets::{self, E, F, K, KINV, Z11, Z11S, Z21, Z21S, Z22, Z22S};
use crate::ncalg::{Letter, NcExpr, Presentation, Word};
use crate::qscalar::LaurentScalar;

use super::hopf::HopfTables;

/// U_q(sl2) acting on Pol(Mat2sym)_q as a module algebra.
#[derive(Debug)]
pub struct ActionTable {
    pub pol: Presentation,
    pub hopf: HopfTables,
    /// `base[g][z]` is the image of the generator letter `z` under `g`.
    pub base: Vec<Vec<NcExpr>>,
    cache: Mutex<HashMap<(Letter, Word), NcExpr>>,
}

impl Default for ActionTable {
    fn default() -> Self {
        Self::new().expect("action table")
    }
}

impl ActionTable {
    pub fn new() -> Result<Self> {
        let pol = presets::pol_matsym();
        let hopf = HopfTables::new();
        let s = LaurentScalar::s_pow;
        let q = LaurentScalar::q_pow;
        let qq = &q(1) + &q(-1);
        let zt = |l: Letter, c: LaurentScalar| NcExpr::term(Word(vec![l]), c);

        let mut base = vec![vec![NcExpr::zero(); 6]; 4];
        base[E as usize][Z21 as usize] = zt(Z11, s(-1));
        base[E as usize][Z22 as usize] = zt(Z21, &s(-1) * &qq);
        base[F as usize][Z11 as usize] = zt(Z21, &s(1) * &qq);
        base[F as usize][Z21 as usize] = zt(Z22, s(1));
        base[K as usize][Z11 as usize] = zt(Z11, q(2));
        base[K as usize][Z21 as usize] = zt(Z21, q(0));
        base[K as usize][Z22 as usize] = zt(Z22, q(-2));
        base[KINV as usize][Z11 as usize] = zt(Z11, q(-2));
        base[KINV as usize][Z21 as usize] = zt(Z21, q(0));
        base[KINV as usize][Z22 as usize] = zt(Z22, q(2));

        for (z, zs) in [(Z11, Z11S), (Z21, Z21S), (Z22, Z22S)] {
            let (z, zs) = (z as usize, zs as usize);
            base[E as usize][zs] = pol.star(&base[F as usize][z])?.scale(&-q(-2));
            base[F as usize][zs] = pol.star(&base[E as usize][z])?.scale(&-q(2));
            base[K as usize][zs] = pol.star(&base[KINV as usize][z])?;
            base[KINV as usize][zs] = pol.star(&base[K as usize][z])?;
        }

        Ok(ActionTable {
            pol,
            hopf,
            base,
            cache: Mutex::new(HashMap::new()),
        })
    }

    /// `ξ · f`, normalized.
    pub fn act(&self, xi: &NcExpr, f: &NcExpr) -> Result<NcExpr> {
        let mut out = NcExpr::zero();
        for (xw, cx) in xi.terms() {
            for (fw, cf) in f.terms() {
                let v = self.act_words(xw.letters(), fw)?;
                out.add_scaled(&v, &(cx * cf));
            }
        }
        self.pol.normal_form(&out)
    }

    fn act_words(&self, xi: &[Letter], f: &Word) -> Result<NcExpr> {
        let mut cur = NcExpr::word(f.clone());
        for &g in xi.iter().rev() {
            let mut next = NcExpr::zero();
            for (w, c) in cur.terms() {
                next.add_scaled(&self.act_gen(g, w)?, c);
            }
            cur = next;
        }
        Ok(cur)
    }

    /// A single generator on a word, by the Sweedler rule
    /// `g(l r) = Σ (g' l)(g'' r)` applied to the first letter.
    fn act_gen(&self, g: Letter, f: &Word) -> Result<NcExpr> {
        if f.is_empty() {
            return Ok(NcExpr::scalar(self.hopf.counit[g as usize].clone()));
        }
        if f.len() == 1 {
            return Ok(self.base[g as usize][f.letters()[0] as usize].clone());
        }
        if let Some(v) = self.cache.lock().unwrap().get(&(g, f.clone())) {
            return Ok(v.clone());
        }
        let head = Word(vec![f.letters()[0]]);
        let tail = Word(f.letters()[1..].to_vec());
        let mut out = NcExpr::zero();
        for (legs, c) in self.hopf.coproduct[g as usize].terms() {
            let a = self.act_words(legs[0].letters(), &head)?;
            if a.is_zero() {
                continue;
            }
            let b = self.act_words(legs[1].letters(), &tail)?;
            out.add_scaled(&self.pol.mul(&a, &b)?, c);
        }
        self.cache
            .lock()
            .unwrap()
            .insert((g, f.clone()), out.clone());
        Ok(out)
    }

    /// `S(ξ)*`, the element that acts on `f*` to give `(ξ f)*`.
    pub fn star_partner(&self, xi: &NcExpr) -> Result<NcExpr> {
        let s = self.hopf.antipode(xi)?;
        self.hopf.uq.star(&s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> ActionTable {
        ActionTable::new().unwrap()
    }

    #[test]
    fn base_values() {
        let a = a();
        let e = NcExpr::letter(E);
        let got = a.act(&e, &NcExpr::letter(Z21)).unwrap();
        assert_eq!(got, NcExpr::term(Word(vec![Z11]), LaurentScalar::s_pow(-1)));
        let f = NcExpr::letter(F);
        let qq = &LaurentScalar::q_pow(1) + &LaurentScalar::q_pow(-1);
        let got = a.act(&f, &NcExpr::letter(Z11)).unwrap();
        assert_eq!(
            got,
            NcExpr::term(Word(vec![Z21]), &LaurentScalar::s_pow(1) * &qq)
        );
        assert_eq!(
            a.act(&NcExpr::letter(K), &NcExpr::one()).unwrap(),
            NcExpr::one()
        );
        assert!(a.act(&e, &NcExpr::one()).unwrap().is_zero());
    }

    #[test]
    fn action_kills_relations() {
        let a = a();
        for g in [E, F, K, KINV] {
            for (label, rel) in a.pol.relation_elements() {
                let v = a.act(&NcExpr::letter(g), &rel).unwrap();
                assert!(
                    v.is_zero(),
                    "{} on {label}: {}",
                    a.hopf.uq.generator(g).name,
                    v.show(&a.pol)
                );
            }
        }
    }

    #[test]
    fn uq_relations_act_trivially() {
        let a = a();
        let f = a.pol.parse_word("z11 z22*").unwrap();
        for (label, rel) in a.hopf.uq.relation_elements() {
            assert!(a.act(&rel, &f).unwrap().is_zero(), "{label}");
        }
    }

    #[test]
    fn star_compatibility_on_generators() {
        let a = a();
        for g in [E, F, K, KINV] {
            let xi = NcExpr::letter(g);
            let partner = a.star_partner(&xi).unwrap();
            for z in 0..6 {
                let f = NcExpr::letter(z);
                let lhs = a.pol.star(&a.act(&xi, &f).unwrap()).unwrap();
                let rhs = a.act(&partner, &a.pol.star(&f).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}

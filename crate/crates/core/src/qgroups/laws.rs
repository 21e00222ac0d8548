//! Exact checks of the Hopf-layer laws on finite samples.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::ncalg::presets::{E, F, K, KINV, T11, T12, T21, T22, Z11, Z21, Z22};
use crate::ncalg::{Letter, NcExpr, TensorExpr, Word};
use crate::qscalar::LaurentScalar;

use super::action::ActionTable;
use super::coaction::uq_words;
use super::hopf::HopfTables;
use super::pairing::Pairing;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawReport {
    pub checked: usize,
    pub mismatches: Vec<String>,
}

impl LawReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.mismatches.push(what());
        }
    }
}

/// Words of length at most `max_len` over `n` letters.
fn words(n: Letter, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::unit()];
    let mut layer = vec![Word::unit()];
    for _ in 0..max_len {
        let next: Vec<Word> = layer
            .iter()
            .flat_map(|w| (0..n).map(move |l| w.concat(&Word(vec![l]))))
            .collect();
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// `(Δ ⊗ id)Δ(ξ) = (id ⊗ Δ)Δ(ξ)` for every U_q(sl2) word of length `≤ max_len`.
pub fn coassociativity(h: &HopfTables, max_len: usize) -> Result<LawReport> {
    let mut rep = LawReport::default();
    for w in uq_words(max_len) {
        let d = h.coproduct(&NcExpr::word(w.clone()))?;
        let left = h.coproduct_on_leg(&d, 0)?;
        let right = h.coproduct_on_leg(&d, 1)?;
        rep.record(left == right, || w.show(&h.uq).to_string());
    }
    Ok(rep)
}

/// `⟨ab, ξ⟩ = ⟨a ⊗ b, Δξ⟩` for `a, b` among the unit and the four `t_ij`,
/// and `⟨t, ξη⟩ = Σ ⟨t', ξ⟩⟨t'', η⟩` for `t`-words of length `≤ 2`.
pub fn pairing_laws(p: &Pairing, max_len: usize) -> Result<LawReport> {
    let mut rep = LawReport::default();
    let xis = uq_words(max_len);
    let gens: Vec<NcExpr> = std::iter::once(NcExpr::one())
        .chain([T11, T12, T21, T22].map(NcExpr::letter))
        .collect();
    for a in &gens {
        for b in &gens {
            let ab = p.su2.mul(a, b)?;
            let ta = TensorExpr::product_of(&[a, b]);
            for w in &xis {
                let xi = NcExpr::word(w.clone());
                let lhs = p.pair(&ab, &xi)?;
                let rhs = p.pair_tensor(&ta, &p.hopf.coproduct(&xi)?)?;
                rep.record(lhs == rhs, || {
                    format!(
                        "<{} {}, {}>",
                        a.show(&p.su2),
                        b.show(&p.su2),
                        w.show(&p.hopf.uq)
                    )
                });
            }
        }
    }
    let short = uq_words(1);
    for tw in words(4, 2) {
        let t = NcExpr::word(tw.clone());
        let dt = p.su2_coproduct(&t)?;
        for x in &short {
            for y in &short {
                let xy = p.hopf.uq.normal_form(&NcExpr::word(x.concat(y)))?;
                let lhs = p.pair(&t, &xy)?;
                let rhs = p.pair_tensor(
                    &dt,
                    &TensorExpr::product_of(&[&NcExpr::word(x.clone()), &NcExpr::word(y.clone())]),
                )?;
                rep.record(lhs == rhs, || {
                    format!(
                        "<{}, {} {}>",
                        tw.show(&p.su2),
                        x.show(&p.hopf.uq),
                        y.show(&p.hopf.uq)
                    )
                });
            }
        }
    }
    Ok(rep)
}

/// The four nonzero generator values and the vanishing of all other
/// generator pairings.
pub fn pairing_generator_values(p: &Pairing) -> Result<LawReport> {
    let mut rep = LawReport::default();
    let expected = |t: Letter, x: Letter| match (t, x) {
        (T12, E) => LaurentScalar::s_pow(-1),
        (T21, F) => LaurentScalar::s_pow(1),
        (T11, K) => LaurentScalar::q_pow(1),
        (T22, K) => LaurentScalar::q_pow(-1),
        _ => LaurentScalar::zero(),
    };
    for t in [T11, T12, T21, T22] {
        for x in [E, F, K] {
            let got = p.pair(&NcExpr::letter(t), &NcExpr::letter(x))?;
            rep.record(got == expected(t, x), || {
                format!(
                    "<{}, {}> = {got}",
                    p.su2.generator(t).name,
                    p.hopf.uq.generator(x).name
                )
            });
        }
    }
    Ok(rep)
}

/// The action of `E`, `F`, `K` on `z11, z21, z22` as written case by case,
/// and the star rules `E z* = -q⁻² (F z)*`, `F z* = -q² (E z)*`, `K z* = (K⁻¹ z)*`.
pub fn action_table_check(a: &ActionTable) -> Result<LawReport> {
    let mut rep = LawReport::default();
    let s = LaurentScalar::s_pow;
    let q = LaurentScalar::q_pow;
    let qq = &q(1) + &q(-1);
    let zt = |l: Letter, c: LaurentScalar| NcExpr::term(Word(vec![l]), c);
    let table: [(Letter, Letter, NcExpr); 9] = [
        (E, Z11, NcExpr::zero()),
        (E, Z21, zt(Z11, s(-1))),
        (E, Z22, zt(Z21, &s(-1) * &qq)),
        (F, Z11, zt(Z21, &s(1) * &qq)),
        (F, Z21, zt(Z22, s(1))),
        (F, Z22, NcExpr::zero()),
        (K, Z11, zt(Z11, q(2))),
        (K, Z21, NcExpr::letter(Z21)),
        (K, Z22, zt(Z22, q(-2))),
    ];
    let name = |x: Letter| a.hopf.uq.generator(x).name.clone();
    for (x, z, want) in &table {
        let got = a.act(&NcExpr::letter(*x), &NcExpr::letter(*z))?;
        rep.record(&got == want, || {
            format!("{} {}", name(*x), a.pol.generator(*z).name)
        });
    }
    for z in [Z11, Z21, Z22] {
        let zl = NcExpr::letter(z);
        let zs = a.pol.star(&zl)?;
        let act = |x: Letter, f: &NcExpr| a.act(&NcExpr::letter(x), f);
        let rules = [
            (E, a.pol.star(&act(F, &zl)?)?.scale(&-q(-2))),
            (F, a.pol.star(&act(E, &zl)?)?.scale(&-q(2))),
            (K, a.pol.star(&act(KINV, &zl)?)?),
        ];
        for (x, want) in rules {
            let got = act(x, &zs)?;
            rep.record(got == want, || {
                format!("{} {}*", name(x), a.pol.generator(z).name)
            });
        }
    }
    Ok(rep)
}

/// `ξ(fg) = Σ (ξ' f)(ξ'' g)` for `ξ ∈ {E, F, K}` and all words `f, g` of
/// length `≤ max_len`.
pub fn module_algebra_law(a: &ActionTable, max_len: usize) -> Result<LawReport> {
    let mut rep = LawReport::default();
    let ws = words(6, max_len);
    for x in [E, F, K] {
        let xi = NcExpr::letter(x);
        let delta = a.hopf.coproduct(&xi)?;
        for fw in &ws {
            let f = NcExpr::word(fw.clone());
            for gw in &ws {
                let g = NcExpr::word(gw.clone());
                let lhs = a.act(&xi, &a.pol.mul(&f, &g)?)?;
                let mut rhs = NcExpr::zero();
                for (legs, c) in delta.terms() {
                    let l = a.act(&NcExpr::word(legs[0].clone()), &f)?;
                    let r = a.act(&NcExpr::word(legs[1].clone()), &g)?;
                    rhs.add_scaled(&a.pol.mul(&l, &r)?, c);
                }
                rep.record(lhs == rhs, || {
                    format!(
                        "{} on {} · {}",
                        a.hopf.uq.generator(x).name,
                        fw.show(&a.pol),
                        gw.show(&a.pol)
                    )
                });
            }
        }
    }
    Ok(rep)
}

/// `(ξ f)* = S(ξ)* f*` for `ξ ∈ {E, F, K, K⁻¹}` and words `f` of length `≤ max_len`.
pub fn star_compatibility(a: &ActionTable, max_len: usize) -> Result<LawReport> {
    let mut rep = LawReport::default();
    for x in [E, F, K, KINV] {
        let xi = NcExpr::letter(x);
        let partner = a.star_partner(&xi)?;
        for fw in words(6, max_len) {
            let f = NcExpr::word(fw.clone());
            let lhs = a.pol.star(&a.act(&xi, &f)?)?;
            let rhs = a.act(&partner, &a.pol.star(&f)?)?;
            rep.record(lhs == rhs, || {
                format!("{} on {}", a.hopf.uq.generator(x).name, fw.show(&a.pol))
            });
        }
    }
    Ok(rep)
}

/// `ξ · (lhs - rhs) = 0` for every defining relation and `ξ ∈ {E, F, K}`.
pub fn action_kills_relations(a: &ActionTable) -> Result<LawReport> {
    let mut rep = LawReport::default();
    for x in [E, F, K] {
        for (label, rel) in a.pol.relation_elements() {
            let v = a.act(&NcExpr::letter(x), &rel)?;
            rep.record(v.is_zero(), || {
                format!("{} on {label}", a.hopf.uq.generator(x).name)
            });
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hopf_laws_hold() {
        let h = HopfTables::new();
        let r = coassociativity(&h, 3).unwrap();
        assert_eq!(r.checked, 85);
        assert!(r.is_clean(), "{:?}", r.mismatches);
        let p = Pairing::new();
        let r = pairing_laws(&p, 2).unwrap();
        assert!(r.is_clean(), "{:?}", r.mismatches);
        assert!(pairing_generator_values(&p).unwrap().is_clean());
    }

    #[test]
    fn action_laws_hold() {
        let a = ActionTable::new().unwrap();
        assert!(action_table_check(&a).unwrap().is_clean());
        assert!(action_kills_relations(&a).unwrap().is_clean());
        let r = module_algebra_law(&a, 1).unwrap();
        assert_eq!(r.checked, 3 * 49);
        assert!(r.is_clean(), "{:?}", r.mismatches);
        assert!(star_compatibility(&a, 2).unwrap().is_clean());
    }
}

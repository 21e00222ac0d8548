use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use crate::error::Result;
use crate::ncalg::presets::{self, E, F, K, KINV, T11, T12, T21, T22};
use crate::ncalg::{Letter, NcExpr, Presentation, TensorExpr, Word};
use crate::qscalar::LaurentScalar;

use super::hopf::HopfTables;

pub type Mat2 = [[LaurentScalar; 2]; 2];

fn mat_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut out: Mat2 = Default::default();
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
        }
    }
    out
}

fn identity() -> Mat2 {
    let mut m: Mat2 = Default::default();
    m[0][0] = LaurentScalar::one();
    m[1][1] = LaurentScalar::one();
    m
}

/// Two-dimensional representation of U_q(sl2) whose matrix coefficients are
/// the generators `t_ij` of C[SL2]_q.
#[derive(Clone, Debug)]
pub struct FundamentalRep {
    pub images: Vec<Mat2>,
}

impl Default for FundamentalRep {
    fn default() -> Self {
        Self::new()
    }
}

impl FundamentalRep {
    pub fn new() -> Self {
        let mut images = vec![Mat2::default(); 4];
        images[E as usize][0][1] = LaurentScalar::s_pow(-1);
        images[F as usize][1][0] = LaurentScalar::s_pow(1);
        images[K as usize][0][0] = LaurentScalar::q_pow(1);
        images[K as usize][1][1] = LaurentScalar::q_pow(-1);
        images[KINV as usize][0][0] = LaurentScalar::q_pow(-1);
        images[KINV as usize][1][1] = LaurentScalar::q_pow(1);
        FundamentalRep { images }
    }

    pub fn word(&self, w: &Word) -> Mat2 {
        w.letters().iter().fold(identity(), |acc, &l| {
            mat_mul(&acc, &self.images[l as usize])
        })
    }

    pub fn expr(&self, x: &NcExpr) -> Mat2 {
        let mut out = Mat2::default();
        for (w, c) in x.terms() {
            let m = self.word(w);
            for i in 0..2 {
                for j in 0..2 {
                    out[i][j] += &(c * &m[i][j]);
                }
            }
        }
        out
    }
}

/// Zero-based row and column of a `t` letter.
fn t_index(l: Letter) -> (usize, usize) {
    match l {
        T11 => (0, 0),
        T12 => (0, 1),
        T21 => (1, 0),
        T22 => (1, 1),
        _ => unreachable!("not a t letter"),
    }
}

/// Pairing between C[SL2]_q and U_q(sl2): a monomial `t_{i1 j1} ... t_{in jn}`
/// evaluated on `ξ` is the `(i, j)` matrix element of `Δ^(n-1)(ξ)` in the
/// n-fold tensor power of the fundamental representation.
#[derive(Debug)]
pub struct Pairing {
    pub hopf: HopfTables,
    pub rep: FundamentalRep,
    pub su2: Presentation,
    cache: Mutex<HashMap<(Letter, usize), TensorExpr>>,
}

impl Default for Pairing {
    fn default() -> Self {
        Self::new()
    }
}

type Vector = BTreeMap<Vec<u8>, LaurentScalar>;

impl Pairing {
    pub fn new() -> Self {
        Pairing {
            hopf: HopfTables::new(),
            rep: FundamentalRep::new(),
            su2: presets::c_su2(),
            cache: Mutex::new(HashMap::new()),
        }
    }

    fn delta_n(&self, g: Letter, n: usize) -> Result<TensorExpr> {
        if let Some(t) = self.cache.lock().unwrap().get(&(g, n)) {
            return Ok(t.clone());
        }
        let t = self.hopf.iterated_coproduct(&NcExpr::letter(g), n)?;
        self.cache.lock().unwrap().insert((g, n), t.clone());
        Ok(t)
    }

    fn apply(&self, t: &TensorExpr, v: &Vector) -> Vector {
        let mut out = Vector::new();
        for (legs, c) in t.terms() {
            let mats: Vec<Mat2> = legs.iter().map(|w| self.rep.word(w)).collect();
            for (idx, val) in v {
                let mut acc: Vec<(Vec<u8>, LaurentScalar)> = vec![(Vec::new(), c * val)];
                for (k, m) in mats.iter().enumerate() {
                    let col = idx[k] as usize;
                    let mut next = Vec::new();
                    for (pre, a) in &acc {
                        for (row, entries) in m.iter().enumerate() {
                            if entries[col].is_zero() {
                                continue;
                            }
                            let mut p = pre.clone();
                            p.push(row as u8);
                            next.push((p, a * &entries[col]));
                        }
                    }
                    acc = next;
                }
                for (p, a) in acc {
                    let slot = out.entry(p).or_default();
                    *slot += &a;
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// Value of one `t`-word on one U_q(sl2) word.
    pub fn monomial(&self, tw: &Word, xw: &Word) -> Result<LaurentScalar> {
        let n = tw.len();
        if n == 0 {
            return self.hopf.counit(&NcExpr::word(xw.clone()));
        }
        let (rows, cols): (Vec<u8>, Vec<u8>) = tw
            .letters()
            .iter()
            .map(|&l| t_index(l))
            .map(|(i, j)| (i as u8, j as u8))
            .unzip();
        let mut v = Vector::new();
        v.insert(cols, LaurentScalar::one());
        for &g in xw.letters().iter().rev() {
            let d = self.delta_n(g, n)?;
            v = self.apply(&d, &v);
            if v.is_empty() {
                return Ok(LaurentScalar::zero());
            }
        }
        Ok(v.get(&rows).cloned().unwrap_or_default())
    }

    pub fn pair(&self, a: &NcExpr, xi: &NcExpr) -> Result<LaurentScalar> {
        let mut out = LaurentScalar::zero();
        for (tw, ca) in a.terms() {
            for (xw, cx) in xi.terms() {
                let v = self.monomial(tw, xw)?;
                out += &(&(ca * cx) * &v);
            }
        }
        Ok(out)
    }

    /// Pairs a two-leg C[SL2] tensor against a two-leg U_q(sl2) tensor.
    pub fn pair_tensor(&self, a: &TensorExpr, x: &TensorExpr) -> Result<LaurentScalar> {
        let mut out = LaurentScalar::zero();
        for (aw, ca) in a.terms() {
            for (xw, cx) in x.terms() {
                let mut v = ca * cx;
                for (tw, w) in aw.iter().zip(xw) {
                    v = &v * &self.monomial(tw, w)?;
                    if v.is_zero() {
                        break;
                    }
                }
                out += &v;
            }
        }
        Ok(out)
    }

    /// Δ on C[SL2]: `t_ij ↦ Σ_k t_ik ⊗ t_kj`, extended multiplicatively.
    pub fn su2_coproduct(&self, a: &NcExpr) -> Result<TensorExpr> {
        let ps = [&self.su2, &self.su2];
        let mut out = TensorExpr::zero();
        for (w, c) in a.terms() {
            let mut acc = TensorExpr::unit(2);
            for &l in w.letters() {
                let (i, j) = t_index(l);
                let mut d = TensorExpr::zero();
                for k in 1..=2 {
                    d.add_term(
                        vec![
                            Word(vec![presets::t_letter(i + 1, k)]),
                            Word(vec![presets::t_letter(k, j + 1)]),
                        ],
                        LaurentScalar::one(),
                    );
                }
                acc = crate::ncalg::tensor_mul(&acc, &d, &ps)?;
            }
            out.add_scaled(&acc, c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(l: Letter) -> NcExpr {
        NcExpr::letter(l)
    }

    #[test]
    fn generator_values() {
        let p = Pairing::new();
        let x = |l| NcExpr::letter(l);
        assert_eq!(p.pair(&t(T12), &x(E)).unwrap(), LaurentScalar::s_pow(-1));
        assert_eq!(p.pair(&t(T21), &x(F)).unwrap(), LaurentScalar::s_pow(1));
        assert_eq!(p.pair(&t(T11), &x(K)).unwrap(), LaurentScalar::q_pow(1));
        assert_eq!(p.pair(&t(T22), &x(K)).unwrap(), LaurentScalar::q_pow(-1));
        for a in [T11, T12, T21, T22] {
            for g in [E, F, K] {
                let expected = matches!((a, g), (T12, E) | (T21, F) | (T11, K) | (T22, K));
                assert_eq!(
                    !p.pair(&t(a), &x(g)).unwrap().is_zero(),
                    expected,
                    "{a} {g}"
                );
            }
        }
    }

    #[test]
    fn k_squared_matches_matrix_square() {
        let p = Pairing::new();
        let k2 = NcExpr::word(vec![K, K]);
        let m = p.rep.images[K as usize].clone();
        let sq = mat_mul(&m, &m);
        assert_eq!(p.pair(&t(T11), &k2).unwrap(), sq[0][0]);
        assert_eq!(p.pair(&t(T11), &k2).unwrap(), LaurentScalar::q_pow(2));
    }

    #[test]
    fn fundamental_rep_satisfies_uq_relations() {
        let p = Pairing::new();
        let uq = &p.hopf.uq;
        for (_, rel) in uq.relation_elements() {
            let m = p.rep.expr(&rel);
            assert!(m.iter().flatten().all(|c| c.is_zero()));
        }
    }

    #[test]
    fn pairing_kills_su2_relations() {
        let p = Pairing::new();
        let words: Vec<NcExpr> = [
            vec![],
            vec![E],
            vec![F],
            vec![K],
            vec![E, F],
            vec![F, E],
            vec![E, K, F],
        ]
        .into_iter()
        .map(NcExpr::word)
        .collect();
        for (label, rel) in p.su2.relation_elements() {
            for xi in &words {
                assert!(p.pair(&rel, xi).unwrap().is_zero(), "{label}");
            }
        }
    }

    #[test]
    fn uncorrected_relation_is_not_killed() {
        let p = Pairing::new();
        let rel = presets::uncorrected_t22_t21();
        // On F the two sides differ by q^(1/2) (1 - q^-2).
        let v = p.pair(&rel, &NcExpr::letter(F)).unwrap();
        let want = &LaurentScalar::s_pow(1) * &(&LaurentScalar::one() - &LaurentScalar::q_pow(-2));
        assert_eq!(v, want);
    }
}

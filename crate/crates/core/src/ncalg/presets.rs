//! The four algebras: Pol(Mat2sym)_q, C[SU2]_q, U_q(sl2) and Pol(C)_q.

use crate::error::{Error, Result};
use crate::qscalar::LaurentScalar;

use super::expr::{Letter, NcExpr, Word};
use super::presentation::{GenSymbol, Presentation};

pub const POL_MATSYM: &str = "pol-matsym-q";
pub const C_SU2: &str = "c-su2-q";
pub const UQ_SL2: &str = "uq-sl2";
pub const POL_C: &str = "pol-c-q";

pub const PRESET_NAMES: [&str; 4] = [POL_MATSYM, C_SU2, UQ_SL2, POL_C];

pub fn preset(name: &str) -> Result<Presentation> {
    match name {
        POL_MATSYM => Ok(pol_matsym()),
        C_SU2 => Ok(c_su2()),
        UQ_SL2 => Ok(uq_sl2()),
        POL_C => Ok(pol_c()),
        _ => Err(Error::UnknownPreset(name.to_string())),
    }
}

fn q(k: i32) -> LaurentScalar {
    LaurentScalar::q_pow(k)
}

fn int(n: i64) -> LaurentScalar {
    LaurentScalar::from_int(n)
}

fn sym(name: &str, starred: bool, rank: u8) -> GenSymbol {
    GenSymbol {
        name: name.to_string(),
        starred,
        rank,
    }
}

/// `Σ c_k w_k` from (coefficient, letters) pairs; the empty slice is the unit.
fn lin(terms: &[(LaurentScalar, &[Letter])]) -> NcExpr {
    let mut e = NcExpr::zero();
    for (c, w) in terms {
        e.add_term(Word(w.to_vec()), c.clone());
    }
    e
}

// Letters of pol-matsym-q.
pub const Z11: Letter = 0;
pub const Z21: Letter = 1;
pub const Z22: Letter = 2;
pub const Z11S: Letter = 3;
pub const Z21S: Letter = 4;
pub const Z22S: Letter = 5;

/// Normal words: holomorphic letters first, then starred ones, each block in
/// the order 11, 21, 22.
pub fn pol_matsym() -> Presentation {
    let mut p = Presentation::new(
        POL_MATSYM,
        vec![
            sym("z11", false, 0),
            sym("z21", false, 1),
            sym("z22", false, 2),
            sym("z11*", true, 3),
            sym("z21*", true, 4),
            sym("z22*", true, 5),
        ],
    );
    let one = int(1);
    let c = &q(1) * &(&q(2) - &q(-2)); // q(q^2 - q^-2)
    let qm = &q(-1) - &q(1); // q^-1 - q
    let qp = &q(-1) + &q(1);
    let opq2 = &int(1) + &q(2);

    p.add_rule(Z21, Z11, lin(&[(q(-2), &[Z11, Z21])]));
    p.add_rule(Z22, Z21, lin(&[(q(-2), &[Z21, Z22])]));
    p.add_rule(
        Z22,
        Z11,
        lin(&[(one.clone(), &[Z11, Z22]), (-&c, &[Z21, Z21])]),
    );

    p.add_rule(Z21S, Z11S, lin(&[(q(2), &[Z11S, Z21S])]));
    p.add_rule(Z22S, Z21S, lin(&[(q(2), &[Z21S, Z22S])]));
    p.add_rule(
        Z22S,
        Z11S,
        lin(&[(one.clone(), &[Z11S, Z22S]), (c.clone(), &[Z21S, Z21S])]),
    );

    let a = &(&q(1) * &qm) * &opq2.pow(2);
    let b = &qm.pow(2) * &opq2;
    p.add_rule(
        Z11S,
        Z11,
        lin(&[
            (q(4), &[Z11, Z11S]),
            (-&a, &[Z21, Z21S]),
            (b, &[Z22, Z22S]),
            (&one - &q(4), &[]),
        ]),
    );
    let m = &(&q(1) * &qm) * &qp;
    p.add_rule(Z11S, Z21, lin(&[(q(2), &[Z21, Z11S]), (-&m, &[Z22, Z21S])]));
    p.add_rule(Z11S, Z22, lin(&[(one.clone(), &[Z22, Z11S])]));
    p.add_rule(
        Z21S,
        Z21,
        lin(&[
            (q(2), &[Z21, Z21S]),
            (-&(&one - &q(2)), &[Z22, Z22S]),
            (&one - &q(2), &[]),
        ]),
    );
    p.add_rule(Z21S, Z22, lin(&[(q(2), &[Z22, Z21S])]));
    p.add_rule(Z22S, Z22, lin(&[(q(4), &[Z22, Z22S]), (&one - &q(4), &[])]));

    // Adjoints of the three mixed relations above that start with z11 or z21.
    p.add_rule(Z21S, Z11, lin(&[(q(2), &[Z11, Z21S]), (-&m, &[Z21, Z22S])]));
    p.add_rule(Z22S, Z11, lin(&[(one.clone(), &[Z11, Z22S])]));
    p.add_rule(Z22S, Z21, lin(&[(q(2), &[Z21, Z22S])]));

    p.set_star(vec![
        NcExpr::letter(Z11S),
        NcExpr::letter(Z21S),
        NcExpr::letter(Z22S),
        NcExpr::letter(Z11),
        NcExpr::letter(Z21),
        NcExpr::letter(Z22),
    ]);
    p.add_alias("z12", lin(&[(q(1), &[Z21])]));
    p.add_alias("z12*", lin(&[(q(1), &[Z21S])]));
    p
}

// Letters of c-su2-q, listed in normal order: c, b, a, d.
pub const T21: Letter = 0;
pub const T12: Letter = 1;
pub const T11: Letter = 2;
pub const T22: Letter = 3;

/// Letter of `t_ij`, 1-based indices.
pub fn t_letter(i: usize, j: usize) -> Letter {
    match (i, j) {
        (1, 1) => T11,
        (1, 2) => T12,
        (2, 1) => T21,
        (2, 2) => T22,
        _ => panic!("t index out of range: ({i}, {j})"),
    }
}

/// Normal words are `t21^i t12^j t11^k` or `t21^i t12^j t22^k`.
pub fn c_su2() -> Presentation {
    let mut p = Presentation::new(
        C_SU2,
        vec![
            sym("t21", false, 0),
            sym("t12", false, 1),
            sym("t11", false, 2),
            sym("t22", false, 2),
        ],
    );
    let one = int(1);
    p.add_rule(T12, T21, lin(&[(one.clone(), &[T21, T12])]));
    p.add_rule(T11, T21, lin(&[(q(1), &[T21, T11])]));
    p.add_rule(T11, T12, lin(&[(q(1), &[T12, T11])]));
    p.add_rule(T22, T21, lin(&[(q(-1), &[T21, T22])]));
    p.add_rule(T22, T12, lin(&[(q(-1), &[T12, T22])]));
    p.add_rule(T11, T22, lin(&[(one.clone(), &[]), (q(1), &[T21, T12])]));
    p.add_rule(T22, T11, lin(&[(one.clone(), &[]), (q(-1), &[T21, T12])]));
    p.set_star(vec![
        lin(&[(-q(-1), &[T12])]),
        lin(&[(-q(1), &[T21])]),
        NcExpr::letter(T22),
        NcExpr::letter(T11),
    ]);
    p
}

/// The relation `t22 t21 = q^-1 t21 t11` exactly as it appears in the usual
/// relation list, kept for the numerical comparison against the corrected
/// form `t22 t21 = q^-1 t21 t22`.
pub fn uncorrected_t22_t21() -> NcExpr {
    &NcExpr::word(vec![T22, T21]) - &lin(&[(q(-1), &[T21, T11])])
}

// Letters of uq-sl2.
pub const F: Letter = 0;
pub const K: Letter = 1;
pub const KINV: Letter = 2;
pub const E: Letter = 3;

/// PBW order: F, then K and Kinv, then E. The star table is the compact real
/// form: `E* = K F`, `F* = E Kinv`, `K* = K`.
pub fn uq_sl2() -> Presentation {
    let mut p = Presentation::new(
        UQ_SL2,
        vec![
            sym("F", false, 0),
            sym("K", false, 1),
            sym("Kinv", false, 1),
            sym("E", false, 2),
        ],
    );
    let one = int(1);
    p.add_rule(K, F, lin(&[(q(-2), &[F, K])]));
    p.add_rule(KINV, F, lin(&[(q(2), &[F, KINV])]));
    let inv = LaurentScalar::inv_q_minus_qinv();
    p.add_rule(
        E,
        F,
        lin(&[
            (one.clone(), &[F, E]),
            (inv.clone(), &[K]),
            (-&inv, &[KINV]),
        ]),
    );
    p.add_rule(E, K, lin(&[(q(-2), &[K, E])]));
    p.add_rule(E, KINV, lin(&[(q(2), &[KINV, E])]));
    p.add_rule(K, KINV, NcExpr::one());
    p.add_rule(KINV, K, NcExpr::one());
    p.set_star(vec![
        lin(&[(q(2), &[KINV, E])]),
        NcExpr::letter(K),
        NcExpr::letter(KINV),
        lin(&[(q(-2), &[F, K])]),
    ]);
    p
}

pub const Z: Letter = 0;
pub const ZS: Letter = 1;

pub fn pol_c() -> Presentation {
    let mut p = Presentation::new(POL_C, vec![sym("z", false, 0), sym("z*", true, 1)]);
    p.add_rule(ZS, Z, lin(&[(q(4), &[Z, ZS]), (&int(1) - &q(4), &[])]));
    p.set_star(vec![NcExpr::letter(ZS), NcExpr::letter(Z)]);
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_preset_is_an_error() {
        assert!(matches!(preset("nope"), Err(Error::UnknownPreset(_))));
    }

    #[test]
    fn z21_z11_reorders() {
        let p = pol_matsym();
        let got = p.parse_word("z21 z11").unwrap();
        assert_eq!(got, lin(&[(q(-2), &[Z11, Z21])]));
    }

    #[test]
    fn z22_z11_picks_up_z21_squared() {
        let p = pol_matsym();
        let got = p.parse_word("z22 z11").unwrap();
        let c = LaurentScalar::q_poly(&[(3, 1), (-1, -1)]);
        assert_eq!(got, lin(&[(int(1), &[Z11, Z22]), (-c, &[Z21, Z21])]));
    }

    #[test]
    fn starred_relations_read_off() {
        let p = pol_matsym();
        assert_eq!(
            p.parse_word("z22* z22").unwrap(),
            lin(&[(q(4), &[Z22, Z22S]), (&int(1) - &q(4), &[])])
        );
        assert_eq!(
            p.parse_word("z21* z22").unwrap(),
            lin(&[(q(2), &[Z22, Z21S])])
        );
    }

    #[test]
    fn expanded_coefficients_of_z11_star_z11() {
        let p = pol_matsym();
        let r = p.rule(Z11S, Z11).unwrap();
        // q(q^-1 - q)(1 + q^2)^2 = 1 + q^2 - q^4 - q^6
        assert_eq!(
            r.coeff(&Word(vec![Z21, Z21S])),
            -LaurentScalar::q_poly(&[(0, 1), (2, 1), (4, -1), (6, -1)])
        );
        // (q^-1 - q)^2 (1 + q^2) = q^-2 - 1 - q^2 + q^4
        assert_eq!(
            r.coeff(&Word(vec![Z22, Z22S])),
            LaurentScalar::q_poly(&[(-2, 1), (0, -1), (2, -1), (4, 1)])
        );
    }

    #[test]
    fn matsym_relations_as_stated_hold() {
        let p = pol_matsym();
        let lhs = &p.parse_word("z11 z22").unwrap() - &p.parse_word("z22 z11").unwrap();
        let c = &q(1) * &(&q(2) - &q(-2));
        assert!(p.equal(&lhs, &lin(&[(c, &[Z21, Z21])])).unwrap());
        let x = p.parse_word("z11 z21*").unwrap();
        assert!(!p.equal(&x, &(&x + &NcExpr::one())).unwrap());
        assert_eq!(
            p.parse_word("z11 z21").unwrap(),
            lin(&[(int(1), &[Z11, Z21])])
        );
        assert!(p
            .equal(
                &p.parse_word("z11 z21").unwrap(),
                &p.parse_word("z21 z11").unwrap().scale(&q(2))
            )
            .unwrap());
    }

    #[test]
    fn z12_alias() {
        let p = pol_matsym();
        assert_eq!(p.gen("z12").unwrap(), lin(&[(q(1), &[Z21])]));
    }

    #[test]
    fn su2_det_and_star() {
        let p = c_su2();
        let det =
            &p.parse_word("t11 t22").unwrap() - &p.parse_word("t12 t21").unwrap().scale(&q(1));
        assert!(p.equal(&det, &NcExpr::one()).unwrap());
        let comm = &p.parse_word("t11 t22").unwrap() - &p.parse_word("t22 t11").unwrap();
        let rhs = p.parse_word("t12 t21").unwrap().scale(&(&q(1) - &q(-1)));
        assert!(p.equal(&comm, &rhs).unwrap());
        assert_eq!(
            p.star(&NcExpr::letter(T12)).unwrap(),
            lin(&[(-q(1), &[T21])])
        );
        assert_eq!(p.rule(T12, T21).unwrap(), &NcExpr::word(vec![T21, T12]));
    }

    #[test]
    fn uq_rules() {
        let p = uq_sl2();
        let ke = p.parse_word("K E").unwrap();
        let ek = p.parse_word("E K").unwrap();
        assert!(p.equal(&ke, &ek.scale(&q(2))).unwrap());
        assert!(p
            .equal(&p.parse_word("K Kinv").unwrap(), &NcExpr::one())
            .unwrap());
        let ef = &p.parse_word("E F").unwrap() - &p.parse_word("F E").unwrap();
        let inv = LaurentScalar::inv_q_minus_qinv();
        let rhs = lin(&[(inv.clone(), &[K]), (-&inv, &[KINV])]);
        assert!(p.equal(&ef, &rhs).unwrap());
    }

    #[test]
    fn pol_c_single_rule() {
        let p = pol_c();
        assert_eq!(p.rules().len(), 1);
        assert_eq!(
            p.rule(ZS, Z).unwrap(),
            &lin(&[(q(4), &[Z, ZS]), (&int(1) - &q(4), &[])])
        );
    }
}

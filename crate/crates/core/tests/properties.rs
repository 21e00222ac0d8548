use nalgebra::DMatrix;
use num_complex::Complex64;
use proptest::prelude::*;

use shilov_core::ncalg::presets;
use shilov_core::oprep::{op_norm, rep_image, Family, Phase, RepSpec};
use shilov_core::qgroups::HopfTables;
use shilov_core::{LaurentScalar, NcExpr, SparseMatrix, Word};

fn scalar() -> impl Strategy<Value = LaurentScalar> {
    prop::collection::vec((-4i32..=4, -5i64..=5, 1i64..=4), 0..4).prop_map(|terms| {
        terms
            .into_iter()
            .fold(LaurentScalar::zero(), |acc, (e, n, d)| {
                &acc + &(&LaurentScalar::s_pow(e) * &LaurentScalar::from_ratio(n, d))
            })
    })
}

fn pol_word(max_len: usize) -> impl Strategy<Value = NcExpr> {
    prop::collection::vec(0u8..6, 0..=max_len).prop_map(|w| NcExpr::word(Word(w)))
}

fn pol_elem() -> impl Strategy<Value = NcExpr> {
    prop::collection::vec((pol_word(3), -3i64..=3), 1..3).prop_map(|ts| {
        let mut e = NcExpr::zero();
        for (w, c) in ts {
            e.add_scaled(&w, &LaurentScalar::from_int(c));
        }
        e
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalar_ring_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(a.conj().conj(), a);
    }

    #[test]
    fn scalar_eval_is_a_ring_map(a in scalar(), b in scalar(), q in 0.1f64..0.9) {
        let lhs = (&a * &b).eval(q).unwrap();
        let rhs = a.eval(q).unwrap() * b.eval(q).unwrap();
        prop_assert!((lhs - rhs).norm() <= 1e-9 * (1.0 + rhs.norm()));
    }

    #[test]
    fn product_is_associative(a in pol_elem(), b in pol_elem(), c in pol_elem()) {
        let p = presets::pol_matsym();
        let left = p.mul(&p.mul(&a, &b).unwrap(), &c).unwrap();
        let right = p.mul(&a, &p.mul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn star_is_an_involutive_antihomomorphism(a in pol_elem(), b in pol_elem()) {
        let p = presets::pol_matsym();
        let ab = p.mul(&a, &b).unwrap();
        let rev = p.mul(&p.star(&b).unwrap(), &p.star(&a).unwrap()).unwrap();
        prop_assert_eq!(p.star(&ab).unwrap(), rev);
        let na = p.normal_form(&a).unwrap();
        prop_assert_eq!(p.star(&p.star(&a).unwrap()).unwrap(), na);
    }

    #[test]
    fn normal_form_is_idempotent(a in pol_elem()) {
        let p = presets::pol_matsym();
        let n = p.normal_form(&a).unwrap();
        prop_assert!(p.is_normal(&n));
        prop_assert_eq!(p.normal_form(&n).unwrap(), n);
    }

    #[test]
    fn coproduct_is_coassociative(w in prop::collection::vec(0u8..4, 0..5)) {
        let h = HopfTables::new();
        let d = h.coproduct(&NcExpr::word(Word(w))).unwrap();
        prop_assert_eq!(h.coproduct_on_leg(&d, 0).unwrap(), h.coproduct_on_leg(&d, 1).unwrap());
    }

    #[test]
    fn character_substitution_is_multiplicative(a in pol_word(2), b in pol_word(2), k in 0i64..12) {
        let spec = RepSpec::symbolic(Family::Fock);
        let phi = Phase::grid(k, 12);
        let (x, y) = (rep_image(&a, &spec).unwrap(), rep_image(&b, &spec).unwrap());
        let whole = x.mul(&y).unwrap().character_substitute(2, &phi).unwrap();
        let split = x
            .character_substitute(2, &phi)
            .unwrap()
            .mul(&y.character_substitute(2, &phi).unwrap())
            .unwrap();
        prop_assert_eq!(whole, split);
    }

    #[test]
    fn op_norm_matches_svd(
        n in 1usize..12,
        m in 1usize..12,
        entries in prop::collection::vec((0usize..144, -2.0f64..2.0, -2.0f64..2.0), 0..40),
    ) {
        let mut dense = DMatrix::<Complex64>::zeros(n, m);
        for (k, re, im) in entries {
            dense[(k / 12 % n, k % 12 % m)] = Complex64::new(re, im);
        }
        let want = dense.singular_values().iter().copied().fold(0.0, f64::max);
        let got = op_norm(&SparseMatrix::from_dense(&dense));
        prop_assert!((got - want).abs() <= 1e-10 * (1.0 + want), "{got} vs {want}");
    }
}

use std::f64::consts::TAU;

use shilov_core::boundary::{j_generators, non_annihilation_witness, shilov_norm, theta_det};
use shilov_core::ncalg::{preset, presets, PRESET_NAMES};
use shilov_core::oprep::{default_dims, relation_residual, Family, RepSpec, ALL_FAMILIES};
use shilov_core::LaurentScalar;

const Q: f64 = 0.5;

#[test]
fn ideal_generators_expand_as_expected() {
    let p = presets::pol_matsym();
    let g = j_generators(&p).unwrap().gens;
    let one = p.parse_word("").unwrap();
    let g22 = &(&p.parse_word("z21 z21*").unwrap() + &p.parse_word("z22 z22*").unwrap()) - &one;
    assert_eq!(g[3], p.normal_form(&g22).unwrap());
    let g11 = &(&p
        .parse_word("z11 z11*")
        .unwrap()
        .scale(&LaurentScalar::q_pow(2))
        + &p.parse_word("z21 z21*")
            .unwrap()
            .scale(&LaurentScalar::q_pow(4)))
        - &one;
    assert_eq!(g[0], p.normal_form(&g11).unwrap());
    assert!(g[1].coeff(&shilov_core::Word::unit()).is_zero());
}

#[test]
fn nu_misses_the_ideal_at_the_vacuum() {
    // nu(g11) = C4 S S* C4 - 1 acts as -q^{4k} on e_k, and S* e_0 = 0.
    let p = presets::pol_matsym();
    let spec = RepSpec::symbolic(Family::Nu);
    let w = non_annihilation_witness(&p, &spec, &default_dims(spec.legs(), 64, 16, 8), Q, &[0.3])
        .unwrap();
    assert!((w - 1.0).abs() < 1e-12 && w >= Q.powi(4) / 2.0, "{w}");
}

#[test]
fn shilov_norm_matches_diagonal_scan() {
    // omega(z21) is diagonal with entries q^{2k} e^{i phi}.
    for (q, theta, grid) in [(0.3f64, 0.0, 16), (0.5, 1.0, 32), (0.7, 2.5, 12)] {
        let mut want: f64 = 0.0;
        for j in 0..grid {
            let phi = TAU * j as f64 / grid as f64;
            for k in 0..60 {
                let z = num_complex::Complex64::from_polar(q.powi(2 * k), phi)
                    + num_complex::Complex64::from_polar(1.0, theta);
                want = want.max(z.norm());
            }
        }
        let got = shilov_norm(theta, grid, 64, q).unwrap();
        assert!(
            (got - want).abs() < 1e-12,
            "q={q} theta={theta}: {got} vs {want}"
        );
    }
}

#[test]
fn theta_det_has_modulus_inverse_q() {
    let p = presets::pol_matsym();
    for (a, b) in [(0.0, 0.0), (0.4, 2.9), (5.0, 1.1)] {
        let v = theta_det(&p, a, b, Q).unwrap();
        assert!((v.norm() - 1.0 / Q).abs() < 1e-12, "{v}");
    }
}

#[test]
fn every_family_satisfies_its_relations_at_small_truncation() {
    for name in PRESET_NAMES {
        let p = preset(name).unwrap();
        for f in ALL_FAMILIES.into_iter().filter(|f| f.algebra() == name) {
            let vals = vec![0.9; f.arity()];
            let r = relation_residual(
                &p,
                &RepSpec::symbolic(f),
                &default_dims(f.legs(), 24, 12, 8),
                Q,
                &vals,
            )
            .unwrap();
            assert!(r <= 1e-10, "{} {r}", f.name());
        }
    }
}

#[test]
fn wrong_algebra_is_rejected() {
    let p = presets::c_su2();
    assert!(relation_residual(&p, &RepSpec::symbolic(Family::Tau), &[8, 8], Q, &[0.1]).is_err());
}

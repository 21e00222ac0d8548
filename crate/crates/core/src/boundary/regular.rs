use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::ncalg::{NcExpr, Presentation};
use crate::oprep::{
    guard_residual, image_with, images, rep_image, Coeff, Family, OpSymbolExpr, Phase, RepSpec,
};
use crate::qscalar::LaurentScalar;

/// `z22 z11 - q⁻¹ z21²`, kept in the written order.
pub fn det(p: &Presentation) -> Result<NcExpr> {
    let a = p.gen("z22")?.mul_raw(&p.gen("z11")?);
    let z21 = p.gen("z21")?;
    let b = z21.mul_raw(&z21).scale(&LaurentScalar::q_pow(-1));
    Ok(&a - &b)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DetReport {
    /// `‖X*X - q⁻² I‖` and `‖X X* - q⁻² I‖` for `X = π(det)`.
    pub unitarity: [f64; 2],
    /// `‖π(det) + q⁻¹ e^{2iφ} I‖`, the closed form under `ω_φ`.
    pub closed_form: f64,
}

fn scalar_identity(legs: usize, c: Coeff) -> OpSymbolExpr {
    OpSymbolExpr::identity(legs).scale(&c)
}

/// Unitarity of `q det` under `ω_φ`.
pub fn det_unitarity_check(p: &Presentation, phi: f64, n: usize, q: f64) -> Result<DetReport> {
    let spec = RepSpec::new(Family::Omega, vec![Phase::var(0)])?;
    let x = rep_image(&det(p)?, &spec)?;
    let q2 = scalar_identity(1, Coeff::scalar(LaurentScalar::q_pow(-2)));
    let vals = [phi];
    let a = guard_residual(&x.adjoint().mul(&x)?.sub(&q2)?, &[n], q, &vals)?;
    let b = guard_residual(&x.mul(&x.adjoint())?.sub(&q2)?, &[n], q, &vals)?;
    let two_phi = Phase::var(0).add(&Phase::var(0));
    let closed = x.add(&scalar_identity(
        1,
        Coeff::term(&two_phi, LaurentScalar::q_pow(-1)),
    ))?;
    Ok(DetReport {
        unitarity: [a, b],
        closed_form: guard_residual(&closed, &[n], q, &vals)?,
    })
}

/// `θ_{φ1,φ2}(det)` evaluated; its modulus should be `q⁻¹`.
pub fn theta_det(p: &Presentation, phi1: f64, phi2: f64, q: f64) -> Result<Complex64> {
    let spec = RepSpec::symbolic(Family::Theta);
    let e = rep_image(&det(p)?, &spec)?;
    let m = crate::oprep::materialize(&e, &[], q, &[phi1, phi2])?;
    Ok(m.get(0, 0))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InvolutionReport {
    /// Residuals for `z11*`, `z21*`, `z22*` in that order.
    pub residuals: [f64; 3],
}

/// The involution in terms of `det⁻¹`, realized as `q² det*`:
/// `z11* = q⁻² z22 det⁻¹`, `z21* = -q⁻¹ z21 det⁻¹`, `z22* = z11 det⁻¹`.
pub fn regular_involution_check(
    p: &Presentation,
    phi: f64,
    n: usize,
    q: f64,
) -> Result<InvolutionReport> {
    let spec = RepSpec::new(Family::Omega, vec![Phase::var(0)])?;
    let imgs = images(&spec)?;
    let d = det(p)?;
    let inv = p.star(&d)?.scale(&LaurentScalar::q_pow(2));
    let rhs = [
        p.gen("z22")?.mul_raw(&inv).scale(&LaurentScalar::q_pow(-2)),
        p.gen("z21")?
            .mul_raw(&inv)
            .scale(&-LaurentScalar::q_pow(-1)),
        p.gen("z11")?.mul_raw(&inv),
    ];
    let mut residuals = [0.0; 3];
    for (k, name) in ["z11*", "z21*", "z22*"].into_iter().enumerate() {
        let lhs = image_with(&p.gen(name)?, &imgs, 1)?;
        let r = image_with(&rhs[k], &imgs, 1)?;
        residuals[k] = guard_residual(&lhs.sub(&r)?, &[n], q, &[phi])?;
    }
    Ok(InvolutionReport { residuals })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LemmaCheck {
    pub phases: String,
    pub generators_checked: usize,
    pub mismatches: Vec<String>,
}

/// Substituting `Θ_{φ2}` into `ω_{(φ1+φ2+π)/2}` gives `θ_{φ1,φ2}` on every
/// generator, compared as exact symbolic expressions.
pub fn lemma_bound_check(phi1: &Phase, phi2: &Phase) -> Result<LemmaCheck> {
    let half = crate::oprep::ratio(1, 2);
    let psi = phi1
        .add(phi2)
        .add(&Phase::pi(crate::oprep::ratio(1, 1)))
        .scale(half);
    let omega = RepSpec::new(Family::Omega, vec![psi])?;
    let theta = RepSpec::new(Family::Theta, vec![phi1.clone(), phi2.clone()])?;
    let mut out = LemmaCheck {
        phases: format!("({phi1}, {phi2})"),
        generators_checked: 0,
        mismatches: Vec::new(),
    };
    for l in 0..6 {
        let x = NcExpr::letter(l);
        let got = rep_image(&x, &omega)?.character_substitute(0, phi2)?;
        let want = rep_image(&x, &theta)?;
        out.generators_checked += 1;
        if got != want {
            out.mismatches.push(format!("letter {l}: {got} vs {want}"));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::presets;
    use crate::oprep::ratio;

    #[test]
    fn det_under_omega() {
        let p = presets::pol_matsym();
        let r = det_unitarity_check(&p, 0.9, 64, 0.5).unwrap();
        assert!(
            r.unitarity.iter().all(|&x| x <= 1e-10) && r.closed_form <= 1e-10,
            "{r:?}"
        );
        let t = theta_det(&p, 0.3, 1.1, 0.5).unwrap();
        assert!((t.norm() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn involution_displays() {
        let p = presets::pol_matsym();
        let r = regular_involution_check(&p, 2.0, 64, 0.5).unwrap();
        assert!(r.residuals.iter().all(|&x| x <= 1e-10), "{r:?}");
    }

    #[test]
    fn lemma_identity_symbolic_and_rational() {
        let r = lemma_bound_check(&Phase::var(0), &Phase::var(1)).unwrap();
        assert!(r.mismatches.is_empty(), "{:?}", r.mismatches);
        let r = lemma_bound_check(&Phase::pi(ratio(2, 7)), &Phase::pi(ratio(-5, 3))).unwrap();
        assert!(r.mismatches.is_empty(), "{:?}", r.mismatches);
    }
}

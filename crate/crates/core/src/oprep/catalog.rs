use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ncalg::presets::{self, T11, T12, T21, T22, Z};
use crate::ncalg::{Letter, NcExpr};
use crate::qgroups::Coaction;
use crate::qscalar::LaurentScalar;

use super::phase::{Coeff, Phase};
use super::symbol::OpSymbolExpr;

/// Representation families of the three algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    /// Fock representation of Pol(Mat2sym)_q on three legs.
    Fock,
    Tau,
    Omega,
    Nu,
    Theta,
    /// `π_φ` of C[SU2]_q.
    Pi0,
    /// Fock representation of Pol(C)_q.
    RhoFock,
    /// One-dimensional `ρ_φ` of Pol(C)_q.
    RhoPhase,
    /// `ρ_F ∘ Π_φ`.
    FPhi,
    /// `ρ_{φ1} ∘ Π_{φ2}`.
    Chi,
    /// `(F_φ ⊗ π_0) ∘ 𝒟` by its closed formula.
    FphiCoact,
    /// `(χ ⊗ π_0) ∘ 𝒟` by its closed formula.
    ChiCoact,
    /// `(F_φ ⊗ π_0) ∘ 𝒟` composed through the coaction.
    FphiComposed,
    /// `(χ ⊗ π_0) ∘ 𝒟` composed through the coaction.
    ChiComposed,
}

pub const ALL_FAMILIES: [Family; 14] = [
    Family::Fock,
    Family::Tau,
    Family::Omega,
    Family::Nu,
    Family::Theta,
    Family::Pi0,
    Family::RhoFock,
    Family::RhoPhase,
    Family::FPhi,
    Family::Chi,
    Family::FphiCoact,
    Family::ChiCoact,
    Family::FphiComposed,
    Family::ChiComposed,
];

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Fock => "fock",
            Family::Tau => "tau",
            Family::Omega => "omega",
            Family::Nu => "nu",
            Family::Theta => "theta",
            Family::Pi0 => "pi0",
            Family::RhoFock => "rho-fock",
            Family::RhoPhase => "rho-phase",
            Family::FPhi => "F-phi",
            Family::Chi => "chi",
            Family::FphiCoact => "Fphi-coact",
            Family::ChiCoact => "chi-coact",
            Family::FphiComposed => "Fphi-composed",
            Family::ChiComposed => "chi-composed",
        }
    }

    pub fn from_name(s: &str) -> Result<Family> {
        ALL_FAMILIES
            .iter()
            .copied()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidConfig(format!("unknown representation family {s}")))
    }

    /// Name of the preset this family represents.
    pub fn algebra(self) -> &'static str {
        match self {
            Family::Pi0 => presets::C_SU2,
            Family::RhoFock | Family::RhoPhase => presets::POL_C,
            _ => presets::POL_MATSYM,
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Family::Fock | Family::RhoFock => 0,
            Family::Theta | Family::Chi | Family::ChiCoact | Family::ChiComposed => 2,
            _ => 1,
        }
    }

    pub fn legs(self) -> usize {
        match self {
            Family::Fock => 3,
            Family::Tau | Family::FphiCoact | Family::FphiComposed => 2,
            Family::Theta | Family::RhoPhase | Family::Chi => 0,
            _ => 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A family with its phase parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepSpec {
    pub family: Family,
    pub phases: Vec<Phase>,
}

impl RepSpec {
    pub fn new(family: Family, phases: Vec<Phase>) -> Result<Self> {
        if phases.len() != family.arity() {
            return Err(Error::PhaseArity {
                family: family.name().into(),
                expected: family.arity(),
                got: phases.len(),
            });
        }
        Ok(RepSpec { family, phases })
    }

    /// Spec whose phases are the variables `φ_0, φ_1, ...`.
    pub fn symbolic(family: Family) -> Self {
        RepSpec {
            family,
            phases: (0..family.arity()).map(Phase::var).collect(),
        }
    }

    pub fn legs(&self) -> usize {
        self.family.legs()
    }

    pub fn label(&self) -> String {
        if self.phases.is_empty() {
            self.family.name().to_string()
        } else {
            let p: Vec<String> = self.phases.iter().map(|p| p.to_string()).collect();
            format!("{}({})", self.family.name(), p.join(", "))
        }
    }
}

fn qs(k: i32) -> LaurentScalar {
    LaurentScalar::q_pow(k)
}

fn t(words: &[&str], c: Coeff) -> OpSymbolExpr {
    OpSymbolExpr::parse(words, c)
}

fn sc(c: LaurentScalar) -> Coeff {
    Coeff::scalar(c)
}

fn ph(p: &Phase, c: LaurentScalar) -> Coeff {
    Coeff::term(p, c)
}

fn sum(parts: &[OpSymbolExpr]) -> OpSymbolExpr {
    parts[1..]
        .iter()
        .fold(parts[0].clone(), |acc, x| acc.add(x).expect("same legs"))
}

/// Images of the holomorphic generators `z11, z21, z22`; the starred
/// letters are their adjoints.
fn matsym_holomorphic(spec: &RepSpec) -> Result<[OpSymbolExpr; 3]> {
    let p = &spec.phases;
    let one = LaurentScalar::one;
    Ok(match spec.family {
        Family::Fock => [
            sum(&[
                t(&["I", "D D", "C4 S"], Coeff::one()),
                t(&["S* C4", "C2 S C2 S", "I"], sc(-qs(-1))),
            ]),
            t(&["D D", "C2 S", "I"], Coeff::one()),
            t(&["C4 S", "I", "I"], Coeff::one()),
        ],
        Family::Tau => [
            sum(&[
                t(&["I", "D D"], ph(&p[0], one())),
                t(&["S* C4", "C2 S C2 S"], sc(-qs(-1))),
            ]),
            t(&["D D", "C2 S"], Coeff::one()),
            t(&["C4 S", "I"], Coeff::one()),
        ],
        Family::Omega => [
            t(&["S* C4"], ph(&p[0].add(&p[0]), -qs(-1))),
            t(&["D D"], ph(&p[0], one())),
            t(&["C4 S"], Coeff::one()),
        ],
        Family::Nu => [
            t(&["C4 S"], sc(qs(-1))),
            OpSymbolExpr::zero(1),
            t(&["I"], ph(&p[0], one())),
        ],
        Family::Theta => [
            t(&[], ph(&p[0], qs(-1))),
            OpSymbolExpr::zero(0),
            t(&[], ph(&p[1], one())),
        ],
        Family::FPhi => pi_composite(
            &p[0],
            &RepSpec {
                family: Family::RhoFock,
                phases: vec![],
            },
        )?,
        Family::Chi => pi_composite(
            &p[1],
            &RepSpec {
                family: Family::RhoPhase,
                phases: vec![p[0].clone()],
            },
        )?,
        Family::FphiCoact => [
            sum(&[
                t(&["C4 S", "S* C2 S* C2"], sc(qs(-1))),
                t(&["I", "D D"], ph(&p[0], one())),
            ]),
            sum(&[
                t(&["C4 S", "S* C2 D"], sc(-qs(-1))),
                t(&["I", "C2 S D"], ph(&p[0], one())),
            ]),
            sum(&[
                t(&["C4 S", "D D"], sc(qs(1))),
                t(&["I", "C2 S C2 S"], ph(&p[0], one())),
            ]),
        ],
        Family::ChiCoact => [
            sum(&[
                t(&["S* C2 S* C2"], ph(&p[0], qs(-1))),
                t(&["D D"], ph(&p[1], one())),
            ]),
            sum(&[
                t(&["S* C2 D"], ph(&p[0], -qs(-1))),
                t(&["C2 S D"], ph(&p[1], one())),
            ]),
            sum(&[
                t(&["D D"], ph(&p[0], qs(1))),
                t(&["C2 S C2 S"], ph(&p[1], one())),
            ]),
        ],
        Family::FphiComposed | Family::ChiComposed => {
            return Err(Error::InvalidConfig(
                "composed families go through the coaction".into(),
            ))
        }
        f => {
            return Err(Error::AlgebraMismatch {
                expected: presets::POL_MATSYM.into(),
                found: f.algebra().into(),
            })
        }
    })
}

/// `ρ ∘ Π_φ` where `Π_φ(z11) = q⁻¹ z`, `Π_φ(z21) = 0`, `Π_φ(z22) = e^{iφ}`.
fn pi_composite(phi: &Phase, rho: &RepSpec) -> Result<[OpSymbolExpr; 3]> {
    let legs = rho.legs();
    let z = rep_image(&NcExpr::letter(Z), rho)?;
    Ok([
        z.scale(&sc(qs(-1))),
        OpSymbolExpr::zero(legs),
        OpSymbolExpr::identity(legs).scale(&Coeff::unit(phi)),
    ])
}

fn generator_images(spec: &RepSpec) -> Result<Vec<OpSymbolExpr>> {
    if spec.phases.len() != spec.family.arity() {
        return Err(Error::PhaseArity {
            family: spec.family.name().into(),
            expected: spec.family.arity(),
            got: spec.phases.len(),
        });
    }
    let p = &spec.phases;
    match spec.family {
        Family::Pi0 => {
            let mut v = vec![OpSymbolExpr::zero(1); 4];
            v[T11 as usize] = t(&["S* C2"], Coeff::one());
            v[T12 as usize] = t(&["D"], ph(&p[0].neg(), -qs(1)));
            v[T21 as usize] = t(&["D"], Coeff::unit(&p[0]));
            v[T22 as usize] = t(&["C2 S"], Coeff::one());
            Ok(v)
        }
        Family::RhoFock => {
            let z = t(&["C4 S"], Coeff::one());
            Ok(vec![z.clone(), z.adjoint()])
        }
        Family::RhoPhase => {
            let z = t(&[], Coeff::unit(&p[0]));
            Ok(vec![z.clone(), z.adjoint()])
        }
        Family::FphiComposed | Family::ChiComposed => composed_images(spec),
        _ => {
            let h = matsym_holomorphic(spec)?;
            let mut v: Vec<OpSymbolExpr> = h.to_vec();
            v.extend(h.iter().map(|x| x.adjoint()));
            Ok(v)
        }
    }
}

/// `(L ⊗ π_0) ∘ 𝒟` on each generator, with `π_0` the `φ = 0` member of `π_φ`.
fn composed_images(spec: &RepSpec) -> Result<Vec<OpSymbolExpr>> {
    let left = match spec.family {
        Family::FphiComposed => RepSpec {
            family: Family::FPhi,
            phases: spec.phases.clone(),
        },
        _ => RepSpec {
            family: Family::Chi,
            phases: spec.phases.clone(),
        },
    };
    let pi0 = RepSpec {
        family: Family::Pi0,
        phases: vec![Phase::zero()],
    };
    let coaction = Coaction::new()?;
    let legs = left.legs() + 1;
    let mut out = Vec::with_capacity(6);
    for img in &coaction.images {
        let mut acc = OpSymbolExpr::zero(legs);
        for (ws, c) in img.terms() {
            let a = rep_image(&NcExpr::word(ws[0].clone()), &left)?;
            let b = rep_image(&NcExpr::word(ws[1].clone()), &pi0)?;
            acc = acc.add(&a.tensor(&b).scale(&sc(c.clone())))?;
        }
        out.push(acc);
    }
    Ok(out)
}

/// Image of `x` under the representation, extended multiplicatively.
pub fn rep_image(x: &NcExpr, spec: &RepSpec) -> Result<OpSymbolExpr> {
    let images = generator_images(spec)?;
    image_with(x, &images, spec.legs())
}

/// Same as [`rep_image`] with precomputed generator images.
pub fn image_with(x: &NcExpr, images: &[OpSymbolExpr], legs: usize) -> Result<OpSymbolExpr> {
    let mut out = OpSymbolExpr::zero(legs);
    for (w, c) in x.terms() {
        let mut acc = OpSymbolExpr::identity(legs).scale(&sc(c.clone()));
        for &l in w.letters() {
            acc = acc.mul(image_of(images, l)?)?;
            if acc.is_zero() {
                break;
            }
        }
        out = out.add(&acc)?;
    }
    Ok(out)
}

fn image_of(images: &[OpSymbolExpr], l: Letter) -> Result<&OpSymbolExpr> {
    images.get(l as usize).ok_or_else(|| {
        Error::DimensionMismatch(format!("letter {l} outside the represented alphabet"))
    })
}

/// Generator images of a spec, for callers that evaluate many elements.
pub fn images(spec: &RepSpec) -> Result<Vec<OpSymbolExpr>> {
    generator_images(spec)
}

/// Default truncation for a family: `[n1]`, `[n2, n2]` or `[n3, n3, n3]`.
pub fn default_dims(legs: usize, n1: usize, n2: usize, n3: usize) -> Vec<usize> {
    match legs {
        0 => vec![],
        1 => vec![n1],
        2 => vec![n2; 2],
        l => vec![n3; l],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::presets::{Z11, Z21};

    #[test]
    fn catalog_examples() {
        let phi = Phase::var(0);
        let om = RepSpec::new(Family::Omega, vec![phi.clone()]).unwrap();
        let got = rep_image(&NcExpr::letter(Z21), &om).unwrap();
        assert_eq!(got, t(&["D D"], Coeff::unit(&phi)));
        let nu = RepSpec::new(Family::Nu, vec![phi.clone()]).unwrap();
        assert!(rep_image(&NcExpr::letter(Z21), &nu).unwrap().is_zero());
        let chi = RepSpec::symbolic(Family::ChiCoact);
        let got = rep_image(&NcExpr::letter(Z11), &chi).unwrap();
        let want = t(&["S* C2 S* C2"], ph(&Phase::var(0), qs(-1)))
            .add(&t(&["D D"], Coeff::unit(&Phase::var(1))))
            .unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn composites_match_closed_forms() {
        let f = RepSpec::symbolic(Family::FPhi);
        let nu = RepSpec::symbolic(Family::Nu);
        let chi = RepSpec::symbolic(Family::Chi);
        let theta = RepSpec::symbolic(Family::Theta);
        for l in 0..6 {
            let x = NcExpr::letter(l);
            assert_eq!(rep_image(&x, &f).unwrap(), rep_image(&x, &nu).unwrap());
            assert_eq!(rep_image(&x, &chi).unwrap(), rep_image(&x, &theta).unwrap());
        }
    }

    #[test]
    fn arity_is_checked() {
        assert!(RepSpec::new(Family::Theta, vec![Phase::zero()]).is_err());
        assert!(RepSpec::new(Family::Fock, vec![]).is_ok());
        assert_eq!(Family::from_name("chi-coact").unwrap(), Family::ChiCoact);
    }
}

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::ncalg::NcExpr;

use super::catalog::{rep_image, Family, RepSpec};
use super::phase::Phase;

/// One step of the character chain: substituting `Θ` on a leg of `from`
/// must give `to` on every generator, as exact symbolic expressions.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChainStep {
    pub label: String,
    pub generators_checked: usize,
    pub mismatches: Vec<String>,
}

impl ChainStep {
    pub fn holds(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn step(label: &str, from: &RepSpec, leg: usize, phase: &Phase, to: &RepSpec) -> Result<ChainStep> {
    let mut out = ChainStep {
        label: label.into(),
        generators_checked: 0,
        mismatches: Vec::new(),
    };
    for l in 0..6 {
        let x = NcExpr::letter(l);
        let got = rep_image(&x, from)?.character_substitute(leg, phase)?;
        let want = rep_image(&x, to)?;
        out.generators_checked += 1;
        if got != want {
            out.mismatches.push(format!("letter {l}: {got} vs {want}"));
        }
    }
    Ok(out)
}

/// The substitution chain `π_F → τ_φ → ω_ψ` and
/// `(F_φ ⊗ π_0)∘𝒟 → ν_φ → θ`, with phases kept symbolic.
pub fn character_chain() -> Result<Vec<ChainStep>> {
    let phi = Phase::var(0);
    let psi = Phase::var(1);
    let spec = |f: Family, p: Vec<Phase>| RepSpec::new(f, p);
    let fock = spec(Family::Fock, vec![])?;
    let tau = spec(Family::Tau, vec![phi.clone()])?;
    let omega = spec(Family::Omega, vec![psi.clone()])?;
    let nu_phi = spec(Family::Nu, vec![phi.clone()])?;
    let nu_psi = spec(Family::Nu, vec![psi.clone()])?;
    let theta = spec(Family::Theta, vec![phi.clone(), psi.clone()])?;
    Ok(vec![
        step("fock -> tau (leg 3)", &fock, 2, &phi, &tau)?,
        step("tau -> omega (leg 2)", &tau, 1, &psi, &omega)?,
        step(
            "Fphi-coact -> nu (leg 2, phase 0)",
            &spec(Family::FphiCoact, vec![phi.clone()])?,
            1,
            &Phase::zero(),
            &nu_phi,
        )?,
        step(
            "Fphi-composed -> nu (leg 2, phase 0)",
            &spec(Family::FphiComposed, vec![phi.clone()])?,
            1,
            &Phase::zero(),
            &nu_phi,
        )?,
        step("nu -> theta (leg 1)", &nu_psi, 0, &phi, &theta)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_is_exact() {
        for s in character_chain().unwrap() {
            assert!(s.holds(), "{}: {:?}", s.label, s.mismatches);
            assert_eq!(s.generators_checked, 6);
        }
    }
}

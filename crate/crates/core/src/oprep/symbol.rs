use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qscalar::LaurentScalar;

use super::phase::{Coeff, Phase};

/// One letter of a leg word. The identity is the empty word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum OpLetter {
    /// `S e_k = e_{k+1}`
    S,
    /// `S* e_k = e_{k-1}`, `S* e_0 = 0`
    Sd,
    /// `C_n e_k = √(1 - q^{nk}) e_k`
    C(u8),
    /// `D e_k = q^k e_k`
    D,
}

impl OpLetter {
    pub fn adjoint(self) -> OpLetter {
        match self {
            OpLetter::S => OpLetter::Sd,
            OpLetter::Sd => OpLetter::S,
            l => l,
        }
    }

    /// Value under the character `S ↦ e^{iφ}`, `C_n ↦ 1`, `D ↦ 0`.
    fn character(self, phi: &Phase) -> Option<Phase> {
        match self {
            OpLetter::S => Some(phi.clone()),
            OpLetter::Sd => Some(phi.neg()),
            OpLetter::C(_) => Some(Phase::zero()),
            OpLetter::D => None,
        }
    }
}

impl fmt::Display for OpLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OpLetter::S => write!(f, "S"),
            OpLetter::Sd => write!(f, "S*"),
            OpLetter::C(n) => write!(f, "C{n}"),
            OpLetter::D => write!(f, "D"),
        }
    }
}

pub type OpWord = Vec<OpLetter>;

/// Parses a word like `"S* C2 S* C2"`; `"I"` or `""` is the identity.
pub fn op_word(s: &str) -> OpWord {
    s.split_whitespace()
        .filter(|t| *t != "I")
        .map(|t| match t {
            "S" => OpLetter::S,
            "S*" => OpLetter::Sd,
            "D" => OpLetter::D,
            c if c.starts_with('C') => OpLetter::C(c[1..].parse().expect("C_n index")),
            other => panic!("unknown operator letter {other}"),
        })
        .collect()
}

/// Largest index shift upward while the word acts right to left.
pub fn upward_excursion(w: &[OpLetter]) -> usize {
    let mut pos: i64 = 0;
    let mut max = 0;
    for l in w.iter().rev() {
        match l {
            OpLetter::S => pos += 1,
            OpLetter::Sd => pos -= 1,
            _ => {}
        }
        max = max.max(pos);
    }
    max as usize
}

/// Sum of tensor products of leg words with exact phase-valued coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpSymbolExpr {
    legs: usize,
    terms: BTreeMap<Vec<OpWord>, Coeff>,
}

impl OpSymbolExpr {
    pub fn zero(legs: usize) -> Self {
        OpSymbolExpr {
            legs,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(legs: usize) -> Self {
        Self::term(vec![Vec::new(); legs], Coeff::one())
    }

    pub fn term(words: Vec<OpWord>, c: Coeff) -> Self {
        let mut out = Self::zero(words.len());
        out.add_term(words, c);
        out
    }

    /// Builds a term from whitespace-separated words, one per leg.
    pub fn parse(words: &[&str], c: Coeff) -> Self {
        Self::term(words.iter().map(|w| op_word(w)).collect(), c)
    }

    pub fn legs(&self) -> usize {
        self.legs
    }

    pub fn terms(&self) -> &BTreeMap<Vec<OpWord>, Coeff> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, words: Vec<OpWord>, c: Coeff) {
        assert_eq!(words.len(), self.legs, "leg count");
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(words.clone()).or_default();
        *slot = slot.add(&c);
        if slot.is_zero() {
            self.terms.remove(&words);
        }
    }

    fn check_legs(&self, other: &OpSymbolExpr) -> Result<()> {
        if self.legs != other.legs {
            return Err(Error::DimensionMismatch(format!(
                "{} legs vs {} legs",
                self.legs, other.legs
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &OpSymbolExpr) -> Result<OpSymbolExpr> {
        self.check_legs(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &OpSymbolExpr) -> Result<OpSymbolExpr> {
        self.add(&other.scale(&Coeff::scalar(LaurentScalar::from_int(-1))))
    }

    pub fn scale(&self, c: &Coeff) -> OpSymbolExpr {
        let mut out = OpSymbolExpr::zero(self.legs);
        for (w, a) in &self.terms {
            out.add_term(w.clone(), a.mul(c));
        }
        out
    }

    /// Operator product: leg words are concatenated.
    pub fn mul(&self, other: &OpSymbolExpr) -> Result<OpSymbolExpr> {
        self.check_legs(other)?;
        let mut out = OpSymbolExpr::zero(self.legs);
        for (wa, a) in &self.terms {
            for (wb, b) in &other.terms {
                let words = wa
                    .iter()
                    .zip(wb)
                    .map(|(x, y)| x.iter().chain(y).copied().collect())
                    .collect();
                out.add_term(words, a.mul(b));
            }
        }
        Ok(out)
    }

    pub fn adjoint(&self) -> OpSymbolExpr {
        let mut out = OpSymbolExpr::zero(self.legs);
        for (w, a) in &self.terms {
            let words = w
                .iter()
                .map(|x| x.iter().rev().map(|l| l.adjoint()).collect())
                .collect();
            out.add_term(words, a.conj());
        }
        out
    }

    /// `self ⊗ other`, legs of `self` first.
    pub fn tensor(&self, other: &OpSymbolExpr) -> OpSymbolExpr {
        let mut out = OpSymbolExpr::zero(self.legs + other.legs);
        for (wa, a) in &self.terms {
            for (wb, b) in &other.terms {
                let words = wa.iter().chain(wb).cloned().collect();
                out.add_term(words, a.mul(b));
            }
        }
        out
    }

    /// Applies the character `Θ_φ` to one leg and removes it.
    pub fn character_substitute(&self, leg: usize, phi: &Phase) -> Result<OpSymbolExpr> {
        if leg >= self.legs {
            return Err(Error::DimensionMismatch(format!(
                "leg {leg} of {}",
                self.legs
            )));
        }
        let mut out = OpSymbolExpr::zero(self.legs - 1);
        'terms: for (w, a) in &self.terms {
            let mut theta = Phase::zero();
            for l in &w[leg] {
                match l.character(phi) {
                    Some(p) => theta = theta.add(&p),
                    None => continue 'terms,
                }
            }
            let mut words = w.clone();
            words.remove(leg);
            out.add_term(words, a.mul(&Coeff::unit(&theta)));
        }
        Ok(out)
    }

    /// Per-leg guard width: the largest upward excursion of any word on that leg.
    pub fn guard(&self) -> Vec<usize> {
        let mut g = vec![0; self.legs];
        for w in self.terms.keys() {
            for (k, x) in w.iter().enumerate() {
                g[k] = g[k].max(upward_excursion(x));
            }
        }
        g
    }

    /// Maximum total word length over legs and terms.
    pub fn degree(&self) -> usize {
        self.terms
            .keys()
            .flat_map(|w| w.iter().map(|x| x.len()))
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for OpSymbolExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let legs: Vec<String> = w
                .iter()
                .map(|x| {
                    if x.is_empty() {
                        "I".to_string()
                    } else {
                        x.iter().map(|l| l.to_string()).collect::<Vec<_>>().join("")
                    }
                })
                .collect();
            write!(f, "[{c}] {}", legs.join("⊗"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_excursion() {
        assert_eq!(
            op_word("S* C2 S* C2"),
            vec![OpLetter::Sd, OpLetter::C(2), OpLetter::Sd, OpLetter::C(2)]
        );
        assert!(op_word("I").is_empty());
        assert_eq!(upward_excursion(&op_word("C2 S C2 S")), 2);
        assert_eq!(upward_excursion(&op_word("S S* S")), 1);
        assert_eq!(upward_excursion(&op_word("S* S")), 1);
        assert_eq!(upward_excursion(&op_word("S S*")), 0);
    }

    #[test]
    fn adjoint_reverses_and_conjugates() {
        let phi = Phase::var(0);
        let e = OpSymbolExpr::parse(&["S* C4", "D"], Coeff::term(&phi, LaurentScalar::i()));
        let a = e.adjoint();
        let want =
            OpSymbolExpr::parse(&["C4 S", "D"], Coeff::term(&phi.neg(), -LaurentScalar::i()));
        assert_eq!(a, want);
        assert_eq!(a.adjoint(), e);
    }

    #[test]
    fn character_kills_d_and_rotates_shifts() {
        let phi = Phase::var(3);
        let e = OpSymbolExpr::parse(&["C4 S", "C2 S C2 S"], Coeff::one())
            .add(&OpSymbolExpr::parse(&["S", "S* D"], Coeff::one()))
            .unwrap();
        let got = e.character_substitute(1, &phi).unwrap();
        let two_phi = phi.add(&phi);
        assert_eq!(got, OpSymbolExpr::parse(&["C4 S"], Coeff::unit(&two_phi)));
    }

    #[test]
    fn character_is_multiplicative() {
        let phi = Phase::var(0);
        let a = OpSymbolExpr::parse(&["S", "S* C2"], Coeff::one())
            .add(&OpSymbolExpr::parse(
                &["D", "C4 S"],
                Coeff::scalar(LaurentScalar::q_pow(1)),
            ))
            .unwrap();
        let b = a.adjoint();
        let lhs = a.mul(&b).unwrap().character_substitute(1, &phi).unwrap();
        let rhs = a
            .character_substitute(1, &phi)
            .unwrap()
            .mul(&b.character_substitute(1, &phi).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }
}

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use shilov_core::{Error, Result};

/// Named groups of checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Relations,
    Hopf,
    Coaction,
    Wick,
    Characters,
    Annihilators,
    ShilovNorm,
    Dilation,
    Inequalities,
    RegularFunctions,
    Confluence,
}

pub const ALL_SUITES: [Suite; 11] = [
    Suite::Relations,
    Suite::Hopf,
    Suite::Coaction,
    Suite::Wick,
    Suite::Characters,
    Suite::Annihilators,
    Suite::ShilovNorm,
    Suite::Dilation,
    Suite::Inequalities,
    Suite::RegularFunctions,
    Suite::Confluence,
];

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::Hopf => "hopf",
            Suite::Coaction => "coaction",
            Suite::Wick => "wick",
            Suite::Characters => "characters",
            Suite::Annihilators => "annihilators",
            Suite::ShilovNorm => "shilov-norm",
            Suite::Dilation => "dilation",
            Suite::Inequalities => "inequalities",
            Suite::RegularFunctions => "regular-functions",
            Suite::Confluence => "confluence",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ALL_SUITES
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.into()))
    }
}

/// Deliberate breakage used to confirm that the checks can fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mutation {
    /// Remove the rule for `z21* z21` from Pol(Mat2sym)_q.
    DroppedRelation,
    /// Remove the first summand of the coaction image of `z22`.
    DroppedSummand,
}

impl FromStr for Mutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dropped-relation" => Ok(Mutation::DroppedRelation),
            "dropped-summand" => Ok(Mutation::DroppedSummand),
            _ => Err(Error::InvalidConfig(format!("unknown mutation `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub q: f64,
    pub n1: usize,
    pub n2: usize,
    pub n3: usize,
    /// Points in the phase grid for the maximum-modulus sup.
    pub phi_grid: usize,
    /// Slack for the norm domination and the upper maximum-modulus bound.
    pub tol: f64,
    pub seed: u64,
    pub suites: Vec<Suite>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mutation: Option<Mutation>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            q: 0.5,
            n1: 64,
            n2: 32,
            n3: 16,
            phi_grid: 128,
            tol: 1e-8,
            seed: 2024,
            suites: ALL_SUITES.to_vec(),
            mutation: None,
        }
    }
}

impl RunConfig {
    pub fn with_suites(mut self, suites: &[Suite]) -> Self {
        self.suites = suites.to_vec();
        self
    }

    pub fn validate(&self) -> Result<()> {
        shilov_core::qscalar::check_q(self.q)?;
        for n in [self.n1, self.n2, self.n3] {
            if n < 8 {
                return Err(Error::InvalidConfig(format!("truncation {n} is below 8")));
            }
        }
        if self.phi_grid < 4 {
            return Err(Error::InvalidConfig(format!(
                "phase grid {} is below 4",
                self.phi_grid
            )));
        }
        if self.tol.is_nan() || self.tol <= 0.0 {
            return Err(Error::InvalidConfig(format!(
                "tolerance {} is not positive",
                self.tol
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_valid_and_names_round_trip() {
        assert!(RunConfig::default().validate().is_ok());
        for s in ALL_SUITES {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn invalid_values_are_rejected() {
        let bad = [
            RunConfig {
                q: 1.0,
                ..Default::default()
            },
            RunConfig {
                q: 0.0,
                ..Default::default()
            },
            RunConfig {
                phi_grid: 3,
                ..Default::default()
            },
            RunConfig {
                tol: 0.0,
                ..Default::default()
            },
            RunConfig {
                n2: 4,
                ..Default::default()
            },
        ];
        for c in bad {
            assert!(c.validate().is_err(), "{c:?}");
        }
    }
}

//! The ideal `J`, annihilation and norm checks, and the determinant identities.

mod ideal;
mod norms;
mod regular;

use serde::{Deserialize, Serialize};

pub use ideal::{
    all_words, annihilation_residuals, j_generators, non_annihilation_witness, Annihilation,
    IdealGens,
};
pub use norms::{
    holo_matrix_inequalities, norm_domination, sample_holomorphic_arrays, sample_words,
    shilov_norm, sup_over_circle, sup_over_torus, DominationEntry, InequalityEntry, NormConfig,
    DOMINATED_FAMILIES,
};
pub use regular::{
    det, det_unitarity_check, lemma_bound_check, regular_involution_check, theta_det, DetReport,
    InvolutionReport, LemmaCheck,
};

/// How a check's value is compared with its tolerance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Comparison {
    /// Pass when `value ≤ tol`.
    AtMost,
    /// Pass when `value ≥ tol`.
    AtLeast,
}

/// One line of a report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub name: String,
    /// The identity or statement being checked.
    pub anchor: String,
    pub params: String,
    pub value: f64,
    pub tol: f64,
    pub comparison: Comparison,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckEntry {
    pub fn at_most(name: &str, anchor: &str, params: String, value: f64, tol: f64) -> Self {
        CheckEntry {
            name: name.into(),
            anchor: anchor.into(),
            params,
            value,
            tol,
            comparison: Comparison::AtMost,
            pass: value <= tol,
            note: None,
        }
    }

    pub fn at_least(name: &str, anchor: &str, params: String, value: f64, tol: f64) -> Self {
        CheckEntry {
            name: name.into(),
            anchor: anchor.into(),
            params,
            value,
            tol,
            comparison: Comparison::AtLeast,
            pass: value >= tol,
            note: None,
        }
    }

    /// A yes/no check: value 0 when it holds, 1 otherwise.
    pub fn flag(name: &str, anchor: &str, params: String, holds: bool) -> Self {
        Self::at_most(name, anchor, params, if holds { 0.0 } else { 1.0 }, 0.0)
    }

    /// An internal error surfaces as a failed entry.
    pub fn failed(name: &str, anchor: &str, params: String, err: &crate::Error) -> Self {
        let mut e = Self::flag(name, anchor, params, false);
        e.note = Some(err.to_string());
        e
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// Report entries from this module, sorted by name then parameters.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct BoundaryReport {
    pub entries: Vec<CheckEntry>,
}

impl BoundaryReport {
    pub fn push(&mut self, e: CheckEntry) {
        self.entries.push(e);
    }

    pub fn sort(&mut self) {
        self.entries
            .sort_by(|a, b| (&a.name, &a.params).cmp(&(&b.name, &b.params)));
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }
}

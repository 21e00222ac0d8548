//! Noncommutative polynomials over [`LaurentScalar`](crate::qscalar::LaurentScalar),
//! normal forms by two-letter rewriting, and the preset algebras.

mod confluence;
mod expr;
mod presentation;
pub mod presets;

pub use confluence::{local_confluence_check, ConfluenceReport, Violation};
pub use expr::{Letter, NcExpr, TensorExpr, Word};
pub use presentation::{
    tensor_mul, tensor_normal_form, GenSymbol, Presentation, Rule, Strategy, DEFAULT_REWRITE_CAP,
};
pub use presets::{preset, PRESET_NAMES};

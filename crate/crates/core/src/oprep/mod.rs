//! Truncated Fock-space operators and the representation catalog.

mod catalog;
mod chain;
mod checks;
mod dilation;
mod matrix;
mod norm;
mod phase;
mod symbol;

pub use catalog::{default_dims, image_with, images, rep_image, Family, RepSpec, ALL_FAMILIES};
pub use chain::{character_chain, ChainStep};
pub use checks::{
    coherent_check, cstar_identity_residual, cstar_series_expr, generator_matrices, guard_norm,
    guard_residual, moment_match, multiplicativity_residual, relation_residual, relation_residuals,
    CoherentReport, MomentReport, RelationResidual, Series,
};
pub use dilation::{
    dilation_report, egervary_dilation, psi_compression_residual, psi_image, DilationReport,
    PsiVariant,
};
pub use matrix::{base_op, base_ops, guard_mask, materialize, SparseMatrix, DIM_CAP};
pub use norm::{op_norm, DENSE_NORM_MAX};
pub use phase::{ratio, Coeff, Phase};
pub use symbol::{op_word, upward_excursion, OpLetter, OpSymbolExpr, OpWord};

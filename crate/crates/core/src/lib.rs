//! Exact and numerical verification of a quantum symmetric-matrix ball:
//! q-scalars, presented noncommutative algebras, the U_q(sl2) Hopf layer,
//! truncated Fock-space representations and the Shilov boundary checks.

pub mod boundary;
pub mod error;
pub mod ncalg;
pub mod oprep;
pub mod qgroups;
pub mod qscalar;

pub use error::{Error, Result};
pub use ncalg::{NcExpr, Presentation, TensorExpr, Word};
pub use oprep::{Family, OpSymbolExpr, RepSpec, SparseMatrix};
pub use qscalar::{GaussianRational, LaurentScalar};

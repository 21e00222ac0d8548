//! U_q(sl2) Hopf structure, its pairing with C[SL2]_q, the module-algebra
//! action on Pol(Mat2sym)_q and the coaction into Pol(Mat2sym)_q ⊗ C[SU2]_q.

mod action;
mod coaction;
mod hopf;
mod laws;
mod pairing;

pub use action::ActionTable;
pub use coaction::{
    hom_generators, uq_words, verify_coaction_action, verify_coaction_hom, Coaction, HomReport,
};
pub use hopf::HopfTables;
pub use laws::{
    action_kills_relations, action_table_check, coassociativity, module_algebra_law,
    pairing_generator_values, pairing_laws, star_compatibility, LawReport,
};
pub use pairing::{FundamentalRep, Mat2, Pairing};

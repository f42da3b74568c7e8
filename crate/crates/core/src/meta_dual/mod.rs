//! The dual datum of a strict form: `Λ♯`, the sharp root datum and its
//! Langlands dual `H`, `Ž_H`, the self-constraint invariant `ε`, and
//! independence of the simple system.

mod borel;
mod epsilon;
mod sharp;

use thiserror::Error;

use crate::root_data::StrictViolation;

pub use borel::{borel_independence_check, borel_independence_check_with_transport, rebase, BorelCheck};
pub use epsilon::{
    compare_z_linear_route, dual_pair, epsilon_invariant, eta_self_constraint, EpsilonInvariant, ZLinearComparison,
    MATERIALIZE_CAP,
};
pub use sharp::{dual_root_datum, sharp_data, DualPair, SharpData};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MetaDualError {
    #[error("form has rank {form} but the datum has rank {datum}")]
    RankMismatch { form: usize, datum: usize },
    #[error("form is not strict: {0}")]
    NotStrict(StrictViolation),
    #[error("sharp data not integral: {0}")]
    Integrality(String),
    #[error("sharp root datum is invalid: {0:?}")]
    Invalid(Vec<String>),
    #[error("ε pipeline failed: {0}")]
    Pipeline(String),
}

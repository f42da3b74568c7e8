//! Hilbert symbols at `ℝ` and tame `ℚ_p`, covers of split tori built from
//! them, and the signature of a real cover.

pub mod place;
pub mod signature;
pub mod suite;
pub mod torus;
pub mod unit;

use thiserror::Error;

pub use place::{Place, PlaceKind};
pub use signature::{real_signature, RealSignature};
pub use suite::{symbol_identity_suite, IdentityCheck, SuiteReport};
pub use torus::{torus_cover, CommutatorReadings, TorusCover, TorusCoverElement};
pub use unit::LocalUnit;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LocalFieldError {
    #[error("{0}")]
    Constraint(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("zero is not a unit")]
    Zero,
    #[error("{0}")]
    Shape(String),
}

/// `(a, b)_v` as an exponent of the fixed generator of `μ_N`.
pub fn hilbert_symbol(a: &LocalUnit, b: &LocalUnit, v: &Place) -> u64 {
    v.hilbert_symbol(a, b)
}

//! Lattices with quadratic and bilinear forms, the quadratic functors
//! `Sym², Γ², ∧², Ant²`, Σ₂-coinvariants, quadratic refinements on finite
//! groups and the homotopy groups of θ-data.

pub mod diagram;
pub mod quad;
pub mod refinements;
pub mod sigma2;
pub mod theta;

use thiserror::Error;

pub use diagram::{functor_apply, FunctorDiagram, FunctorValue};
pub use quad::{polarize, BilinearFormModN, Lattice, QuadForm};
pub use refinements::{binomial_identity_check, quadratic_refinements, FiniteQuadFunction};
pub use sigma2::{sigma2_homology, Sigma2Homology};
pub use theta::{theta_computations, theta_level2_homotopy, theta_skeleton, ThetaSkeleton};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormsError {
    #[error("coefficient index ({i},{j}) invalid for rank {rank}")]
    BadIndex { i: usize, j: usize, rank: usize },
    #[error("expected {expected} entries, got {got}")]
    BadLength { expected: usize, got: usize },
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("group must be finite")]
    InfiniteGroup,
    #[error("invalid pairing: {0}")]
    InvalidPairing(String),
    #[error("value group of order {modulus} is too small; order {needed} suffices")]
    ValueGroupTooSmall { modulus: i64, needed: i64 },
    #[error("element is not killed by {n}")]
    OrderPrecondition { n: i64 },
}

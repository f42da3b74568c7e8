//! Exact integer linear algebra: Smith normal form, finitely generated
//! abelian groups, cochain complexes and cosimplicial limits.

pub mod complex;
pub mod cosimplicial;
pub mod functors;
pub mod group;
pub mod matrix;
pub mod presented;
pub mod snf;

use thiserror::Error;

pub use complex::{cone, fiber, subquotient, ChainComplex, ChainMap};
pub use cosimplicial::{cosimplicial_limit_check, CosimplicialReport};
pub use functors::FunctorTag;
pub use group::{hom_ext, FgAbelianGroup};
pub use matrix::IntMatrix;
pub use presented::{is_exact_at, is_short_exact, kernel_mod_n, PresentedGroup, PresentedMap};
pub use snf::{kernel_basis, smith_normal_form, solve, Snf};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AbelianError {
    #[error("degree {degree} outside complex range [{lo}, {hi}]")]
    DegreeOutOfRange { degree: i32, lo: i32, hi: i32 },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("d∘d ≠ 0 starting at degree {0}")]
    NotAComplex(i32),
    #[error("maps do not commute with the differentials")]
    NotAChainMap,
}

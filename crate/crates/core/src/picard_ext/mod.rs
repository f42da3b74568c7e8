//! Cocycle models: two-term complexes as Picard groupoids, central
//! extensions by `ℤ/N`, the Heisenberg extensions, symmetric monoidal
//! extensions of finite groups with their `inv` invariant, and graded
//! algebras twisted by a cocycle.

mod cocycle;
mod dictionary;
mod heisenberg;
mod symmon;
mod twist;

use thiserror::Error;

pub use cocycle::{baer_sum, extension_from_bilinear, isomorphism_witness, Coboundary, ExtBase, ExtCocycle};
pub use dictionary::{dictionary, PicardGroupoid};
pub use heisenberg::{heisenberg1, h2_complex, Heisenberg1};
pub use symmon::{build_symmon_from_hom, check_coherence, inv, Axioms, CoherenceFailure, SymMonExt};
pub use twist::{twist_graded_algebra, GradedTwistedAlgebra};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PicardError {
    #[error("complex must live in degrees [-1, 0], got [{lo}, {hi}]")]
    WrongDegrees { lo: i32, hi: i32 },
    #[error("extensions have different bases or moduli")]
    BaseMismatch,
    #[error("base must be a finite group")]
    InfiniteBase,
    #[error("pairing is not well defined: {0}")]
    InvalidPairing(String),
    #[error("a nonzero map to ℤ/{0} from a 2-torsion group needs an even modulus")]
    OddModulus(i64),
    #[error("not a homomorphism from Γ/2: {0}")]
    NotAHomomorphism(String),
    #[error("incoherent symmetric monoidal data: {0}")]
    Incoherent(CoherenceFailure),
}

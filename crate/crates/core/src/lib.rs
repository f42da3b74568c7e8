//! Exact linear-algebraic data of metaplectic covers of split reductive
//! groups at desk scale.
//!
//! The crate is layered bottom-up: [`abelian_core`] (integer linear algebra),
//! [`forms`] (quadratic functors, Σ₂-coinvariants, θ-skeleta),
//! [`root_data`], [`bg_cohomology`], [`picard_ext`] (cocycle models),
//! [`meta_dual`] (the dual root datum and its ε-invariant) and
//! [`local_field`] (Hilbert symbols and torus covers).

pub mod abelian_core;
pub mod bg_cohomology;
pub mod forms;
pub mod local_field;
pub mod meta_dual;
pub mod picard_ext;
pub mod root_data;
pub mod util;

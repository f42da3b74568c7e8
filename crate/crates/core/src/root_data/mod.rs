//! Based root data, Weyl groups, simply connected and adjoint companions,
//! `π₁`, and strict quadratic forms.

pub mod catalog;
pub mod companions;
pub mod datum;
pub mod strict;
pub mod weyl;

pub use catalog::{catalog, CatalogError, STANDARD_NAMES};
pub use companions::{companions, Companions};
pub use datum::{validate, BasedRootDatum, Violation};
pub use strict::{
    compare_invariant_and_strict, enumerate_strict, is_strict, is_strict_on_all_coroots, is_w_invariant, strictness_violation, StrictError,
    StrictForms, StrictViolation,
};
pub use weyl::{WeylError, WeylGroup, DEFAULT_WEYL_CAP};

/// Weyl group of `rd` under the default size cap.
pub fn weyl_group(rd: &BasedRootDatum) -> Result<WeylGroup, WeylError> {
    WeylGroup::generate(rd, DEFAULT_WEYL_CAP)
}

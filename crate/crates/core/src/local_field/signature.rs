use crate::forms::QuadForm;

use super::place::{Place, PlaceKind};
use super::unit::LocalUnit;
use super::LocalFieldError;

/// `sgn : Λ → ℤ/2` of a real cover given by `(Q, τ)`, on the standard basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealSignature {
    pub values: Vec<u64>,
    pub trivial: bool,
}

/// The `Q` part is pulled back from a cover of `BT` and has trivial
/// signature; only `τ`, paired with the class of `-1` in `ℝ^×/ℝ^×²`, survives.
pub fn real_signature(q: &QuadForm, tau: &[i64]) -> Result<RealSignature, LocalFieldError> {
    if q.modulus() != 2 {
        return Err(LocalFieldError::Constraint(format!("real signature needs N = 2, got {}", q.modulus())));
    }
    if tau.len() != q.rank() {
        return Err(LocalFieldError::Shape(format!("tau has length {} for rank {}", tau.len(), q.rank())));
    }
    let real = Place::new(PlaceKind::Real, 2)?;
    let minus_one = LocalUnit::one().neg();
    // (−1, −1)_ℝ is 1 exactly because −1 is not a square.
    let class = real.hilbert_symbol(&minus_one, &minus_one);
    let values: Vec<u64> = tau.iter().map(|&t| (t.rem_euclid(2) as u64 * class) % 2).collect();
    let trivial = values.iter().all(|&s| s == 0);
    Ok(RealSignature { values, trivial })
}

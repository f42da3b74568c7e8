use crate::abelian_core::{ChainComplex, FgAbelianGroup, IntMatrix};

use super::PicardError;

/// Strictly commutative Picard groupoid presented by `d : C^{-1} → C^0`:
/// objects `C^0`, morphisms `x → x + d(y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PicardGroupoid {
    pub differential: IntMatrix,
}

impl PicardGroupoid {
    /// Isomorphism classes of objects, `coker d`.
    pub fn pi0(&self) -> FgAbelianGroup {
        FgAbelianGroup::cokernel(&self.differential)
    }

    /// Automorphisms of the unit, `ker d`.
    pub fn pi1(&self) -> FgAbelianGroup {
        FgAbelianGroup::free(self.differential.cols() - crate::abelian_core::snf::rank(&self.differential))
    }

    pub fn to_complex(&self) -> ChainComplex {
        ChainComplex::two_term(-1, self.differential.clone())
    }
}

pub fn dictionary(c: &ChainComplex) -> Result<PicardGroupoid, PicardError> {
    if c.lo() != -1 || c.hi() != 0 {
        return Err(PicardError::WrongDegrees { lo: c.lo(), hi: c.hi() });
    }
    Ok(PicardGroupoid { differential: c.differential(-1) })
}

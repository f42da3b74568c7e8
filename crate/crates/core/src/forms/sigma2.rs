//! Σ₂-coinvariants of `Λ̌⊗Λ̌` through the periodic resolution, truncated to
//! four terms in degrees `-3..=0`.

use num_bigint::BigInt;

use crate::abelian_core::{ChainComplex, FgAbelianGroup, IntMatrix};

use super::quad::Lattice;

/// Homology of the coinvariants complex in degrees `0, -1, -2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sigma2Homology {
    pub h0: FgAbelianGroup,
    pub hm1: FgAbelianGroup,
    pub hm2: FgAbelianGroup,
}

fn swap(r: usize) -> IntMatrix {
    let mut t = IntMatrix::zeros(r * r, r * r);
    for i in 0..r {
        for j in 0..r {
            t.set(j * r + i, i * r + j, BigInt::from(1));
        }
    }
    t
}

/// The truncated complex. Untwisted differentials alternate `1-τ, 1+τ, 1-τ`
/// reading down from degree 0; the sign twist swaps the roles.
pub fn sigma2_complex(r: usize, twisted: bool) -> ChainComplex {
    let id = IntMatrix::identity(r * r);
    let t = swap(r);
    let minus = id.sub(&t);
    let plus = id.add(&t);
    let (a, b) = if twisted { (plus, minus) } else { (minus, plus) };
    // diffs out of degrees -3, -2, -1
    ChainComplex::new(-3, vec![r * r; 4], vec![a.clone(), b, a]).expect("1-τ and 1+τ compose to zero")
}

pub fn sigma2_homology(lattice: &Lattice, twisted: bool) -> Sigma2Homology {
    let c = sigma2_complex(lattice.rank, twisted);
    Sigma2Homology {
        h0: c.homology_or_zero(0),
        hm1: c.homology_or_zero(-1),
        hm2: c.homology_or_zero(-2),
    }
}

//! `Γ`-graded algebras twisted by a 2-cochain: `x_a · x_b = ζ^{σ(a,b)} x_{a+b}`
//! with `ζ` a primitive `N`-th root of unity, exponents stored.

use crate::abelian_core::FgAbelianGroup;
use crate::util::modi;

use super::{ExtBase, ExtCocycle, PicardError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedTwistedAlgebra {
    pub grading: FgAbelianGroup,
    pub modulus: i64,
    /// `σ(a, b)` at `ia·|Γ| + ib`.
    pub sigma: Vec<i64>,
    sum: Vec<Vec<usize>>,
}

impl GradedTwistedAlgebra {
    /// From an arbitrary 2-cochain, indexed by `element_index`.
    pub fn from_cochain(grading: &FgAbelianGroup, modulus: i64, sigma: Vec<i64>) -> Result<Self, PicardError> {
        if !grading.is_finite() {
            return Err(PicardError::InfiniteBase);
        }
        let el = grading.elements();
        let g = el.len();
        if sigma.len() != g * g {
            return Err(PicardError::InvalidPairing(format!("expected {} values", g * g)));
        }
        let sum = (0..g).map(|x| (0..g).map(|y| grading.element_index(&grading.add_elements(&el[x], &el[y]))).collect()).collect();
        let sigma = sigma.into_iter().map(|v| modi(v, modulus)).collect();
        Ok(GradedTwistedAlgebra { grading: grading.clone(), modulus, sigma, sum })
    }

    pub fn dim(&self) -> usize {
        self.sum.len()
    }

    /// `x_a x_b = ζ^e x_c`, returned as `(e, c)`.
    pub fn multiply_basis(&self, a: usize, b: usize) -> (i64, usize) {
        (self.sigma[a * self.dim() + b], self.sum[a][b])
    }

    /// `(x_a x_b) x_c = ζ^e x_a (x_b x_c)`, returned as `e`.
    pub fn associator(&self, a: usize, b: usize, c: usize) -> i64 {
        let (e1, ab) = self.multiply_basis(a, b);
        let (e2, _) = self.multiply_basis(ab, c);
        let (f1, bc) = self.multiply_basis(b, c);
        let (f2, _) = self.multiply_basis(a, bc);
        modi(e1 + e2 - f1 - f2, self.modulus)
    }

    /// First basis triple where associativity fails.
    pub fn associativity_failure(&self) -> Option<(usize, usize, usize)> {
        let g = self.dim();
        (0..g).flat_map(|a| (0..g).flat_map(move |b| (0..g).map(move |c| (a, b, c)))).find(|&(a, b, c)| self.associator(a, b, c) != 0)
    }

    pub fn is_associative(&self) -> bool {
        self.associativity_failure().is_none()
    }

    /// `x_a x_b = ζ^{c(a,b)} x_b x_a`.
    pub fn commutation(&self, a: usize, b: usize) -> i64 {
        modi(self.multiply_basis(a, b).0 - self.multiply_basis(b, a).0, self.modulus)
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim()).all(|a| (0..self.dim()).all(|b| self.commutation(a, b) == 0))
    }

    /// Product of two elements given as `coeffs[basis][exponent]` over
    /// `ℤ[ζ]`, with `ζ^N = 1` and no further relations.
    pub fn multiply(&self, u: &[Vec<i64>], v: &[Vec<i64>]) -> Vec<Vec<i64>> {
        let n = self.modulus as usize;
        let mut out = vec![vec![0; n]; self.dim()];
        for (a, ua) in u.iter().enumerate() {
            for (b, vb) in v.iter().enumerate() {
                let (e, c) = self.multiply_basis(a, b);
                for (i, x) in ua.iter().enumerate() {
                    for (j, y) in vb.iter().enumerate() {
                        out[c][(i + j + e as usize) % n] += x * y;
                    }
                }
            }
        }
        out
    }
}

pub fn twist_graded_algebra(sigma: &ExtCocycle) -> Result<GradedTwistedAlgebra, PicardError> {
    let ExtBase::Finite(g) = &sigma.base else {
        return Err(PicardError::InfiniteBase);
    };
    let el = g.elements();
    let values = el.iter().flat_map(|x| el.iter().map(move |y| sigma.eval(x, y))).collect();
    GradedTwistedAlgebra::from_cochain(g, sigma.modulus, values)
}

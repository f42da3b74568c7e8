//! The symmetrized Heisenberg extension `0 → Sym²(Λ) → H⁽¹⁾(Λ) → Λ → 0`.
//!
//! Set-theoretically `H⁽¹⁾ = Sym² × Λ` with `(s₁,λ₁) + (s₂,λ₂) =
//! (s₁ + s₂ + λ₁λ₂, λ₁ + λ₂)`. The splitting `λ ↦ (q(λ), λ)` with
//! `q(λ) = Σ_{i<j} λ_iλ_j e_ie_j + Σ_i C(λ_i, 2) e_i²` is a homomorphism, so
//! `H⁽¹⁾` is free on the monomials `e_ie_j` and the lifts `ê_i = (0, e_i)`.

use num_bigint::BigInt;

use crate::abelian_core::functors::{pair_index_le, pairs_le};
use crate::abelian_core::{ChainComplex, IntMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Heisenberg1 {
    pub rank: usize,
    /// `Sym²(Λ) → H⁽¹⁾(Λ)` in the bases (monomials) and (monomials, `ê_i`).
    pub inclusion: IntMatrix,
    /// `Ȟ⁽¹⁾ → Γ²(Λ̌)`: restriction of a functional to `Sym²(Λ)`.
    pub dual_restriction: IntMatrix,
    /// `Ȟ⁽¹⁾ → Γ²(Λ̌)`: the polarization of the associated quadratic function,
    /// equal to `-dual_restriction`.
    pub polarization: IntMatrix,
}

impl Heisenberg1 {
    pub fn sym_dim(&self) -> usize {
        self.rank * (self.rank + 1) / 2
    }

    pub fn dim(&self) -> usize {
        self.sym_dim() + self.rank
    }

    /// `λ₁λ₂ ∈ Sym²(Λ)` in the monomial basis.
    pub fn cocycle(&self, x: &[i64], y: &[i64]) -> Vec<i64> {
        pairs_le(self.rank).into_iter().map(|(i, j)| if i == j { x[i] * y[i] } else { x[i] * y[j] + x[j] * y[i] }).collect()
    }

    pub fn splitting(&self, x: &[i64]) -> Vec<i64> {
        pairs_le(self.rank).into_iter().map(|(i, j)| if i == j { x[i] * (x[i] - 1) / 2 } else { x[i] * x[j] }).collect()
    }

    /// Group law in set coordinates `(s, λ)`.
    pub fn add(&self, a: &(Vec<i64>, Vec<i64>), b: &(Vec<i64>, Vec<i64>)) -> (Vec<i64>, Vec<i64>) {
        let c = self.cocycle(&a.1, &b.1);
        let s = a.0.iter().zip(&b.0).zip(&c).map(|((x, y), z)| x + y + z).collect();
        let l = a.1.iter().zip(&b.1).map(|(x, y)| x + y).collect();
        (s, l)
    }

    /// Coordinates of `(s, λ)` in the free basis: `(s - q(λ), λ)`.
    pub fn basis_coords(&self, s: &[i64], x: &[i64]) -> Vec<i64> {
        let mut out: Vec<i64> = s.iter().zip(self.splitting(x)).map(|(a, b)| a - b).collect();
        out.extend_from_slice(x);
        out
    }

    /// The function `Q(λ) = φ(0, λ)` attached to a functional `φ` given by its
    /// values on the free basis.
    pub fn dual_function(&self, phi: &[i64], x: &[i64]) -> i64 {
        self.basis_coords(&vec![0; self.sym_dim()], x).iter().zip(phi).map(|(a, b)| a * b).sum()
    }
}

pub fn heisenberg1(rank: usize) -> Heisenberg1 {
    let d = rank * (rank + 1) / 2;
    let mut inclusion = IntMatrix::zeros(d + rank, d);
    let mut dual_restriction = IntMatrix::zeros(d, d + rank);
    for k in 0..d {
        inclusion.set(k, k, BigInt::from(1));
        dual_restriction.set(k, k, BigInt::from(1));
    }
    let polarization = dual_restriction.neg();
    Heisenberg1 { rank, inclusion, dual_restriction, polarization }
}

/// `H⁽²⁾(Λ) = [Λ⊗Λ → H⁽¹⁾(Λ)]` in degrees `[-1, 0]`: projection to `Sym²`
/// followed by the inclusion.
pub fn h2_complex(rank: usize) -> ChainComplex {
    let h = heisenberg1(rank);
    let mut d = IntMatrix::zeros(h.dim(), rank * rank);
    for i in 0..rank {
        for j in 0..rank {
            d.set(pair_index_le(rank, i, j), i * rank + j, BigInt::from(1));
        }
    }
    ChainComplex::two_term(-1, d)
}

//! Central extensions `0 → ℤ/N → E → base → 1` given by biadditive cocycles.

use crate::abelian_core::FgAbelianGroup;
use crate::forms::BilinearFormModN;
use crate::util::{all_vectors, modi};

use super::PicardError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtBase {
    Lattice(usize),
    Finite(FgAbelianGroup),
}

impl ExtBase {
    pub fn num_generators(&self) -> usize {
        match self {
            ExtBase::Lattice(r) => *r,
            ExtBase::Finite(g) => g.num_generators(),
        }
    }

    /// Generator orders, `0` for infinite order.
    pub fn orders(&self) -> Vec<i64> {
        match self {
            ExtBase::Lattice(r) => vec![0; *r],
            ExtBase::Finite(g) => g.torsion_i64(),
        }
    }
}

/// `σ(x, y) = Σ x_i σ_ij y_j mod N` on generator coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtCocycle {
    pub base: ExtBase,
    pub modulus: i64,
    pub sigma: Vec<Vec<i64>>,
}

impl ExtCocycle {
    pub fn new(base: ExtBase, modulus: i64, sigma: Vec<Vec<i64>>) -> Result<Self, PicardError> {
        let k = base.num_generators();
        if sigma.len() != k || sigma.iter().any(|r| r.len() != k) {
            return Err(PicardError::InvalidPairing(format!("expected a {k}×{k} matrix")));
        }
        let orders = base.orders();
        for i in 0..k {
            for j in 0..k {
                if modi(orders[i] * sigma[i][j], modulus) != 0 || modi(sigma[i][j] * orders[j], modulus) != 0 {
                    return Err(PicardError::InvalidPairing(format!("entry ({i},{j}) is not killed by the generator orders")));
                }
            }
        }
        let sigma = sigma.into_iter().map(|r| r.into_iter().map(|x| modi(x, modulus)).collect()).collect();
        Ok(ExtCocycle { base, modulus, sigma })
    }

    /// The Heisenberg extension of `ℤ/N × ℤ/N` by `ℤ/N`, cocycle
    /// `((a₁,b₁),(a₂,b₂)) ↦ b₁a₂`.
    pub fn heisenberg(n: i64) -> Self {
        Self::new(ExtBase::Finite(FgAbelianGroup::cyclic_power(n, 2)), n, vec![vec![0, 0], vec![1, 0]]).expect("well defined")
    }

    pub fn trivial(base: ExtBase, modulus: i64) -> Self {
        let k = base.num_generators();
        ExtCocycle { base, modulus, sigma: vec![vec![0; k]; k] }
    }

    pub fn eval(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut acc = 0i64;
        for (i, xi) in x.iter().enumerate() {
            for (j, yj) in y.iter().enumerate() {
                acc = modi(acc + xi * self.sigma[i][j] % self.modulus * yj, self.modulus);
            }
        }
        acc
    }

    /// `c(x, y) = σ(x, y) - σ(y, x)`.
    pub fn commutator(&self) -> BilinearFormModN {
        let k = self.sigma.len();
        if k == 0 {
            return BilinearFormModN::zero(0, self.modulus);
        }
        let rows: Vec<Vec<i64>> = (0..k).map(|i| (0..k).map(|j| self.sigma[i][j] - self.sigma[j][i]).collect()).collect();
        BilinearFormModN::from_rows(self.modulus, &rows)
    }

    /// `x ↦ σ(x, x)` on generators.
    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.sigma.len()).map(|i| self.sigma[i][i]).collect()
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    pub fn scale(&self, k: i64) -> Self {
        let sigma = self.sigma.iter().map(|r| r.iter().map(|&x| modi(k * x, self.modulus)).collect()).collect();
        ExtCocycle { base: self.base.clone(), modulus: self.modulus, sigma }
    }

    /// Group law on `ℤ/N × base`: `(a, x)(b, y) = (a + b + σ(x, y), x + y)`.
    pub fn multiply(&self, a: &(i64, Vec<i64>), b: &(i64, Vec<i64>)) -> (i64, Vec<i64>) {
        let z = modi(a.0 + b.0 + self.eval(&a.1, &b.1), self.modulus);
        let orders = self.base.orders();
        let x = a.1.iter().zip(&b.1).zip(&orders).map(|((p, q), &d)| if d == 0 { p + q } else { (p + q).rem_euclid(d) }).collect();
        (z, x)
    }
}

pub fn extension_from_bilinear(base: ExtBase, beta: &BilinearFormModN) -> Result<ExtCocycle, PicardError> {
    let k = base.num_generators();
    let sigma = (0..k).map(|i| (0..k).map(|j| beta.get(i, j)).collect()).collect();
    ExtCocycle::new(base, beta.modulus, sigma)
}

pub fn baer_sum(e1: &ExtCocycle, e2: &ExtCocycle) -> Result<ExtCocycle, PicardError> {
    if e1.base != e2.base || e1.modulus != e2.modulus {
        return Err(PicardError::BaseMismatch);
    }
    let sigma = e1
        .sigma
        .iter()
        .zip(&e2.sigma)
        .map(|(a, b)| a.iter().zip(b).map(|(x, y)| modi(x + y, e1.modulus)).collect())
        .collect();
    Ok(ExtCocycle { base: e1.base.clone(), modulus: e1.modulus, sigma })
}

/// A function `Q` on the base with `Q(x + y) - Q(x) - Q(y) = δ(x, y)`:
/// `Q(x) = Σ_{i<j} δ_ij x_i x_j + Σ_i δ_ii C(x_i, 2) + Σ_i a_i x_i` on
/// generator coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coboundary {
    pub modulus: i64,
    pub delta: Vec<Vec<i64>>,
    pub linear: Vec<i64>,
}

impl Coboundary {
    pub fn eval(&self, x: &[i64]) -> i64 {
        let k = x.len();
        let mut acc = 0i64;
        for i in 0..k {
            acc += self.delta[i][i] * modi(x[i] * (x[i] - 1) / 2, self.modulus) + self.linear[i] * x[i];
            for j in i + 1..k {
                acc += self.delta[i][j] * modi(x[i] * x[j], self.modulus);
            }
            acc = modi(acc, self.modulus);
        }
        acc
    }
}

/// An isomorphism `(a, x) ↦ (a + Q(x), x)` from `e2` to `e1`, when one exists.
///
/// Requires equal commutators. Over a lattice one always exists; over a
/// finite base the linear part is searched exhaustively so that `Q` descends.
pub fn isomorphism_witness(e1: &ExtCocycle, e2: &ExtCocycle) -> Result<Option<Coboundary>, PicardError> {
    if e1.base != e2.base || e1.modulus != e2.modulus {
        return Err(PicardError::BaseMismatch);
    }
    if e1.commutator() != e2.commutator() {
        return Ok(None);
    }
    let n = e1.modulus;
    let delta = baer_sum(e1, &e2.neg())?.sigma;
    let k = delta.len();
    match &e1.base {
        ExtBase::Lattice(_) => Ok(Some(Coboundary { modulus: n, delta, linear: vec![0; k] })),
        ExtBase::Finite(g) => {
            let elements = g.elements();
            let d = ExtCocycle { base: e1.base.clone(), modulus: n, sigma: delta.clone() };
            for linear in all_vectors(k, n) {
                let q = Coboundary { modulus: n, delta: delta.clone(), linear };
                // Descends to the group: agrees on representatives shifted by a generator order.
                let orders = g.torsion_i64();
                let descends = elements.iter().all(|x| {
                    (0..k).all(|i| {
                        let mut y = x.clone();
                        y[i] += orders[i];
                        q.eval(&y) == q.eval(x)
                    })
                });
                if descends
                    && elements.iter().all(|x| {
                        elements.iter().all(|y| modi(q.eval(&g.add_elements(x, y)) - q.eval(x) - q.eval(y), n) == d.eval(x, y))
                    })
                {
                    return Ok(Some(q));
                }
            }
            Ok(None)
        }
    }
}

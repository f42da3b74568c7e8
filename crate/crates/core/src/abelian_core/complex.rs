use num_bigint::BigInt;
use num_traits::One;

use super::group::FgAbelianGroup;
use super::matrix::IntMatrix;
use super::snf::smith_normal_form;
use super::AbelianError;

/// Cochain complex of free abelian groups of finite rank, concentrated in
/// degrees `lo..=hi`, with differentials `d^n : C^n → C^{n+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    lo: i32,
    ranks: Vec<usize>,
    diffs: Vec<IntMatrix>,
}

/// Degreewise matrices `f^n : C^n → D^n` of a cochain map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    pub lo: i32,
    pub components: Vec<IntMatrix>,
}

impl ChainComplex {
    /// `diffs[k]` is the differential out of degree `lo + k`.
    pub fn new(lo: i32, ranks: Vec<usize>, diffs: Vec<IntMatrix>) -> Result<Self, AbelianError> {
        if ranks.is_empty() {
            return Err(AbelianError::Shape("complex needs at least one degree".into()));
        }
        if diffs.len() + 1 != ranks.len() {
            return Err(AbelianError::Shape(format!(
                "{} degrees need {} differentials, got {}",
                ranks.len(),
                ranks.len() - 1,
                diffs.len()
            )));
        }
        for (k, d) in diffs.iter().enumerate() {
            if d.rows() != ranks[k + 1] || d.cols() != ranks[k] {
                return Err(AbelianError::Shape(format!(
                    "d^{} is {}x{}, expected {}x{}",
                    lo + k as i32,
                    d.rows(),
                    d.cols(),
                    ranks[k + 1],
                    ranks[k]
                )));
            }
        }
        for k in 1..diffs.len() {
            if !(&diffs[k] * &diffs[k - 1]).is_zero() {
                return Err(AbelianError::NotAComplex(lo + k as i32 - 1));
            }
        }
        Ok(ChainComplex { lo, ranks, diffs })
    }

    /// Two-term complex `[source →m target]` with the source in degree `lo`.
    pub fn two_term(lo: i32, m: IntMatrix) -> Self {
        Self::new(lo, vec![m.cols(), m.rows()], vec![m]).expect("two-term complex")
    }

    /// Single free group in one degree.
    pub fn concentrated(degree: i32, rank: usize) -> Self {
        Self::new(degree, vec![rank], vec![]).expect("one-term complex")
    }

    /// Homological input `C_hi → … → C_lo` (differentials lowering degree)
    /// reindexed as the cochain complex `C^{-n} = C_n`. `boundaries[k]` is
    /// `∂ : C_{hi-k} → C_{hi-k-1}`.
    pub fn from_homological(hi: i32, ranks_desc: Vec<usize>, boundaries: Vec<IntMatrix>) -> Result<Self, AbelianError> {
        Self::new(-hi, ranks_desc, boundaries)
    }

    pub fn lo(&self) -> i32 {
        self.lo
    }

    pub fn hi(&self) -> i32 {
        self.lo + self.ranks.len() as i32 - 1
    }

    pub fn rank(&self, n: i32) -> usize {
        if n < self.lo || n > self.hi() {
            0
        } else {
            self.ranks[(n - self.lo) as usize]
        }
    }

    /// Differential out of degree `n` (zero matrices outside the range).
    pub fn differential(&self, n: i32) -> IntMatrix {
        if n >= self.lo && n < self.hi() {
            self.diffs[(n - self.lo) as usize].clone()
        } else {
            IntMatrix::zeros(self.rank(n + 1), self.rank(n))
        }
    }

    /// `H^n = ker d^n / im d^{n-1}`.
    pub fn homology(&self, n: i32) -> Result<FgAbelianGroup, AbelianError> {
        if n < self.lo || n > self.hi() {
            return Err(AbelianError::DegreeOutOfRange { degree: n, lo: self.lo, hi: self.hi() });
        }
        Ok(subquotient(&self.differential(n), &self.differential(n - 1)))
    }

    /// Homology in every degree, or the trivial group outside the range.
    pub fn homology_or_zero(&self, n: i32) -> FgAbelianGroup {
        self.homology(n).unwrap_or_else(|_| FgAbelianGroup::trivial())
    }

    pub fn euler_characteristic(&self) -> i64 {
        (self.lo..=self.hi())
            .map(|n| if n.rem_euclid(2) == 0 { self.rank(n) as i64 } else { -(self.rank(n) as i64) })
            .sum()
    }

    /// `C[k]^n = C^{n+k}` with differential `(-1)^k d`.
    pub fn shift(&self, k: i32) -> Self {
        let sign = if k.rem_euclid(2) == 0 { BigInt::one() } else { -BigInt::one() };
        ChainComplex {
            lo: self.lo - k,
            ranks: self.ranks.clone(),
            diffs: self.diffs.iter().map(|d| d.scale(&sign)).collect(),
        }
    }

    /// Restricts to degrees `lo..=hi`, padding with zero groups when needed.
    pub fn spanning(&self, lo: i32, hi: i32) -> Self {
        let ranks: Vec<usize> = (lo..=hi).map(|n| self.rank(n)).collect();
        let diffs: Vec<IntMatrix> = (lo..hi).map(|n| self.differential(n)).collect();
        ChainComplex { lo, ranks, diffs }
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let lo = self.lo.min(other.lo);
        let hi = self.hi().max(other.hi());
        let ranks = (lo..=hi).map(|n| self.rank(n) + other.rank(n)).collect();
        let diffs = (lo..hi)
            .map(|n| self.differential(n).block_diag(&other.differential(n)))
            .collect();
        ChainComplex { lo, ranks, diffs }
    }

    /// Applies a unimodular basis change `P_n` in every degree:
    /// `d'^n = P_{n+1} d^n P_n^{-1}`. `bases[k]` is `(P, P^{-1})` for degree `lo+k`.
    pub fn change_basis(&self, bases: &[(IntMatrix, IntMatrix)]) -> Self {
        assert_eq!(bases.len(), self.ranks.len());
        let diffs = self
            .diffs
            .iter()
            .enumerate()
            .map(|(k, d)| &(&bases[k + 1].0 * d) * &bases[k].1)
            .collect();
        ChainComplex { lo: self.lo, ranks: self.ranks.clone(), diffs }
    }
}

impl ChainMap {
    pub fn component(&self, n: i32, source: &ChainComplex, target: &ChainComplex) -> IntMatrix {
        let k = n - self.lo;
        if k >= 0 && (k as usize) < self.components.len() {
            self.components[k as usize].clone()
        } else {
            IntMatrix::zeros(target.rank(n), source.rank(n))
        }
    }

    /// Checks shapes and `d f = f d` in every degree.
    pub fn is_chain_map(&self, source: &ChainComplex, target: &ChainComplex) -> bool {
        let lo = source.lo().min(target.lo()) - 1;
        let hi = source.hi().max(target.hi()) + 1;
        for n in lo..=hi {
            let f = self.component(n, source, target);
            if f.rows() != target.rank(n) || f.cols() != source.rank(n) {
                return false;
            }
        }
        (lo..hi).all(|n| {
            let lhs = &target.differential(n) * &self.component(n, source, target);
            let rhs = &self.component(n + 1, source, target) * &source.differential(n);
            lhs == rhs
        })
    }
}

/// Mapping cone of `f : C → D`: `cone^n = C^{n+1} ⊕ D^n`,
/// `d(c, x) = (-d c, f c + d x)`.
pub fn cone(f: &ChainMap, source: &ChainComplex, target: &ChainComplex) -> Result<ChainComplex, AbelianError> {
    if !f.is_chain_map(source, target) {
        return Err(AbelianError::NotAChainMap);
    }
    let lo = (source.lo() - 1).min(target.lo());
    let hi = (source.hi() - 1).max(target.hi());
    let ranks: Vec<usize> = (lo..=hi).map(|n| source.rank(n + 1) + target.rank(n)).collect();
    let mut diffs = Vec::new();
    for n in lo..hi {
        let dc = source.differential(n + 1).neg();
        let fc = f.component(n + 1, source, target);
        let dd = target.differential(n);
        let top = dc.hstack(&IntMatrix::zeros(source.rank(n + 2), target.rank(n)));
        let bottom = fc.hstack(&dd);
        diffs.push(top.vstack(&bottom));
    }
    ChainComplex::new(lo, ranks, diffs)
}

/// Homotopy fiber `cone(f)[-1]`.
pub fn fiber(f: &ChainMap, source: &ChainComplex, target: &ChainComplex) -> Result<ChainComplex, AbelianError> {
    Ok(cone(f, source, target)?.shift(-1))
}

/// `ker(b) / im(a)` for composable `a : X → Y`, `b : Y → Z` with `b a = 0`.
pub fn subquotient(b: &IntMatrix, a: &IntMatrix) -> FgAbelianGroup {
    assert_eq!(b.cols(), a.rows());
    let snf = smith_normal_form(b);
    let k = snf.rank();
    let y = a.rows();
    let coords = &snf.v_inv * a;
    let idx: Vec<usize> = (k..y).collect();
    FgAbelianGroup::cokernel(&coords.select_rows(&idx))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplication_by_two() {
        let c = ChainComplex::two_term(-1, IntMatrix::from_rows(&[[2]]));
        assert_eq!(c.homology(0).unwrap(), FgAbelianGroup::cyclic(2));
        assert!(c.homology(-1).unwrap().is_trivial());
        assert!(matches!(c.homology(1), Err(AbelianError::DegreeOutOfRange { .. })));
    }

    #[test]
    fn rejects_non_complex() {
        let d = IntMatrix::from_rows(&[[1]]);
        assert!(matches!(
            ChainComplex::new(0, vec![1, 1, 1], vec![d.clone(), d]),
            Err(AbelianError::NotAComplex(0))
        ));
    }

    #[test]
    fn cone_of_identity_is_acyclic() {
        let c = ChainComplex::two_term(0, IntMatrix::from_rows(&[[3]]));
        let id = ChainMap { lo: 0, components: vec![IntMatrix::identity(1), IntMatrix::identity(1)] };
        let k = cone(&id, &c, &c).unwrap();
        for n in k.lo()..=k.hi() {
            assert!(k.homology(n).unwrap().is_trivial());
        }
    }

    #[test]
    fn cone_long_exact_sequence_example() {
        // f = ×2 : ℤ[0] → ℤ[0]; cone has H^{-1} = 0, H^0 = ℤ/2.
        let c = ChainComplex::concentrated(0, 1);
        let f = ChainMap { lo: 0, components: vec![IntMatrix::from_rows(&[[2]])] };
        let k = cone(&f, &c, &c).unwrap();
        assert!(k.homology(-1).unwrap().is_trivial());
        assert_eq!(k.homology(0).unwrap(), FgAbelianGroup::cyclic(2));
    }
}

//! Cosimplicial limits of `[n] ↦ F(Λ̌^{⊕n})` computed on the normalized
//! (nondegenerate) cochain complex.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::complex::{cone, ChainComplex, ChainMap};
use super::functors::{apply, free_dim, norm, FunctorTag};
use super::group::FgAbelianGroup;
use super::matrix::IntMatrix;
use super::snf::{kernel_basis, solve_matrix};

/// Coface `d^i : Λ̌^{⊕(n-1)} → Λ̌^{⊕n}` for `0 ≤ i ≤ n`: `d^0` inserts 0 in
/// front, `d^n` appends 0, and `d^i` otherwise repeats the `i`-th entry.
pub fn coface(r: usize, n: usize, i: usize) -> IntMatrix {
    assert!(n >= 1 && i <= n);
    let mut m = IntMatrix::zeros(r * n, r * (n - 1));
    for out_block in 0..n {
        let src = if i == 0 {
            out_block.checked_sub(1)
        } else if i == n {
            (out_block < n - 1).then_some(out_block)
        } else if out_block < i {
            Some(out_block)
        } else {
            Some(out_block - 1)
        };
        if let Some(s) = src {
            for k in 0..r {
                m.set(out_block * r + k, s * r + k, BigInt::one());
            }
        }
    }
    m
}

/// Codegeneracy `s^j : Λ̌^{⊕(n+1)} → Λ̌^{⊕n}` for `0 ≤ j ≤ n`: drops entry `j`.
pub fn codegeneracy(r: usize, n: usize, j: usize) -> IntMatrix {
    assert!(j <= n);
    let mut m = IntMatrix::zeros(r * n, r * (n + 1));
    for in_block in 0..=n {
        if in_block == j {
            continue;
        }
        let out_block = if in_block < j { in_block } else { in_block - 1 };
        for k in 0..r {
            m.set(out_block * r + k, in_block * r + k, BigInt::one());
        }
    }
    m
}

/// Basis (columns) of the nondegenerate `n`-cochains of `F` on `Λ̌ = ℤ^r`.
fn nondegenerate_basis(tag: FunctorTag, r: usize, n: usize) -> IntMatrix {
    let dim = free_dim(tag, r * n);
    if n == 0 {
        return IntMatrix::zeros(dim, dim);
    }
    let mut stacked = IntMatrix::zeros(0, dim);
    for j in 0..n {
        stacked = stacked.vstack(&apply(tag, &codegeneracy(r, n - 1, j)));
    }
    kernel_basis(&stacked)
}

fn full_differential(tag: FunctorTag, r: usize, n: usize) -> IntMatrix {
    let mut d = IntMatrix::zeros(free_dim(tag, r * (n + 1)), free_dim(tag, r * n));
    for i in 0..=n + 1 {
        let term = apply(tag, &coface(r, n + 1, i));
        d = if i % 2 == 0 { d.add(&term) } else { d.sub(&term) };
    }
    d
}

/// Normalized cochain complex of `F(Λ̌^{⊕•})` in degrees `0..=top`, together
/// with the lattice bases used in each degree.
pub fn normalized_complex(tag: FunctorTag, r: usize, top: usize) -> (ChainComplex, Vec<IntMatrix>) {
    let bases: Vec<IntMatrix> = (0..=top).map(|n| nondegenerate_basis(tag, r, n)).collect();
    let mut diffs = Vec::new();
    for n in 0..top {
        let image = &full_differential(tag, r, n) * &bases[n];
        let d = solve_matrix(&bases[n + 1], &image)
            .expect("differential preserves nondegenerate cochains");
        diffs.push(d);
    }
    let ranks = bases.iter().map(|b| b.cols()).collect();
    (ChainComplex::new(0, ranks, diffs).expect("normalized cochains form a complex"), bases)
}

/// Complex computing the cosimplicial limit of `F` in degrees `0..=top`.
/// For `Ant2` this is the cone of the norm `N(Sym²) → N(⊗²)`, since `Ant²`
/// is the cokernel of the (degreewise injective) norm.
pub fn limit_complex(tag: FunctorTag, r: usize, top: usize) -> ChainComplex {
    if tag != FunctorTag::Ant2 {
        return normalized_complex(tag, r, top).0;
    }
    let (sym, sym_bases) = normalized_complex(FunctorTag::Sym2, r, top + 1);
    let (ten, ten_bases) = normalized_complex(FunctorTag::Tensor2, r, top + 1);
    let components = (0..=top + 1)
        .map(|n| {
            let image = &norm(r * n) * &sym_bases[n];
            solve_matrix(&ten_bases[n], &image).expect("norm preserves nondegenerate cochains")
        })
        .collect();
    let f = ChainMap { lo: 0, components };
    cone(&f, &sym, &ten).expect("norm is a chain map").spanning(0, top as i32)
}

/// Right-hand side predicted for the limit of `F` in cochain degree `n`.
pub fn expected_limit(tag: FunctorTag, r: usize, n: i32) -> FgAbelianGroup {
    let wedge = r * r.saturating_sub(1) / 2;
    let sym = r * (r + 1) / 2;
    match (tag, n) {
        (FunctorTag::Id, 1) => FgAbelianGroup::free(r),
        (FunctorTag::Tensor2, 2) => FgAbelianGroup::free(r * r),
        (FunctorTag::Gamma2, 2) => FgAbelianGroup::free(wedge),
        (FunctorTag::Wedge2, 2) => FgAbelianGroup::free(sym),
        (FunctorTag::Sym2, 2) => FgAbelianGroup::free(wedge).direct_sum(&FgAbelianGroup::cyclic_power(2, r)),
        (FunctorTag::Hcheck1, 1) => FgAbelianGroup::free(r),
        (FunctorTag::Hcheck1, 2) => FgAbelianGroup::free(wedge),
        // Long exact sequence of the cone of the norm: H^2(Sym²) = Ant² maps to
        // H^2(⊗²) with kernel the 2-torsion Λ̌/2 and free cokernel of rank r(r+1)/2.
        (FunctorTag::Ant2, 1) => FgAbelianGroup::cyclic_power(2, r),
        (FunctorTag::Ant2, 2) => FgAbelianGroup::free(sym),
        _ => FgAbelianGroup::trivial(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeRow {
    pub degree: i32,
    pub computed: FgAbelianGroup,
    pub expected: FgAbelianGroup,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosimplicialReport {
    pub rank: usize,
    pub tag: FunctorTag,
    pub max_degree: usize,
    pub rows: Vec<DegreeRow>,
}

impl CosimplicialReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.computed == r.expected)
    }
}

impl fmt::Display for CosimplicialReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "cosimplicial limit: functor={} rank={} max_degree={}", self.tag, self.rank, self.max_degree)?;
        for row in &self.rows {
            let mark = if row.computed == row.expected { "ok" } else { "MISMATCH" };
            writeln!(f, "  H^{} computed={} expected={} {}", row.degree, row.computed, row.expected, mark)?;
        }
        write!(f, "  verdict={}", if self.passed() { "pass" } else { "fail" })
    }
}

/// Builds the normalized complex for `F(Λ̌^{⊕•})`, `Λ̌ = ℤ^r`, and compares
/// its cohomology in degrees `0..=max_degree` with [`expected_limit`].
/// A mismatch is reported in the result, not raised.
pub fn cosimplicial_limit_check(r: usize, tag: FunctorTag, max_degree: usize) -> CosimplicialReport {
    assert!(r >= 1 && max_degree >= 3, "needs rank ≥ 1 and max_degree ≥ 3");
    let c = limit_complex(tag, r, max_degree + 1);
    let rows = (0..=max_degree as i32)
        .map(|n| DegreeRow {
            degree: n,
            computed: c.homology_or_zero(n),
            expected: expected_limit(tag, r, n),
        })
        .collect();
    CosimplicialReport { rank: r, tag, max_degree, rows }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cosimplicial_identities() {
        let r = 2;
        for n in 1..4 {
            // d^j d^i = d^i d^{j-1} for i < j
            for j in 0..=n + 1 {
                for i in 0..j {
                    let lhs = &coface(r, n + 1, j) * &coface(r, n, i);
                    let rhs = &coface(r, n + 1, i) * &coface(r, n, j - 1);
                    assert_eq!(lhs, rhs, "n={n} i={i} j={j}");
                }
            }
            // s^j d^j = s^j d^{j+1} = id
            for j in 0..n {
                let id = IntMatrix::identity(r * n);
                assert_eq!(&codegeneracy(r, n, j) * &coface(r, n + 1, j), id);
                assert_eq!(&codegeneracy(r, n, j) * &coface(r, n + 1, j + 1), id);
            }
        }
    }

    #[test]
    fn identity_functor_rank_one() {
        let rep = cosimplicial_limit_check(1, FunctorTag::Id, 3);
        assert!(rep.passed(), "{rep}");
        assert_eq!(rep.rows[1].computed, FgAbelianGroup::free(1));
    }

    #[test]
    fn sym2_rank_one_is_two_torsion_in_degree_two() {
        let rep = cosimplicial_limit_check(1, FunctorTag::Sym2, 3);
        let nonzero: Vec<_> = rep.rows.iter().filter(|r| !r.computed.is_trivial()).collect();
        assert_eq!(nonzero.len(), 1);
        assert_eq!(nonzero[0].degree, 2);
        assert_eq!(nonzero[0].computed, FgAbelianGroup::cyclic(2));
    }

    #[test]
    fn hcheck1_rank_two() {
        let rep = cosimplicial_limit_check(2, FunctorTag::Hcheck1, 3);
        assert!(rep.passed(), "{rep}");
        assert_eq!(rep.rows[1].computed, FgAbelianGroup::free(2));
        assert_eq!(rep.rows[2].computed, FgAbelianGroup::free(1));
    }
}

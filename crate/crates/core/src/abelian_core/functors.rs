//! Quadratic functors on free modules `ℤ^m`, with explicit bases and their
//! action on matrices. `Ant²` is not free and is handled as the cokernel of
//! [`norm`] by callers.
//!
//! Bases, for `ℤ^m` with standard basis `e_i`:
//! - `Tensor2`: `e_i⊗e_j`, index `i*m + j`.
//! - `Sym2` (coinvariants): monomials `e_i e_j`, `i ≤ j`, in [`pairs_le`] order.
//! - `Gamma2` (invariants): `e_i⊗e_i` and `e_i⊗e_j + e_j⊗e_i` (`i < j`), same order.
//! - `Wedge2`: `e_i∧e_j`, `i < j`, in [`pairs_lt`] order.
//! - `Hcheck1`: quadratic functions `Q` on the dual lattice with `Q(0) = 0`;
//!   coordinates `Q(e_i)` for each `i`, then `Q(2e_i) - 2Q(e_i)` for each `i`,
//!   then `Q(e_i+e_j) - Q(e_i) - Q(e_j)` for `i < j`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use super::matrix::IntMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FunctorTag {
    Id,
    Tensor2,
    Gamma2,
    Wedge2,
    Sym2,
    Ant2,
    Hcheck1,
}

impl FunctorTag {
    pub const ALL: [FunctorTag; 7] = [
        FunctorTag::Id,
        FunctorTag::Tensor2,
        FunctorTag::Gamma2,
        FunctorTag::Wedge2,
        FunctorTag::Sym2,
        FunctorTag::Ant2,
        FunctorTag::Hcheck1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FunctorTag::Id => "Id",
            FunctorTag::Tensor2 => "Tensor2",
            FunctorTag::Gamma2 => "Gamma2",
            FunctorTag::Wedge2 => "Wedge2",
            FunctorTag::Sym2 => "Sym2",
            FunctorTag::Ant2 => "Ant2",
            FunctorTag::Hcheck1 => "Hcheck1",
        }
    }
}

impl fmt::Display for FunctorTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FunctorTag {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        FunctorTag::ALL
            .iter()
            .copied()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown functor tag {s:?}"))
    }
}

pub fn pairs_le(m: usize) -> Vec<(usize, usize)> {
    (0..m).flat_map(|i| (i..m).map(move |j| (i, j))).collect()
}

pub fn pairs_lt(m: usize) -> Vec<(usize, usize)> {
    (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).collect()
}

pub fn pair_index_le(m: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    i * m - i * i.saturating_sub(1) / 2 + (j - i)
}

pub fn pair_index_lt(m: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    i * (m - 1) - i * i.saturating_sub(1) / 2 + (j - i - 1)
}

/// Rank of `F(ℤ^m)` for the free functors.
pub fn free_dim(tag: FunctorTag, m: usize) -> usize {
    match tag {
        FunctorTag::Id => m,
        FunctorTag::Tensor2 => m * m,
        FunctorTag::Gamma2 | FunctorTag::Sym2 => m * (m + 1) / 2,
        FunctorTag::Wedge2 => m * m.saturating_sub(1) / 2,
        FunctorTag::Hcheck1 => 2 * m + m * m.saturating_sub(1) / 2,
        FunctorTag::Ant2 => panic!("Ant2 is not a free functor"),
    }
}

/// `F(f)` for `f : ℤ^m → ℤ^k` given as a `k×m` matrix.
pub fn apply(tag: FunctorTag, f: &IntMatrix) -> IntMatrix {
    match tag {
        FunctorTag::Id => f.clone(),
        FunctorTag::Tensor2 => kron(f, f),
        FunctorTag::Sym2 => apply_sym2(f),
        FunctorTag::Gamma2 => apply_gamma2(f),
        FunctorTag::Wedge2 => apply_wedge2(f),
        FunctorTag::Hcheck1 => apply_hcheck1(f),
        FunctorTag::Ant2 => panic!("Ant2 is not a free functor"),
    }
}

pub fn kron(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let mut out = IntMatrix::zeros(a.rows() * b.rows(), a.cols() * b.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let x = a.get(i, j);
            if x.is_zero() {
                continue;
            }
            for k in 0..b.rows() {
                for l in 0..b.cols() {
                    let y = b.get(k, l);
                    if !y.is_zero() {
                        out.set(i * b.rows() + k, j * b.cols() + l, x * y);
                    }
                }
            }
        }
    }
    out
}

fn apply_sym2(f: &IntMatrix) -> IntMatrix {
    let (k, m) = (f.rows(), f.cols());
    let src = pairs_le(m);
    let mut out = IntMatrix::zeros(k * (k + 1) / 2, src.len());
    for (c, &(i, j)) in src.iter().enumerate() {
        for a in 0..k {
            for b in 0..k {
                let v = f.get(a, i) * f.get(b, j);
                if !v.is_zero() {
                    out.add_to(pair_index_le(k, a, b), c, &v);
                }
            }
        }
    }
    out
}

fn apply_gamma2(f: &IntMatrix) -> IntMatrix {
    let (k, m) = (f.rows(), f.cols());
    let t = kron(f, f);
    let src = pairs_le(m);
    let tgt = pairs_le(k);
    let mut out = IntMatrix::zeros(tgt.len(), src.len());
    for (c, &(i, j)) in src.iter().enumerate() {
        let mut v = t.column(i * m + j);
        if i != j {
            let w = t.column(j * m + i);
            for (x, y) in v.iter_mut().zip(w) {
                *x += y;
            }
        }
        for (r, &(a, b)) in tgt.iter().enumerate() {
            out.set(r, c, v[a * k + b].clone());
        }
    }
    out
}

fn apply_wedge2(f: &IntMatrix) -> IntMatrix {
    let (k, m) = (f.rows(), f.cols());
    let src = pairs_lt(m);
    let mut out = IntMatrix::zeros(k * k.saturating_sub(1) / 2, src.len());
    for (c, &(i, j)) in src.iter().enumerate() {
        for a in 0..k {
            for b in 0..k {
                if a == b {
                    continue;
                }
                let v = f.get(a, i) * f.get(b, j);
                if v.is_zero() {
                    continue;
                }
                if a < b {
                    out.add_to(pair_index_lt(k, a, b), c, &v);
                } else {
                    out.add_to(pair_index_lt(k, b, a), c, &-v);
                }
            }
        }
    }
    out
}

/// Evaluates the quadratic function with `Hcheck1` coordinates `coords` at `x`.
pub fn eval_quadratic_function(coords: &[BigInt], x: &[BigInt]) -> BigInt {
    let m = x.len();
    let mut acc = BigInt::zero();
    for i in 0..m {
        acc += &coords[i] * &x[i];
        // binom(x_i, 2)
        let b: BigInt = (&x[i] * (&x[i] - 1)) / 2;
        acc += &coords[m + i] * b;
    }
    for (p, &(i, j)) in pairs_lt(m).iter().enumerate() {
        acc += &coords[2 * m + p] * &x[i] * &x[j];
    }
    acc
}

/// `Hcheck1` coordinates of a function given by evaluation.
pub fn quadratic_function_coords(m: usize, eval: impl Fn(&[BigInt]) -> BigInt) -> Vec<BigInt> {
    let unit = |i: usize, k: i64| -> Vec<BigInt> {
        (0..m).map(|a| if a == i { BigInt::from(k) } else { BigInt::zero() }).collect()
    };
    let mut out = Vec::with_capacity(free_dim(FunctorTag::Hcheck1, m));
    let q1: Vec<BigInt> = (0..m).map(|i| eval(&unit(i, 1))).collect();
    out.extend(q1.iter().cloned());
    for i in 0..m {
        out.push(eval(&unit(i, 2)) - 2 * &q1[i]);
    }
    for (i, j) in pairs_lt(m) {
        let mut v = unit(i, 1);
        v[j] = BigInt::from(1);
        out.push(eval(&v) - &q1[i] - &q1[j]);
    }
    out
}

fn apply_hcheck1(f: &IntMatrix) -> IntMatrix {
    // Covariant in Λ̌: Q ↦ Q ∘ fᵀ.
    let (k, m) = (f.rows(), f.cols());
    let g = f.transpose();
    let n_src = free_dim(FunctorTag::Hcheck1, m);
    let cols: Vec<Vec<BigInt>> = (0..n_src)
        .map(|c| {
            let mut basis = vec![BigInt::zero(); n_src];
            basis[c] = BigInt::from(1);
            quadratic_function_coords(k, |x| eval_quadratic_function(&basis, &g.mul_vec(x)))
        })
        .collect();
    IntMatrix::from_columns(free_dim(FunctorTag::Hcheck1, k), &cols)
}

/// Norm map `Sym² → ⊗²`: `e_i e_j ↦ e_i⊗e_j + e_j⊗e_i`, `e_i e_i ↦ 2 e_i⊗e_i`.
/// Its cokernel is `Ant²`.
pub fn norm(m: usize) -> IntMatrix {
    let src = pairs_le(m);
    let mut out = IntMatrix::zeros(m * m, src.len());
    for (c, &(i, j)) in src.iter().enumerate() {
        out.add_to(i * m + j, c, &BigInt::from(1));
        out.add_to(j * m + i, c, &BigInt::from(1));
    }
    out
}

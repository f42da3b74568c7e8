use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

/// Result of a Smith normal form computation: `u * m * v == d`.
///
/// The inverses of `u` and `v` are tracked alongside so callers can move
/// between the original and the diagonal coordinates without inverting.
#[derive(Clone, Debug)]
pub struct Snf {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
}

impl Snf {
    /// Nonzero diagonal entries, in order (a divisor chain).
    pub fn invariants(&self) -> Vec<BigInt> {
        let k = self.d.rows().min(self.d.cols());
        (0..k)
            .map(|i| self.d.get(i, i).clone())
            .take_while(|x| !x.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariants().len()
    }
}

struct State {
    a: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl State {
    fn row_add(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.a.add_row_multiple(dst, src, k);
        self.u.add_row_multiple(dst, src, k);
        self.u_inv.add_col_multiple(src, dst, &-k);
    }

    fn col_add(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.a.add_col_multiple(dst, src, k);
        self.v.add_col_multiple(dst, src, k);
        self.v_inv.add_row_multiple(src, dst, &-k);
    }

    fn row_swap(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
        self.u_inv.swap_cols(i, j);
    }

    fn col_swap(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
        self.v_inv.swap_rows(i, j);
    }

    fn row_negate(&mut self, i: usize) {
        self.a.negate_row(i);
        self.u.negate_row(i);
        self.u_inv.negate_col(i);
    }

    /// Smallest nonzero |entry| in the trailing block, ties broken row-major.
    fn pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(BigInt, usize, usize)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = self.a.get(i, j);
                if x.is_zero() {
                    continue;
                }
                let ax = x.abs();
                if best.as_ref().map_or(true, |(b, _, _)| ax < *b) {
                    best = Some((ax, i, j));
                }
            }
        }
        best.map(|(_, i, j)| (i, j))
    }
}

/// Smith normal form over ℤ with exact arithmetic.
///
/// Pivot rule: the smallest nonzero absolute value in the remaining block,
/// ties broken in row-major order. The output is deterministic.
pub fn smith_normal_form(m: &IntMatrix) -> Snf {
    let (rows, cols) = (m.rows(), m.cols());
    let mut s = State {
        a: m.clone(),
        u: IntMatrix::identity(rows),
        u_inv: IntMatrix::identity(rows),
        v: IntMatrix::identity(cols),
        v_inv: IntMatrix::identity(cols),
    };
    for t in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = s.pivot(t) else {
                return finish(s);
            };
            s.row_swap(t, pi);
            s.col_swap(t, pj);
            let p = s.a.get(t, t).clone();
            let mut dirty = false;
            for i in t + 1..rows {
                let x = s.a.get(i, t).clone();
                if x.is_zero() {
                    continue;
                }
                let q = x.div_floor(&p);
                s.row_add(i, t, &-q);
                dirty |= !s.a.get(i, t).is_zero();
            }
            for j in t + 1..cols {
                let x = s.a.get(t, j).clone();
                if x.is_zero() {
                    continue;
                }
                let q = x.div_floor(&p);
                s.col_add(j, t, &-q);
                dirty |= !s.a.get(t, j).is_zero();
            }
            if dirty {
                continue;
            }
            let offender = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !s.a.get(i, j).is_multiple_of(&p))
            });
            match offender {
                Some(i) => s.row_add(t, i, &BigInt::one()),
                None => break,
            }
        }
        if s.a.get(t, t).is_negative() {
            s.row_negate(t);
        }
    }
    finish(s)
}

fn finish(s: State) -> Snf {
    Snf {
        u: s.u,
        d: s.a,
        v: s.v,
        u_inv: s.u_inv,
        v_inv: s.v_inv,
    }
}

/// Basis (as columns) of the kernel of `m`; the kernel is saturated.
pub fn kernel_basis(m: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(m);
    let k = snf.rank();
    let idx: Vec<usize> = (k..m.cols()).collect();
    snf.v.select_cols(&idx)
}

/// Integer solution of `a · x = b`, if one exists.
pub fn solve(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(a.rows(), b.len());
    let snf = smith_normal_form(a);
    let c = snf.u.mul_vec(b);
    let inv = snf.invariants();
    let mut y = vec![BigInt::zero(); a.cols()];
    for (i, ci) in c.iter().enumerate() {
        if i < inv.len() {
            let (q, r) = ci.div_rem(&inv[i]);
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        } else if !ci.is_zero() {
            return None;
        }
    }
    Some(snf.v.mul_vec(&y))
}

/// Solves `a · X = b` column by column.
pub fn solve_matrix(a: &IntMatrix, b: &IntMatrix) -> Option<IntMatrix> {
    let cols: Option<Vec<Vec<BigInt>>> = (0..b.cols()).map(|j| solve(a, &b.column(j))).collect();
    Some(IntMatrix::from_columns(a.cols(), &cols?))
}

/// Rank over ℚ.
pub fn rank(m: &IntMatrix) -> usize {
    smith_normal_form(m).rank()
}

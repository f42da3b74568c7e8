//! Strict quadratic forms: `b(α, λ) = ⟨α̌, λ⟩ Q(α)` for simple coroots `α`.

use num_bigint::BigInt;
use thiserror::Error;

use crate::abelian_core::functors::pairs_le;
use crate::abelian_core::snf::kernel_basis;
use crate::abelian_core::{kernel_mod_n, FgAbelianGroup, IntMatrix};
use crate::forms::{polarize, QuadForm};
use crate::util::{modi, to_i64};

use super::datum::BasedRootDatum;
use super::weyl::{reflection_matrix, Mat, WeylGroup};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StrictError {
    #[error("form has rank {form} but the datum has rank {datum}")]
    LatticeMismatch { form: usize, datum: usize },
}

/// Stored witness that strictness is stronger than `W`-invariance: `SL2×SL2`,
/// `N = 2`, `Q = x₁x₂`.
pub const W_INVARIANT_NOT_STRICT: (&str, i64, &str) = ("SL2xSL2", 2, "x1x2");

fn strict_at(rd: &BasedRootDatum, q: &QuadForm, coroots: &[usize]) -> bool {
    let b = polarize(q);
    let n = q.modulus();
    coroots.iter().all(|&k| {
        let (a, x) = (&rd.coroots[k], &rd.roots[k]);
        let qa = q.eval(a);
        (0..rd.rank).all(|l| {
            let mut e = vec![0; rd.rank];
            e[l] = 1;
            b.eval(a, &e) == modi(x[l] * qa, n)
        })
    })
}

/// A failed instance of the strictness identity at simple coroot `coroot`
/// and basis vector `e_basis`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrictViolation {
    pub coroot: usize,
    pub basis: usize,
    /// `b(α, e_l)`.
    pub lhs: i64,
    /// `⟨α̌, e_l⟩ Q(α)`.
    pub rhs: i64,
}

impl std::fmt::Display for StrictViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "b(α{}, e{}) = {} but ⟨α̌{}, e{}⟩·Q(α{}) = {}", self.coroot, self.basis + 1, self.lhs, self.coroot, self.basis + 1, self.coroot, self.rhs)
    }
}

/// First violated instance of strictness, scanning simple coroots in order.
pub fn strictness_violation(rd: &BasedRootDatum, q: &QuadForm) -> Result<Option<StrictViolation>, StrictError> {
    check_rank(rd, q)?;
    let b = polarize(q);
    let n = q.modulus();
    for &k in &rd.simple {
        let (a, x) = (&rd.coroots[k], &rd.roots[k]);
        let qa = q.eval(a);
        for l in 0..rd.rank {
            let mut e = vec![0; rd.rank];
            e[l] = 1;
            let (lhs, rhs) = (b.eval(a, &e), modi(x[l] * qa, n));
            if lhs != rhs {
                return Ok(Some(StrictViolation { coroot: k, basis: l, lhs, rhs }));
            }
        }
    }
    Ok(None)
}

fn check_rank(rd: &BasedRootDatum, q: &QuadForm) -> Result<(), StrictError> {
    if q.rank() != rd.rank {
        return Err(StrictError::LatticeMismatch { form: q.rank(), datum: rd.rank });
    }
    Ok(())
}

pub fn is_strict(rd: &BasedRootDatum, q: &QuadForm) -> Result<bool, StrictError> {
    check_rank(rd, q)?;
    Ok(strict_at(rd, q, &rd.simple))
}

/// The same identity over every coroot, not just the simple ones.
pub fn is_strict_on_all_coroots(rd: &BasedRootDatum, q: &QuadForm) -> Result<bool, StrictError> {
    check_rank(rd, q)?;
    Ok(strict_at(rd, q, &(0..rd.num_roots()).collect::<Vec<_>>()))
}

/// Integer matrix whose kernel mod `N` is the strict subgroup, acting on
/// upper-triangular coefficient vectors.
pub fn strictness_conditions(rd: &BasedRootDatum) -> IntMatrix {
    let r = rd.rank;
    let pairs = pairs_le(r);
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for &k in &rd.simple {
        let (a, x) = (&rd.coroots[k], &rd.roots[k]);
        for l in 0..r {
            let row = pairs
                .iter()
                .map(|&(i, j)| {
                    // b(α, e_l) for the monomial x_i x_j, minus ⟨α̌, e_l⟩ α_i α_j
                    let b = if i == j { 2 * a[i] * i64::from(l == i) } else { a[i] * i64::from(l == j) + a[j] * i64::from(l == i) };
                    b - x[l] * a[i] * a[j]
                })
                .collect();
            rows.push(row);
        }
    }
    if rows.is_empty() {
        return IntMatrix::zeros(0, pairs.len());
    }
    IntMatrix::from_rows(&rows)
}

/// `Quad(Λ; ℤ/N)_st` with invariant-factor generators.
#[derive(Clone, Debug)]
pub struct StrictForms {
    pub group: FgAbelianGroup,
    pub generators: Vec<(QuadForm, i64)>,
}

impl StrictForms {
    /// Whether `q` lies in the span of the generators (brute force over the group).
    pub fn contains(&self, q: &QuadForm) -> bool {
        let orders: Vec<i64> = self.generators.iter().map(|(_, o)| *o).collect();
        let mut idx = vec![0i64; orders.len()];
        loop {
            let mut acc = QuadForm::zero(q.rank(), q.modulus());
            for (k, (g, _)) in self.generators.iter().enumerate() {
                acc = acc.add(&g.scale(idx[k]));
            }
            if &acc == q {
                return true;
            }
            let mut k = 0;
            while k < idx.len() {
                idx[k] += 1;
                if idx[k] < orders[k] {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == idx.len() {
                return false;
            }
        }
    }
}

pub fn enumerate_strict(rd: &BasedRootDatum, n: i64) -> StrictForms {
    assert!(n >= 1);
    let (group, gens) = kernel_mod_n(&strictness_conditions(rd), n);
    let generators = gens
        .into_iter()
        .map(|(v, o)| {
            let list: Vec<i64> = v.iter().map(to_i64).collect();
            (QuadForm::from_list(rd.rank, n, &list).expect("length matches"), to_i64(&o))
        })
        .collect();
    StrictForms { group, generators }
}

/// Coefficients of `Q ∘ g` for integral `Q` and `g : ℤ^s → ℤ^r` given by rows.
pub fn pullback_integral(r: usize, coeffs: &[i64], g: &Mat) -> Vec<i64> {
    let s = g.first().map_or(0, Vec::len);
    let pairs = pairs_le(r);
    let eval = |x: &[i64]| -> i64 { pairs.iter().zip(coeffs).map(|(&(i, j), c)| c * x[i] * x[j]).sum() };
    let col = |j: usize| -> Vec<i64> { g.iter().map(|row| row[j]).collect() };
    pairs_le(s)
        .into_iter()
        .map(|(j, k)| {
            if j == k {
                eval(&col(j))
            } else {
                let sum: Vec<i64> = col(j).iter().zip(col(k)).map(|(a, b)| a + b).collect();
                eval(&sum) - eval(&col(j)) - eval(&col(k))
            }
        })
        .collect()
}

pub fn is_w_invariant(q: &QuadForm, w: &WeylGroup) -> bool {
    w.elements.iter().all(|e| &q.pullback(&e.matrix) == q)
}

/// Basis of `Quad(Λ; ℤ)^W`, the common fixed lattice of the simple reflections.
pub fn invariant_integral_forms(rd: &BasedRootDatum) -> Vec<Vec<i64>> {
    let r = rd.rank;
    let d = r * (r + 1) / 2;
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for s in rd.simple.iter().map(|&k| reflection_matrix(rd, k)) {
        let images: Vec<Vec<i64>> = (0..d)
            .map(|c| {
                let mut e = vec![0; d];
                e[c] = 1;
                pullback_integral(r, &e, &s)
            })
            .collect();
        for row in 0..d {
            rows.push((0..d).map(|c| images[c][row] - i64::from(c == row)).collect());
        }
    }
    if rows.is_empty() {
        return (0..d).map(|c| (0..d).map(|k| i64::from(k == c)).collect()).collect();
    }
    let k = kernel_basis(&IntMatrix::from_rows(&rows));
    (0..k.cols()).map(|j| k.column(j).iter().map(to_i64).collect()).collect()
}

/// Comparison of `Quad(Λ; ℤ)^W ⊗ ℤ/N` with `Quad(Λ; ℤ/N)_st`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantComparison {
    pub invariant_rank: usize,
    pub strict: FgAbelianGroup,
    pub simple_factors: usize,
    /// Reductions of invariant forms are strict and exhaust the strict group.
    pub bijective: bool,
    /// The strict group is `(ℤ/N)^{#simple factors}`.
    pub one_copy_per_factor: bool,
}

pub fn compare_invariant_and_strict(rd: &BasedRootDatum, n: i64) -> InvariantComparison {
    let inv = invariant_integral_forms(rd);
    let st = enumerate_strict(rd, n);
    let reductions: Vec<QuadForm> = inv.iter().map(|c| QuadForm::from_list(rd.rank, n, c).expect("length")).collect();
    let all_strict = reductions.iter().all(|q| is_strict(rd, q).expect("rank"));
    // The invariant lattice is saturated, so reduction mod N is injective on
    // its tensor with ℤ/N; equal orders then give a bijection.
    let order = st.group.order().expect("finite");
    let expected = BigInt::from(n).pow(inv.len() as u32);
    let factors = rd.simple_factors().len();
    InvariantComparison {
        invariant_rank: inv.len(),
        strict: st.group.clone(),
        simple_factors: factors,
        bijective: all_strict && order == expected,
        one_copy_per_factor: st.group == FgAbelianGroup::cyclic_power(n, factors),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::catalog;

    #[test]
    fn gl2_condition() {
        let rd = catalog("GL2").unwrap();
        for (q11, q12, q22) in [(1, 0, 1), (1, 3, 2), (0, 1, 0), (2, 2, 5)] {
            let q = QuadForm::from_coeffs(2, 5, &[(0, 0, q11), (0, 1, q12), (1, 1, q22)]).unwrap();
            assert_eq!(is_strict(&rd, &q).unwrap(), (q11 - q22) % 5 == 0);
        }
    }

    #[test]
    fn stored_counterexample() {
        let (name, n, text) = W_INVARIANT_NOT_STRICT;
        let rd = catalog(name).unwrap();
        let q = QuadForm::parse_monomials(rd.rank, n, text).unwrap();
        let w = WeylGroup::generate(&rd, 100).unwrap();
        assert!(is_w_invariant(&q, &w));
        assert!(!is_strict(&rd, &q).unwrap());
    }
}

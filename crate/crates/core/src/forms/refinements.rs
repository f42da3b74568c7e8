//! Quadratic functions on finite abelian groups with values in a cyclic
//! group `μ_M`, written additively as exponents in `ℤ/M`.

use crate::abelian_core::FgAbelianGroup;
use crate::util::{binomial, modi};

use super::quad::BilinearFormModN;
use super::FormsError;

/// `Q : Γ → ℤ/M`, tabulated over `group.elements()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteQuadFunction {
    pub group: FgAbelianGroup,
    pub modulus: i64,
    pub values: Vec<i64>,
    /// Set when `Q(a) = b'(a, a)` for the supplied half pairing `b'`.
    pub canonical: bool,
}

impl FiniteQuadFunction {
    pub fn constant_zero(group: &FgAbelianGroup, modulus: i64) -> Self {
        let n = group.elements().len();
        FiniteQuadFunction { group: group.clone(), modulus, values: vec![0; n], canonical: false }
    }

    pub fn from_fn(group: &FgAbelianGroup, modulus: i64, f: impl Fn(&[i64]) -> i64) -> Self {
        let values = group.elements().iter().map(|a| modi(f(a), modulus)).collect();
        FiniteQuadFunction { group: group.clone(), modulus, values, canonical: false }
    }

    pub fn value(&self, a: &[i64]) -> i64 {
        self.values[self.group.element_index(a)]
    }

    /// `Q(a+b) - Q(a) - Q(b)`.
    pub fn polarization(&self, a: &[i64], b: &[i64]) -> i64 {
        let s = self.group.add_elements(a, b);
        modi(self.value(&s) - self.value(a) - self.value(b), self.modulus)
    }

    /// `Q(0) = 0` and the polarization is symmetric and biadditive.
    pub fn is_quadratic(&self) -> bool {
        let elems = self.group.elements();
        if self.value(&self.group.zero_element()) != 0 {
            return false;
        }
        for a in &elems {
            for b in &elems {
                if self.polarization(a, b) != self.polarization(b, a) {
                    return false;
                }
                for c in &elems {
                    let ab = self.group.add_elements(a, b);
                    let lhs = self.polarization(&ab, c);
                    let rhs = modi(self.polarization(a, c) + self.polarization(b, c), self.modulus);
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Whether the polarization equals `b` on all pairs of elements.
    pub fn refines(&self, b: &BilinearFormModN) -> bool {
        let elems = self.group.elements();
        elems.iter().all(|x| elems.iter().all(|y| self.polarization(x, y) == b.eval(x, y)))
    }
}

fn check_pairing(group: &FgAbelianGroup, b: &BilinearFormModN) -> Result<(), FormsError> {
    if !group.is_finite() {
        return Err(FormsError::InfiniteGroup);
    }
    let orders = group.torsion_i64();
    if b.rank != orders.len() {
        return Err(FormsError::BadLength { expected: orders.len(), got: b.rank });
    }
    if !b.is_symmetric() {
        return Err(FormsError::InvalidPairing("not symmetric".into()));
    }
    for (i, &d) in orders.iter().enumerate() {
        for j in 0..b.rank {
            if modi(d * b.get(i, j), b.modulus) != 0 {
                return Err(FormsError::InvalidPairing(format!("generator {i} has order {d} but pairs nontrivially")));
            }
        }
    }
    Ok(())
}

/// Admissible values of `Q(g_i)`: `d·x + binom(d,2)·b_ii ≡ 0 mod M`.
fn generator_choices(d: i64, b_ii: i64, m: i64) -> Vec<i64> {
    (0..m).filter(|x| modi(d * x + binomial(d, 2) * b_ii, m) == 0).collect()
}

/// All quadratic refinements of `b` with values in `ℤ/M` (`M = b.modulus`).
/// When `half` is given and `b = 2·half`, the refinement `a ↦ half(a, a)`
/// is flagged as canonical.
pub fn quadratic_refinements(
    group: &FgAbelianGroup,
    b: &BilinearFormModN,
    half: Option<&BilinearFormModN>,
) -> Result<Vec<FiniteQuadFunction>, FormsError> {
    check_pairing(group, b)?;
    let m = b.modulus;
    let orders = group.torsion_i64();
    let choices: Vec<Vec<i64>> = orders.iter().enumerate().map(|(i, &d)| generator_choices(d, b.get(i, i), m)).collect();
    if choices.iter().any(Vec::is_empty) {
        // Doubling the value group always admits x = -(d-1)·b_ii.
        return Err(FormsError::ValueGroupTooSmall { modulus: m, needed: 2 * m });
    }
    if let Some(h) = half {
        check_pairing(group, h)?;
        if h.modulus != m || !h.add(h).eq(b) {
            return Err(FormsError::InvalidPairing("half pairing does not double to b".into()));
        }
    }
    let mut out = Vec::new();
    let mut idx = vec![0usize; orders.len()];
    loop {
        let gens: Vec<i64> = idx.iter().enumerate().map(|(i, &k)| choices[i][k]).collect();
        let q = FiniteQuadFunction::from_fn(group, m, |a| {
            let mut v = 0;
            for i in 0..a.len() {
                v += a[i] * gens[i] + binomial(a[i], 2) * b.get(i, i);
                for j in i + 1..a.len() {
                    v += a[i] * a[j] * b.get(i, j);
                }
            }
            v
        });
        debug_assert!(q.refines(b));
        out.push(q);
        // odometer over generator choices
        let mut k = 0;
        while k < idx.len() {
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        if k == idx.len() {
            break;
        }
    }
    if let Some(h) = half {
        let canon = FiniteQuadFunction::from_fn(group, m, |a| h.eval(a, a));
        for q in &mut out {
            q.canonical = q.values == canon.values;
        }
    }
    Ok(out)
}

/// `N·Q(a) = binom(N,2)·b(a,a) + Q(N·a)` in `ℤ/M`. Requires `N·a = 0`.
pub fn binomial_identity_check(q: &FiniteQuadFunction, b: &BilinearFormModN, a: &[i64], n: i64) -> Result<bool, FormsError> {
    let na = q.group.scale_element(n, a);
    if na != q.group.zero_element() {
        return Err(FormsError::OrderPrecondition { n });
    }
    let m = q.modulus;
    let lhs = modi(n * q.value(a), m);
    let rhs = modi(binomial(n, 2) * b.eval(a, a) + q.value(&na), m);
    Ok(lhs == rhs)
}

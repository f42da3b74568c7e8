use crate::forms::{polarize, QuadForm};
use crate::picard_ext::{build_symmon_from_hom, inv, SymMonExt};
use crate::root_data::BasedRootDatum;
use crate::util::modi;

use super::sharp::{dual_root_datum, DualPair};
use super::MetaDualError;

/// Largest `Ž_H` on which the symmetric monoidal extension is materialized;
/// beyond it the extension is built on `Ž_H/2`, where it is pulled back from.
pub const MATERIALIZE_CAP: usize = 64;

/// `ε : Ž_H/2 → ℤ/N` with the symmetric monoidal extension it is read from.
#[derive(Clone, Debug)]
pub struct EpsilonInvariant {
    pub modulus: i64,
    /// Values on the normal-form generators of `Ž_H`.
    pub values: Vec<i64>,
    /// Self-constraints on the basis of `Λ♯` before descent.
    pub sharp_values: Vec<i64>,
    pub symmon: SymMonExt,
    /// Whether `symmon` lives on `Ž_H/2` rather than `Ž_H`.
    pub on_mod_2: bool,
}

impl EpsilonInvariant {
    pub fn eval(&self, zh_coords: &[i64]) -> i64 {
        modi(zh_coords.iter().zip(&self.values).map(|(a, b)| a * b).sum(), self.modulus)
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }
}

/// Self-constraint of the torsor of `N`-th roots of `-1`: its two
/// trivializations of `η^{⊗N}` differ by `binom(N, 2)`.
pub fn eta_self_constraint(n: i64) -> i64 {
    modi((n * (n - 1) / 2) % n, n)
}

/// Runs the pipeline and attaches `ε` to the dual pair.
pub fn dual_pair(rd: &BasedRootDatum, q: &QuadForm) -> Result<DualPair, MetaDualError> {
    let mut pair = dual_root_datum(rd, q)?;
    pair.epsilon = Some(epsilon_from_pair(&pair, q)?);
    Ok(pair)
}

pub fn epsilon_invariant(rd: &BasedRootDatum, q: &QuadForm) -> Result<EpsilonInvariant, MetaDualError> {
    let pair = dual_root_datum(rd, q)?;
    epsilon_from_pair(&pair, q)
}

fn epsilon_from_pair(pair: &DualPair, q: &QuadForm) -> Result<EpsilonInvariant, MetaDualError> {
    let n = q.modulus();
    let sharp = &pair.sharp;
    let r = sharp.rank();
    let b = polarize(q);
    let eta = eta_self_constraint(n);
    let basis: Vec<Vec<i64>> = (0..r).map(|j| sharp.basis_vector(j)).collect();

    // The null-homotopy of b on Λ♯: the restricted form must vanish, which
    // makes λ ↦ Q(λ)·η additive and 2-torsion.
    for (i, x) in basis.iter().enumerate() {
        for (j, y) in basis.iter().enumerate() {
            if b.eval(x, y) != 0 {
                return Err(MetaDualError::Pipeline(format!("b(v{i}, v{j}) ≠ 0 on Λ♯")));
            }
        }
    }
    let sharp_values: Vec<i64> = basis.iter().map(|v| modi(q.eval(v) * eta, n)).collect();
    let on_sharp = |c: &[i64]| modi(c.iter().zip(&sharp_values).map(|(a, v)| a * v).sum(), n);

    // Descent: the trivialization on the span of Φ♯.
    for (k, a) in pair.g_sharp.coroots.iter().enumerate() {
        if on_sharp(a) != 0 {
            return Err(MetaDualError::Pipeline(format!("self-constraint does not vanish on the sharp coroot {k}")));
        }
    }
    let values: Vec<i64> = (0..pair.zh.num_generators()).map(|g| on_sharp(&pair.zh_lift(g))).collect();

    let small = pair.zh.order().is_some_and(|o| o <= MATERIALIZE_CAP.into());
    let (base, base_values) = if small {
        (pair.zh.clone(), values.clone())
    } else {
        // Generators of Ž_H of odd order carry no 2-torsion value and vanish mod 2.
        let orders = pair.zh.generator_orders();
        let keep: Vec<usize> = (0..orders.len()).filter(|&i| orders[i].clone() % 2 == 0.into()).collect();
        (pair.zh.mod_n(2), keep.iter().map(|&i| values[i]).collect())
    };
    let symmon = build_symmon_from_hom(&base, n, &base_values).map_err(|e| MetaDualError::Pipeline(e.to_string()))?;
    let table = inv(&symmon).map_err(|e| MetaDualError::Pipeline(e.to_string()))?;
    for (g, &v) in base_values.iter().enumerate() {
        let mut e = base.zero_element();
        e[g] = 1;
        if table[base.element_index(&e)] != v {
            return Err(MetaDualError::Pipeline(format!("inv disagrees with the self-constraint on generator {g}")));
        }
    }
    Ok(EpsilonInvariant { modulus: n, values, sharp_values, symmon, on_mod_2: !small })
}

/// `ε` beside the invariant of the `ℤ`-linear route, which exists when the
/// integral polarization of the standard lift of `Q` is even on `Λ♯`. The two
/// agree as monoidal morphisms; the `ℤ`-linear one has no self-constraint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZLinearComparison {
    pub epsilon: Vec<i64>,
    pub epsilon_prime: Vec<i64>,
    /// Generators of `Ž_H` where the two differ.
    pub differs_at: Vec<usize>,
}

pub fn compare_z_linear_route(rd: &BasedRootDatum, q: &QuadForm) -> Result<Option<ZLinearComparison>, MetaDualError> {
    let pair = dual_pair(rd, q)?;
    let r = pair.sharp.rank();
    let lift = |x: &[i64], y: &[i64]| -> i64 {
        let mut s = 0;
        for i in 0..r {
            for j in i..r {
                let c = q.coeff(i, j);
                s += if i == j { 2 * c * x[i] * y[i] } else { c * (x[i] * y[j] + x[j] * y[i]) };
            }
        }
        s
    };
    let basis: Vec<Vec<i64>> = (0..r).map(|j| pair.sharp.basis_vector(j)).collect();
    if basis.iter().any(|x| basis.iter().any(|y| lift(x, y) % 2 != 0)) {
        return Ok(None);
    }
    let epsilon = pair.epsilon.expect("attached").values;
    let epsilon_prime = vec![0; epsilon.len()];
    let differs_at = (0..epsilon.len()).filter(|&i| epsilon[i] != epsilon_prime[i]).collect();
    Ok(Some(ZLinearComparison { epsilon, epsilon_prime, differs_at }))
}

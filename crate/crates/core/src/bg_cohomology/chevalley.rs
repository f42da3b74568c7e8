//! Strictness recomputed from Schubert calculus on `G/B` in degrees `≤ 2`.
//!
//! A pairing `c ∈ Λ̌ ⊗ Λ̌` lifting `Q` maps to `H⁴(G/B)` with coefficient
//! `Σ_{β ≤ w} c(γ, β)` in front of `[X^w]`, where `β` runs over the simple
//! coroots below `w` and `γ` is the positive coroot with `w = s_β s_γ`.
//! Forms whose image vanishes then map to the `W⁽¹⁾` stratum, which is
//! tested against lifts of generators of `π₁(G)`.

use num_bigint::BigInt;
use num_traits::One;

use crate::abelian_core::functors::pairs_le;
use crate::abelian_core::{kernel_mod_n, smith_normal_form, FgAbelianGroup, IntMatrix};
use crate::forms::QuadForm;
use crate::root_data::weyl::{mat_mul, reflection_matrix};
use crate::root_data::{companions, BasedRootDatum, WeylError, WeylGroup, DEFAULT_WEYL_CAP};
use crate::util::{dot, to_i64};

/// One linear functional on upper-triangular coefficient vectors of `Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleFunctional {
    /// `s_a s_b` (1-based simple positions) or `α_a ⊗ λ_k` for `π₁` direction `k`.
    pub label: String,
    pub row: Vec<i64>,
}

#[derive(Clone, Debug)]
pub struct OracleKernel {
    pub group: FgAbelianGroup,
    pub generators: Vec<(QuadForm, i64)>,
    pub functionals: Vec<OracleFunctional>,
}

impl OracleKernel {
    pub fn annihilates(&self, q: &QuadForm) -> bool {
        let n = q.modulus();
        self.functionals.iter().all(|f| f.row.iter().zip(q.coeff_list()).map(|(a, b)| a * b).sum::<i64>().rem_euclid(n) == 0)
    }
}

/// Value of `Σ_β c(γ_β, β)` for the lift `c = e_i ⊗ e_j` of each monomial.
fn schubert_row(r: usize, terms: &[(Vec<i64>, Vec<i64>)]) -> Vec<i64> {
    pairs_le(r).into_iter().map(|(i, j)| terms.iter().map(|(gamma, beta)| gamma[i] * beta[j]).sum()).collect()
}

/// Lifts to `Λ` of the nontrivial generators of `π₁(G) = Λ / Λ_sc`.
fn pi1_directions(rd: &BasedRootDatum) -> Vec<Vec<i64>> {
    let c = companions(rd);
    let snf = smith_normal_form(&c.pi1_presentation);
    let inv = snf.invariants();
    (0..rd.rank).filter(|&i| i >= inv.len() || !inv[i].is_one()).map(|i| snf.u_inv.column(i).iter().map(to_i64).collect()).collect()
}

pub fn chevalley_strictness_oracle(rd: &BasedRootDatum, n: i64) -> Result<OracleKernel, WeylError> {
    assert!(n >= 1, "modulus must be positive");
    let r = rd.rank;
    let w = WeylGroup::truncated(rd, 2, DEFAULT_WEYL_CAP)?;
    let positive: Vec<(usize, Vec<Vec<i64>>)> = rd.positive_coroots().into_iter().map(|k| (k, reflection_matrix(rd, k))).collect();
    let mut functionals = Vec::new();

    for l2 in w.length_two() {
        let target = &w.elements[l2.element].matrix;
        let mut betas: Vec<usize> = l2.factorizations.iter().flat_map(|&(a, b)| [a, b]).collect();
        betas.sort_unstable();
        betas.dedup();
        let terms: Vec<(Vec<i64>, Vec<i64>)> = betas
            .into_iter()
            .filter(|&b| w.simple_below(b, l2.element))
            .map(|b| {
                let s_gamma = mat_mul(&w.simple_reflections[b], target);
                let &(k, _) = positive.iter().find(|(_, m)| *m == s_gamma).expect("s_β w is a reflection");
                (rd.coroots[k].clone(), rd.coroots[rd.simple[b]].clone())
            })
            .collect();
        let (a, b) = l2.factorizations[0];
        functionals.push(OracleFunctional { label: format!("s{}s{}", a + 1, b + 1), row: schubert_row(r, &terms) });
    }

    for (k, lambda) in pi1_directions(rd).into_iter().enumerate() {
        for (p, &s) in rd.simple.iter().enumerate() {
            let (alpha, root) = (&rd.coroots[s], &rd.roots[s]);
            let pairing = dot(root, &lambda);
            // b(λ, α) - ⟨α̌, λ⟩ Q(α) on the monomial x_i x_j
            let row = pairs_le(r)
                .into_iter()
                .map(|(i, j)| {
                    let b = if i == j { 2 * lambda[i] * alpha[i] } else { lambda[i] * alpha[j] + lambda[j] * alpha[i] };
                    b - pairing * alpha[i] * alpha[j]
                })
                .collect();
            functionals.push(OracleFunctional { label: format!("a{}*l{}", p + 1, k + 1), row });
        }
    }

    let d = r * (r + 1) / 2;
    let matrix = if functionals.is_empty() {
        IntMatrix::zeros(0, d)
    } else {
        IntMatrix::from_rows(&functionals.iter().map(|f| f.row.clone()).collect::<Vec<_>>())
    };
    let (group, gens) = kernel_mod_n(&matrix, n);
    let generators = gens
        .into_iter()
        .map(|(v, o): (Vec<BigInt>, BigInt)| {
            let list: Vec<i64> = v.iter().map(to_i64).collect();
            (QuadForm::from_list(r, n, &list).expect("length matches"), to_i64(&o))
        })
        .collect();
    Ok(OracleKernel { group, generators, functionals })
}

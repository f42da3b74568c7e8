use num_bigint::BigInt;

use crate::abelian_core::snf::solve;
use crate::abelian_core::{FgAbelianGroup, IntMatrix};
use crate::util::{big, dot, to_i64};

use super::datum::BasedRootDatum;
use super::weyl::Mat;

/// Simply connected and adjoint forms of the derived group, with `π₁`.
#[derive(Clone, Debug)]
pub struct Companions {
    /// Datum on the coroot lattice, basis the simple coroots.
    pub sc: BasedRootDatum,
    /// Datum on the coweight lattice, basis dual to the simple roots.
    pub ad: BasedRootDatum,
    pub pi1: FgAbelianGroup,
    /// `π₁ = coker(pi1_presentation)`; equal to `sc_to_lambda`.
    pub pi1_presentation: IntMatrix,
    /// `Λ_sc → Λ` (columns are the simple coroots).
    pub sc_to_lambda: Mat,
    /// `Λ → Λ_ad`, `λ ↦ (⟨α̌_j, λ⟩)_j`.
    pub lambda_to_ad: Mat,
}

fn coords_in(basis: &[Vec<i64>], dim: usize, v: &[i64]) -> Option<Vec<i64>> {
    let cols: Vec<Vec<BigInt>> = basis.iter().map(|c| c.iter().map(|&x| big(x)).collect()).collect();
    let m = IntMatrix::from_columns(dim, &cols);
    let b: Vec<BigInt> = v.iter().map(|&x| big(x)).collect();
    solve(&m, &b).map(|x| x.iter().map(to_i64).collect())
}

pub fn companions(rd: &BasedRootDatum) -> Companions {
    let r = rd.rank;
    let s = rd.simple.len();
    let sc_basis = rd.simple_coroots();
    let sr = rd.simple_roots();

    let sc_coroots: Vec<Vec<i64>> =
        rd.coroots.iter().map(|a| coords_in(&sc_basis, r, a).expect("coroots lie in the coroot lattice")).collect();
    let sc_roots: Vec<Vec<i64>> = rd.roots.iter().map(|x| sc_basis.iter().map(|a| dot(x, a)).collect()).collect();
    let sc = BasedRootDatum {
        name: format!("{}_sc", rd.name),
        rank: s,
        coroots: sc_coroots,
        roots: sc_roots,
        simple: rd.simple.clone(),
    };

    let ad_coroots: Vec<Vec<i64>> = rd.coroots.iter().map(|a| sr.iter().map(|x| dot(x, a)).collect()).collect();
    let ad_roots: Vec<Vec<i64>> =
        rd.roots.iter().map(|x| coords_in(&sr, r, x).expect("roots lie in the root lattice")).collect();
    let ad = BasedRootDatum {
        name: format!("{}_ad", rd.name),
        rank: s,
        coroots: ad_coroots,
        roots: ad_roots,
        simple: rd.simple.clone(),
    };

    let sc_to_lambda: Mat = (0..r).map(|i| sc_basis.iter().map(|a| a[i]).collect()).collect();
    let pres_cols: Vec<Vec<BigInt>> = sc_basis.iter().map(|a| a.iter().map(|&x| big(x)).collect()).collect();
    let pi1_presentation = IntMatrix::from_columns(r, &pres_cols);
    Companions {
        pi1: FgAbelianGroup::cokernel(&pi1_presentation),
        pi1_presentation,
        sc,
        ad,
        sc_to_lambda,
        lambda_to_ad: sr,
    }
}

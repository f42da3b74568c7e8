use thiserror::Error;

use crate::abelian_core::{hom_ext, FgAbelianGroup, PresentedGroup, PresentedMap};
use crate::forms::{polarize, theta_level2_homotopy, BilinearFormModN, Lattice, QuadForm};
use crate::root_data::{companions, enumerate_strict, is_strict, BasedRootDatum};
use crate::util::modi;

use super::restriction_matrix;

/// `π₀, π₁, π₂` of `Maps_*(BG, B⁽⁴⁾μ_N^{⊗2})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverHomotopy {
    pub pi0: FgAbelianGroup,
    pub pi1: FgAbelianGroup,
    pub pi2: FgAbelianGroup,
    /// `π₁` of the common fiber of the horizontal maps, `π₂ θ(Λ_sc)`.
    pub fiber_pi1: FgAbelianGroup,
    /// `π₁, π₂` recomputed from the fiber sequence of `R_B`.
    pub fiber_sequence_pi1: FgAbelianGroup,
    pub fiber_sequence_pi2: FgAbelianGroup,
}

/// The fiber sequence `π₂ Maps → π₂ θ(Λ) → π₁ F → π₁ Maps → π₁ θ(Λ) = 0`
/// with `F ≅ F_sc` gives `π₂ = ker` and `π₁ = coker` of the restriction
/// `π₂ θ(Λ) → π₂ θ(Λ_sc)`.
pub fn cover_homotopy(rd: &BasedRootDatum, n: i64) -> CoverHomotopy {
    assert!(n >= 1, "modulus must be positive");
    let c = companions(rd);
    let (hom, ext) = hom_ext(&c.pi1, &FgAbelianGroup::cyclic(n));
    let res = restriction_matrix(&c);
    let (s, r) = (res.rows(), res.cols());

    let theta = theta_level2_homotopy(&Lattice::new(r), n);
    let theta_sc = theta_level2_homotopy(&Lattice::new(s), n);
    assert!(theta[1].is_trivial(), "θ(Λ) has vanishing π₁");
    // The restriction is modelled on Hom(Λ, ℤ/N) → Hom(Λ_sc, ℤ/N); these are the π₂ of θ.
    assert_eq!(theta[2], FgAbelianGroup::cyclic_power(n, r));
    assert_eq!(theta_sc[2], FgAbelianGroup::cyclic_power(n, s));
    let map = PresentedMap::new(&PresentedGroup::mod_n(r, n), &PresentedGroup::mod_n(s, n), res);
    let out = CoverHomotopy {
        pi0: enumerate_strict(rd, n).group,
        pi1: ext,
        pi2: hom,
        fiber_pi1: theta_sc[2].clone(),
        fiber_sequence_pi1: map.cokernel(),
        fiber_sequence_pi2: map.kernel(),
    };
    assert_eq!(out.pi1, out.fiber_sequence_pi1, "π₁ from the fiber sequence");
    assert_eq!(out.pi2, out.fiber_sequence_pi2, "π₂ from the fiber sequence");
    out
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EquivarianceError {
    #[error("form has rank {form} but the datum has rank {datum}")]
    LatticeMismatch { form: usize, datum: usize },
    #[error("form is not strict")]
    NotStrict,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariancePairings {
    /// `int(μ) = -b` on `Λ × Λ`.
    pub int_mu: BilinearFormModN,
    /// `int(μ_sc)` on `Λ_sc × Λ_ad` in the simple coroot and fundamental
    /// coweight bases.
    pub int_mu_sc: BilinearFormModN,
    /// `int(μ)(α, λ) = int(μ_sc)(α, λ̄)` for `α ∈ Λ_sc`, `λ ∈ Λ`.
    pub compatible: bool,
}

pub fn equivariance_pairings(rd: &BasedRootDatum, q: &QuadForm) -> Result<EquivariancePairings, EquivarianceError> {
    if q.rank() != rd.rank {
        return Err(EquivarianceError::LatticeMismatch { form: q.rank(), datum: rd.rank });
    }
    if !is_strict(rd, q).expect("ranks checked") {
        return Err(EquivarianceError::NotStrict);
    }
    let n = q.modulus();
    let int_mu = polarize(q).neg();
    let simple = rd.simple_coroots();
    let s = simple.len();
    // ⟨α̌_i, ω_j⟩ = δ_ij, so the extension is diagonal.
    let rows: Vec<Vec<i64>> =
        (0..s).map(|i| (0..s).map(|j| if i == j { modi(-q.eval(&simple[i]), n) } else { 0 }).collect()).collect();
    let int_mu_sc = if s == 0 { BilinearFormModN::zero(0, n) } else { BilinearFormModN::from_rows(n, &rows) };

    let to_ad = companions(rd).lambda_to_ad;
    let compatible = (0..s).all(|i| {
        (0..rd.rank).all(|l| {
            let mut e = vec![0; rd.rank];
            e[l] = 1;
            let mut e_sc = vec![0; s];
            e_sc[i] = 1;
            let image: Vec<i64> = to_ad.iter().map(|row| row[l]).collect();
            int_mu.eval(&simple[i], &e) == int_mu_sc.eval(&e_sc, &image)
        })
    });
    Ok(EquivariancePairings { int_mu, int_mu_sc, compatible })
}

//! Cohomology of `BG` with `μ_N^{⊗2}` coefficients in degrees `≤ 4`, the
//! homotopy groups of the space of metaplectic covers, the Schubert-calculus
//! oracle for strictness, and the equivariance pairings.

mod chevalley;
mod cover;

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::abelian_core::{hom_ext, is_exact_at, kernel_mod_n, smith_normal_form, FgAbelianGroup, IntMatrix};
use crate::abelian_core::{PresentedGroup, PresentedMap};
use crate::forms::QuadForm;
use crate::root_data::{companions, enumerate_strict, BasedRootDatum, Companions};

pub use chevalley::{chevalley_strictness_oracle, OracleFunctional, OracleKernel};
pub use cover::{cover_homotopy, equivariance_pairings, CoverHomotopy, EquivarianceError, EquivariancePairings};

/// `0 → H²(BG) → H²(BT) → H²(BT_sc) → H³(BG) → 0` with explicit maps, where
/// `H²(BT) = Hom(Λ, ℤ/N)` and the middle arrow restricts along `Λ_sc → Λ`.
#[derive(Clone, Debug)]
pub struct ExactSequenceWitness {
    pub h2_inclusion: PresentedMap,
    pub restriction: PresentedMap,
    pub h3_projection: PresentedMap,
    pub injective: bool,
    pub exact_at_torus: bool,
    pub exact_at_sc_torus: bool,
    pub surjective: bool,
    /// The kernel and cokernel of the restriction agree with `Hom` and `Ext¹`
    /// computed from `π₁(G)` directly.
    pub matches_hom_ext: bool,
}

impl ExactSequenceWitness {
    pub fn holds(&self) -> bool {
        self.injective && self.exact_at_torus && self.exact_at_sc_torus && self.surjective && self.matches_hom_ext
    }
}

#[derive(Clone, Debug)]
pub struct BgCohomologyReport {
    pub datum: String,
    pub modulus: i64,
    pub pi1: FgAbelianGroup,
    /// `H¹, …, H⁴`.
    pub h: [FgAbelianGroup; 4],
    /// Invariant-factor generators of `H⁴ = Quad(Λ; ℤ/N)_st` with their orders.
    pub h4_generators: Vec<(QuadForm, i64)>,
    pub witness: ExactSequenceWitness,
}

/// Restriction `Hom(Λ, ℤ/N) → Hom(Λ_sc, ℤ/N)` in the bases dual to `e_l` and
/// to the simple coroots.
pub(crate) fn restriction_matrix(c: &Companions) -> IntMatrix {
    let r = c.sc_to_lambda.len();
    let s = c.sc_to_lambda.first().map_or(0, Vec::len);
    let rows: Vec<Vec<i64>> = (0..s).map(|j| (0..r).map(|l| c.sc_to_lambda[l][j]).collect()).collect();
    if rows.is_empty() {
        IntMatrix::zeros(0, r)
    } else {
        IntMatrix::from_rows(&rows)
    }
}

fn presented_cyclics(orders: &[BigInt]) -> PresentedGroup {
    PresentedGroup::new(IntMatrix::diagonal(orders.len(), orders.len(), orders))
}

fn exact_sequence(c: &Companions, n: i64) -> ExactSequenceWitness {
    let res = restriction_matrix(c);
    let (s, r) = (res.rows(), res.cols());
    let bt = PresentedGroup::mod_n(r, n);
    let bt_sc = PresentedGroup::mod_n(s, n);

    let (h2, gens) = kernel_mod_n(&res, n);
    let orders: Vec<BigInt> = gens.iter().map(|(_, o)| o.clone()).collect();
    let cols: Vec<Vec<BigInt>> = gens.into_iter().map(|(v, _)| v).collect();
    let h2_inclusion = PresentedMap::new(&presented_cyclics(&orders), &bt, IntMatrix::from_columns(r, &cols));

    let restriction = PresentedMap::new(&bt, &bt_sc, res.clone());

    // coker(res) = (ℤ/N)^s / im(res), read off from the row transform of the SNF.
    let snf = smith_normal_form(&res.hstack(&IntMatrix::identity(s).scale(&BigInt::from(n))));
    let inv = snf.invariants();
    let keep: Vec<usize> = (0..s).filter(|&i| !inv[i].is_one()).collect();
    let h3_orders: Vec<BigInt> = keep.iter().map(|&i| inv[i].clone()).collect();
    let h3_projection = PresentedMap::new(&bt_sc, &presented_cyclics(&h3_orders), snf.u.select_rows(&keep));
    let h3 = FgAbelianGroup::from_cyclic_orders(0, &h3_orders);

    let (hom, ext) = hom_ext(&c.pi1, &FgAbelianGroup::cyclic(n));
    ExactSequenceWitness {
        injective: h2_inclusion.is_well_defined() && h2_inclusion.is_injective(),
        exact_at_torus: is_exact_at(&h2_inclusion, &restriction),
        exact_at_sc_torus: is_exact_at(&restriction, &h3_projection),
        surjective: h3_projection.is_well_defined() && h3_projection.is_surjective(),
        matches_hom_ext: h2 == hom && h3 == ext,
        h2_inclusion,
        restriction,
        h3_projection,
    }
}

pub fn bg_cohomology(rd: &BasedRootDatum, n: i64) -> BgCohomologyReport {
    assert!(n >= 1, "modulus must be positive");
    let c = companions(rd);
    let (hom, ext) = hom_ext(&c.pi1, &FgAbelianGroup::cyclic(n));
    let st = enumerate_strict(rd, n);
    BgCohomologyReport {
        datum: rd.name.clone(),
        modulus: n,
        h: [FgAbelianGroup::trivial(), hom, ext, st.group],
        h4_generators: st.generators,
        witness: exact_sequence(&c, n),
        pi1: c.pi1,
    }
}

impl fmt::Display for BgCohomologyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "datum: {}", self.datum)?;
        writeln!(f, "N: {}", self.modulus)?;
        writeln!(f, "pi1: {}", self.pi1)?;
        for (i, g) in self.h.iter().enumerate() {
            writeln!(f, "H{}: {}", i + 1, g)?;
        }
        for (q, o) in &self.h4_generators {
            writeln!(f, "H4 generator (order {o}): {q}")?;
        }
        let w = &self.witness;
        writeln!(
            f,
            "exact sequence: injective={} exact_at_T={} exact_at_Tsc={} surjective={} matches_hom_ext={}",
            w.injective, w.exact_at_torus, w.exact_at_sc_torus, w.surjective, w.matches_hom_ext
        )
    }
}

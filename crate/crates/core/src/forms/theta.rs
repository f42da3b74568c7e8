//! Homotopy groups of the level-1 and level-2 θ-data of a lattice over a
//! separably closed point, where `μ_N ≅ ℤ/N` and the `η`-maps vanish.
//!
//! Complexes of free groups model connective objects with `π_k = H^{-k}`;
//! reduction mod `N` is the cone of multiplication by `N`.

use num_bigint::BigInt;

use crate::abelian_core::cosimplicial::{limit_complex, normalized_complex};
use crate::abelian_core::functors::{pairs_le, pairs_lt};
use crate::abelian_core::snf::solve_matrix;
use crate::abelian_core::{cone, fiber, ChainComplex, ChainMap, FgAbelianGroup, FunctorTag, IntMatrix};

use super::diagram::FunctorDiagram;
use super::quad::Lattice;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaSkeleton {
    pub rank: usize,
    pub modulus: i64,
    pub level: u8,
    pub pi0: FgAbelianGroup,
    pub pi1: FgAbelianGroup,
    pub pi2: FgAbelianGroup,
}

/// One way of computing the skeleton.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaComputation {
    pub method: &'static str,
    pub pi: [FgAbelianGroup; 3],
}

fn homotopy(c: &ChainComplex) -> [FgAbelianGroup; 3] {
    [c.homology_or_zero(0), c.homology_or_zero(-1), c.homology_or_zero(-2)]
}

fn scalar_map(c: &ChainComplex, k: i64) -> ChainMap {
    let k = BigInt::from(k);
    ChainMap {
        lo: c.lo(),
        components: (c.lo()..=c.hi()).map(|n| IntMatrix::identity(c.rank(n)).scale(&k)).collect(),
    }
}

/// `C/N = cone(N : C → C)`.
pub fn mod_n(c: &ChainComplex, n: i64) -> ChainComplex {
    cone(&scalar_map(c, n), c, c).expect("multiplication is a chain map")
}

/// The map induced on `C/N → D/N` by `f : C → D`.
fn mod_n_map(f: &ChainMap, c: &ChainComplex, d: &ChainComplex) -> ChainMap {
    let lo = c.lo() - 1;
    let components = (lo..=c.hi())
        .map(|k| f.component(k + 1, c, d).block_diag(&f.component(k, c, d)))
        .collect();
    ChainMap { lo, components }
}

/// Chain map between direct sums, given blockwise in every degree.
fn block_map(lo: i32, hi: i32, block: impl Fn(i32) -> IntMatrix) -> ChainMap {
    ChainMap { lo, components: (lo..=hi).map(block).collect() }
}

fn free(degree: i32, rank: usize) -> ChainComplex {
    ChainComplex::concentrated(degree, rank)
}

/// `Ȟ⁽¹⁾ → Γ²`, `Q ↦ -b` with `b` the polarization.
fn minus_polarization_to_gamma(r: usize) -> IntMatrix {
    let hdim = 2 * r + r * r.saturating_sub(1) / 2;
    let mut m = IntMatrix::zeros(r * (r + 1) / 2, hdim);
    for (row, (i, j)) in pairs_le(r).into_iter().enumerate() {
        let col = if i == j {
            r + i
        } else {
            2 * r + pairs_lt(r).iter().position(|&p| p == (i, j)).unwrap()
        };
        m.set(row, col, BigInt::from(-1));
    }
    m
}

/// `Ȟ⁽¹⁾ → Λ̌⊗Λ̌`, `Q ↦ -b` as a symmetric tensor.
fn minus_polarization_to_tensor(r: usize) -> IntMatrix {
    &FunctorDiagram::new(r).gamma_to_tensor.matrix * &minus_polarization_to_gamma(r)
}

fn level1(r: usize, n: i64) -> Vec<ThetaComputation> {
    let dia = FunctorDiagram::new(r);
    let wedge = mod_n(&free(0, dia.wedge2.generators), n);
    let dual1 = mod_n(&free(0, r), n).shift(1);
    let triangle = wedge.direct_sum(&dual1);

    // Pushout: cone(Γ²/N → ⊗²/N ⊕ Λ̌/N[1]).
    let gamma = free(0, dia.gamma2.generators);
    let tensor = free(0, r * r);
    let incl = ChainMap { lo: 0, components: vec![dia.gamma_to_tensor.matrix.clone()] };
    let incl_n = mod_n_map(&incl, &gamma, &tensor);
    let gamma_n = mod_n(&gamma, n);
    let tensor_n = mod_n(&tensor, n);
    let target = tensor_n.direct_sum(&dual1);
    let f = block_map(gamma_n.lo(), gamma_n.hi(), |k| {
        incl_n.component(k, &gamma_n, &tensor_n).vstack(&IntMatrix::zeros(dual1.rank(k), gamma_n.rank(k)))
    });
    let pushout = cone(&f, &gamma_n, &target).expect("pushout map");

    // Pullback: fib(∧²/N ⊕ Ȟ⁽¹⁾/N[1] → Γ²/N[1]).
    let h1 = free(0, 2 * r + r * r.saturating_sub(1) / 2);
    let h1_n1 = mod_n(&h1, n).shift(1);
    let gamma_n1 = gamma_n.shift(1);
    let mb = ChainMap { lo: 0, components: vec![minus_polarization_to_gamma(r)] };
    let mb_n = mod_n_map(&mb, &h1, &gamma);
    let mb_n1 = ChainMap { lo: mb_n.lo - 1, components: mb_n.components.clone() };
    let source = wedge.direct_sum(&h1_n1);
    let g = block_map(source.lo(), source.hi(), |k| {
        IntMatrix::zeros(gamma_n1.rank(k), wedge.rank(k)).hstack(&mb_n1.component(k, &h1_n1, &gamma_n1))
    });
    let pullback = fiber(&g, &source, &gamma_n1).expect("pullback map");

    vec![
        ThetaComputation { method: "middle triangle", pi: homotopy(&triangle) },
        ThetaComputation { method: "pushout", pi: homotopy(&pushout) },
        ThetaComputation { method: "pullback", pi: homotopy(&pullback) },
    ]
}

/// Level-2 pullback model `fib(Sym²/N ⊕ Ȟ⁽²⁾/N[2] → ∧²/N[1])`.
fn level2_pullback(r: usize, n: i64) -> ChainComplex {
    let dia = FunctorDiagram::new(r);
    let sym = mod_n(&free(0, dia.sym2.generators), n);
    let wedge = free(0, dia.wedge2.generators);
    // Ȟ⁽²⁾ = [Ȟ⁽¹⁾ → ⊗²]
    let h2 = ChainComplex::two_term(0, minus_polarization_to_tensor(r));
    let h2_n2 = mod_n(&h2, n).shift(2);
    // Projection ⊗² → ∧² from degree 1 of Ȟ⁽²⁾ to degree 0 of ∧², as a map Ȟ⁽²⁾ → ∧²[-1].
    let wedge_m1 = wedge.shift(-1);
    let proj = ChainMap {
        lo: 0,
        components: vec![IntMatrix::zeros(0, h2.rank(0)), dia.tensor_to_wedge.matrix.clone()],
    };
    let proj_n = mod_n_map(&proj, &h2, &wedge_m1);
    let proj_n2 = ChainMap { lo: proj_n.lo - 2, components: proj_n.components.clone() };
    // ∧²/N[1], built as (∧²[-1])/N[2] so the map components line up.
    let wedge_n1 = mod_n(&wedge_m1, n).shift(2);
    let source = sym.direct_sum(&h2_n2);
    let g = block_map(source.lo(), source.hi(), |k| {
        IntMatrix::zeros(wedge_n1.rank(k), sym.rank(k)).hstack(&proj_n2.component(k, &h2_n2, &wedge_n1))
    });
    fiber(&g, &source, &wedge_n1).expect("pullback map")
}

fn level2(r: usize, n: i64) -> Vec<ThetaComputation> {
    let dia = FunctorDiagram::new(r);
    let sym = mod_n(&free(0, dia.sym2.generators), n);
    let dual2 = mod_n(&free(0, r), n).shift(2);
    let triangle = sym.direct_sum(&dual2);

    // Pushout: cone(∧²/N → ⊗²/N ⊕ Λ̌/N[2]).
    let wedge = free(0, dia.wedge2.generators);
    let tensor = free(0, r * r);
    let incl = ChainMap { lo: 0, components: vec![dia.wedge_to_tensor.matrix.clone()] };
    let wedge_n = mod_n(&wedge, n);
    let tensor_n = mod_n(&tensor, n);
    let incl_n = mod_n_map(&incl, &wedge, &tensor);
    let target = tensor_n.direct_sum(&dual2);
    let f = block_map(wedge_n.lo(), wedge_n.hi(), |k| {
        incl_n.component(k, &wedge_n, &tensor_n).vstack(&IntMatrix::zeros(dual2.rank(k), wedge_n.rank(k)))
    });
    let pushout = cone(&f, &wedge_n, &target).expect("pushout map");

    let pullback = level2_pullback(r, n);

    // Cosimplicial shift of the level-1 pushout model.
    let top = 5;
    let (g_lim, g_bases) = normalized_complex(FunctorTag::Gamma2, r, top);
    let (t_lim, t_bases) = normalized_complex(FunctorTag::Tensor2, r, top);
    let components = (0..=top)
        .map(|k| {
            let image = &FunctorDiagram::new(r * k).gamma_to_tensor.matrix * &g_bases[k];
            solve_matrix(&t_bases[k], &image).expect("Γ² ↪ ⊗² preserves normalized cochains")
        })
        .collect();
    let lim_incl = ChainMap { lo: 0, components };
    let lim_cone = cone(&lim_incl, &g_lim, &t_lim).expect("induced map").spanning(-1, top as i32 - 1);
    let lim_id = limit_complex(FunctorTag::Id, r, top).shift(1);
    let shifted = mod_n(&lim_cone.direct_sum(&lim_id), n).shift(2);

    vec![
        ThetaComputation { method: "middle triangle", pi: homotopy(&triangle) },
        ThetaComputation { method: "pushout", pi: homotopy(&pushout) },
        ThetaComputation { method: "pullback", pi: homotopy(&pullback) },
        ThetaComputation { method: "cosimplicial shift of level 1", pi: homotopy(&shifted) },
    ]
}

/// Every computation of the skeleton at the given level.
pub fn theta_computations(lattice: &Lattice, n: i64, level: u8) -> Vec<ThetaComputation> {
    assert!(n >= 1, "modulus must be positive");
    match level {
        1 => level1(lattice.rank, n),
        2 => level2(lattice.rank, n),
        _ => panic!("θ-data exist at levels 1 and 2"),
    }
}

/// Level-2 homotopy groups from the pullback model alone, cheap enough for
/// every catalog rank.
pub fn theta_level2_homotopy(lattice: &Lattice, n: i64) -> [FgAbelianGroup; 3] {
    assert!(n >= 1, "modulus must be positive");
    homotopy(&level2_pullback(lattice.rank, n))
}

/// Computes the skeleton every available way and requires agreement.
pub fn theta_skeleton(lattice: &Lattice, n: i64, level: u8) -> ThetaSkeleton {
    let comps = theta_computations(lattice, n, level);
    for c in &comps[1..] {
        assert_eq!(c.pi, comps[0].pi, "{} disagrees with {}", c.method, comps[0].method);
    }
    let [pi0, pi1, pi2] = comps[0].pi.clone();
    ThetaSkeleton { rank: lattice.rank, modulus: n, level, pi0, pi1, pi2 }
}

//! Finitely presented abelian groups `ℤ^g / im(R)` and homomorphisms between
//! them, with exactness checks.

use num_bigint::BigInt;

use super::group::FgAbelianGroup;
use super::matrix::IntMatrix;
use super::snf::{kernel_basis, solve};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentedGroup {
    pub generators: usize,
    /// Columns are relations among the generators.
    pub relations: IntMatrix,
}

impl PresentedGroup {
    pub fn free(g: usize) -> Self {
        PresentedGroup { generators: g, relations: IntMatrix::zeros(g, 0) }
    }

    /// `(ℤ/n)^g`.
    pub fn mod_n(g: usize, n: i64) -> Self {
        PresentedGroup {
            generators: g,
            relations: IntMatrix::identity(g).scale(&BigInt::from(n)),
        }
    }

    pub fn new(relations: IntMatrix) -> Self {
        PresentedGroup { generators: relations.rows(), relations }
    }

    pub fn group(&self) -> FgAbelianGroup {
        FgAbelianGroup::cokernel(&self.relations)
    }

    /// Whether `v` (coordinates in the generators) is zero in the group.
    pub fn is_zero(&self, v: &[BigInt]) -> bool {
        solve(&self.relations, v).is_some()
    }
}

/// Homomorphism given by its matrix on generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentedMap {
    pub source: PresentedGroup,
    pub target: PresentedGroup,
    pub matrix: IntMatrix,
}

impl PresentedMap {
    pub fn new(source: &PresentedGroup, target: &PresentedGroup, matrix: IntMatrix) -> Self {
        assert_eq!(matrix.rows(), target.generators);
        assert_eq!(matrix.cols(), source.generators);
        PresentedMap { source: source.clone(), target: target.clone(), matrix }
    }

    /// Relations of the source are sent to zero.
    pub fn is_well_defined(&self) -> bool {
        let img = &self.matrix * &self.source.relations;
        (0..img.cols()).all(|j| self.target.is_zero(&img.column(j)))
    }

    /// Lattice of generator vectors mapping into the target's relations,
    /// i.e. the preimage of zero (columns span it).
    fn kernel_lattice(&self) -> IntMatrix {
        let g = self.source.generators;
        let stacked = self.matrix.hstack(&self.target.relations.neg());
        let k = kernel_basis(&stacked);
        let idx: Vec<usize> = (0..g).collect();
        k.select_rows(&idx)
    }

    pub fn is_injective(&self) -> bool {
        let k = self.kernel_lattice();
        (0..k.cols()).all(|j| self.source.is_zero(&k.column(j)))
    }

    pub fn is_surjective(&self) -> bool {
        let span = self.matrix.hstack(&self.target.relations);
        (0..self.target.generators).all(|i| {
            let mut e = vec![BigInt::from(0); self.target.generators];
            e[i] = BigInt::from(1);
            solve(&span, &e).is_some()
        })
    }

    pub fn compose(&self, first: &PresentedMap) -> PresentedMap {
        PresentedMap::new(&first.source, &self.target, &self.matrix * &first.matrix)
    }

    pub fn kernel(&self) -> FgAbelianGroup {
        let k = self.kernel_lattice();
        let lattice = k.hstack(&self.source.relations);
        quotient_of_lattices(&lattice, &self.source.relations)
    }

    pub fn cokernel(&self) -> FgAbelianGroup {
        FgAbelianGroup::cokernel(&self.matrix.hstack(&self.target.relations))
    }
}

/// `span(big) / span(small)` for `span(small) ⊆ span(big)` inside `ℤ^n`.
fn quotient_of_lattices(big: &IntMatrix, small: &IntMatrix) -> FgAbelianGroup {
    let snf = super::snf::smith_normal_form(big);
    let k = snf.rank();
    // basis of span(big): first k columns of U^{-1} D, i.e. u_inv columns scaled.
    let inv = snf.invariants();
    let mut basis_cols = Vec::new();
    for (i, d) in inv.iter().enumerate() {
        basis_cols.push(snf.u_inv.column(i).iter().map(|x| x * d).collect::<Vec<_>>());
    }
    let basis = IntMatrix::from_columns(big.rows(), &basis_cols);
    let coords: Vec<Vec<BigInt>> = (0..small.cols())
        .map(|j| solve(&basis, &small.column(j)).expect("small lattice inside big lattice"))
        .collect();
    FgAbelianGroup::cokernel(&IntMatrix::from_columns(k, &coords))
}

/// `{x ∈ (ℤ/n)^d : C x ≡ 0 mod n}` with invariant-factor generators.
/// Generators are reduced into `[0, n)` and listed with their orders;
/// trivial generators are dropped.
pub fn kernel_mod_n(c: &IntMatrix, n: i64) -> (FgAbelianGroup, Vec<(Vec<BigInt>, BigInt)>) {
    assert!(n >= 1);
    let d = c.cols();
    let nb = BigInt::from(n);
    let stacked = c.hstack(&IntMatrix::identity(c.rows()).scale(&-nb.clone()));
    let idx: Vec<usize> = (0..d).collect();
    // Preimage lattice L ⊇ nℤ^d; pick a basis of it.
    let gens = kernel_basis(&stacked).select_rows(&idx).hstack(&IntMatrix::identity(d).scale(&nb));
    let snf = super::snf::smith_normal_form(&gens);
    let inv = snf.invariants();
    let basis_cols: Vec<Vec<BigInt>> =
        inv.iter().enumerate().map(|(i, s)| snf.u_inv.column(i).iter().map(|x| x * s).collect()).collect();
    let basis = IntMatrix::from_columns(d, &basis_cols);
    // Relations: coordinates of n·e_i in the basis.
    let rel_cols: Vec<Vec<BigInt>> = (0..d)
        .map(|i| {
            let mut e = vec![BigInt::from(0); d];
            e[i] = nb.clone();
            solve(&basis, &e).expect("nℤ^d lies in the preimage lattice")
        })
        .collect();
    let rel = IntMatrix::from_columns(basis.cols(), &rel_cols);
    let rs = super::snf::smith_normal_form(&rel);
    // New generators: columns of basis · U⁻¹ with orders from the diagonal.
    let new_basis = &basis * &rs.u_inv;
    let orders = rs.invariants();
    let mut out = Vec::new();
    for k in 0..new_basis.cols() {
        let order = orders.get(k).cloned().unwrap_or_else(|| BigInt::from(0));
        if order == BigInt::from(1) {
            continue;
        }
        let v: Vec<BigInt> = new_basis.column(k).iter().map(|x| crate::util::modulo(x, &nb)).collect();
        out.push((v, order));
    }
    let group = FgAbelianGroup::from_cyclic_orders(0, &out.iter().map(|(_, o)| o.clone()).collect::<Vec<_>>());
    (group, out)
}

/// Exactness of `A →f B →g C` at `B` (both maps must be well defined).
pub fn is_exact_at(f: &PresentedMap, g: &PresentedMap) -> bool {
    if f.target != g.source || !f.is_well_defined() || !g.is_well_defined() {
        return false;
    }
    let composite = &g.matrix * &f.matrix;
    if !(0..composite.cols()).all(|j| g.target.is_zero(&composite.column(j))) {
        return false;
    }
    let ker = g.kernel_lattice();
    let image = f.matrix.hstack(&f.target.relations);
    (0..ker.cols()).all(|j| solve(&image, &ker.column(j)).is_some())
}

/// `0 → A →f B →g C → 0` is short exact.
pub fn is_short_exact(f: &PresentedMap, g: &PresentedMap) -> bool {
    f.is_injective() && is_exact_at(f, g) && g.is_surjective()
}

use num_bigint::BigInt;

use crate::abelian_core::snf::{kernel_basis, smith_normal_form, solve};
use crate::abelian_core::{FgAbelianGroup, IntMatrix};
use crate::forms::{polarize, QuadForm};
use crate::root_data::weyl::{mat_vec, Mat};
use crate::root_data::{strictness_violation, validate, BasedRootDatum};
use crate::util::{additive_order, big, dot, modi, to_i64};

use super::MetaDualError;

/// `Λ♯ = ker(b)` with the rescaled coroots `Φ♯ = {ord(Q(α))·α}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SharpData {
    /// Columns are a basis of `Λ♯ ⊂ Λ`, in column Hermite form.
    pub sharp_basis: Mat,
    /// `ord(Q(α))·α` in `Λ` coordinates, indexed like `rd.coroots`.
    pub sharp_coroots: Vec<Vec<i64>>,
    /// `ord(Q(α))⁻¹·α̌` on the basis of `Λ♯`, indexed like `rd.roots`.
    pub sharp_roots: Vec<Vec<i64>>,
    pub sharp_simple: Vec<usize>,
    /// Additive order of `Q(α)` in `ℤ/N`, per coroot.
    pub multipliers: Vec<i64>,
    pub modulus: i64,
}

impl SharpData {
    pub fn rank(&self) -> usize {
        self.sharp_basis.len()
    }

    /// Coordinates of `v ∈ Λ` in the basis of `Λ♯`, if `v ∈ Λ♯`.
    pub fn coordinates(&self, v: &[i64]) -> Option<Vec<i64>> {
        let r = self.rank();
        let cols: Vec<Vec<BigInt>> = (0..r).map(|j| (0..r).map(|i| big(self.sharp_basis[i][j])).collect()).collect();
        let m = IntMatrix::from_columns(r, &cols);
        let b: Vec<BigInt> = v.iter().map(|&x| big(x)).collect();
        solve(&m, &b).map(|x| x.iter().map(to_i64).collect())
    }

    /// The point of `Λ` with the given `Λ♯` coordinates.
    pub fn embed(&self, coords: &[i64]) -> Vec<i64> {
        mat_vec(&self.sharp_basis, coords)
    }

    pub fn basis_vector(&self, j: usize) -> Vec<i64> {
        self.sharp_basis.iter().map(|row| row[j]).collect()
    }
}

/// Lower-triangular column Hermite form of the lattice spanned by `gens`
/// (columns), assumed of full rank `r`.
pub(crate) fn hermite_basis(r: usize, mut gens: Vec<Vec<i64>>) -> Mat {
    for i in 0..r {
        loop {
            let live: Vec<usize> = (i..gens.len()).filter(|&j| gens[j][i] != 0).collect();
            let Some(&p) = live.iter().min_by_key(|&&j| gens[j][i].abs()) else {
                panic!("generators do not span a full-rank lattice");
            };
            gens.swap(i, p);
            if live.len() == 1 {
                break;
            }
            for j in i + 1..gens.len() {
                let f = gens[j][i].div_euclid(gens[i][i]);
                if f != 0 {
                    let pivot = gens[i].clone();
                    for (x, y) in gens[j].iter_mut().zip(&pivot) {
                        *x -= f * y;
                    }
                }
            }
        }
        if gens[i][i] < 0 {
            gens[i].iter_mut().for_each(|x| *x = -*x);
        }
        for j in 0..i {
            let f = gens[j][i].div_euclid(gens[i][i]);
            let pivot = gens[i].clone();
            for (x, y) in gens[j].iter_mut().zip(&pivot) {
                *x -= f * y;
            }
        }
    }
    (0..r).map(|row| (0..r).map(|c| gens[c][row]).collect()).collect()
}

/// Basis of `{λ : b(λ, ·) ≡ 0 mod N}`.
fn kernel_lattice(q: &QuadForm) -> Mat {
    let r = q.rank();
    let n = q.modulus();
    if r == 0 {
        return Vec::new();
    }
    let b = polarize(q);
    let rows: Vec<Vec<i64>> = (0..r).map(|i| (0..r).map(|j| b.get(i, j)).collect()).collect();
    let stacked = IntMatrix::from_rows(&rows).hstack(&IntMatrix::identity(r).scale(&big(-n)));
    let k = kernel_basis(&stacked);
    let mut gens: Vec<Vec<i64>> = (0..k.cols()).map(|j| (0..r).map(|i| k.get_i64(i, j)).collect()).collect();
    gens.extend((0..r).map(|i| (0..r).map(|j| if i == j { n } else { 0 }).collect()));
    hermite_basis(r, gens)
}

pub fn sharp_data(rd: &BasedRootDatum, q: &QuadForm) -> Result<SharpData, MetaDualError> {
    if let Some(v) = strictness_violation(rd, q).map_err(|_| MetaDualError::RankMismatch { form: q.rank(), datum: rd.rank })? {
        return Err(MetaDualError::NotStrict(v));
    }
    let n = q.modulus();
    let b = polarize(q);
    let sharp_basis = kernel_lattice(q);
    let basis_cols: Vec<Vec<i64>> = (0..rd.rank).map(|j| sharp_basis.iter().map(|row| row[j]).collect()).collect();
    let mut multipliers = Vec::new();
    let mut sharp_coroots = Vec::new();
    let mut sharp_roots = Vec::new();
    for (k, (a, x)) in rd.coroots.iter().zip(&rd.roots).enumerate() {
        let m = additive_order(q.eval(a), n);
        let scaled: Vec<i64> = a.iter().map(|v| m * v).collect();
        if (0..rd.rank).any(|l| {
            let mut e = vec![0; rd.rank];
            e[l] = 1;
            modi(b.eval(&scaled, &e), n) != 0
        }) {
            return Err(MetaDualError::Integrality(format!("{m}·α{k} is not in Λ♯")));
        }
        let mut root = Vec::new();
        for v in &basis_cols {
            let p = dot(x, v);
            if p % m != 0 {
                return Err(MetaDualError::Integrality(format!("α̌{k}/{m} is not integral on Λ♯ at {v:?}")));
            }
            root.push(p / m);
        }
        multipliers.push(m);
        sharp_coroots.push(scaled);
        sharp_roots.push(root);
    }
    Ok(SharpData { sharp_basis, sharp_coroots, sharp_roots, sharp_simple: rd.simple.clone(), multipliers, modulus: n })
}

/// The discrete skeleton `(H, Ž_H, ε)` of the dual pair, with the sharp datum
/// `G♯` it is built from.
#[derive(Clone, Debug)]
pub struct DualPair {
    pub sharp: SharpData,
    /// `G♯` written in the basis of `Λ♯`.
    pub g_sharp: BasedRootDatum,
    /// Langlands dual of `G♯`: `Λ♯` is its character lattice.
    pub h: BasedRootDatum,
    pub coefficient_ring: String,
    /// `Ž_H = Λ♯ / ⟨Φ♯⟩`.
    pub zh: FgAbelianGroup,
    /// Row `i` of the unimodular change of basis taking `Λ♯` coordinates to
    /// the invariant-factor coordinates of `Ž_H`.
    projection: Mat,
    /// Rows of `projection` that survive in `Ž_H`, with their cyclic orders
    /// (0 for free summands).
    kept: Vec<(usize, i64)>,
    lifts: Mat,
    pub epsilon: Option<super::EpsilonInvariant>,
}

impl DualPair {
    /// Normal-form coordinates in `Ž_H` of a point of `Λ♯` (given in `Λ♯` coordinates).
    pub fn zh_coordinates(&self, coords: &[i64]) -> Vec<i64> {
        self.kept
            .iter()
            .map(|&(i, d)| {
                let y: i64 = self.projection[i].iter().zip(coords).map(|(a, b)| a * b).sum();
                if d == 0 {
                    y
                } else {
                    y.rem_euclid(d)
                }
            })
            .collect()
    }

    /// A point of `Λ♯` (in `Λ♯` coordinates) lifting generator `g` of `Ž_H`.
    pub fn zh_lift(&self, g: usize) -> Vec<i64> {
        let i = self.kept[g].0;
        self.lifts.iter().map(|row| row[i]).collect()
    }

    /// `ε` at a point of `Λ` lying in `Λ♯`.
    pub fn epsilon_at(&self, v: &[i64]) -> Option<i64> {
        let e = self.epsilon.as_ref()?;
        let coords = self.sharp.coordinates(v)?;
        Some(e.eval(&self.zh_coordinates(&coords)))
    }
}

pub fn dual_root_datum(rd: &BasedRootDatum, q: &QuadForm) -> Result<DualPair, MetaDualError> {
    let sharp = sharp_data(rd, q)?;
    let r = rd.rank;
    let to_sharp = |v: &[i64]| sharp.coordinates(v).expect("sharp coroots lie in Λ♯");
    let g_coroots: Vec<Vec<i64>> = sharp.sharp_coroots.iter().map(|v| to_sharp(v)).collect();
    let g_roots = sharp.sharp_roots.clone();
    let g_sharp = BasedRootDatum {
        name: format!("{}#", rd.name),
        rank: r,
        coroots: g_coroots.clone(),
        roots: g_roots.clone(),
        simple: rd.simple.clone(),
    };
    let violations = validate(&g_sharp);
    if !violations.is_empty() {
        return Err(MetaDualError::Invalid(violations.iter().map(|v| v.0.clone()).collect()));
    }
    let h = BasedRootDatum { name: format!("{}^", g_sharp.name), rank: r, coroots: g_roots, roots: g_coroots.clone(), simple: rd.simple.clone() };

    let (projection, lifts, kept) = if g_coroots.is_empty() || r == 0 {
        let id: Mat = (0..r).map(|i| (0..r).map(|j| i64::from(i == j)).collect()).collect();
        (id.clone(), id, (0..r).map(|i| (i, 0)).collect::<Vec<_>>())
    } else {
        let cols: Vec<Vec<BigInt>> = g_coroots.iter().map(|c| c.iter().map(|&x| big(x)).collect()).collect();
        let snf = smith_normal_form(&IntMatrix::from_columns(r, &cols));
        let inv = snf.invariants();
        let mut kept = Vec::new();
        for (i, d) in inv.iter().enumerate() {
            let d = to_i64(d);
            if d != 1 {
                kept.push((i, d));
            }
        }
        kept.extend((inv.len()..r).map(|i| (i, 0)));
        let grab = |m: &IntMatrix| -> Mat { (0..r).map(|i| (0..r).map(|j| m.get_i64(i, j)).collect()).collect() };
        (grab(&snf.u), grab(&snf.u_inv), kept)
    };
    let zh = FgAbelianGroup::new(kept.iter().filter(|k| k.1 == 0).count(), &kept.iter().filter(|k| k.1 != 0).map(|k| k.1).collect::<Vec<_>>());
    Ok(DualPair { sharp, g_sharp, h, coefficient_ring: "E".into(), zh, projection, kept, lifts, epsilon: None })
}

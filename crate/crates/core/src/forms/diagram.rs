//! The quadratic functors of a lattice with explicit bases, and the square
//! of short exact sequences relating them:
//!
//! ```text
//!   Sym² ↪ Γ²  ↠ Λ̌/2
//!    ‖     ↓      ↓
//!   Sym² ↪ ⊗²  ↠ Ant²
//!          ↓      ↓
//!          ∧²  =  ∧²
//! ```

use num_bigint::BigInt;

use crate::abelian_core::functors::{norm, pair_index_le, pair_index_lt, pairs_le, pairs_lt};
use crate::abelian_core::{is_short_exact, FgAbelianGroup, FunctorTag, IntMatrix, PresentedGroup, PresentedMap};

use super::quad::Lattice;

/// Value of a quadratic functor on a lattice.
#[derive(Clone, Debug)]
pub struct FunctorValue {
    pub tag: FunctorTag,
    pub group: FgAbelianGroup,
    pub presentation: PresentedGroup,
    /// Human-readable names of the presentation generators.
    pub basis: Vec<String>,
    pub diagram: FunctorDiagram,
}

/// The functors of one lattice and the maps between them.
#[derive(Clone, Debug)]
pub struct FunctorDiagram {
    pub rank: usize,
    pub sym2: PresentedGroup,
    pub gamma2: PresentedGroup,
    pub tensor2: PresentedGroup,
    pub wedge2: PresentedGroup,
    pub ant2: PresentedGroup,
    pub dual_mod2: PresentedGroup,
    pub sym_to_gamma: PresentedMap,
    pub gamma_to_mod2: PresentedMap,
    pub gamma_to_tensor: PresentedMap,
    pub tensor_to_wedge: PresentedMap,
    pub sym_to_tensor: PresentedMap,
    pub tensor_to_ant: PresentedMap,
    pub mod2_to_ant: PresentedMap,
    pub ant_to_wedge: PresentedMap,
    /// `∧² ↪ ⊗²` as antisymmetric tensors.
    pub wedge_to_tensor: PresentedMap,
    /// `⊗² ↠ Sym²` by multiplication.
    pub tensor_to_sym: PresentedMap,
}

/// One exactness or commutativity check of the diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramCheck {
    pub name: &'static str,
    pub holds: bool,
}

fn one() -> BigInt {
    BigInt::from(1)
}

impl FunctorDiagram {
    pub fn new(r: usize) -> Self {
        let sym_dim = r * (r + 1) / 2;
        let wedge_dim = r * r.saturating_sub(1) / 2;
        let sym2 = PresentedGroup::free(sym_dim);
        let gamma2 = PresentedGroup::free(sym_dim);
        let tensor2 = PresentedGroup::free(r * r);
        let wedge2 = PresentedGroup::free(wedge_dim);
        let ant2 = PresentedGroup::new(norm(r));
        let dual_mod2 = PresentedGroup::mod_n(r, 2);

        let mut sg = IntMatrix::zeros(sym_dim, sym_dim);
        let mut g2 = IntMatrix::zeros(r, sym_dim);
        let mut gt = IntMatrix::zeros(r * r, sym_dim);
        for (c, (i, j)) in pairs_le(r).into_iter().enumerate() {
            if i == j {
                sg.set(c, c, BigInt::from(2));
                g2.set(i, c, one());
                gt.set(i * r + i, c, one());
            } else {
                sg.set(c, c, one());
                gt.set(i * r + j, c, one());
                gt.set(j * r + i, c, one());
            }
        }
        let mut tw = IntMatrix::zeros(wedge_dim, r * r);
        let mut ts = IntMatrix::zeros(sym_dim, r * r);
        for i in 0..r {
            for j in 0..r {
                ts.set(pair_index_le(r, i.min(j), i.max(j)), i * r + j, one());
                if i < j {
                    tw.set(pair_index_lt(r, i, j), i * r + j, one());
                } else if i > j {
                    tw.set(pair_index_lt(r, j, i), i * r + j, -one());
                }
            }
        }
        let mut wt = IntMatrix::zeros(r * r, wedge_dim);
        for (c, (i, j)) in pairs_lt(r).into_iter().enumerate() {
            wt.set(i * r + j, c, one());
            wt.set(j * r + i, c, -one());
        }
        let mut ma = IntMatrix::zeros(r * r, r);
        for i in 0..r {
            ma.set(i * r + i, i, one());
        }

        FunctorDiagram {
            rank: r,
            sym_to_gamma: PresentedMap::new(&sym2, &gamma2, sg),
            gamma_to_mod2: PresentedMap::new(&gamma2, &dual_mod2, g2),
            gamma_to_tensor: PresentedMap::new(&gamma2, &tensor2, gt),
            tensor_to_wedge: PresentedMap::new(&tensor2, &wedge2, tw.clone()),
            sym_to_tensor: PresentedMap::new(&sym2, &tensor2, norm(r)),
            tensor_to_ant: PresentedMap::new(&tensor2, &ant2, IntMatrix::identity(r * r)),
            mod2_to_ant: PresentedMap::new(&dual_mod2, &ant2, ma),
            ant_to_wedge: PresentedMap::new(&ant2, &wedge2, tw),
            wedge_to_tensor: PresentedMap::new(&wedge2, &tensor2, wt),
            tensor_to_sym: PresentedMap::new(&tensor2, &sym2, ts),
            sym2,
            gamma2,
            tensor2,
            wedge2,
            ant2,
            dual_mod2,
        }
    }

    /// Exactness of every row and column, commutativity of both squares,
    /// and exactness of `∧² ↪ ⊗² ↠ Sym²`.
    pub fn verify(&self) -> Vec<DiagramCheck> {
        let check = |name, holds| DiagramCheck { name, holds };
        vec![
            check("Sym2 -> Gamma2 -> dual/2", is_short_exact(&self.sym_to_gamma, &self.gamma_to_mod2)),
            check("Sym2 -> Tensor2 -> Ant2", is_short_exact(&self.sym_to_tensor, &self.tensor_to_ant)),
            check("Gamma2 -> Tensor2 -> Wedge2", is_short_exact(&self.gamma_to_tensor, &self.tensor_to_wedge)),
            check("dual/2 -> Ant2 -> Wedge2", is_short_exact(&self.mod2_to_ant, &self.ant_to_wedge)),
            check("Wedge2 -> Tensor2 -> Sym2", is_short_exact(&self.wedge_to_tensor, &self.tensor_to_sym)),
            check(
                "left square commutes",
                maps_agree(&self.gamma_to_tensor.compose(&self.sym_to_gamma), &self.sym_to_tensor),
            ),
            check(
                "right square commutes",
                maps_agree(
                    &self.tensor_to_ant.compose(&self.gamma_to_tensor),
                    &self.mod2_to_ant.compose(&self.gamma_to_mod2),
                ),
            ),
            check(
                "bottom square commutes",
                maps_agree(&self.ant_to_wedge.compose(&self.tensor_to_ant), &self.tensor_to_wedge),
            ),
        ]
    }

    pub fn all_hold(&self) -> bool {
        self.verify().iter().all(|c| c.holds)
    }
}

/// Two maps with the same source and target agree on every generator.
pub fn maps_agree(f: &PresentedMap, g: &PresentedMap) -> bool {
    let diff = f.matrix.sub(&g.matrix);
    (0..diff.cols()).all(|j| f.target.is_zero(&diff.column(j)))
}

fn names(r: usize, tag: FunctorTag) -> Vec<String> {
    let tensor = || (0..r).flat_map(|i| (0..r).map(move |j| format!("e{i}⊗e{j}"))).collect();
    match tag {
        FunctorTag::Id => (0..r).map(|i| format!("e{i}")).collect(),
        FunctorTag::Tensor2 | FunctorTag::Ant2 => tensor(),
        FunctorTag::Sym2 => pairs_le(r).into_iter().map(|(i, j)| format!("e{i}e{j}")).collect(),
        FunctorTag::Gamma2 => pairs_le(r)
            .into_iter()
            .map(|(i, j)| if i == j { format!("γ2(e{i})") } else { format!("e{i}e{j}") })
            .collect(),
        FunctorTag::Wedge2 => pairs_lt(r).into_iter().map(|(i, j)| format!("e{i}∧e{j}")).collect(),
        FunctorTag::Hcheck1 => Vec::new(),
    }
}

/// Evaluates a quadratic functor on `L` and returns it with the whole diagram.
/// `Id` is accepted for convenience; `Hcheck1` is not a functor of this diagram.
pub fn functor_apply(lattice: &Lattice, tag: FunctorTag) -> FunctorValue {
    let diagram = FunctorDiagram::new(lattice.rank);
    let presentation = match tag {
        FunctorTag::Id => PresentedGroup::free(lattice.rank),
        FunctorTag::Tensor2 => diagram.tensor2.clone(),
        FunctorTag::Sym2 => diagram.sym2.clone(),
        FunctorTag::Gamma2 => diagram.gamma2.clone(),
        FunctorTag::Wedge2 => diagram.wedge2.clone(),
        FunctorTag::Ant2 => diagram.ant2.clone(),
        FunctorTag::Hcheck1 => panic!("Hcheck1 is not part of the functor diagram"),
    };
    FunctorValue {
        tag,
        group: presentation.group(),
        presentation,
        basis: names(lattice.rank, tag),
        diagram,
    }
}

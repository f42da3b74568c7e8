//! Symmetric monoidal structures on `Γ × B(ℤ/N)` for finite `Γ`, as a
//! normalized associator 3-cochain and braiding 2-cochain.

use std::fmt;

use crate::abelian_core::FgAbelianGroup;
use crate::util::modi;

use super::PicardError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymMonExt {
    pub base: FgAbelianGroup,
    pub modulus: i64,
    /// `a(x, y, z)` at `(ix·|Γ| + iy)·|Γ| + iz`, indices from `element_index`.
    pub associator: Vec<i64>,
    /// `c(x, y)` at `ix·|Γ| + iy`.
    pub braiding: Vec<i64>,
}

impl SymMonExt {
    pub fn trivial(base: &FgAbelianGroup, modulus: i64) -> Result<Self, PicardError> {
        if !base.is_finite() {
            return Err(PicardError::InfiniteBase);
        }
        let g = base.elements().len();
        Ok(SymMonExt { base: base.clone(), modulus, associator: vec![0; g * g * g], braiding: vec![0; g * g] })
    }

    fn order(&self) -> usize {
        self.base.torsion_i64().iter().product::<i64>() as usize
    }

    pub fn assoc(&self, x: usize, y: usize, z: usize) -> i64 {
        let g = self.order();
        self.associator[(x * g + y) * g + z]
    }

    pub fn braid(&self, x: usize, y: usize) -> i64 {
        self.braiding[x * self.order() + y]
    }

    pub fn set_braid(&mut self, x: usize, y: usize, v: i64) {
        let g = self.order();
        self.braiding[x * g + y] = modi(v, self.modulus);
    }

    pub fn baer_sum(&self, other: &Self) -> Result<Self, PicardError> {
        if self.base != other.base || self.modulus != other.modulus {
            return Err(PicardError::BaseMismatch);
        }
        let add = |a: &[i64], b: &[i64]| a.iter().zip(b).map(|(x, y)| modi(x + y, self.modulus)).collect();
        Ok(SymMonExt {
            base: self.base.clone(),
            modulus: self.modulus,
            associator: add(&self.associator, &other.associator),
            braiding: add(&self.braiding, &other.braiding),
        })
    }

    /// Pullback along `φ : Γ' → Γ`, given by the images of the generators of `Γ'`.
    pub fn pullback(&self, source: &FgAbelianGroup, images: &[Vec<i64>]) -> Result<Self, PicardError> {
        if !source.is_finite() {
            return Err(PicardError::InfiniteBase);
        }
        let phi = |x: &[i64]| -> usize {
            let mut acc = self.base.zero_element();
            for (k, &c) in x.iter().enumerate() {
                acc = self.base.add_elements(&acc, &self.base.scale_element(c, &images[k]));
            }
            self.base.element_index(&acc)
        };
        let el = source.elements();
        let img: Vec<usize> = el.iter().map(|x| phi(x)).collect();
        let g = el.len();
        let mut out = SymMonExt::trivial(source, self.modulus)?;
        for x in 0..g {
            for y in 0..g {
                out.braiding[x * g + y] = self.braid(img[x], img[y]);
                for z in 0..g {
                    out.associator[(x * g + y) * g + z] = self.assoc(img[x], img[y], img[z]);
                }
            }
        }
        Ok(out)
    }
}

/// Which axioms `check_coherence` enforces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axioms {
    Symmetric,
    /// Braided monoidal: the inverse axiom is skipped.
    Braided,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoherenceFailure {
    pub axiom: &'static str,
    /// Offending elements in normal-form coordinates.
    pub elements: Vec<Vec<i64>>,
}

impl fmt::Display for CoherenceFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {:?}", self.axiom, self.elements)
    }
}

/// Brute force over all tuples: normalization, pentagon, both hexagons and
/// (for [`Axioms::Symmetric`]) `c(x, y) + c(y, x) = 0`.
pub fn check_coherence(s: &SymMonExt, axioms: Axioms) -> Result<(), CoherenceFailure> {
    let el = s.base.elements();
    let g = el.len();
    let n = s.modulus;
    let sum: Vec<Vec<usize>> =
        (0..g).map(|x| (0..g).map(|y| s.base.element_index(&s.base.add_elements(&el[x], &el[y]))).collect()).collect();
    let fail = |axiom: &'static str, idx: &[usize]| CoherenceFailure { axiom, elements: idx.iter().map(|&i| el[i].clone()).collect() };
    let zero = s.base.element_index(&s.base.zero_element());
    for x in 0..g {
        for y in 0..g {
            if (x == zero || y == zero) && s.braid(x, y) != 0 {
                return Err(fail("normalization", &[x, y]));
            }
            for z in 0..g {
                if (x == zero || y == zero || z == zero) && s.assoc(x, y, z) != 0 {
                    return Err(fail("normalization", &[x, y, z]));
                }
            }
        }
    }
    for x in 0..g {
        for y in 0..g {
            for z in 0..g {
                for w in 0..g {
                    let v = s.assoc(y, z, w) - s.assoc(sum[x][y], z, w) + s.assoc(x, sum[y][z], w) - s.assoc(x, y, sum[z][w])
                        + s.assoc(x, y, z);
                    if modi(v, n) != 0 {
                        return Err(fail("pentagon", &[x, y, z, w]));
                    }
                }
            }
        }
    }
    for x in 0..g {
        for y in 0..g {
            for z in 0..g {
                let h1 = s.braid(x, sum[y][z]) - s.braid(x, y) - s.braid(x, z) - s.assoc(y, x, z) + s.assoc(y, z, x) + s.assoc(x, y, z);
                if modi(h1, n) != 0 {
                    return Err(fail("first hexagon", &[x, y, z]));
                }
                let h2 = s.braid(sum[x][y], z) - s.braid(x, z) - s.braid(y, z) + s.assoc(x, z, y) - s.assoc(z, x, y) - s.assoc(x, y, z);
                if modi(h2, n) != 0 {
                    return Err(fail("second hexagon", &[x, y, z]));
                }
            }
        }
    }
    if axioms == Axioms::Symmetric {
        for x in 0..g {
            for y in 0..g {
                if modi(s.braid(x, y) + s.braid(y, x), n) != 0 {
                    return Err(fail("inverse", &[x, y]));
                }
            }
        }
    }
    Ok(())
}

/// Strict associator; `c(x, y) = ε` when `f(x) = f(y) = ε` (the element of
/// order 2 in `ℤ/N`), else `0`. `f` is given on the generators of `Γ`.
pub fn build_symmon_from_hom(base: &FgAbelianGroup, modulus: i64, f: &[i64]) -> Result<SymMonExt, PicardError> {
    if !base.is_finite() {
        return Err(PicardError::InfiniteBase);
    }
    if f.len() != base.num_generators() {
        return Err(PicardError::NotAHomomorphism(format!("{} values for {} generators", f.len(), base.num_generators())));
    }
    let f: Vec<i64> = f.iter().map(|&v| modi(v, modulus)).collect();
    let nonzero = f.iter().any(|&v| v != 0);
    if nonzero && modulus % 2 != 0 {
        return Err(PicardError::OddModulus(modulus));
    }
    for (i, (&v, d)) in f.iter().zip(base.torsion_i64()).enumerate() {
        if modi(2 * v, modulus) != 0 || modi(d * v, modulus) != 0 {
            return Err(PicardError::NotAHomomorphism(format!("value {v} on generator {i}")));
        }
    }
    let eps = modulus / 2;
    let el = base.elements();
    let value = |x: &[i64]| modi(x.iter().zip(&f).map(|(a, b)| a * b).sum(), modulus);
    let mut s = SymMonExt::trivial(base, modulus)?;
    for (i, x) in el.iter().enumerate() {
        for (j, y) in el.iter().enumerate() {
            if nonzero && value(x) == eps && value(y) == eps {
                s.set_braid(i, j, eps);
            }
        }
    }
    Ok(s)
}

/// `a ↦ c(a, a)`, indexed by `element_index`; checked to be a homomorphism
/// `Γ/2 → ℤ/N`.
pub fn inv(s: &SymMonExt) -> Result<Vec<i64>, PicardError> {
    check_coherence(s, Axioms::Symmetric).map_err(PicardError::Incoherent)?;
    let el = s.base.elements();
    let values: Vec<i64> = (0..el.len()).map(|i| s.braid(i, i)).collect();
    let n = s.modulus;
    for (i, x) in el.iter().enumerate() {
        if modi(2 * values[i], n) != 0 {
            return Err(PicardError::NotAHomomorphism(format!("2·inv({x:?}) ≠ 0")));
        }
        for (j, y) in el.iter().enumerate() {
            let k = s.base.element_index(&s.base.add_elements(x, y));
            if modi(values[k] - values[i] - values[j], n) != 0 {
                return Err(PicardError::NotAHomomorphism(format!("inv is not additive at {x:?}, {y:?}")));
            }
        }
    }
    Ok(values)
}

use std::collections::HashMap;

use thiserror::Error;

use super::datum::BasedRootDatum;

pub const DEFAULT_WEYL_CAP: usize = 10_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WeylError {
    #[error("Weyl group has more than {cap} elements")]
    CapExceeded { cap: usize },
}

/// Square integer matrix acting on column vectors of `Λ`.
pub type Mat = Vec<Vec<i64>>;

pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    (0..n).map(|i| (0..m).map(|j| (0..b.len()).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
}

pub fn mat_vec(a: &Mat, v: &[i64]) -> Vec<i64> {
    a.iter().map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum()).collect()
}

pub fn identity(r: usize) -> Mat {
    (0..r).map(|i| (0..r).map(|j| i64::from(i == j)).collect()).collect()
}

/// Matrix of `s_α = 1 - α α̌ᵀ` on `Λ` for coroot `k`.
pub fn reflection_matrix(rd: &BasedRootDatum, k: usize) -> Mat {
    let (a, b) = (&rd.coroots[k], &rd.roots[k]);
    let r = rd.rank;
    (0..r).map(|i| (0..r).map(|j| i64::from(i == j) - a[i] * b[j]).collect()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    pub matrix: Mat,
    pub length: usize,
    /// A reduced word in positions of `rd.simple`.
    pub word: Vec<usize>,
}

/// `w ∈ W⁽²⁾` with every way of writing it as `s_a s_b` (positions in `Δ`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LengthTwo {
    pub element: usize,
    pub factorizations: Vec<(usize, usize)>,
}

#[derive(Clone, Debug)]
pub struct WeylGroup {
    pub rank: usize,
    pub elements: Vec<WeylElement>,
    /// Whether every element is present, or only lengths `≤ 2`.
    pub complete: bool,
    pub simple_reflections: Vec<Mat>,
    index: HashMap<Mat, usize>,
}

impl WeylGroup {
    /// Full group, failing beyond `cap` elements.
    pub fn generate(rd: &BasedRootDatum, cap: usize) -> Result<Self, WeylError> {
        let w = Self::build(rd, cap, None);
        if w.complete {
            Ok(w)
        } else {
            Err(WeylError::CapExceeded { cap })
        }
    }

    /// Full group when it fits under `cap`, otherwise lengths `≤ 2` only.
    pub fn generate_or_truncate(rd: &BasedRootDatum, cap: usize) -> Self {
        let w = Self::build(rd, cap, None);
        if w.complete {
            w
        } else {
            Self::build(rd, usize::MAX, Some(2))
        }
    }

    /// Elements of length `≤ max_len` only, failing beyond `cap` elements.
    pub fn truncated(rd: &BasedRootDatum, max_len: usize, cap: usize) -> Result<Self, WeylError> {
        let w = Self::build(rd, cap, Some(max_len));
        if w.elements.len() > cap {
            return Err(WeylError::CapExceeded { cap });
        }
        Ok(w)
    }

    fn build(rd: &BasedRootDatum, cap: usize, max_len: Option<usize>) -> Self {
        let r = rd.rank;
        let simple_reflections: Vec<Mat> = rd.simple.iter().map(|&k| reflection_matrix(rd, k)).collect();
        let mut elements = vec![WeylElement { matrix: identity(r), length: 0, word: vec![] }];
        let mut index = HashMap::new();
        index.insert(identity(r), 0);
        let mut frontier = vec![0usize];
        let mut complete = true;
        let mut depth = 0;
        while !frontier.is_empty() {
            if max_len.is_some_and(|m| depth >= m) {
                complete = false;
                break;
            }
            let mut next = Vec::new();
            for &e in &frontier {
                for (s, sm) in simple_reflections.iter().enumerate() {
                    let m = mat_mul(&elements[e].matrix, sm);
                    if index.contains_key(&m) {
                        continue;
                    }
                    let mut word = elements[e].word.clone();
                    word.push(s);
                    index.insert(m.clone(), elements.len());
                    next.push(elements.len());
                    elements.push(WeylElement { matrix: m, length: depth + 1, word });
                    if elements.len() > cap {
                        return WeylGroup { rank: r, elements, complete: false, simple_reflections, index };
                    }
                }
            }
            frontier = next;
            depth += 1;
        }
        WeylGroup { rank: r, elements, complete, simple_reflections, index }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn find(&self, m: &Mat) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn of_length(&self, l: usize) -> Vec<usize> {
        (0..self.elements.len()).filter(|&i| self.elements[i].length == l).collect()
    }

    /// `W⁽²⁾` with all factorizations into two simple reflections.
    pub fn length_two(&self) -> Vec<LengthTwo> {
        let n = self.simple_reflections.len();
        self.of_length(2)
            .into_iter()
            .map(|e| {
                let factorizations = (0..n)
                    .flat_map(|a| (0..n).map(move |b| (a, b)))
                    .filter(|&(a, b)| a != b && mat_mul(&self.simple_reflections[a], &self.simple_reflections[b]) == self.elements[e].matrix)
                    .collect();
                LengthTwo { element: e, factorizations }
            })
            .collect()
    }

    /// Bruhat order between a simple reflection and an element of length `≤ 2`.
    pub fn simple_below(&self, simple: usize, element: usize) -> bool {
        let e = &self.elements[element];
        match e.length {
            0 => false,
            1 => e.word == [simple],
            2 => self.length_two().iter().find(|l| l.element == element).is_some_and(|l| l.factorizations.iter().any(|&(a, b)| a == simple || b == simple)),
            _ => panic!("Bruhat comparison is only recorded up to length 2"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::catalog;

    #[test]
    fn small_orders() {
        let w = WeylGroup::generate(&catalog("SL2").unwrap(), DEFAULT_WEYL_CAP).unwrap();
        assert_eq!(w.order(), 2);
        assert_eq!(w.elements.iter().map(|e| e.length).collect::<Vec<_>>(), vec![0, 1]);
        let w = WeylGroup::generate(&catalog("SL3").unwrap(), DEFAULT_WEYL_CAP).unwrap();
        assert_eq!((w.order(), w.of_length(2).len()), (6, 2));
        assert_eq!(WeylGroup::generate(&catalog("G2").unwrap(), DEFAULT_WEYL_CAP).unwrap().order(), 12);
    }

    #[test]
    fn cap_truncates_to_low_lengths() {
        let rd = catalog("E8").unwrap();
        assert!(matches!(WeylGroup::generate(&rd, DEFAULT_WEYL_CAP), Err(WeylError::CapExceeded { .. })));
        let w = WeylGroup::generate_or_truncate(&rd, DEFAULT_WEYL_CAP);
        assert!(!w.complete);
        assert_eq!(w.of_length(1).len(), 8);
        // pairs of distinct simple reflections, commuting pairs counted once
        assert_eq!(w.of_length(2).len(), 8 * 7 - 21);
    }
}

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::abelian_core::functors::{pair_index_le, pairs_le};
use crate::util::modi;

use super::FormsError;

/// Lattice `ℤ^r` with its standard basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Lattice {
    pub rank: usize,
    pub name: Option<String>,
}

impl Lattice {
    pub fn new(rank: usize) -> Self {
        Lattice { rank, name: None }
    }

    pub fn named(rank: usize, name: &str) -> Self {
        Lattice { rank, name: Some(name.to_string()) }
    }
}

/// `Q(x) = Σ_{i≤j} q_ij x_i x_j mod N`, stored by upper-triangular coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadForm {
    rank: usize,
    modulus: i64,
    /// In `pairs_le(rank)` order, reduced into `[0, N)`.
    coeffs: Vec<i64>,
}

impl QuadForm {
    pub fn zero(rank: usize, modulus: i64) -> Self {
        assert!(modulus >= 1, "modulus must be positive");
        QuadForm { rank, modulus, coeffs: vec![0; rank * (rank + 1) / 2] }
    }

    /// From `(i, j, q_ij)` triples with `i ≤ j` (0-based). Repeated pairs add up.
    pub fn from_coeffs(rank: usize, modulus: i64, entries: &[(usize, usize, i64)]) -> Result<Self, FormsError> {
        let mut q = Self::zero(rank, modulus);
        for &(i, j, v) in entries {
            if i > j || j >= rank {
                return Err(FormsError::BadIndex { i, j, rank });
            }
            let k = pair_index_le(rank, i, j);
            q.coeffs[k] = modi(q.coeffs[k] + v, modulus);
        }
        Ok(q)
    }

    /// From the flat upper-triangular list in `pairs_le` order.
    pub fn from_list(rank: usize, modulus: i64, list: &[i64]) -> Result<Self, FormsError> {
        if list.len() != rank * (rank + 1) / 2 {
            return Err(FormsError::BadLength { expected: rank * (rank + 1) / 2, got: list.len() });
        }
        let mut q = Self::zero(rank, modulus);
        for (k, v) in list.iter().enumerate() {
            q.coeffs[k] = modi(*v, modulus);
        }
        Ok(q)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn modulus(&self) -> i64 {
        self.modulus
    }

    pub fn coeff(&self, i: usize, j: usize) -> i64 {
        self.coeffs[pair_index_le(self.rank, i, j)]
    }

    pub fn coeff_list(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn eval(&self, x: &[i64]) -> i64 {
        assert_eq!(x.len(), self.rank);
        let n = self.modulus;
        let mut acc = 0i64;
        for (k, (i, j)) in pairs_le(self.rank).into_iter().enumerate() {
            let c = self.coeffs[k];
            if c != 0 {
                let t = modi(modi(x[i], n) * modi(x[j], n), n);
                acc = modi(acc + c * t, n);
            }
        }
        acc
    }

    pub fn add(&self, other: &QuadForm) -> QuadForm {
        assert_eq!((self.rank, self.modulus), (other.rank, other.modulus));
        QuadForm {
            rank: self.rank,
            modulus: self.modulus,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| modi(a + b, self.modulus)).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> QuadForm {
        QuadForm {
            rank: self.rank,
            modulus: self.modulus,
            coeffs: self.coeffs.iter().map(|a| modi(a * k, self.modulus)).collect(),
        }
    }

    pub fn neg(&self) -> QuadForm {
        self.scale(-1)
    }

    /// Reduction to a modulus dividing `N`.
    pub fn reduce(&self, m: i64) -> QuadForm {
        assert!(self.modulus % m == 0, "{m} does not divide {}", self.modulus);
        QuadForm {
            rank: self.rank,
            modulus: m,
            coeffs: self.coeffs.iter().map(|a| modi(*a, m)).collect(),
        }
    }

    /// `Q ∘ g` for an integer matrix `g : ℤ^s → ℤ^r` given by rows (r×s).
    pub fn pullback(&self, g: &[Vec<i64>]) -> QuadForm {
        assert_eq!(g.len(), self.rank);
        let s = g.first().map_or(0, |row| row.len());
        let col = |j: usize| -> Vec<i64> { g.iter().map(|row| row[j]).collect() };
        let mut entries = Vec::new();
        let b = polarize(self);
        for j in 0..s {
            entries.push((j, j, self.eval(&col(j))));
            for k in j + 1..s {
                entries.push((j, k, b.eval(&col(j), &col(k))));
            }
        }
        QuadForm::from_coeffs(s, self.modulus, &entries).expect("indices in range")
    }

    /// Monomial shorthand, e.g. `x^2 + 3xy + y^2` or `x1^2 - x1x2`.
    /// Variables: `x, y, z, w` for ranks ≤ 4, or `x1, x2, …` (1-based).
    pub fn parse_monomials(rank: usize, modulus: i64, text: &str) -> Result<Self, FormsError> {
        let cleaned: String = text.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
        if cleaned.is_empty() || cleaned == "0" {
            return Ok(Self::zero(rank, modulus));
        }
        let mut entries = Vec::new();
        let mut terms = Vec::new();
        let mut cur = String::new();
        for ch in cleaned.chars() {
            if (ch == '+' || ch == '-') && !cur.is_empty() {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        terms.push(cur);
        for term in terms {
            let (sign, body) = match term.strip_prefix('-') {
                Some(rest) => (-1, rest.to_string()),
                None => (1, term.trim_start_matches('+').to_string()),
            };
            let digits: String = body.chars().take_while(|c| c.is_ascii_digit()).collect();
            let coeff: i64 = if digits.is_empty() { 1 } else { digits.parse().map_err(|_| FormsError::Parse(term.clone()))? };
            let vars = parse_variables(&body[digits.len()..], rank).ok_or_else(|| FormsError::Parse(term.clone()))?;
            match vars.as_slice() {
                [i, j] => entries.push(((*i).min(*j), (*i).max(*j), sign * coeff)),
                _ => return Err(FormsError::Parse(term.clone())),
            }
        }
        Self::from_coeffs(rank, modulus, &entries)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut coeffs = serde_json::Map::new();
        for (k, (i, j)) in pairs_le(self.rank).into_iter().enumerate() {
            if self.coeffs[k] != 0 {
                coeffs.insert(format!("{i},{j}"), serde_json::Value::from(self.coeffs[k]));
            }
        }
        serde_json::json!({ "N": self.modulus, "coeffs": coeffs })
    }

    /// Parses `{ "N": n, "coeffs": { "i,j": value } }` (0-based indices).
    pub fn from_json(rank: usize, text: &str) -> Result<Self, FormsError> {
        #[derive(Deserialize)]
        struct Raw {
            #[serde(rename = "N")]
            n: i64,
            coeffs: BTreeMap<String, i64>,
        }
        let raw: Raw = serde_json::from_str(text).map_err(|e| FormsError::Parse(e.to_string()))?;
        if raw.n < 1 {
            return Err(FormsError::Parse(format!("modulus {} must be positive", raw.n)));
        }
        let mut entries = Vec::new();
        for (key, v) in raw.coeffs {
            let parts: Vec<&str> = key.split(',').map(str::trim).collect();
            let [a, b] = parts.as_slice() else {
                return Err(FormsError::Parse(format!("bad coefficient key {key:?}")));
            };
            let i: usize = a.parse().map_err(|_| FormsError::Parse(key.clone()))?;
            let j: usize = b.parse().map_err(|_| FormsError::Parse(key.clone()))?;
            entries.push((i.min(j), i.max(j), v));
        }
        Self::from_coeffs(rank, raw.n, &entries)
    }
}

fn parse_variables(s: &str, rank: usize) -> Option<Vec<usize>> {
    let letters = ['x', 'y', 'z', 'w'];
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        k += 1;
        let idx = if c == 'x' && k < chars.len() && chars[k].is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let n: usize = chars[start..k].iter().collect::<String>().parse().ok()?;
            n.checked_sub(1)?
        } else {
            letters.iter().position(|&l| l == c)?
        };
        if idx >= rank {
            return None;
        }
        let mut power = 1;
        if k < chars.len() && chars[k] == '^' {
            k += 1;
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            power = chars[start..k].iter().collect::<String>().parse().ok()?;
        }
        out.extend(std::iter::repeat(idx).take(power));
    }
    Some(out)
}

impl fmt::Display for QuadForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, (i, j)) in pairs_le(self.rank).into_iter().enumerate() {
            let c = self.coeffs[k];
            if c == 0 {
                continue;
            }
            let mono = if i == j { format!("x{}^2", i + 1) } else { format!("x{}x{}", i + 1, j + 1) };
            terms.push(if c == 1 { mono } else { format!("{c}{mono}") });
        }
        if terms.is_empty() {
            write!(f, "0 mod {}", self.modulus)
        } else {
            write!(f, "{} mod {}", terms.join(" + "), self.modulus)
        }
    }
}

impl fmt::Debug for QuadForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `r×r` matrix over `ℤ/N`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BilinearFormModN {
    pub rank: usize,
    pub modulus: i64,
    pub matrix: Vec<Vec<i64>>,
}

impl BilinearFormModN {
    pub fn zero(rank: usize, modulus: i64) -> Self {
        BilinearFormModN { rank, modulus, matrix: vec![vec![0; rank]; rank] }
    }

    pub fn from_rows(modulus: i64, rows: &[Vec<i64>]) -> Self {
        let rank = rows.len();
        BilinearFormModN {
            rank,
            modulus,
            matrix: rows.iter().map(|r| r.iter().map(|v| modi(*v, modulus)).collect()).collect(),
        }
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.matrix[i][j]
    }

    pub fn eval(&self, x: &[i64], y: &[i64]) -> i64 {
        let n = self.modulus;
        let mut acc = 0;
        for i in 0..self.rank {
            if x[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                acc = modi(acc + modi(x[i], n) * modi(self.matrix[i][j] * modi(y[j], n), n), n);
            }
        }
        acc
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.rank).all(|i| (0..self.rank).all(|j| self.matrix[i][j] == self.matrix[j][i]))
    }

    pub fn is_alternating(&self) -> bool {
        (0..self.rank).all(|i| self.matrix[i][i] == 0)
            && (0..self.rank).all(|i| (0..self.rank).all(|j| modi(self.matrix[i][j] + self.matrix[j][i], self.modulus) == 0))
    }

    pub fn neg(&self) -> Self {
        BilinearFormModN::from_rows(self.modulus, &self.matrix.iter().map(|r| r.iter().map(|v| -v).collect()).collect::<Vec<_>>())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rank, self.modulus), (other.rank, other.modulus));
        let rows: Vec<Vec<i64>> = (0..self.rank)
            .map(|i| (0..self.rank).map(|j| self.matrix[i][j] + other.matrix[i][j]).collect())
            .collect();
        BilinearFormModN::from_rows(self.modulus, &rows)
    }

    pub fn transpose(&self) -> Self {
        let rows: Vec<Vec<i64>> = (0..self.rank).map(|i| (0..self.rank).map(|j| self.matrix[j][i]).collect()).collect();
        BilinearFormModN::from_rows(self.modulus, &rows)
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.iter().flatten().all(|&v| v == 0)
    }
}

/// Polarization `b(x, y) = Q(x+y) - Q(x) - Q(y)`: `b_ij = q_ij` off the
/// diagonal and `b_ii = 2 q_ii`.
pub fn polarize(q: &QuadForm) -> BilinearFormModN {
    let r = q.rank();
    let mut m = vec![vec![0; r]; r];
    for i in 0..r {
        for j in 0..r {
            m[i][j] = if i == j { 2 * q.coeff(i, i) } else { q.coeff(i.min(j), i.max(j)) };
        }
    }
    BilinearFormModN::from_rows(q.modulus(), &m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polarization_examples() {
        let q = QuadForm::from_coeffs(1, 7, &[(0, 0, 3)]).unwrap();
        assert_eq!(polarize(&q).matrix, vec![vec![6]]);
        let q = QuadForm::from_coeffs(2, 5, &[(0, 1, 1)]).unwrap();
        assert_eq!(polarize(&q).matrix, vec![vec![0, 1], vec![1, 0]]);
        assert!(polarize(&QuadForm::zero(3, 4)).is_zero());
    }

    #[test]
    fn monomial_shorthand() {
        let q = QuadForm::parse_monomials(2, 5, "x^2 + 3xy - y^2").unwrap();
        assert_eq!(q.coeff_list(), &[1, 3, 4]);
        let q = QuadForm::parse_monomials(3, 4, "x1x3 + 2x2^2").unwrap();
        assert_eq!(q.coeff(0, 2), 1);
        assert_eq!(q.coeff(1, 1), 2);
        assert!(QuadForm::parse_monomials(1, 3, "xy").is_err());
    }

    #[test]
    fn json_round_trip() {
        let q = QuadForm::from_coeffs(2, 6, &[(0, 0, 1), (0, 1, 5)]).unwrap();
        let text = q.to_json().to_string();
        assert_eq!(QuadForm::from_json(2, &text).unwrap(), q);
        assert!(QuadForm::from_json(2, r#"{"N": 3, "coeffs": {"0;1": 1}}"#).is_err());
    }

    #[test]
    fn pullback_along_diagonal() {
        // Q = xy on ℤ², pulled back along t ↦ (t, t) is t².
        let q = QuadForm::from_coeffs(2, 5, &[(0, 1, 1)]).unwrap();
        let p = q.pullback(&[vec![1], vec![1]]);
        assert_eq!(p.coeff_list(), &[1]);
    }
}

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::util::dot;

/// Based reduced root datum on `Λ = ℤ^r`, with `Λ̌ = ℤ^r` paired by the dot
/// product. `coroots[k] ∈ Λ` corresponds to `roots[k] ∈ Λ̌`; `simple`
/// indexes the simple coroots `Δ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasedRootDatum {
    pub name: String,
    pub rank: usize,
    pub coroots: Vec<Vec<i64>>,
    pub roots: Vec<Vec<i64>>,
    pub simple: Vec<usize>,
}

/// A failed axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation(pub String);

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// `s_α(λ) = λ - ⟨α̌, λ⟩ α` on `Λ`.
pub fn reflect(coroot: &[i64], root: &[i64], lambda: &[i64]) -> Vec<i64> {
    let c = dot(root, lambda);
    lambda.iter().zip(coroot).map(|(l, a)| l - c * a).collect()
}

/// `s_α̌(x) = x - ⟨x, α⟩ α̌` on `Λ̌`.
pub fn reflect_dual(coroot: &[i64], root: &[i64], x: &[i64]) -> Vec<i64> {
    let c = dot(x, coroot);
    x.iter().zip(root).map(|(v, a)| v - c * a).collect()
}

impl BasedRootDatum {
    /// Torus of rank `r`: no roots.
    pub fn torus(r: usize) -> Self {
        BasedRootDatum { name: format!("T{r}"), rank: r, coroots: vec![], roots: vec![], simple: vec![] }
    }

    /// Closes the simple (coroot, root) pairs under the simple reflections.
    pub fn from_simple(name: &str, rank: usize, simple_coroots: &[Vec<i64>], simple_roots: &[Vec<i64>]) -> Self {
        assert_eq!(simple_coroots.len(), simple_roots.len());
        let mut seen: HashMap<Vec<i64>, usize> = HashMap::new();
        let mut coroots = Vec::new();
        let mut roots = Vec::new();
        let mut queue = VecDeque::new();
        for (a, b) in simple_coroots.iter().zip(simple_roots) {
            if !seen.contains_key(a) {
                seen.insert(a.clone(), coroots.len());
                coroots.push(a.clone());
                roots.push(b.clone());
                queue.push_back((a.clone(), b.clone()));
            }
        }
        while let Some((a, b)) = queue.pop_front() {
            for (sa, sb) in simple_coroots.iter().zip(simple_roots) {
                let ra = reflect(sa, sb, &a);
                let rb = reflect_dual(sa, sb, &b);
                if !seen.contains_key(&ra) {
                    seen.insert(ra.clone(), coroots.len());
                    coroots.push(ra.clone());
                    roots.push(rb.clone());
                    queue.push_back((ra, rb));
                }
            }
        }
        let simple = simple_coroots.iter().map(|a| seen[a]).collect();
        BasedRootDatum { name: name.to_string(), rank, coroots, roots, simple }
    }

    pub fn num_roots(&self) -> usize {
        self.coroots.len()
    }

    pub fn simple_coroots(&self) -> Vec<Vec<i64>> {
        self.simple.iter().map(|&i| self.coroots[i].clone()).collect()
    }

    pub fn simple_roots(&self) -> Vec<Vec<i64>> {
        self.simple.iter().map(|&i| self.roots[i].clone()).collect()
    }

    /// `⟨α̌_i, α_j⟩` for simple roots `i` and simple coroots `j`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let (a, r) = (self.simple_coroots(), self.simple_roots());
        r.iter().map(|x| a.iter().map(|y| dot(x, y)).collect()).collect()
    }

    pub fn coroot_index(&self, v: &[i64]) -> Option<usize> {
        self.coroots.iter().position(|c| c == v)
    }

    /// Coordinates of a coroot in the simple coroots, if integral.
    pub fn simple_coordinates(&self, v: &[i64]) -> Option<Vec<i64>> {
        use crate::abelian_core::{snf::solve, IntMatrix};
        use crate::util::{big, to_i64};
        let cols: Vec<Vec<num_bigint::BigInt>> =
            self.simple_coroots().iter().map(|c| c.iter().map(|&x| big(x)).collect()).collect();
        let m = IntMatrix::from_columns(self.rank, &cols);
        let b: Vec<num_bigint::BigInt> = v.iter().map(|&x| big(x)).collect();
        let x = solve(&m, &b)?;
        // Simple coroots are independent, so the solution is unique.
        Some(x.iter().map(to_i64).collect())
    }

    /// Coroots with nonnegative simple coordinates.
    pub fn positive_coroots(&self) -> Vec<usize> {
        (0..self.num_roots())
            .filter(|&k| self.simple_coordinates(&self.coroots[k]).is_some_and(|c| c.iter().all(|&x| x >= 0)))
            .collect()
    }

    /// Product of two data on `Λ₁ ⊕ Λ₂`.
    pub fn product(&self, other: &Self) -> Self {
        let r = self.rank + other.rank;
        let pad_left = |v: &Vec<i64>| {
            let mut w = v.clone();
            w.extend(std::iter::repeat(0).take(other.rank));
            w
        };
        let pad_right = |v: &Vec<i64>| {
            let mut w = vec![0; self.rank];
            w.extend(v.iter().copied());
            w
        };
        let mut coroots: Vec<Vec<i64>> = self.coroots.iter().map(pad_left).collect();
        coroots.extend(other.coroots.iter().map(pad_right));
        let mut roots: Vec<Vec<i64>> = self.roots.iter().map(pad_left).collect();
        roots.extend(other.roots.iter().map(pad_right));
        let mut simple = self.simple.clone();
        simple.extend(other.simple.iter().map(|i| i + self.num_roots()));
        BasedRootDatum { name: format!("{}x{}", self.name, other.name), rank: r, coroots, roots, simple }
    }

    /// Connected components of the Dynkin diagram, as lists of positions in `simple`.
    pub fn simple_factors(&self) -> Vec<Vec<usize>> {
        let c = self.cartan_matrix();
        let n = c.len();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let mut stack = vec![s];
            let mut members = Vec::new();
            comp[s] = out.len();
            while let Some(i) = stack.pop() {
                members.push(i);
                for j in 0..n {
                    if comp[j] == usize::MAX && (c[i][j] != 0 || c[j][i] != 0) {
                        comp[j] = out.len();
                        stack.push(j);
                    }
                }
            }
            members.sort();
            out.push(members);
        }
        out
    }
}

/// Checks every axiom exhaustively; an empty list means the datum is valid.
pub fn validate(rd: &BasedRootDatum) -> Vec<Violation> {
    let mut out = Vec::new();
    let r = rd.rank;
    if rd.coroots.len() != rd.roots.len() {
        out.push(Violation(format!("{} coroots but {} roots", rd.coroots.len(), rd.roots.len())));
        return out;
    }
    for (k, (a, b)) in rd.coroots.iter().zip(&rd.roots).enumerate() {
        if a.len() != r || b.len() != r {
            out.push(Violation(format!("vector {k} has the wrong length for rank {r}")));
            return out;
        }
        let p = dot(a, b);
        if p != 2 {
            out.push(Violation(format!("pairing of root {k} with its coroot is {p} ≠ 2")));
        }
    }
    for &i in &rd.simple {
        if i >= rd.coroots.len() {
            out.push(Violation(format!("simple index {i} out of range")));
            return out;
        }
    }
    let coroot_set: HashSet<&Vec<i64>> = rd.coroots.iter().collect();
    let root_set: HashSet<&Vec<i64>> = rd.roots.iter().collect();
    if coroot_set.len() != rd.coroots.len() {
        out.push(Violation("repeated coroot".into()));
    }
    if root_set.len() != rd.roots.len() {
        out.push(Violation("repeated root".into()));
    }
    let index: HashMap<&Vec<i64>, usize> = rd.coroots.iter().enumerate().map(|(k, v)| (v, k)).collect();
    for (k, (a, b)) in rd.coroots.iter().zip(&rd.roots).enumerate() {
        for (l, (c, d)) in rd.coroots.iter().zip(&rd.roots).enumerate() {
            let rc = reflect(a, b, c);
            let rd_ = reflect_dual(a, b, d);
            match index.get(&rc) {
                Some(&m) if rd.roots[m] == rd_ => {}
                Some(_) => out.push(Violation(format!("reflection in {k} breaks the root/coroot bijection at {l}"))),
                None => out.push(Violation(format!("reflection in {k} sends coroot {l} outside Φ"))),
            }
            if !root_set.contains(&rd_) {
                out.push(Violation(format!("dual reflection in {k} sends root {l} outside Φ̌")));
            }
        }
        let doubled: Vec<i64> = a.iter().map(|x| 2 * x).collect();
        if coroot_set.contains(&doubled) {
            out.push(Violation(format!("coroot {k} and its double both lie in Φ")));
        }
    }
    if !out.is_empty() {
        return out;
    }
    // Every coroot is a W-image of a simple coroot.
    let simple: Vec<(Vec<i64>, Vec<i64>)> = rd.simple.iter().map(|&i| (rd.coroots[i].clone(), rd.roots[i].clone())).collect();
    let mut reached: HashSet<Vec<i64>> = simple.iter().map(|(a, _)| a.clone()).collect();
    let mut queue: VecDeque<Vec<i64>> = reached.iter().cloned().collect();
    while let Some(v) = queue.pop_front() {
        for (a, b) in &simple {
            let w = reflect(a, b, &v);
            if reached.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }
    for (k, a) in rd.coroots.iter().enumerate() {
        if !reached.contains(a) {
            out.push(Violation(format!("coroot {k} is not a Weyl image of a simple coroot")));
        }
    }
    // Simple coroots form a base: every coroot has same-sign integral coordinates.
    let sc = rd.simple_coroots();
    if crate::abelian_core::snf::rank(&crate::abelian_core::IntMatrix::from_rows(&sc)) != sc.len() {
        out.push(Violation("simple coroots are linearly dependent".into()));
    } else {
        for (k, a) in rd.coroots.iter().enumerate() {
            match rd.simple_coordinates(a) {
                Some(c) if c.iter().all(|&x| x >= 0) || c.iter().all(|&x| x <= 0) => {}
                _ => out.push(Violation(format!("coroot {k} is not a same-sign integral combination of simple coroots"))),
            }
        }
    }
    out
}

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::matrix::IntMatrix;
use super::snf::smith_normal_form;

/// Finitely generated abelian group `ℤ^free ⊕ ℤ/d₁ ⊕ … ⊕ ℤ/d_k` with
/// `d₁ | d₂ | … | d_k` and every `d_i ≥ 2`. Equal groups have equal fields.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FgAbelianGroup {
    free_rank: usize,
    torsion: Vec<BigInt>,
}

impl FgAbelianGroup {
    pub fn trivial() -> Self {
        FgAbelianGroup {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn free(rank: usize) -> Self {
        FgAbelianGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    /// `ℤ/n`; `n = 0` means ℤ and `n = 1` the trivial group.
    pub fn cyclic(n: i64) -> Self {
        Self::from_cyclic_orders(0, &[BigInt::from(n)])
    }

    /// `(ℤ/n)^k`.
    pub fn cyclic_power(n: i64, k: usize) -> Self {
        Self::from_cyclic_orders(0, &vec![BigInt::from(n); k])
    }

    /// Normalizes `ℤ^free ⊕ ⊕ ℤ/n_i` into invariant-factor form.
    /// Orders of 0 count as free summands, orders ±1 vanish.
    pub fn from_cyclic_orders(free: usize, orders: &[BigInt]) -> Self {
        let diag = IntMatrix::diagonal(orders.len(), orders.len(), orders);
        let mut g = Self::cokernel(&diag);
        g.free_rank += free;
        g
    }

    pub fn new(free: usize, orders: &[i64]) -> Self {
        let orders: Vec<BigInt> = orders.iter().map(|&x| BigInt::from(x)).collect();
        Self::from_cyclic_orders(free, &orders)
    }

    /// `ℤ^rows / image(m)`.
    pub fn cokernel(m: &IntMatrix) -> Self {
        let snf = smith_normal_form(m);
        let inv = snf.invariants();
        let torsion: Vec<BigInt> = inv.iter().filter(|d| !d.is_one()).cloned().collect();
        FgAbelianGroup {
            free_rank: m.rows() - inv.len(),
            torsion,
        }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn torsion_i64(&self) -> Vec<i64> {
        self.torsion.iter().map(|d| d.to_i64().expect("invariant factor exceeds i64")).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Order if finite.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite().then(|| self.torsion.iter().product())
    }

    /// Number of cyclic summands in the normal form.
    pub fn num_generators(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    /// Cyclic orders of the normal-form generators: torsion first, then 0 for free.
    pub fn generator_orders(&self) -> Vec<BigInt> {
        let mut v = self.torsion.clone();
        v.extend(std::iter::repeat(BigInt::zero()).take(self.free_rank));
        v
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut orders = self.torsion.clone();
        orders.extend(other.torsion.iter().cloned());
        Self::from_cyclic_orders(self.free_rank + other.free_rank, &orders)
    }

    pub fn power(&self, k: usize) -> Self {
        (0..k).fold(Self::trivial(), |acc, _| acc.direct_sum(self))
    }

    /// `G ⊗ ℤ/n`.
    pub fn mod_n(&self, n: i64) -> Self {
        let n = BigInt::from(n);
        let mut orders: Vec<BigInt> = self.torsion.iter().map(|d| d.gcd(&n)).collect();
        orders.extend(std::iter::repeat(n).take(self.free_rank));
        Self::from_cyclic_orders(0, &orders)
    }

    /// `n`-torsion subgroup `G[n]`.
    pub fn n_torsion(&self, n: i64) -> Self {
        let n = BigInt::from(n);
        let orders: Vec<BigInt> = self.torsion.iter().map(|d| d.gcd(&n)).collect();
        Self::from_cyclic_orders(0, &orders)
    }

    /// Elements of a finite group as coordinate vectors in the normal-form
    /// generators, lexicographic. Panics on infinite groups.
    pub fn elements(&self) -> Vec<Vec<i64>> {
        assert!(self.is_finite(), "element list of an infinite group");
        let mut out = vec![Vec::new()];
        for d in self.torsion_i64() {
            let mut next = Vec::new();
            for v in &out {
                for x in 0..d {
                    let mut w = v.clone();
                    w.push(x);
                    next.push(w);
                }
            }
            out = next;
        }
        out
    }

    pub fn add_elements(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        let orders = self.torsion_i64();
        a.iter()
            .zip(b)
            .zip(orders.iter().chain(std::iter::repeat(&0)))
            .map(|((x, y), &d)| if d == 0 { x + y } else { (x + y).rem_euclid(d) })
            .collect()
    }

    pub fn neg_element(&self, a: &[i64]) -> Vec<i64> {
        let orders = self.torsion_i64();
        a.iter()
            .zip(orders.iter().chain(std::iter::repeat(&0)))
            .map(|(x, &d)| if d == 0 { -x } else { (-x).rem_euclid(d) })
            .collect()
    }

    pub fn scale_element(&self, k: i64, a: &[i64]) -> Vec<i64> {
        let orders = self.torsion_i64();
        a.iter()
            .zip(orders.iter().chain(std::iter::repeat(&0)))
            .map(|(x, &d)| if d == 0 { k * x } else { (k * x).rem_euclid(d) })
            .collect()
    }

    /// Position of an element in `elements()` (mixed radix).
    pub fn element_index(&self, a: &[i64]) -> usize {
        let mut idx = 0usize;
        for (x, d) in a.iter().zip(self.torsion_i64()) {
            idx = idx * d as usize + x.rem_euclid(d) as usize;
        }
        idx
    }

    pub fn zero_element(&self) -> Vec<i64> {
        vec![0; self.num_generators()]
    }
}

impl fmt::Display for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let d = &self.torsion[i];
            let mut j = i;
            while j < self.torsion.len() && &self.torsion[j] == d {
                j += 1;
            }
            if j - i == 1 {
                parts.push(format!("Z/{d}"));
            } else {
                parts.push(format!("(Z/{d})^{}", j - i));
            }
            i = j;
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `Hom(A, B)` and `Ext¹(A, B)` over ℤ, from the cyclic decompositions.
pub fn hom_ext(a: &FgAbelianGroup, b: &FgAbelianGroup) -> (FgAbelianGroup, FgAbelianGroup) {
    let mut hom_free = 0usize;
    let mut hom_orders = Vec::new();
    let mut ext_orders = Vec::new();
    for x in a.generator_orders() {
        for y in b.generator_orders() {
            match (x.is_zero(), y.is_zero()) {
                // Hom(ℤ, ℤ) = ℤ
                (true, true) => hom_free += 1,
                // Hom(ℤ, ℤ/m) = ℤ/m
                (true, false) => hom_orders.push(y.clone()),
                // Hom(ℤ/n, ℤ) = 0, Ext(ℤ/n, ℤ) = ℤ/n
                (false, true) => ext_orders.push(x.clone()),
                (false, false) => {
                    let g = x.gcd(&y);
                    hom_orders.push(g.clone());
                    ext_orders.push(g);
                }
            }
        }
    }
    (
        FgAbelianGroup::from_cyclic_orders(hom_free, &hom_orders),
        FgAbelianGroup::from_cyclic_orders(0, &ext_orders),
    )
}

use super::place::Place;
use super::unit::LocalUnit;
use super::LocalFieldError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusCoverElement {
    pub base: Vec<LocalUnit>,
    pub phase: u64,
}

impl TorusCoverElement {
    pub fn new(base: Vec<LocalUnit>, phase: u64) -> Self {
        TorusCoverElement { base, phase }
    }
}

/// Central extension of `T(F) = (F^×)^r` by `μ_N` with cocycle
/// `σ(x, y) = Σ c_ij (x_i, y_j)`.
#[derive(Clone, Debug)]
pub struct TorusCover {
    pub rank: usize,
    pub c: Vec<Vec<i64>>,
    pub place: Place,
}

/// The commutator of two lifts beside the closed forms it can be compared with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutatorReadings {
    /// Computed from the group law.
    pub commutator: u64,
    /// `Σ b_ij (x_i, y_j)` with `b = c + cᵀ`.
    pub b_reading: u64,
    /// `Σ -b_ij (x_i, y_j)`.
    pub minus_b_reading: u64,
    /// `Σ (c_ij - c_ji)(x_i, y_j)`. Equal to the others only when `N = 2`.
    pub alternating_reading: u64,
}

pub fn torus_cover(r: usize, c: Vec<Vec<i64>>, v: Place) -> Result<TorusCover, LocalFieldError> {
    if c.len() != r || c.iter().any(|row| row.len() != r) {
        return Err(LocalFieldError::Shape(format!("cocycle must be {r}×{r}")));
    }
    Ok(TorusCover { rank: r, c, place: v })
}

impl TorusCover {
    fn n(&self) -> i64 {
        self.place.n as i64
    }

    fn pairing(&self, m: impl Fn(usize, usize) -> i64, x: &[LocalUnit], y: &[LocalUnit]) -> u64 {
        let mut s = 0i64;
        for i in 0..self.rank {
            for j in 0..self.rank {
                let k = m(i, j);
                if k != 0 {
                    s += k * self.place.hilbert_symbol(&x[i], &y[j]) as i64;
                }
            }
        }
        s.rem_euclid(self.n()) as u64
    }

    pub fn cocycle(&self, x: &[LocalUnit], y: &[LocalUnit]) -> u64 {
        self.pairing(|i, j| self.c[i][j], x, y)
    }

    pub fn identity(&self) -> TorusCoverElement {
        TorusCoverElement::new(vec![LocalUnit::one(); self.rank], 0)
    }

    pub fn mul(&self, g: &TorusCoverElement, h: &TorusCoverElement) -> TorusCoverElement {
        let base = g.base.iter().zip(&h.base).map(|(a, b)| a.mul(b)).collect();
        let phase = (g.phase + h.phase + self.cocycle(&g.base, &h.base)) % self.place.n;
        TorusCoverElement { base, phase }
    }

    pub fn inverse(&self, g: &TorusCoverElement) -> TorusCoverElement {
        let base: Vec<LocalUnit> = g.base.iter().map(LocalUnit::inv).collect();
        let s = (g.phase + self.cocycle(&g.base, &base)) as i64;
        TorusCoverElement { base, phase: (-s).rem_euclid(self.n()) as u64 }
    }

    /// Phase of `g h g⁻¹ h⁻¹`, which lies over the identity.
    pub fn commutator(&self, g: &TorusCoverElement, h: &TorusCoverElement) -> u64 {
        let gh = self.mul(g, h);
        let k = self.mul(&self.mul(&gh, &self.inverse(g)), &self.inverse(h));
        debug_assert!(k.base.iter().all(LocalUnit::is_one));
        k.phase
    }

    pub fn commutator_readings(&self, x: &[LocalUnit], y: &[LocalUnit]) -> CommutatorReadings {
        let (g, h) = (TorusCoverElement::new(x.to_vec(), 0), TorusCoverElement::new(y.to_vec(), 0));
        let b = |i: usize, j: usize| self.c[i][j] + self.c[j][i];
        CommutatorReadings {
            commutator: self.commutator(&g, &h),
            b_reading: self.pairing(b, x, y),
            minus_b_reading: self.pairing(|i, j| -b(i, j), x, y),
            alternating_reading: self.pairing(|i, j| self.c[i][j] - self.c[j][i], x, y),
        }
    }
}

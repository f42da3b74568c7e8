use std::collections::BTreeMap;
use std::fmt;

use super::LocalFieldError;

/// Nonzero rational number as a sign and a prime factorization with integer
/// exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LocalUnit {
    negative: bool,
    factors: BTreeMap<u64, i32>,
}

fn factor_into(mut n: u128, sign: i32, out: &mut BTreeMap<u64, i32>) {
    let mut p = 2u128;
    while p * p <= n {
        while n % p == 0 {
            *out.entry(p as u64).or_insert(0) += sign;
            n /= p;
        }
        p += 1;
    }
    if n > 1 {
        *out.entry(n as u64).or_insert(0) += sign;
    }
}

impl LocalUnit {
    pub fn from_ratio(num: i128, den: i128) -> Result<Self, LocalFieldError> {
        if num == 0 || den == 0 {
            return Err(LocalFieldError::Zero);
        }
        let mut factors = BTreeMap::new();
        factor_into(num.unsigned_abs(), 1, &mut factors);
        factor_into(den.unsigned_abs(), -1, &mut factors);
        factors.retain(|_, e| *e != 0);
        Ok(LocalUnit { negative: (num < 0) != (den < 0), factors })
    }

    pub fn from_int(n: i64) -> Result<Self, LocalFieldError> {
        Self::from_ratio(n.into(), 1)
    }

    pub fn one() -> Self {
        LocalUnit { negative: false, factors: BTreeMap::new() }
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    pub fn is_one(&self) -> bool {
        !self.negative && self.factors.is_empty()
    }

    pub fn factors(&self) -> &BTreeMap<u64, i32> {
        &self.factors
    }

    pub fn valuation(&self, p: u64) -> i32 {
        self.factors.get(&p).copied().unwrap_or(0)
    }

    /// Numerator and positive denominator in lowest terms.
    pub fn ratio(&self) -> (i128, i128) {
        let (mut num, mut den) = (1i128, 1i128);
        for (&p, &e) in &self.factors {
            let pe = (p as i128).pow(e.unsigned_abs());
            if e > 0 {
                num *= pe;
            } else {
                den *= pe;
            }
        }
        (if self.negative { -num } else { num }, den)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut factors = self.factors.clone();
        for (&p, &e) in &other.factors {
            *factors.entry(p).or_insert(0) += e;
        }
        factors.retain(|_, e| *e != 0);
        LocalUnit { negative: self.negative != other.negative, factors }
    }

    pub fn inv(&self) -> Self {
        LocalUnit { negative: self.negative, factors: self.factors.iter().map(|(&p, &e)| (p, -e)).collect() }
    }

    pub fn neg(&self) -> Self {
        LocalUnit { negative: !self.negative, factors: self.factors.clone() }
    }

    /// `1 - a`, or `None` when `a = 1`.
    pub fn one_minus(&self) -> Option<Self> {
        let (num, den) = self.ratio();
        Self::from_ratio(den - num, den).ok()
    }

    /// Residue mod `m` of the part of `a` prime to `p`, for `m` a power of `p`
    /// (or `p` itself).
    pub fn unit_residue(&self, p: u64, m: u64) -> u64 {
        let m128 = m as u128;
        let mut r: u128 = 1;
        for (&q, &e) in &self.factors {
            if q == p {
                continue;
            }
            let base = q as u128 % m128;
            let f = if e > 0 { base } else { mod_inverse(base, m128) };
            for _ in 0..e.unsigned_abs() {
                r = r * f % m128;
            }
        }
        if self.negative {
            r = (m128 - r) % m128;
        }
        r as u64
    }
}

fn mod_inverse(a: u128, m: u128) -> u128 {
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (m as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert_eq!(r, 1, "not invertible");
    t.rem_euclid(m as i128) as u128
}

impl fmt::Display for LocalUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, d) = self.ratio();
        if d == 1 {
            write!(f, "{n}")
        } else {
            write!(f, "{n}/{d}")
        }
    }
}

use std::fmt;

use super::unit::LocalUnit;
use super::LocalFieldError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PlaceKind {
    Real,
    PAdic(u64),
}

/// A place of `ℚ` with a symbol degree `N` for which `μ_N` has `N` points.
#[derive(Clone, Debug)]
pub struct Place {
    pub kind: PlaceKind,
    pub n: u64,
    /// Smallest primitive root mod `p` for odd `p`.
    pub primitive_root: Option<u64>,
    /// Discrete logarithms base the primitive root, indexed by residue.
    dlog: Vec<u64>,
}

pub(crate) fn pow_mod(b: u64, mut e: u64, m: u64) -> u64 {
    let m = m as u128;
    let (mut r, mut b) = (1 % m, b as u128 % m);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r as u64
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl Place {
    pub fn real() -> Self {
        Place { kind: PlaceKind::Real, n: 2, primitive_root: None, dlog: Vec::new() }
    }

    pub fn new(kind: PlaceKind, n: u64) -> Result<Self, LocalFieldError> {
        match kind {
            PlaceKind::Real if n == 2 => Ok(Self::real()),
            PlaceKind::Real => Err(LocalFieldError::Constraint(format!("N = {n} at the real place; only N = 2"))),
            PlaceKind::PAdic(p) if !is_prime(p) => Err(LocalFieldError::NotPrime(p)),
            PlaceKind::PAdic(2) if n == 2 => Ok(Place { kind, n, primitive_root: None, dlog: Vec::new() }),
            PlaceKind::PAdic(2) => Err(LocalFieldError::Constraint(format!("N = {n} at p = 2; only N = 2"))),
            PlaceKind::PAdic(p) if n == 0 || (p - 1) % n != 0 => {
                Err(LocalFieldError::Constraint(format!("N = {n} does not divide p - 1 = {}", p - 1)))
            }
            PlaceKind::PAdic(p) => {
                let qs = prime_divisors(p - 1);
                let g = (2..p).find(|&g| qs.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1)).unwrap_or(1);
                let mut dlog = vec![0; p as usize];
                let mut x = 1u64;
                for k in 0..p - 1 {
                    dlog[x as usize] = k;
                    x = x * g % p;
                }
                Ok(Place { kind, n, primitive_root: Some(g), dlog })
            }
        }
    }

    pub fn prime(&self) -> Option<u64> {
        match self.kind {
            PlaceKind::Real => None,
            PlaceKind::PAdic(p) => Some(p),
        }
    }

    /// Parses `R` or a prime.
    pub fn parse(text: &str, n: u64) -> Result<Self, LocalFieldError> {
        let t = text.trim();
        if t.eq_ignore_ascii_case("r") || t.eq_ignore_ascii_case("real") {
            return Self::new(PlaceKind::Real, n);
        }
        let p: u64 = t.parse().map_err(|_| LocalFieldError::Constraint(format!("unknown place {t:?}")))?;
        Self::new(PlaceKind::PAdic(p), n)
    }

    /// `|μ_N(F)|`, counted directly.
    pub fn mu_n_cardinality(&self) -> u64 {
        match self.kind {
            PlaceKind::Real => 2,
            PlaceKind::PAdic(2) => 2,
            PlaceKind::PAdic(p) => (1..p).filter(|&x| pow_mod(x, self.n, p) == 1).count() as u64,
        }
    }

    /// Exponent of the fixed generator of `μ_N` (`-1` for `N = 2`) in the
    /// `N`-th Hilbert symbol `(a, b)_v`.
    pub fn hilbert_symbol(&self, a: &LocalUnit, b: &LocalUnit) -> u64 {
        match self.kind {
            PlaceKind::Real => u64::from(a.is_negative() && b.is_negative()),
            PlaceKind::PAdic(2) => {
                let (al, be) = (a.valuation(2) as i64, b.valuation(2) as i64);
                let (u, v) = (a.unit_residue(2, 8), b.unit_residue(2, 8));
                let eps = |x: u64| ((x - 1) / 2) % 2;
                let omega = |x: u64| ((x * x - 1) / 8) % 2;
                let s = eps(u) * eps(v) + (al.rem_euclid(2) as u64) * omega(v) + (be.rem_euclid(2) as u64) * omega(u);
                s % 2
            }
            PlaceKind::PAdic(p) => {
                let (al, be) = (a.valuation(p) as i64, b.valuation(p) as i64);
                // (-1)^{αβ} a^β b^{-α} is a unit; its residue class decides the symbol.
                let mut log: i64 = 0;
                let order = (p - 1) as i64;
                log += (al * be).rem_euclid(2) * (order / 2);
                log += be * self.dlog[a.unit_residue(p, p) as usize] as i64;
                log -= al * self.dlog[b.unit_residue(p, p) as usize] as i64;
                // Raising to (p-1)/N and reading off ζ = g^{(p-1)/N}: the
                // exponent is the logarithm mod N.
                log.rem_euclid(self.n as i64) as u64
            }
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            PlaceKind::Real => write!(f, "R, N={}", self.n),
            PlaceKind::PAdic(p) => write!(f, "Q_{p}, N={}", self.n),
        }
    }
}

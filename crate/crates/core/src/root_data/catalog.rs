//! Named root data and their basis conventions.
//!
//! Cartan matrices follow Bourbaki numbering: `A_ij = ⟨coroot_i, root_j⟩`.
//!
//! * `X{n}_sc` (also `X{n}` for `G2`, `F4`, `E8`, and `SL{n}`, `Spin{n}`):
//!   `Λ` has the simple coroots as basis, so simple coroot `i` is `e_i` and
//!   simple root `j` is the functional `(A_ij)_i`.
//! * `X{n}_ad` (also `PGL{n}`): `Λ` has the fundamental coweights as basis,
//!   so simple root `i` is `e_i` and simple coroot `j` is `(A_ji)_i`.
//! * `GL{n}`: `Λ = ℤ^n` with `ε_i` the diagonal cocharacters; roots and
//!   coroots are both `ε_i - ε_j`, simple ones `ε_i - ε_{i+1}`.
//! * `Sp{2n}`: `Λ = ℤ^n`; coroots `±ε_i ± ε_j` and `±ε_i`, roots `±ε_i ± ε_j`
//!   and `±2ε_i`; simple `ε_i - ε_{i+1}` and coroot `ε_n` (root `2ε_n`).
//! * `SO{2n+1}`: `Λ = ℤ^n`; coroots `±ε_i ± ε_j` and `±2ε_i`, roots
//!   `±ε_i ± ε_j` and `±ε_i`; simple `ε_i - ε_{i+1}` and coroot `2ε_n`.
//! * `SO{2n}`: `Λ = ℤ^n`; roots and coroots `±ε_i ± ε_j`; simple
//!   `ε_i - ε_{i+1}` and `ε_{n-1} + ε_n`. `SO2` is a rank-one torus.
//! * `T{n}`: torus of rank `n`.
//! * Products: names joined by `x`, e.g. `SL2xGL3`, on `Λ₁ ⊕ Λ₂`.
//!
//! In particular `SL2` has coroot `(1)` and root `(2)`, and `PGL2` has coroot
//! `(2)` and root `(1)`.

use thiserror::Error;

use super::datum::BasedRootDatum;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown root datum {0:?}")]
    Unknown(String),
}

/// Bourbaki Cartan matrix of an irreducible type.
pub fn cartan_matrix(letter: char, n: usize) -> Option<Vec<Vec<i64>>> {
    let valid = match letter {
        'A' => n >= 1,
        'B' | 'C' => n >= 2,
        'D' => n >= 3,
        'E' => (6..=8).contains(&n),
        'F' => n == 4,
        'G' => n == 2,
        _ => false,
    };
    if !valid {
        return None;
    }
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match letter {
        'A' | 'B' | 'C' | 'F' => (0..n - 1).for_each(|i| link(i, i + 1)),
        'D' => {
            (0..n - 2).for_each(|i| link(i, i + 1));
            link(n - 3, n - 1);
        }
        'E' => {
            // α1 - α3 - α4 - α5 - … with α2 attached to α4.
            link(0, 2);
            link(1, 3);
            (2..n - 1).for_each(|i| link(i, i + 1));
        }
        'G' => link(0, 1),
        _ => unreachable!(),
    }
    match letter {
        'B' => a[n - 1][n - 2] = -2,
        'C' => a[n - 2][n - 1] = -2,
        'F' => a[2][1] = -2,
        'G' => a[0][1] = -3,
        _ => {}
    }
    Some(a)
}

fn unit(r: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; r];
    v[i] = 1;
    v
}

pub fn simply_connected(letter: char, n: usize, name: &str) -> Option<BasedRootDatum> {
    let a = cartan_matrix(letter, n)?;
    let coroots: Vec<Vec<i64>> = (0..n).map(|i| unit(n, i)).collect();
    let roots: Vec<Vec<i64>> = (0..n).map(|j| (0..n).map(|i| a[i][j]).collect()).collect();
    Some(BasedRootDatum::from_simple(name, n, &coroots, &roots))
}

pub fn adjoint(letter: char, n: usize, name: &str) -> Option<BasedRootDatum> {
    let a = cartan_matrix(letter, n)?;
    let roots: Vec<Vec<i64>> = (0..n).map(|i| unit(n, i)).collect();
    let coroots: Vec<Vec<i64>> = (0..n).map(|j| (0..n).map(|i| a[j][i]).collect()).collect();
    Some(BasedRootDatum::from_simple(name, n, &coroots, &roots))
}

fn eps(n: usize, terms: &[(usize, i64)]) -> Vec<i64> {
    let mut v = vec![0; n];
    for &(i, c) in terms {
        v[i] += c;
    }
    v
}

fn gl(n: usize) -> BasedRootDatum {
    let s: Vec<Vec<i64>> = (0..n.saturating_sub(1)).map(|i| eps(n, &[(i, 1), (i + 1, -1)])).collect();
    BasedRootDatum::from_simple(&format!("GL{n}"), n, &s, &s)
}

fn sp(n: usize) -> BasedRootDatum {
    let mut co: Vec<Vec<i64>> = (0..n - 1).map(|i| eps(n, &[(i, 1), (i + 1, -1)])).collect();
    let mut ro = co.clone();
    co.push(eps(n, &[(n - 1, 1)]));
    ro.push(eps(n, &[(n - 1, 2)]));
    BasedRootDatum::from_simple(&format!("Sp{}", 2 * n), n, &co, &ro)
}

fn so_odd(n: usize) -> BasedRootDatum {
    let mut co: Vec<Vec<i64>> = (0..n - 1).map(|i| eps(n, &[(i, 1), (i + 1, -1)])).collect();
    let mut ro = co.clone();
    co.push(eps(n, &[(n - 1, 2)]));
    ro.push(eps(n, &[(n - 1, 1)]));
    BasedRootDatum::from_simple(&format!("SO{}", 2 * n + 1), n, &co, &ro)
}

fn so_even(n: usize) -> BasedRootDatum {
    if n == 1 {
        let mut t = BasedRootDatum::torus(1);
        t.name = "SO2".into();
        return t;
    }
    let mut s: Vec<Vec<i64>> = (0..n - 1).map(|i| eps(n, &[(i, 1), (i + 1, -1)])).collect();
    s.push(eps(n, &[(n - 2, 1), (n - 1, 1)]));
    BasedRootDatum::from_simple(&format!("SO{}", 2 * n), n, &s, &s)
}

fn renamed(mut rd: BasedRootDatum, name: &str) -> BasedRootDatum {
    rd.name = name.to_string();
    rd
}

fn parse_number(s: &str) -> Option<usize> {
    if s.is_empty() || !s.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

fn single(name: &str) -> Option<BasedRootDatum> {
    let num = |prefix: &str| name.strip_prefix(prefix).and_then(parse_number);
    if let Some(n) = num("SL") {
        return match n {
            0 => None,
            1 => Some(renamed(BasedRootDatum::torus(0), name)),
            _ => simply_connected('A', n - 1, name),
        };
    }
    if let Some(n) = num("PGL") {
        return match n {
            0 => None,
            1 => Some(renamed(BasedRootDatum::torus(0), name)),
            _ => adjoint('A', n - 1, name),
        };
    }
    if let Some(n) = num("GL") {
        return (n >= 1).then(|| gl(n));
    }
    if let Some(n) = num("Sp") {
        return (n >= 2 && n % 2 == 0).then(|| sp(n / 2));
    }
    if let Some(n) = num("Spin") {
        return match n {
            3 => simply_connected('A', 1, name),
            4 => Some(renamed(single("SL2")?.product(&single("SL2")?), name)),
            5 => simply_connected('B', 2, name),
            6 => simply_connected('D', 3, name),
            _ if n % 2 == 1 => simply_connected('B', (n - 1) / 2, name),
            _ => simply_connected('D', n / 2, name),
        };
    }
    if let Some(n) = num("SO") {
        return match n {
            0 | 1 => None,
            _ if n % 2 == 1 => Some(so_odd((n - 1) / 2)),
            _ => Some(so_even(n / 2)),
        };
    }
    if let Some(n) = num("T") {
        return Some(BasedRootDatum::torus(n));
    }
    let (body, kind) = match name.split_once('_') {
        Some((b, "sc")) => (b, Some(true)),
        Some((b, "ad")) => (b, Some(false)),
        Some(_) => return None,
        None => (name, None),
    };
    let mut chars = body.chars();
    let letter = chars.next()?;
    let n = parse_number(chars.as_str())?;
    match kind {
        Some(false) => adjoint(letter, n, name),
        _ => simply_connected(letter, n, name),
    }
}

/// Looks up a root datum by name; see the module documentation for bases.
pub fn catalog(name: &str) -> Result<BasedRootDatum, CatalogError> {
    let parts: Vec<&str> = name.split(['x', '×']).map(str::trim).collect();
    let mut acc: Option<BasedRootDatum> = None;
    for p in &parts {
        let rd = single(p).ok_or_else(|| CatalogError::Unknown(name.to_string()))?;
        acc = Some(match acc {
            None => rd,
            Some(a) => a.product(&rd),
        });
    }
    let mut rd = acc.ok_or_else(|| CatalogError::Unknown(name.to_string()))?;
    rd.name = name.to_string();
    Ok(rd)
}

/// Names exercised by the tests and the CLI `classify` listing.
pub const STANDARD_NAMES: &[&str] = &[
    "SL2", "SL3", "SL4", "GL1", "GL2", "GL3", "PGL2", "PGL3", "PGL4", "Sp4", "Sp6", "SO3", "SO4", "SO5", "SO6", "SO7",
    "SO8", "Spin3", "Spin4", "Spin5", "Spin6", "Spin7", "Spin8", "G2", "F4", "A1_ad", "A3_sc", "B2_sc", "B2_ad",
    "B3_sc", "B3_ad", "C3_sc", "C3_ad", "D4_sc", "D4_ad", "E6_sc", "E6_ad", "E7_sc", "E7_ad", "E8", "SL2xSL2",
    "SL2xGL2", "GL2xPGL2", "T2",
];

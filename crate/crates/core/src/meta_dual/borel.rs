use std::fmt;

use crate::forms::QuadForm;
use crate::root_data::weyl::{mat_vec, Mat};
use crate::root_data::BasedRootDatum;

use super::epsilon::dual_pair;
use super::MetaDualError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BorelCheck {
    Ok,
    Mismatch(String),
}

impl BorelCheck {
    pub fn is_ok(&self) -> bool {
        matches!(self, BorelCheck::Ok)
    }
}

impl fmt::Display for BorelCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BorelCheck::Ok => f.write_str("ok"),
            BorelCheck::Mismatch(w) => write!(f, "mismatch: {w}"),
        }
    }
}

/// The same datum with simple coroots `w(Δ)`, or `None` if `w` does not
/// permute the coroots.
pub fn rebase(rd: &BasedRootDatum, w: &Mat) -> Option<BasedRootDatum> {
    let simple = rd.simple.iter().map(|&k| rd.coroot_index(&mat_vec(w, &rd.coroots[k]))).collect::<Option<Vec<_>>>()?;
    Some(BasedRootDatum { simple, ..rd.clone() })
}

/// Recomputes the dual pair over `w(Δ)` and compares it with the original
/// one transported along `w`.
pub fn borel_independence_check(rd: &BasedRootDatum, q: &QuadForm, w: &Mat) -> Result<BorelCheck, MetaDualError> {
    borel_independence_check_with_transport(rd, q, w, w)
}

/// As [`borel_independence_check`] with an explicit transport matrix, so a
/// wrong transport can be exercised.
pub fn borel_independence_check_with_transport(
    rd: &BasedRootDatum,
    q: &QuadForm,
    w: &Mat,
    transport: &Mat,
) -> Result<BorelCheck, MetaDualError> {
    let Some(rd_w) = rebase(rd, w) else {
        return Ok(BorelCheck::Mismatch("w does not permute the coroots".into()));
    };
    let p = dual_pair(rd, q)?;
    let p_w = dual_pair(&rd_w, q)?;
    let t = |v: &[i64]| mat_vec(transport, v);

    for j in 0..p.sharp.rank() {
        let v = t(&p.sharp.basis_vector(j));
        if p_w.sharp.coordinates(&v).is_none() {
            return Ok(BorelCheck::Mismatch(format!("Λ♯ basis vector {j} maps to {v:?} outside Λ♯")));
        }
    }
    for (k, a) in p.sharp.sharp_coroots.iter().enumerate() {
        let image = t(a);
        match p_w.sharp.sharp_coroots.iter().position(|b| *b == image) {
            Some(m) if p_w.sharp.multipliers[m] == p.sharp.multipliers[k] => {}
            Some(m) => {
                return Ok(BorelCheck::Mismatch(format!(
                    "multiplier of coroot {k} is {} but its image has {}",
                    p.sharp.multipliers[k], p_w.sharp.multipliers[m]
                )))
            }
            None => return Ok(BorelCheck::Mismatch(format!("Φ♯ element {a:?} maps to {image:?} outside Φ♯"))),
        }
    }
    let mut perm = Vec::new();
    for (i, &k) in p.sharp.sharp_simple.iter().enumerate() {
        let image = t(&p.sharp.sharp_coroots[k]);
        match p_w.sharp.sharp_simple.iter().position(|&m| p_w.sharp.sharp_coroots[m] == image) {
            Some(j) => perm.push(j),
            None => return Ok(BorelCheck::Mismatch(format!("Δ♯ label {i}: {image:?} is not simple over w(Δ)"))),
        }
    }
    let (c, c_w) = (p.h.cartan_matrix(), p_w.h.cartan_matrix());
    for i in 0..perm.len() {
        for j in 0..perm.len() {
            if c[i][j] != c_w[perm[i]][perm[j]] {
                return Ok(BorelCheck::Mismatch(format!("Cartan entry ({i}, {j}) of H changes")));
            }
        }
    }
    if p.zh != p_w.zh {
        return Ok(BorelCheck::Mismatch(format!("Ž_H changes from {} to {}", p.zh, p_w.zh)));
    }
    let eps = p.epsilon.as_ref().expect("attached");
    for g in 0..p.zh.num_generators() {
        let lam = p.sharp.embed(&p.zh_lift(g));
        let image = t(&lam);
        let theirs = p_w.epsilon_at(&image).expect("image lies in Λ♯");
        if eps.values[g] != theirs {
            return Ok(BorelCheck::Mismatch(format!("ε at {lam:?} is {} but at its image {image:?} is {theirs}", eps.values[g])));
        }
    }
    Ok(BorelCheck::Ok)
}

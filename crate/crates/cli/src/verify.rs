use metacover::abelian_core::cosimplicial_limit_check;
use metacover::abelian_core::functors::FunctorTag;
use metacover::abelian_core::FgAbelianGroup;
use metacover::bg_cohomology::chevalley_strictness_oracle;
use metacover::forms::{sigma2_homology, theta_computations, FunctorDiagram, Lattice, QuadForm};
use metacover::local_field::{symbol_identity_suite, Place, PlaceKind};
use metacover::meta_dual::{borel_independence_check, dual_pair};
use metacover::picard_ext::{build_symmon_from_hom, check_coherence, inv, Axioms};
use metacover::root_data::{catalog, enumerate_strict, is_strict, weyl_group, BasedRootDatum, STANDARD_NAMES};
use metacover::util::{all_vectors, modi};

use crate::commands::{default_sample, CliError};
use crate::report::Report;

pub const SUITES: &[&str] = &["linear-algebra", "theta", "coherence", "schubert", "symbols", "dual"];

pub fn cmd_verify(suite: &str) -> Result<Report, CliError> {
    let names: Vec<&str> = match suite {
        "all" => SUITES.to_vec(),
        s if SUITES.contains(&s) => vec![s],
        s => return Err(CliError::Input(format!("unknown suite {s:?}; expected one of {} or all", SUITES.join(", ")))),
    };
    let mut r = Report::new(format!("verify --suite {suite}"));
    for name in names {
        let before = r.ledger.len();
        match name {
            "linear-algebra" => linear_algebra(&mut r),
            "theta" => theta(&mut r),
            "coherence" => coherence(&mut r),
            "schubert" => schubert(&mut r),
            "symbols" => symbols(&mut r),
            _ => dual(&mut r),
        }
        let failed = r.ledger[before..].iter().filter(|e| !e.passed).count();
        r.field(format!("suite {name}"), format!("{} checks, {failed} failed", r.ledger.len() - before));
    }
    Ok(r)
}

/// `Λ̌/2` for `Λ̌ = ℤ^r`.
fn halves(r: usize) -> FgAbelianGroup {
    FgAbelianGroup::cyclic_power(2, r)
}

pub fn linear_algebra(r: &mut Report) {
    for rank in 1..=4 {
        let sym = FgAbelianGroup::free(rank * (rank + 1) / 2);
        let ant = FgAbelianGroup::free(rank * (rank - 1) / 2).direct_sum(&halves(rank));
        let u = sigma2_homology(&Lattice::new(rank), false);
        let t = sigma2_homology(&Lattice::new(rank), true);
        r.check(
            format!("Sigma2 coinvariants rank {rank}"),
            (&u.h0, &u.hm1, &u.hm2) == (&sym, &halves(rank), &FgAbelianGroup::trivial())
                && (&t.h0, &t.hm1, &t.hm2) == (&ant, &FgAbelianGroup::trivial(), &halves(rank)),
            format!("untwisted ({}, {}, {}), twisted ({}, {}, {})", u.h0, u.hm1, u.hm2, t.h0, t.hm1, t.hm2),
        );
        r.check(format!("functor diagram rank {rank}"), FunctorDiagram::new(rank).all_hold(), "");
    }
    for rank in 1..=2 {
        for tag in [FunctorTag::Id, FunctorTag::Tensor2, FunctorTag::Gamma2, FunctorTag::Wedge2, FunctorTag::Sym2, FunctorTag::Hcheck1] {
            let rep = cosimplicial_limit_check(rank, tag, 4);
            let bad = rep.rows.iter().find(|row| row.computed != row.expected);
            r.check(
                format!("cosimplicial limit {tag} rank {rank}"),
                rep.passed(),
                bad.map(|row| format!("H^{}: {} vs {}", row.degree, row.computed, row.expected)).unwrap_or_default(),
            );
        }
    }
}

pub fn theta(r: &mut Report) {
    for rank in 1..=3 {
        for n in [2, 3, 4, 6] {
            for level in [1, 2] {
                let comps = theta_computations(&Lattice::new(rank), n, level);
                let bad = comps.iter().find(|c| c.pi != comps[0].pi);
                r.check(
                    format!("theta level {level} rank {rank} N={n}"),
                    bad.is_none() && comps.len() >= 2,
                    bad.map(|c| format!("{} disagrees with {}", c.method, comps[0].method)).unwrap_or_default(),
                );
            }
        }
    }
}

/// Every abelian group of order at most 8.
pub fn groups_up_to_8() -> Vec<FgAbelianGroup> {
    let mut out = vec![FgAbelianGroup::trivial()];
    out.extend((2..=8).map(FgAbelianGroup::cyclic));
    out.push(FgAbelianGroup::cyclic_power(2, 2));
    out.push(FgAbelianGroup::new(0, &[2, 4]));
    out.push(FgAbelianGroup::cyclic_power(2, 3));
    out
}

/// `Hom(Γ/2, ℤ/N)` on the generators of `Γ`.
pub fn homs_mod_2(g: &FgAbelianGroup, n: i64) -> Vec<Vec<i64>> {
    let orders = g.generator_orders();
    let even: Vec<bool> = orders.iter().map(|o| o.clone() % 2 == 0.into()).collect();
    if n % 2 != 0 {
        return vec![vec![0; orders.len()]];
    }
    all_vectors(orders.len(), 2)
        .into_iter()
        .filter(|v| v.iter().zip(&even).all(|(&x, &e)| e || x == 0))
        .map(|v| v.iter().map(|x| x * (n / 2)).collect())
        .collect()
}

pub fn coherence(r: &mut Report) {
    for g in groups_up_to_8() {
        for n in 1..=4 {
            let mut failure = None;
            let homs = homs_mod_2(&g, n);
            for f in &homs {
                let outcome = build_symmon_from_hom(&g, n, f).map_err(|e| e.to_string()).and_then(|s| {
                    check_coherence(&s, Axioms::Symmetric).map_err(|e| e.to_string())?;
                    inv(&s).map_err(|e| e.to_string())
                });
                match outcome {
                    Ok(values) => {
                        let expected: Vec<i64> = g.elements().iter().map(|x| modi(x.iter().zip(f).map(|(a, b)| a * b).sum(), n)).collect();
                        if values != expected {
                            failure = Some(format!("f = {f:?}: inv gives {values:?}"));
                        }
                    }
                    Err(e) => failure = Some(format!("f = {f:?}: {e}")),
                }
                if failure.is_some() {
                    break;
                }
            }
            r.check(format!("inv o build = id on Hom({g}/2, Z/{n}) ({} homs)", homs.len()), failure.is_none(), failure.unwrap_or_default());
        }
    }
    let z4 = FgAbelianGroup::cyclic(4);
    let mut s = build_symmon_from_hom(&z4, 2, &[1]).expect("valid hom");
    s.set_braid(1, 2, s.braid(1, 2) + 1);
    s.set_braid(2, 1, s.braid(2, 1) - 1);
    match check_coherence(&s, Axioms::Symmetric) {
        Err(f) => r.check("corrupted braiding is rejected", true, f.to_string()),
        Ok(()) => r.check("corrupted braiding is rejected", false, "coherence check passed"),
    }
}

pub const SCHUBERT_DATA: &[&str] = &["SL2", "SL2xSL2", "SL3", "Sp4", "G2", "GL2", "PGL2"];

pub fn schubert(r: &mut Report) {
    for name in SCHUBERT_DATA {
        let rd = catalog(name).expect("catalog datum");
        for n in [2, 3, 4, 5, 6, 12] {
            let st = enumerate_strict(&rd, n);
            match chevalley_strictness_oracle(&rd, n) {
                Ok(k) => {
                    let ok = k.group == st.group
                        && st.generators.iter().all(|(q, _)| k.annihilates(q))
                        && k.generators.iter().all(|(q, _)| is_strict(&rd, q).unwrap_or(false));
                    r.check(format!("Schubert oracle {name} N={n}"), ok, format!("oracle {} strict {}", k.group, st.group));
                }
                Err(e) => r.check(format!("Schubert oracle {name} N={n}"), false, e.to_string()),
            }
        }
    }
}

pub fn symbol_places() -> Vec<Place> {
    let mut out = vec![Place::real()];
    for p in (3..=50u64).filter(|&p| (2..p).all(|d| p % d != 0)) {
        out.push(Place::new(PlaceKind::PAdic(p), 2).expect("N = 2"));
    }
    out.push(Place::new(PlaceKind::PAdic(5), 4).expect("4 | 4"));
    out.push(Place::new(PlaceKind::PAdic(13), 4).expect("4 | 12"));
    out
}

pub fn symbols(r: &mut Report) {
    for v in symbol_places() {
        let rep = symbol_identity_suite(&v, &default_sample(&v));
        let first = rep.checks.iter().find_map(|c| c.failures.first().map(|w| format!("{}: {w}", c.name)));
        let cases: usize = rep.checks.iter().map(|c| c.evaluated).sum();
        r.check(format!("symbol identities at {v} ({cases} cases)"), rep.passed(), first.unwrap_or_default());
    }
}

fn strict_forms(rd: &BasedRootDatum, n: i64) -> Vec<QuadForm> {
    let r = rd.rank;
    all_vectors(r * (r + 1) / 2, n)
        .into_iter()
        .map(|v| QuadForm::from_list(r, n, &v).expect("right length"))
        .filter(|q| is_strict(rd, q).unwrap_or(false))
        .collect()
}

pub fn dual(r: &mut Report) {
    let sl2 = catalog("SL2").expect("catalog");
    for (coeff, h_coroot, zh) in [(1, 1, FgAbelianGroup::cyclic(2)), (0, 2, FgAbelianGroup::trivial())] {
        let q = QuadForm::from_list(1, 2, &[coeff]).expect("rank 1");
        match dual_pair(&sl2, &q) {
            Ok(p) => {
                let c = &p.h.coroots[p.h.simple[0]];
                r.check(
                    format!("SL2 N=2 Q={coeff}: H coroot [{h_coroot}], Z_H = {zh}"),
                    c == &vec![h_coroot] && p.zh == zh,
                    format!("H coroot {c:?}, Z_H = {}", p.zh),
                );
            }
            Err(e) => r.check(format!("SL2 N=2 Q={coeff}"), false, e.to_string()),
        }
    }
    for name in STANDARD_NAMES {
        let rd = catalog(name).expect("catalog");
        if rd.rank > 2 {
            continue;
        }
        let w = weyl_group(&rd).expect("small Weyl group");
        for n in 1..=4 {
            let mut failure = None;
            let mut count = 0;
            'outer: for q in strict_forms(&rd, n) {
                for e in &w.elements {
                    count += 1;
                    match borel_independence_check(&rd, &q, &e.matrix) {
                        Ok(c) if c.is_ok() => {}
                        Ok(c) => failure = Some(format!("{q} w={:?}: {c}", e.word)),
                        Err(err) => failure = Some(format!("{q} w={:?}: {err}", e.word)),
                    }
                    if failure.is_some() {
                        break 'outer;
                    }
                }
            }
            r.check(format!("Borel independence {name} N={n} ({count} cases)"), failure.is_none(), failure.unwrap_or_default());
        }
    }
}

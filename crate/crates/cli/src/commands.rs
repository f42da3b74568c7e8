use std::fmt;

use metacover::bg_cohomology::{bg_cohomology, chevalley_strictness_oracle, cover_homotopy};
use metacover::forms::{theta_computations, Lattice, QuadForm};
use metacover::local_field::{symbol_identity_suite, torus_cover, LocalUnit, Place, TorusCoverElement};
use metacover::meta_dual::{borel_independence_check, compare_z_linear_route, dual_pair};
use metacover::root_data::{catalog, enumerate_strict, is_strict, strictness_violation, validate, weyl_group, BasedRootDatum, WeylGroup};

use crate::grammar::{format_root_datum, parse_int_list, parse_matrix, parse_root_datum, ParseError};
use crate::report::Report;

#[derive(Debug)]
pub enum CliError {
    Parse { source: String, error: ParseError },
    Io(String),
    Input(String),
    /// The input is well formed but the command declines it.
    Refused(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse { source, error } => write!(f, "parse error in {source} at {error}"),
            CliError::Io(m) | CliError::Input(m) => f.write_str(m),
            CliError::Refused(m) => write!(f, "refused: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

fn input(e: impl fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

/// Reads a root datum from a file, or from the catalog for `catalog:NAME`.
pub fn load_datum(source: &str) -> Result<BasedRootDatum, CliError> {
    if let Some(name) = source.strip_prefix("catalog:") {
        return catalog(name).map_err(input);
    }
    let text = std::fs::read_to_string(source).map_err(|e| CliError::Io(format!("{source}: {e}")))?;
    parse_root_datum(&text).map_err(|error| CliError::Parse { source: source.into(), error })
}

fn load_valid(source: &str) -> Result<BasedRootDatum, CliError> {
    let rd = load_datum(source)?;
    let v = validate(&rd);
    if !v.is_empty() {
        return Err(CliError::Input(format!("{} is not a root datum: {}", rd.name, v.iter().map(|x| x.0.as_str()).collect::<Vec<_>>().join("; "))));
    }
    Ok(rd)
}

/// A coefficient list in upper-triangular basis order, or monomials such as
/// `x1^2 + x1x2`.
pub fn parse_form(rank: usize, n: i64, text: &str) -> Result<QuadForm, CliError> {
    if text.chars().any(|c| c.is_ascii_alphabetic()) {
        QuadForm::parse_monomials(rank, n, text).map_err(input)
    } else {
        let list = parse_int_list(text).map_err(input)?;
        QuadForm::from_list(rank, n, &list).map_err(input)
    }
}

/// `a` or `a/b`.
pub fn parse_unit(text: &str) -> Result<LocalUnit, CliError> {
    let t = text.trim();
    let (num, den) = t.split_once('/').unwrap_or((t, "1"));
    let p = |s: &str| s.trim().parse::<i128>().map_err(|_| CliError::Input(format!("bad rational {t:?}")));
    LocalUnit::from_ratio(p(num)?, p(den)?).map_err(input)
}

fn matrix_text(m: &[Vec<i64>]) -> String {
    format!("{m:?}").replace(' ', "")
}

pub fn cmd_validate(source: &str) -> Result<Report, CliError> {
    let rd = load_datum(source)?;
    let mut r = Report::new(format!("validate {source}"));
    r.field("datum", format_root_datum(&rd).trim_end());
    let violations = validate(&rd);
    r.field("violations", violations.len());
    r.check("root datum axioms", violations.is_empty(), violations.iter().map(|v| v.0.as_str()).collect::<Vec<_>>().join("; "));
    Ok(r)
}

pub fn cmd_classify(source: &str, n: i64) -> Result<Report, CliError> {
    if n < 1 {
        return Err(CliError::Input("N must be positive".into()));
    }
    let rd = load_valid(source)?;
    let mut r = Report::new(format!("classify {source} --N {n}"));
    let bg = bg_cohomology(&rd, n);
    let cover = cover_homotopy(&rd, n);
    r.field("datum", &rd.name);
    r.field("N", n);
    r.field("pi1(G)", &bg.pi1);
    for (i, h) in bg.h.iter().enumerate() {
        r.field(format!("H{}", i + 1), h);
    }
    r.field("covers pi0", &cover.pi0);
    r.field("covers pi1", &cover.pi1);
    r.field("covers pi2", &cover.pi2);
    let st = enumerate_strict(&rd, n);
    for (k, (q, o)) in st.generators.iter().enumerate() {
        r.field(format!("strict generator {k}"), format!("{q} (order {o})"));
    }
    let w = &bg.witness;
    r.check(
        "H2 -> H2(BT) -> H2(BT_sc) -> H3 exact",
        w.holds(),
        format!("injective={} exact_at_T={} exact_at_Tsc={} surjective={} matches_hom_ext={}", w.injective, w.exact_at_torus, w.exact_at_sc_torus, w.surjective, w.matches_hom_ext),
    );
    r.check("fiber sequence", cover.pi1 == cover.fiber_sequence_pi1 && cover.pi2 == cover.fiber_sequence_pi2, "");
    match chevalley_strictness_oracle(&rd, n) {
        Ok(k) => {
            let same_group = k.group == st.group;
            let strict_in_oracle = st.generators.iter().all(|(q, _)| k.annihilates(q));
            let oracle_strict = k.generators.iter().all(|(q, _)| is_strict(&rd, q).unwrap_or(false));
            r.check("Schubert oracle equivalence", same_group && strict_in_oracle && oracle_strict, format!("oracle {} vs strict {}", k.group, st.group));
        }
        Err(e) => r.check("Schubert oracle equivalence", false, e.to_string()),
    }
    Ok(r)
}

pub fn cmd_dualize(source: &str, n: i64, q_text: &str) -> Result<Report, CliError> {
    if n < 1 {
        return Err(CliError::Input("N must be positive".into()));
    }
    let rd = load_valid(source)?;
    let q = parse_form(rd.rank, n, q_text)?;
    if let Some(v) = strictness_violation(&rd, &q).map_err(input)? {
        return Err(CliError::Refused(format!("{q} is not strict on {}: {v}", rd.name)));
    }
    let pair = dual_pair(&rd, &q).map_err(input)?;
    let eps = pair.epsilon.as_ref().expect("attached by dual_pair");
    let mut r = Report::new(format!("dualize {source} --N {n} --Q {q_text}"));
    r.field("datum", &rd.name);
    r.field("N", n);
    r.field("Q", &q);
    r.field("sharp basis", matrix_text(&pair.sharp.sharp_basis));
    r.field("multipliers", format!("{:?}", pair.sharp.multipliers));
    r.field("sharp simple coroots", matrix_text(&rd.simple.iter().map(|&k| pair.sharp.sharp_coroots[k].clone()).collect::<Vec<_>>()));
    r.field("H", format_root_datum(&pair.h).trim_end());
    r.field("coefficient ring", &pair.coefficient_ring);
    r.field("Z_H", &pair.zh);
    r.field("epsilon", format!("{:?}", eps.values));
    r.field("epsilon built on", if eps.on_mod_2 { "Z_H/2" } else { "Z_H" });
    match compare_z_linear_route(&rd, &q).map_err(input)? {
        Some(c) => r.field("Z-linear route", format!("available; differs from epsilon at generators {:?}", c.differs_at)),
        None => r.field("Z-linear route", "unavailable"),
    }
    r.check("strictness", true, "");
    r.check("H is a root datum", validate(&pair.h).is_empty(), "");
    let w = match weyl_group(&rd) {
        Ok(w) => w,
        Err(_) => {
            r.field("Weyl group", "over the cap; elements of length <= 2 only");
            WeylGroup::generate_or_truncate(&rd, metacover::root_data::DEFAULT_WEYL_CAP)
        }
    };
    for e in &w.elements {
        let word: Vec<String> = e.word.iter().map(|s| format!("s{}", s + 1)).collect();
        let label = if word.is_empty() { "1".to_string() } else { word.join("") };
        match borel_independence_check(&rd, &q, &e.matrix) {
            Ok(c) => r.check(format!("Borel independence w={label}"), c.is_ok(), if c.is_ok() { String::new() } else { c.to_string() }),
            Err(err) => r.check(format!("Borel independence w={label}"), false, err.to_string()),
        }
    }
    Ok(r)
}

pub fn cmd_theta(rank: usize, n: i64, level: u8) -> Result<Report, CliError> {
    if n < 1 || !(1..=2).contains(&level) {
        return Err(CliError::Input("need N >= 1 and level 1 or 2".into()));
    }
    let mut r = Report::new(format!("theta --rank {rank} --N {n} --level {level}"));
    let comps = theta_computations(&Lattice::new(rank), n, level);
    for c in &comps {
        r.field(format!("{} pi0,pi1,pi2", c.method), format!("{}, {}, {}", c.pi[0], c.pi[1], c.pi[2]));
    }
    for c in &comps[1..] {
        r.check(format!("{} = {}", c.method, comps[0].method), c.pi == comps[0].pi, "");
    }
    Ok(r)
}

pub fn cmd_hilbert(place: &str, n: u64, a: &str, b: &str) -> Result<Report, CliError> {
    let v = Place::parse(place, n).map_err(input)?;
    let (x, y) = (parse_unit(a)?, parse_unit(b)?);
    let mut r = Report::new(format!("hilbert --place {place} --N {n} {a} {b}"));
    r.field("place", &v);
    if let (Some(g), Some(p)) = (v.primitive_root, v.prime()) {
        r.field("root of unity", format!("{g}^{} mod {p}", (p - 1) / n));
    }
    r.field("symbol", v.hilbert_symbol(&x, &y));
    Ok(r)
}

/// `±1, …, ±10` and `p` itself at a finite place.
pub fn default_sample(v: &Place) -> Vec<LocalUnit> {
    let mut s: Vec<i64> = (1..=10).flat_map(|k| [k, -k]).collect();
    if let Some(p) = v.prime() {
        s.push(p as i64);
    }
    s.into_iter().map(|k| LocalUnit::from_ratio(k.into(), 1).expect("nonzero")).collect()
}

pub fn cmd_symbol_suite(place: &str, n: u64, sample: Option<&str>) -> Result<Report, CliError> {
    let v = Place::parse(place, n).map_err(input)?;
    let echo = sample.map_or(String::new(), |s| format!(" --sample {s}"));
    let sample = match sample {
        Some(s) => s.split(',').map(parse_unit).collect::<Result<Vec<_>, _>>()?,
        None => default_sample(&v),
    };
    let mut r = Report::new(format!("symbol-suite --place {place} --N {n}{echo}"));
    let rep = symbol_identity_suite(&v, &sample);
    r.field("place", &v);
    r.field("sample", sample.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "));
    for c in &rep.checks {
        r.check(format!("{} ({} cases)", c.name, c.evaluated), c.failures.is_empty(), c.failures.first().cloned().unwrap_or_default());
    }
    Ok(r)
}

pub fn cmd_torus_cover(rank: usize, cocycle: &str, place: &str, n: u64) -> Result<Report, CliError> {
    let text = std::fs::read_to_string(cocycle).unwrap_or_else(|_| cocycle.to_string());
    let c = parse_matrix(&text).map_err(|error| CliError::Parse { source: cocycle.into(), error })?;
    let v = Place::parse(place, n).map_err(input)?;
    let t = torus_cover(rank, c.clone(), v.clone()).map_err(input)?;
    let units: Vec<LocalUnit> = [-1i64, 2, 3, v.prime().unwrap_or(5).max(5) as i64].iter().map(|&k| LocalUnit::from_ratio(k.into(), 1).expect("nonzero")).collect();
    let mut points: Vec<Vec<LocalUnit>> = Vec::new();
    for a in &units {
        for i in 0..rank {
            let mut x = vec![LocalUnit::one(); rank];
            x[i] = a.clone();
            points.push(x);
        }
        points.push(vec![a.clone(); rank]);
    }
    let el = |k: usize, phase: u64| TorusCoverElement::new(points[k].clone(), phase % n);
    let mut r = Report::new(format!("torus-cover --rank {rank} --cocycle {cocycle} --place {place} --N {n}"));
    r.field("place", &v);
    r.field("cocycle", matrix_text(&c));
    let (mut assoc_fail, mut inv_fail, mut b_fail) = (None, None, None);
    let (mut total, mut plus, mut minus, mut alt) = (0, 0, 0, 0);
    for i in 0..points.len() {
        let g = el(i, 1);
        if t.mul(&g, &t.inverse(&g)) != t.identity() && inv_fail.is_none() {
            inv_fail = Some(format!("x = {i}"));
        }
        for j in 0..points.len() {
            let h = el(j, 0);
            let rd = t.commutator_readings(&points[i], &points[j]);
            total += 1;
            plus += usize::from(rd.commutator == rd.b_reading);
            minus += usize::from(rd.commutator == rd.minus_b_reading);
            alt += usize::from(rd.commutator == rd.alternating_reading);
            if rd.commutator != rd.b_reading && b_fail.is_none() {
                b_fail = Some(format!("points {i}, {j}"));
            }
            for k in 0..points.len() {
                let m = el(k, 2);
                if t.mul(&t.mul(&g, &h), &m) != t.mul(&g, &t.mul(&h, &m)) && assoc_fail.is_none() {
                    assoc_fail = Some(format!("points {i}, {j}, {k}"));
                }
            }
        }
    }
    r.field("sample points", points.len());
    r.field("commutator = +b reading", format!("{plus}/{total}"));
    r.field("commutator = -b reading", format!("{minus}/{total}"));
    r.field("commutator = (c - c^T) reading", format!("{alt}/{total}"));
    r.check("associativity", assoc_fail.is_none(), assoc_fail.unwrap_or_default());
    r.check("inverses", inv_fail.is_none(), inv_fail.unwrap_or_default());
    r.check("commutator is the pairing of c + c^T", b_fail.is_none(), b_fail.unwrap_or_default());
    Ok(r)
}

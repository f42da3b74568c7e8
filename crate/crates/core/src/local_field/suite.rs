use std::fmt;

use super::place::Place;
use super::unit::LocalUnit;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub evaluated: usize,
    /// Human-readable witnesses of each failure.
    pub failures: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub place: String,
    pub sample: Vec<LocalUnit>,
    pub checks: Vec<IdentityCheck>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.failures.is_empty())
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sample: Vec<String> = self.sample.iter().map(ToString::to_string).collect();
        writeln!(f, "place: {}", self.place)?;
        writeln!(f, "sample: {}", sample.join(", "))?;
        for c in &self.checks {
            let status = if c.failures.is_empty() { "ok" } else { "FAIL" };
            writeln!(f, "  {:<22} {:>5} cases  {status}", c.name, c.evaluated)?;
            for w in c.failures.iter().take(5) {
                writeln!(f, "    {w}")?;
            }
        }
        write!(f, "result: {}", if self.passed() { "pass" } else { "fail" })
    }
}

struct Check {
    inner: IdentityCheck,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Check { inner: IdentityCheck { name, evaluated: 0, failures: Vec::new() } }
    }

    fn expect(&mut self, lhs: u64, rhs: u64, witness: impl FnOnce() -> String) {
        self.inner.evaluated += 1;
        if lhs != rhs {
            self.inner.failures.push(format!("{}: {lhs} ≠ {rhs}", witness()));
        }
    }
}

/// Bilinearity, antisymmetry, the Steinberg relations and `(a, a) = (a, -1)`
/// on every pair (and triple, for bilinearity) drawn from `sample`.
pub fn symbol_identity_suite(v: &Place, sample: &[LocalUnit]) -> SuiteReport {
    let n = v.n;
    let h = |a: &LocalUnit, b: &LocalUnit| v.hilbert_symbol(a, b);
    let minus_one = LocalUnit::one().neg();
    let mut left = Check::new("bilinear (left)");
    let mut right = Check::new("bilinear (right)");
    let mut anti = Check::new("antisymmetry");
    let mut neg = Check::new("(a, -a) = 0");
    let mut stein = Check::new("(a, 1 - a) = 0");
    let mut selfs = Check::new("(a, a) = (a, -1)");
    for a in sample {
        neg.expect(h(a, &a.neg()), 0, || format!("a = {a}"));
        if let Some(b) = a.one_minus() {
            stein.expect(h(a, &b), 0, || format!("a = {a}"));
        }
        selfs.expect(h(a, a), h(a, &minus_one), || format!("a = {a}"));
        for b in sample {
            anti.expect((h(a, b) + h(b, a)) % n, 0, || format!("a = {a}, b = {b}"));
            for c in sample {
                let ab = a.mul(b);
                left.expect(h(&ab, c), (h(a, c) + h(b, c)) % n, || format!("a = {a}, b = {b}, c = {c}"));
                right.expect(h(c, &ab), (h(c, a) + h(c, b)) % n, || format!("a = {a}, b = {b}, c = {c}"));
            }
        }
    }
    SuiteReport {
        place: v.to_string(),
        sample: sample.to_vec(),
        checks: [left, right, anti, neg, stein, selfs].into_iter().map(|c| c.inner).collect(),
    }
}

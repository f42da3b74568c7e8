use std::fmt;

pub const SCHEMA: &str = "metacover-report/1";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LedgerEntry {
    pub check: String,
    pub passed: bool,
    pub witness: String,
}

/// Command echo, ordered `key: value` body and a ledger of checks.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub command: String,
    pub body: Vec<(String, String)>,
    pub ledger: Vec<LedgerEntry>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report { command: command.into(), ..Default::default() }
    }

    pub fn field(&mut self, key: impl Into<String>, value: impl fmt::Display) {
        self.body.push((key.into(), value.to_string()));
    }

    pub fn check(&mut self, check: impl Into<String>, passed: bool, witness: impl Into<String>) {
        self.ledger.push(LedgerEntry { check: check.into(), passed, witness: witness.into() });
    }

    pub fn passed(&self) -> bool {
        self.ledger.iter().all(|e| e.passed)
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.body.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "schema: {SCHEMA}")?;
        writeln!(f, "command: {}", self.command)?;
        for (k, v) in &self.body {
            if v.contains('\n') {
                writeln!(f, "{k}: |")?;
                for line in v.lines() {
                    writeln!(f, "  {line}")?;
                }
            } else {
                writeln!(f, "{k}: {v}")?;
            }
        }
        writeln!(f, "ledger:")?;
        for e in &self.ledger {
            let mark = if e.passed { "pass" } else { "FAIL" };
            if e.witness.is_empty() {
                writeln!(f, "  [{mark}] {}", e.check)?;
            } else {
                writeln!(f, "  [{mark}] {}: {}", e.check, e.witness)?;
            }
        }
        write!(f, "status: {}", if self.passed() { "ok" } else { "failed" })
    }
}

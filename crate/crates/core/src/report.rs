use std::fmt;

use crate::exact::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ItemResult {
    pub id: String,
    pub pass: bool,
    pub detail: String,
}

impl ItemResult {
    pub fn new(id: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            pass,
            detail: detail.into(),
        }
    }
}

/// Outcome of checking one identity: both sides plus per-item findings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub identity: String,
    pub pass: bool,
    pub lhs: Rational,
    pub rhs: Vec<Rational>,
    pub per_item: Vec<ItemResult>,
}

impl VerificationReport {
    /// Passes iff every right-hand side equals `lhs` and every item passes.
    pub fn equality(
        identity: impl Into<String>,
        lhs: Rational,
        rhs: Vec<Rational>,
        per_item: Vec<ItemResult>,
    ) -> Self {
        let pass = rhs.iter().all(|r| *r == lhs) && per_item.iter().all(|i| i.pass);
        Self {
            identity: identity.into(),
            pass,
            lhs,
            rhs,
            per_item,
        }
    }

    /// Item-only report; `lhs` counts passing items, `rhs` the total.
    pub fn from_items(identity: impl Into<String>, per_item: Vec<ItemResult>) -> Self {
        let ok = per_item.iter().filter(|i| i.pass).count();
        let total = per_item.len();
        Self::equality(
            identity,
            Rational::from_integer(ok.into()),
            vec![Rational::from_integer(total.into())],
            per_item,
        )
    }

    pub fn failures(&self) -> impl Iterator<Item = &ItemResult> {
        self.per_item.iter().filter(|i| !i.pass)
    }

    /// Appends items from another report, e.g. an oracle cross-check.
    pub fn merge_items(&mut self, other: VerificationReport) {
        self.pass &= other.pass;
        self.per_item.extend(other.per_item.into_iter().map(|mut i| {
            i.id = format!("{}/{}", other.identity, i.id);
            i
        }));
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "{verdict}  {}  lhs = {}  rhs =", self.identity, self.lhs)?;
        for r in &self.rhs {
            write!(f, " {r}")?;
        }
        writeln!(f)?;
        let width = self.per_item.iter().map(|i| i.id.len()).max().unwrap_or(0);
        for i in &self.per_item {
            let mark = if i.pass { "ok " } else { "BAD" };
            writeln!(f, "  {mark} {:<width$}  {}", i.id, i.detail)?;
        }
        Ok(())
    }
}

//! Structured verification outcomes.
//!
//! A [`Report`] is a list of named checks. Every failing check carries a
//! [`Witness`]: the basis multi-index where the identity broke and both sides
//! evaluated there as exact coefficient strings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::kernel::{vector, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub index: Vec<usize>,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

impl Witness {
    pub fn new(index: Vec<usize>, lhs: &[Scalar], rhs: &[Scalar]) -> Witness {
        Witness { index, lhs: vector::to_strings(lhs), rhs: vector::to_strings(rhs) }
    }

    /// Witness for a dimension or rank comparison.
    pub fn counts(actual: usize, expected: usize) -> Witness {
        Witness { index: Vec::new(), lhs: vec![actual.to_string()], rhs: vec![expected.to_string()] }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    /// The identity being checked, written out.
    pub law: String,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default)]
    pub detail: String,
}

impl Check {
    pub fn pass(id: impl Into<String>, law: impl Into<String>, detail: impl Into<String>) -> Check {
        Check {
            id: id.into(),
            law: law.into(),
            verdict: Verdict::Pass,
            witness: None,
            detail: detail.into(),
        }
    }

    pub fn fail(
        id: impl Into<String>,
        law: impl Into<String>,
        witness: Witness,
        detail: impl Into<String>,
    ) -> Check {
        Check {
            id: id.into(),
            law: law.into(),
            verdict: Verdict::Fail,
            witness: Some(witness),
            detail: detail.into(),
        }
    }

    /// Pass iff `actual == expected`.
    pub fn count(
        id: impl Into<String>,
        law: impl Into<String>,
        actual: usize,
        expected: usize,
    ) -> Check {
        let detail = format!("{actual} vs {expected}");
        if actual == expected {
            Check::pass(id, law, detail)
        } else {
            Check::fail(id, law, Witness::counts(actual, expected), detail)
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Accumulates basis-indexed comparisons for one identity and keeps the
/// first mismatch.
#[derive(Debug)]
pub struct Tally {
    id: String,
    law: String,
    checked: usize,
    failed: usize,
    first: Option<Witness>,
}

impl Tally {
    pub fn new(id: impl Into<String>, law: impl Into<String>) -> Tally {
        Tally { id: id.into(), law: law.into(), checked: 0, failed: 0, first: None }
    }

    pub fn compare(&mut self, index: &[usize], lhs: &[Scalar], rhs: &[Scalar]) -> bool {
        self.checked += 1;
        if lhs == rhs {
            return true;
        }
        self.failed += 1;
        if self.first.is_none() {
            self.first = Some(Witness::new(index.to_vec(), lhs, rhs));
        }
        false
    }

    pub fn compare_scalar(&mut self, index: &[usize], lhs: &Scalar, rhs: &Scalar) -> bool {
        self.compare(index, std::slice::from_ref(lhs), std::slice::from_ref(rhs))
    }

    pub fn finish(self) -> Check {
        match self.first {
            None => Check::pass(self.id, self.law, format!("{} basis cases checked", self.checked)),
            Some(w) => Check::fail(
                self.id,
                self.law,
                w,
                format!("{} of {} basis cases fail", self.failed, self.checked),
            ),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub checks: Vec<Check>,
    pub summary: Summary,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub metadata: BTreeMap<String, String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Table,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Format, String> {
        match s {
            "json" => Ok(Format::Json),
            "table" => Ok(Format::Table),
            _ => Err(format!("unknown format `{s}` (json or table)")),
        }
    }
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    pub fn from_checks(checks: impl IntoIterator<Item = Check>) -> Report {
        let mut r = Report::new();
        for c in checks {
            r.push(c);
        }
        r
    }

    pub fn push(&mut self, check: Check) {
        match check.verdict {
            Verdict::Pass => self.summary.passed += 1,
            Verdict::Fail => self.summary.failed += 1,
        }
        self.checks.push(check);
    }

    pub fn set_meta(&mut self, key: impl Into<String>, value: impl ToString) {
        self.metadata.insert(key.into(), value.to_string());
    }

    /// Appends every check and metadata entry of `other`; later metadata
    /// entries win on key collisions.
    pub fn absorb(&mut self, other: Report) {
        for c in other.checks {
            self.push(c);
        }
        self.metadata.extend(other.metadata);
    }

    pub fn merge(reports: impl IntoIterator<Item = Report>) -> Report {
        let mut out = Report::new();
        for r in reports {
            out.absorb(r);
        }
        out
    }

    /// True when no check failed.
    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// Whether the named check exists and passed.
    pub fn passed_check(&self, id: &str) -> bool {
        self.check(id).is_some_and(Check::passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Report> {
        serde_json::from_str(text)
    }

    pub fn to_table(&self) -> String {
        let width = self.checks.iter().map(|c| c.id.len()).max().unwrap_or(2).max(5);
        let mut out = String::new();
        for c in &self.checks {
            let v = match c.verdict {
                Verdict::Pass => "pass",
                Verdict::Fail => "FAIL",
            };
            let _ = writeln!(out, "{v}  {:width$}  {}", c.id, c.law);
            if !c.detail.is_empty() {
                let _ = writeln!(out, "      {:width$}  {}", "", c.detail);
            }
            if let Some(w) = &c.witness {
                let _ = writeln!(
                    out,
                    "      {:width$}  at {:?}: [{}] vs [{}]",
                    "",
                    w.index,
                    w.lhs.join(", "),
                    w.rhs.join(", ")
                );
            }
        }
        for (k, v) in &self.metadata {
            let _ = writeln!(out, "{k}: {v}");
        }
        let _ = writeln!(out, "{} passed, {} failed", self.summary.passed, self.summary.failed);
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Table => self.to_table(),
        }
    }
}

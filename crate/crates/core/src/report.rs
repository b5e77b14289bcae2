//! Verification reports: one line per comparison, `{check, degree, lhs, rhs, pass}`.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Where a comparison was made: a single degree or a bidegree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Degree {
    Single(i64),
    Pair(i64, i64),
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::Single(k) => write!(f, "{k}"),
            Degree::Pair(a, b) => write!(f, "({a},{b})"),
        }
    }
}

impl From<i64> for Degree {
    fn from(k: i64) -> Self {
        Degree::Single(k)
    }
}

impl From<(i64, i64)> for Degree {
    fn from((a, b): (i64, i64)) -> Self {
        Degree::Pair(a, b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub check: String,
    pub degree: Degree,
    pub lhs: i64,
    pub rhs: i64,
    pub pass: bool,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.pass { "ok" } else { "FAIL" };
        write!(
            f,
            "{:<4} {} @ {}: {} vs {}",
            verdict, self.check, self.degree, self.lhs, self.rhs
        )
    }
}

/// An ordered list of checks.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Report {
    checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    /// Records `lhs == rhs`.
    pub fn equal(
        &mut self,
        check: &str,
        degree: impl Into<Degree>,
        lhs: impl TryInto<i64>,
        rhs: impl TryInto<i64>,
    ) {
        let (lhs, rhs) = (to_i64(lhs), to_i64(rhs));
        self.push(check, degree.into(), lhs, rhs, lhs == rhs);
    }

    /// Records `lhs <= rhs`.
    pub fn at_most(
        &mut self,
        check: &str,
        degree: impl Into<Degree>,
        lhs: impl TryInto<i64>,
        rhs: impl TryInto<i64>,
    ) {
        let (lhs, rhs) = (to_i64(lhs), to_i64(rhs));
        self.push(check, degree.into(), lhs, rhs, lhs <= rhs);
    }

    /// Records a boolean outcome as `1 vs 1` or `0 vs 1`.
    pub fn holds(&mut self, check: &str, degree: impl Into<Degree>, ok: bool) {
        self.push(check, degree.into(), ok as i64, 1, ok);
    }

    pub fn push(&mut self, check: &str, degree: Degree, lhs: i64, rhs: i64, pass: bool) {
        self.checks.push(Check {
            check: check.to_string(),
            degree,
            lhs,
            rhs,
            pass,
        });
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn checks(&self) -> &[Check] {
        &self.checks
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

fn to_i64(x: impl TryInto<i64>) -> i64 {
    x.try_into().unwrap_or(i64::MAX)
}

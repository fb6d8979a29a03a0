//! Outcome records for identity sweeps.

use serde::Serialize;

use crate::numeric::{format_f64, relative_residual, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// First failing instance of a check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub at: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    /// `"0"` for exact passes.
    pub max_residual: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    /// Auxiliary values such as a Gram diagonal.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub data: Vec<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn with_data(mut self, data: Vec<String>) -> Self {
        self.data = data;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub params: String,
    pub status: Status,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new(suite: &str, params: String, checks: Vec<Check>) -> Self {
        let status = if checks.iter().all(Check::passed) { Status::Pass } else { Status::Fail };
        VerificationReport { suite: suite.to_string(), params, status, checks }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Accumulates exact comparisons; any nonzero difference fails.
pub struct ExactTally {
    name: String,
    worst: Rational,
    first: Option<Counterexample>,
}

impl ExactTally {
    pub fn new(name: &str) -> Self {
        ExactTally { name: name.to_string(), worst: Rational::zero(), first: None }
    }

    pub fn record(&mut self, at: impl FnOnce() -> String, lhs: &Rational, rhs: &Rational) {
        if lhs == rhs {
            return;
        }
        let diff = (lhs - rhs).abs();
        if diff > self.worst {
            self.worst = diff;
        }
        if self.first.is_none() {
            self.first = Some(Counterexample { at: at(), lhs: lhs.to_string(), rhs: rhs.to_string() });
        }
    }

    /// Merge another tally for the same check.
    pub fn absorb(&mut self, other: ExactTally) {
        if other.worst > self.worst {
            self.worst = other.worst;
        }
        if self.first.is_none() {
            self.first = other.first;
        }
    }

    pub fn finish(self) -> Check {
        let status = if self.first.is_none() { Status::Pass } else { Status::Fail };
        let max_residual = if self.worst.is_zero() { "0".to_string() } else { format_f64(self.worst.to_f64()) };
        Check { name: self.name, status, max_residual, counterexample: self.first, data: Vec::new() }
    }
}

/// Accumulates floating comparisons under `|l−r| ≤ tol·(1+max(|l|,|r|))`.
pub struct FloatTally {
    name: String,
    tol: f64,
    worst: f64,
    first: Option<Counterexample>,
}

impl FloatTally {
    pub fn new(name: &str, tol: f64) -> Self {
        FloatTally { name: name.to_string(), tol, worst: 0.0, first: None }
    }

    pub fn record(&mut self, at: impl FnOnce() -> String, lhs: f64, rhs: f64) {
        let r = relative_residual(lhs, rhs);
        if r > self.worst {
            self.worst = r;
        }
        if r > self.tol && self.first.is_none() {
            self.first = Some(Counterexample { at: at(), lhs: format_f64(lhs), rhs: format_f64(rhs) });
        }
    }

    pub fn worst(&self) -> f64 {
        self.worst
    }

    pub fn finish(self) -> Check {
        let status = if self.first.is_none() { Status::Pass } else { Status::Fail };
        Check {
            name: self.name,
            status,
            max_residual: format_f64(self.worst),
            counterexample: self.first,
            data: Vec::new(),
        }
    }
}

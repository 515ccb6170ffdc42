//! Pass/fail bookkeeping for identity checks.

use std::fmt;

use crate::Poly;

/// One failed check: where it happened and the nonzero residual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub case: String,
    pub residual: Poly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub suite: String,
    pub checks: usize,
    pub failures: Vec<Failure>,
}

impl VerifyReport {
    pub fn new(suite: impl Into<String>) -> Self {
        Self {
            suite: suite.into(),
            checks: 0,
            failures: Vec::new(),
        }
    }

    /// Records one check whose residual must be the zero polynomial.
    pub fn record(&mut self, case: impl fmt::Display, residual: Poly) {
        self.checks += 1;
        if !residual.is_zero() {
            self.failures.push(Failure {
                case: case.to_string(),
                residual,
            });
        }
    }

    pub fn merge(&mut self, other: VerifyReport) {
        self.checks += other.checks;
        self.failures.extend(other.failures);
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn first_failure(&self) -> Option<&Failure> {
        self.failures.first()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {}/{} passed",
            self.suite,
            self.checks - self.failures.len(),
            self.checks
        )?;
        if let Some(first) = self.first_failure() {
            write!(f, "; first failure at {}: residual {}", first.case, first.residual)?;
        }
        Ok(())
    }
}

//! Pass/fail reports shared by every verification routine.

use serde::Serialize;

/// One failed identity, with its nonzero residue in canonical text form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub struct Failure {
    pub check: String,
    pub operator: String,
    pub generator: String,
    pub residue: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize)]
pub struct CheckReport {
    /// Number of (operator, generator) identities evaluated.
    pub evaluated: usize,
    pub failures: Vec<Failure>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.evaluated += other.evaluated;
        self.failures.extend(other.failures);
    }

    /// Sorts failures so that reports do not depend on thread scheduling.
    pub fn finish(mut self) -> Self {
        self.failures.sort();
        self
    }
}

use serde::{Deserialize, Serialize};

/// Outcome of one named verification check. `passed` is exactly `max_error <= tolerance`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub max_error: f64,
    pub tolerance: f64,
    pub details: String,
}

impl CheckReport {
    pub fn new(name: impl Into<String>, max_error: f64, tolerance: f64, details: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            passed: max_error <= tolerance,
            max_error,
            tolerance,
            details: details.into(),
        }
    }

    /// A check that could not run at all.
    pub fn failed(name: impl Into<String>, tolerance: f64, details: impl Into<String>) -> Self {
        CheckReport::new(name, f64::INFINITY, tolerance, details)
    }

    /// Re-judges the same observation against another tolerance.
    pub fn with_tolerance(mut self, tolerance: f64) -> Self {
        self.tolerance = tolerance;
        self.passed = self.max_error <= tolerance;
        self
    }
}

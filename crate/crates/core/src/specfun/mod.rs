//! Confluent hypergeometric function ₁F₁(a, b; z) for complex `a` and `z` and real `b`,
//! its derivative, the Kummer transformation, complex log-gamma, and the large-|z|
//! asymptotic expansion.
//!
//! The primary evaluator sums the Maclaurin series in double-double arithmetic. For
//! purely imaginary `z` the series cancels by a factor of about `e^|z|`, so past
//! [`SeriesConfig::direct_radius`] the value is carried outward along the ray through
//! `z` by Taylor re-expansion of Kummer's equation. The asymptotic expansion is kept
//! as an independent cross-check only.

mod asymptotic;
mod gamma;
mod hyp1f1;

pub use asymptotic::{chf_asymptotic, AsymptoticValue, ASYMPTOTIC_MIN_ABS_Z};
pub use gamma::{is_nonpositive_integer, log_gamma};
pub use hyp1f1::{chf_1f1, chf_1f1_deriv, chf_1f1_with_deriv, kummer_transform};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Parameters `(a, b)` of ₁F₁(a, b; ·).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChfParams {
    pub a: Complex64,
    pub b: f64,
}

impl ChfParams {
    pub fn new(a: Complex64, b: f64) -> Result<Self> {
        let p = ChfParams { a, b };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.a.re.is_finite() && self.a.im.is_finite() && self.b.is_finite()) {
            return Err(Error::InvalidParams(format!("non-finite parameters a={}, b={}", self.a, self.b)));
        }
        if self.b <= 0.0 && self.b == self.b.round() {
            return Err(Error::InvalidParams(format!("b = {} is a non-positive integer", self.b)));
        }
        Ok(())
    }
}

/// Controls for the series evaluator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesConfig {
    /// Summation stops once two consecutive terms fall below `rel_tol * |partial sum|`.
    pub rel_tol: f64,
    pub max_terms: usize,
    /// Kummer's transformation is applied when `re(z) < kummer_threshold`.
    /// `f64::NEG_INFINITY` disables it.
    pub kummer_threshold: f64,
    /// Largest |z| summed directly; beyond this the value is continued along the ray.
    pub direct_radius: f64,
    /// Largest |z| accepted at all.
    pub max_abs_z: f64,
}

impl Default for SeriesConfig {
    fn default() -> Self {
        SeriesConfig {
            rel_tol: 1e-14,
            max_terms: 10_000,
            kummer_threshold: 0.0,
            direct_radius: 30.0,
            max_abs_z: 200.0,
        }
    }
}

impl SeriesConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0) {
            return Err(Error::InvalidParams(format!("rel_tol must be positive, got {}", self.rel_tol)));
        }
        if self.max_terms < 1 {
            return Err(Error::InvalidParams("max_terms must be at least 1".into()));
        }
        if !(self.direct_radius > 0.0) || !(self.max_abs_z > 0.0) {
            return Err(Error::InvalidParams("series radii must be positive".into()));
        }
        Ok(())
    }

    /// Same settings with the automatic Kummer transformation switched off.
    pub fn without_kummer(mut self) -> Self {
        self.kummer_threshold = f64::NEG_INFINITY;
        self
    }
}

//! Frobenius series for y R̂″ + (½ − y) R̂′ − A_j R̂ = 0 with
//! A_j = (1−ε)/4 + i m²/(2ω), built straight from the indicial exponents and
//! the two-term recurrence
//!
//!   c_{k+1} = c_k (k + σ + A_j) / ((k + 1 + σ)(k + σ + ½)),   σ ∈ {0, ½}.
//!
//! Coefficients are tabulated once in double-double and evaluated by Horner's rule.
//! Nothing here calls into `specfun`.

use num_complex::Complex64;

use crate::closedform::Component;
use crate::dd::{CDd, Dd};
use crate::error::{Error, Result};

/// Largest |y| for which the tabulated series keeps at least ~12 digits after the
/// e^{|y|} cancellation on the imaginary axis.
pub const FROBENIUS_MAX_RADIUS: f64 = 40.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrobeniusExponent {
    Zero,
    Half,
}

impl FrobeniusExponent {
    pub fn sigma(self) -> f64 {
        match self {
            FrobeniusExponent::Zero => 0.0,
            FrobeniusExponent::Half => 0.5,
        }
    }
}

#[derive(Debug, Clone)]
pub struct FrobeniusSeries {
    pub exponent: FrobeniusExponent,
    pub radius: f64,
    coeffs: Vec<CDd>,
}

impl FrobeniusSeries {
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, k: usize) -> Option<Complex64> {
        self.coeffs.get(k).map(|c| c.to_c64())
    }

    /// y^σ Σ c_k y^k.
    pub fn eval(&self, y: Complex64) -> Result<Complex64> {
        if y.norm() > self.radius * (1.0 + 1e-12) {
            return Err(Error::Domain(format!("|y| = {} outside tabulated radius {}", y.norm(), self.radius)));
        }
        let yy = CDd::from_c64(y);
        let mut acc = CDd::ZERO;
        for c in self.coeffs.iter().rev() {
            acc = acc * yy + *c;
        }
        let s = acc.to_c64();
        Ok(match self.exponent {
            FrobeniusExponent::Zero => s,
            FrobeniusExponent::Half => y.sqrt() * s,
        })
    }
}

pub fn frobenius_series_solution(
    j: Component,
    exponent: FrobeniusExponent,
    m: f64,
    omega: f64,
    y_magnitude_max: f64,
) -> Result<FrobeniusSeries> {
    if !(m.is_finite() && omega.is_finite() && omega != 0.0) {
        return Err(Error::InvalidParams(format!("bad (m, omega) = ({m}, {omega})")));
    }
    if !(y_magnitude_max > 0.0) {
        return Err(Error::InvalidParams("radius must be positive".into()));
    }
    if y_magnitude_max > FROBENIUS_MAX_RADIUS {
        return Err(Error::NonConvergence { terms: 0 });
    }
    let big_a = CDd::new(
        Dd::from_f64((1.0 - j.epsilon()) / 4.0),
        Dd::from_f64(m * m) / Dd::from_f64(2.0 * omega),
    );
    let sigma = exponent.sigma();
    let mut coeffs = vec![CDd::ONE];
    let mut c = CDd::ONE;
    // largest |c_k| R^k seen so far, and the current one
    let mut peak = 1.0f64;
    let mut rk = 1.0f64;
    let max_terms = 2000;
    for k in 0..max_terms {
        let kf = k as f64;
        let num = big_a + CDd::from_real(Dd::from_f64(kf + sigma));
        let den = Dd::from_f64(kf + 1.0 + sigma) * Dd::from_f64(kf + sigma + 0.5);
        c = (c * num).div_real(den);
        coeffs.push(c);
        rk *= y_magnitude_max;
        let size = c.norm_f64() * rk;
        peak = peak.max(size);
        if kf > 2.0 * y_magnitude_max && size < 1e-34 * peak {
            return Ok(FrobeniusSeries { exponent, radius: y_magnitude_max, coeffs });
        }
    }
    Err(Error::NonConvergence { terms: max_terms })
}

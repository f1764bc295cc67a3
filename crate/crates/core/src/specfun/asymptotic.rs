use std::f64::consts::PI;

use num_complex::Complex64;

use super::gamma::{is_nonpositive_integer, log_gamma};
use super::ChfParams;
use crate::error::{Error, Result};

/// Below this modulus the expansion is refused.
pub const ASYMPTOTIC_MIN_ABS_Z: f64 = 25.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticValue {
    pub value: Complex64,
    /// Magnitude of the first omitted term of each branch, scaled by its prefactor.
    pub error_estimate: f64,
}

/// Large-|z| expansion
///
/// ₁F₁(a,b;z) ~ Γ(b) [ e^{±iπa} z^{−a} / Γ(b−a) Σ (a)_k (a−b+1)_k / k! (−z)^{−k}
///                    + e^z z^{a−b} / Γ(a)    Σ (b−a)_k (1−a)_k / k! z^{−k} ],
///
/// upper sign for im z ≥ 0, each sum truncated just before its smallest term.
pub fn chf_asymptotic(p: ChfParams, z: Complex64) -> Result<AsymptoticValue> {
    p.validate()?;
    let r = z.norm();
    if !(r >= ASYMPTOTIC_MIN_ABS_Z) {
        return Err(Error::ArgumentTooSmall { min: ASYMPTOTIC_MIN_ABS_Z, got: r });
    }
    let a = p.a;
    let b = Complex64::new(p.b, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let ln_z = z.ln();
    let lg_b = log_gamma(b)?;
    let sign = if z.im >= 0.0 { 1.0 } else { -1.0 };

    let mut value = Complex64::new(0.0, 0.0);
    let mut err = 0.0;

    let bma = b - a;
    if !is_nonpositive_integer(bma) {
        let i_pi_a = Complex64::new(0.0, sign * PI) * a;
        let pref = (lg_b - log_gamma(bma)? + i_pi_a - a * ln_z).exp();
        let (s, e) = truncated_sum(a, a - b + one, -z);
        value += pref * s;
        err += pref.norm() * e;
    }
    if !is_nonpositive_integer(a) {
        let pref = (lg_b - log_gamma(a)? + z + (a - b) * ln_z).exp();
        let (s, e) = truncated_sum(bma, one - a, z);
        value += pref * s;
        err += pref.norm() * e;
    }
    if !(value.re.is_finite() && value.im.is_finite()) {
        return Err(Error::Domain(format!("asymptotic value overflowed at z = {z}")));
    }
    Ok(AsymptoticValue { value, error_estimate: err })
}

/// Σ (p)_k (q)_k / k! w^{−k} up to the smallest term. Returns (sum, |first omitted term|).
fn truncated_sum(p: Complex64, q: Complex64, w: Complex64) -> (Complex64, f64) {
    let inv_w = 1.0 / w;
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    for k in 0..500 {
        let kf = k as f64;
        let next = term * (p + kf) * (q + kf) / (kf + 1.0) * inv_w;
        let nn = next.norm();
        if nn == 0.0 {
            return (sum, 0.0);
        }
        if nn >= term.norm() {
            return (sum, nn);
        }
        if nn < 1e-17 * sum.norm() {
            return (sum + next, nn);
        }
        sum += next;
        term = next;
    }
    (sum, term.norm())
}

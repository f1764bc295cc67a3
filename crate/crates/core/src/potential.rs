//! Superpotential W(x) = −m/√x and the partner potentials
//! V±(x) = W² ± W′ = m²/x ± (m/2) x^{−3/2} on the half line x > 0.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sector {
    Plus,
    Minus,
}

impl Sector {
    pub fn sign(self) -> f64 {
        match self {
            Sector::Plus => 1.0,
            Sector::Minus => -1.0,
        }
    }

    pub fn partner(self) -> Sector {
        match self {
            Sector::Plus => Sector::Minus,
            Sector::Minus => Sector::Plus,
        }
    }
}

impl fmt::Display for Sector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sector::Plus => "plus",
            Sector::Minus => "minus",
        })
    }
}

impl std::str::FromStr for Sector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plus" | "+" => Ok(Sector::Plus),
            "minus" | "-" => Ok(Sector::Minus),
            _ => Err(Error::InvalidParams(format!("unknown sector '{s}', expected plus or minus"))),
        }
    }
}

/// Coupling `m` and the sector selecting V₊ or V₋. Negative `m` is accepted here so
/// the shape-invariance relation can be expressed; solution-level code requires m > 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PotentialSpec {
    pub m: f64,
    pub sector: Sector,
}

impl PotentialSpec {
    pub fn new(m: f64, sector: Sector) -> Result<Self> {
        if !m.is_finite() || m == 0.0 {
            return Err(Error::InvalidParams(format!("coupling m must be finite and nonzero, got {m}")));
        }
        Ok(PotentialSpec { m, sector })
    }

    /// Coefficients (K, L) of V = K/x + L x^{−3/2}.
    pub fn coefficients(&self) -> (f64, f64) {
        (self.m * self.m, self.sector.sign() * (self.m / 2.0))
    }
}

/// Zero crossing and maximum of V₋, and the limit of W at infinity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CriticalStructure {
    pub x0: f64,
    pub x1: f64,
    pub w_plus: f64,
}

fn check_x(x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("x must be positive and finite, got {x}")))
    }
}

#[inline]
fn inv_x32(x: f64) -> f64 {
    1.0 / (x * x.sqrt())
}

pub fn superpotential(x: f64, m: f64) -> Result<f64> {
    check_x(x)?;
    Ok(-m / x.sqrt())
}

/// W′(x) = m / (2 x^{3/2}).
pub fn superpotential_derivative(x: f64, m: f64) -> Result<f64> {
    check_x(x)?;
    Ok((m / 2.0) * inv_x32(x))
}

/// V±(x) from the explicit formula. Debug builds cross-check it against W² ± W′.
pub fn potential(x: f64, spec: PotentialSpec) -> Result<f64> {
    check_x(x)?;
    let v = explicit(x, spec);
    debug_assert!(
        {
            let f = factorized(x, spec);
            (v - f).abs() <= 4.0 * ulp(term_scale(x, spec))
        },
        "factorized and explicit V disagree at x = {x}"
    );
    Ok(v)
}

/// V±(x) = W(x)² ± W′(x).
pub fn potential_factorized(x: f64, spec: PotentialSpec) -> Result<f64> {
    check_x(x)?;
    Ok(factorized(x, spec))
}

#[inline]
fn explicit(x: f64, spec: PotentialSpec) -> f64 {
    let (k, l) = spec.coefficients();
    k / x + l * inv_x32(x)
}

#[inline]
fn factorized(x: f64, spec: PotentialSpec) -> f64 {
    let w = -spec.m / x.sqrt();
    let dw = (spec.m / 2.0) * inv_x32(x);
    w * w + spec.sector.sign() * dw
}

/// Larger of the two term magnitudes |m²/x| and |m/2| x^{−3/2}; the natural scale for
/// rounding comparisons, since V₋ itself passes through zero.
pub fn term_scale(x: f64, spec: PotentialSpec) -> f64 {
    let (k, l) = spec.coefficients();
    (k / x).abs().max((l * inv_x32(x)).abs())
}

/// dV±/dx = −(m/x²)(m ± 3/(4√x)).
pub fn potential_derivative(x: f64, spec: PotentialSpec) -> Result<f64> {
    check_x(x)?;
    let m = spec.m;
    Ok(-(m / (x * x)) * (m + spec.sector.sign() * (0.75 / x.sqrt())))
}

pub fn critical_structure(m: f64) -> Result<CriticalStructure> {
    if !m.is_finite() || m == 0.0 {
        return Err(Error::InvalidParams(format!("critical structure needs m != 0, got {m}")));
    }
    let m2 = m * m;
    Ok(CriticalStructure { x0: 1.0 / (4.0 * m2), x1: 9.0 / (16.0 * m2), w_plus: 0.0 })
}

/// −K/4 + L² for the coefficients of both sectors; the conditional-solvability
/// constraint says this vanishes. Returns the entry of largest magnitude.
pub fn ces_residual(m: f64) -> f64 {
    [Sector::Plus, Sector::Minus]
        .iter()
        .map(|&s| {
            let (k, l) = PotentialSpec { m, sector: s }.coefficients();
            -k / 4.0 + l * l
        })
        .fold(0.0, |acc: f64, r| if r.abs() > acc.abs() { r } else { acc })
}

/// V₊(x, m) − V₋(x, −m).
pub fn shape_invariance_gap(x: f64, m: f64) -> Result<f64> {
    let plus = potential(x, PotentialSpec { m, sector: Sector::Plus })?;
    let minus = potential(x, PotentialSpec { m: -m, sector: Sector::Minus })?;
    Ok(plus - minus)
}

/// Spacing between `x` and the next representable double away from zero.
pub fn ulp(x: f64) -> f64 {
    let a = x.abs();
    if !a.is_finite() {
        return f64::NAN;
    }
    if a == 0.0 {
        return f64::from_bits(1);
    }
    f64::from_bits(a.to_bits() + 1) - a
}

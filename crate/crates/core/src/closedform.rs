//! Exact scattering solutions Z±^I and Z±^II of Z″ + ω²Z = V±Z, written as sums of
//! two confluent hypergeometric functions of y = −2iωx.
//!
//! Branch conventions: i^{1/2} = e^{iπ/4}, i^{3/2} = e^{3iπ/4}, and y^{1/2} on the
//! principal branch, which for x, ω > 0 is (2ωx)^{1/2} e^{−iπ/4}. The normalizations
//! C_{I1} = C_{I2} = 1 are used throughout.

use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::potential::{superpotential, Sector};
use crate::specfun::{chf_1f1_with_deriv, ChfParams, SeriesConfig};

/// e^{iπ/4}
pub const SQRT_I: Complex64 = Complex64::new(FRAC_1_SQRT_2, FRAC_1_SQRT_2);
/// e^{3iπ/4}
pub const I_POW_3_2: Complex64 = Complex64::new(-FRAC_1_SQRT_2, FRAC_1_SQRT_2);
/// e^{−iπ/4}, the overall phase of Z±.
pub const PHASE: Complex64 = Complex64::new(FRAC_1_SQRT_2, -FRAC_1_SQRT_2);

const I: Complex64 = Complex64::new(0.0, 1.0);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Branch {
    I,
    II,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::I => "I",
            Branch::II => "II",
        })
    }
}

impl std::str::FromStr for Branch {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "I" | "i" | "1" => Ok(Branch::I),
            "II" | "ii" | "2" => Ok(Branch::II),
            _ => Err(Error::InvalidParams(format!("unknown branch '{s}', expected I or II"))),
        }
    }
}

/// Which of the two consistent (R̃₁, R̃₂) pairs to build: case A starts from
/// R̃₁ = e^{−y/2}₁F₁(a₁,½;y), case B from R̃₁ = e^{−y/2}y^{1/2}₁F₁(a₁+½,3/2;y).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RCase {
    A,
    B,
}

/// Index j of R̃_j; j = 1 carries ε = +1 and j = 2 carries ε = −1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Component {
    One,
    Two,
}

impl Component {
    pub fn epsilon(self) -> f64 {
        match self {
            Component::One => 1.0,
            Component::Two => -1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolutionParams {
    pub m: f64,
    pub omega: f64,
    pub a1: Complex64,
    pub a2: Complex64,
    pub b1: f64,
    pub b2: f64,
}

impl SolutionParams {
    pub fn a(&self, j: Component) -> Complex64 {
        match j {
            Component::One => self.a1,
            Component::Two => self.a2,
        }
    }

    /// (2ω)^{1/2}
    fn sqrt_2w(&self) -> f64 {
        (2.0 * self.omega).sqrt()
    }
}

/// a₁ = i m²/(2ω), a₂ = a₁ + ½, b₁ = b₂ = ½.
pub fn solution_params(m: f64, omega: f64) -> Result<SolutionParams> {
    if !(m > 0.0 && m.is_finite()) {
        return Err(Error::InvalidParams(format!("m must be positive, got {m}")));
    }
    if !(omega > 0.0 && omega.is_finite()) {
        return Err(Error::InvalidParams(format!("omega must be positive, got {omega}")));
    }
    let a1 = Complex64::new(0.0, m * m / (2.0 * omega));
    Ok(SolutionParams { m, omega, a1, a2: a1 + 0.5, b1: 0.5, b2: 0.5 })
}

/// Constants tying the four C's of the general R̃ solution together.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CouplingConstants {
    pub c_i1: Complex64,
    pub c_ii2: Complex64,
    pub c_i2: Complex64,
    pub c_ii1: Complex64,
}

/// C_{II2} = C_{I1}·2(2ω)^{1/2} i^{1/2} a₁/m and C_{II1} = C_{I2}·(2ω)^{1/2} i^{1/2}/(2m).
pub fn coupling_constants(p: &SolutionParams, c_i1: Complex64, c_i2: Complex64) -> CouplingConstants {
    CouplingConstants {
        c_i1,
        c_ii2: c_i1 * case_a_factor(p),
        c_i2,
        c_ii1: c_i2 * case_b_factor(p),
    }
}

fn case_a_factor(p: &SolutionParams) -> Complex64 {
    2.0 * p.sqrt_2w() * SQRT_I * p.a1 / p.m
}

fn case_b_factor(p: &SolutionParams) -> Complex64 {
    p.sqrt_2w() * SQRT_I / (2.0 * p.m)
}

/// A closed-form value and its x-derivative.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolutionSample {
    pub x: f64,
    pub z: Complex64,
    pub dz: Complex64,
}

impl SolutionSample {
    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.z.re.is_finite() && self.z.im.is_finite() && self.dz.re.is_finite() && self.dz.im.is_finite()
    }

    pub fn scale(&self, c: Complex64) -> SolutionSample {
        SolutionSample { x: self.x, z: self.z * c, dz: self.dz * c }
    }
}

fn check_x_omega(x: f64, omega: f64) -> Result<()> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::Domain(format!("x must be positive, got {x}")));
    }
    if !(omega > 0.0 && omega.is_finite()) {
        return Err(Error::Domain(format!("omega must be positive, got {omega}")));
    }
    Ok(())
}

/// y = −2iωx.
pub fn y_of_x(x: f64, omega: f64) -> Result<Complex64> {
    check_x_omega(x, omega)?;
    Ok(Complex64::new(0.0, -2.0 * omega * x))
}

/// Principal y^{1/2} = (2ωx)^{1/2} e^{−iπ/4}.
pub fn sqrt_y(x: f64, omega: f64) -> Result<Complex64> {
    check_x_omega(x, omega)?;
    Ok((2.0 * omega * x).sqrt() * PHASE)
}

/// G(y) and G′(y) for one of the two Frobenius-type building blocks:
/// `Even(α)` = ₁F₁(α,½;y), `Odd(β)` = y^{1/2}₁F₁(β,3/2;y).
#[derive(Clone, Copy)]
enum Block {
    Even(Complex64),
    Odd(Complex64),
}

fn block(kind: Block, y: Complex64, sy: Complex64, cfg: &SeriesConfig) -> Result<(Complex64, Complex64)> {
    match kind {
        Block::Even(alpha) => chf_1f1_with_deriv(ChfParams::new(alpha, 0.5)?, y, cfg),
        Block::Odd(beta) => {
            let (f, df) = chf_1f1_with_deriv(ChfParams::new(beta, 1.5)?, y, cfg)?;
            Ok((sy * f, f / (2.0 * sy) + sy * df))
        }
    }
}

/// Value and x-derivative of e^{−y/2}·G(y).
fn damped(g: Complex64, dg: Complex64, y: Complex64, omega: f64) -> (Complex64, Complex64) {
    let e = (-0.5 * y).exp();
    let dy_dx = Complex64::new(0.0, -2.0 * omega);
    (e * g, e * (dg - 0.5 * g) * dy_dx)
}

/// R̃₁, R̃₂ and their x-derivatives.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RTildePair {
    pub r1: Complex64,
    pub r2: Complex64,
    pub dr1: Complex64,
    pub dr2: Complex64,
}

pub fn rtilde_pair(case: RCase, x: f64, p: &SolutionParams) -> Result<RTildePair> {
    rtilde_pair_with(case, x, p, &SeriesConfig::default())
}

pub fn rtilde_pair_with(case: RCase, x: f64, p: &SolutionParams, cfg: &SeriesConfig) -> Result<RTildePair> {
    let y = y_of_x(x, p.omega)?;
    let sy = sqrt_y(x, p.omega)?;
    let (first, second, k) = match case {
        RCase::A => (Block::Even(p.a1), Block::Odd(p.a2 + 0.5), case_a_factor(p)),
        RCase::B => (Block::Odd(p.a1 + 0.5), Block::Even(p.a2), case_b_factor(p)),
    };
    let (g1, dg1) = block(first, y, sy, cfg)?;
    let (g2, dg2) = block(second, y, sy, cfg)?;
    let (r1, dr1) = damped(g1, dg1, y, p.omega);
    let (r2, dr2) = damped(g2, dg2, y, p.omega);
    Ok(RTildePair { r1, r2: k * r2, dr1, dr2: k * dr2 })
}

pub fn rtilde(j: Component, case: RCase, x: f64, p: &SolutionParams) -> Result<Complex64> {
    let pair = rtilde_pair(case, x, p)?;
    Ok(match j {
        Component::One => pair.r1,
        Component::Two => pair.r2,
    })
}

/// Z±^I = e^{−iπ/4}e^{−y/2}[₁F₁(a₁,½;y) ± (2(2ω)^{1/2}i^{3/2}a₁/m) y^{1/2}₁F₁(a₂+½,3/2;y)]
/// Z±^II = e^{−iπ/4}e^{−y/2}[y^{1/2}₁F₁(a₁+½,3/2;y) ± ((2ω)^{1/2}i^{3/2}/(2m)) ₁F₁(a₂,½;y)]
pub fn solution_z(branch: Branch, sector: Sector, x: f64, p: &SolutionParams) -> Result<SolutionSample> {
    solution_z_with(branch, sector, x, p, &SeriesConfig::default())
}

pub fn solution_z_with(branch: Branch, sector: Sector, x: f64, p: &SolutionParams, cfg: &SeriesConfig) -> Result<SolutionSample> {
    let y = y_of_x(x, p.omega)?;
    let sy = sqrt_y(x, p.omega)?;
    let s = sector.sign();
    // i^{3/2} = i·i^{1/2}; multiplying by i is exact
    let (first, second, kappa) = match branch {
        Branch::I => (Block::Even(p.a1), Block::Odd(p.a2 + 0.5), I * (2.0 * p.sqrt_2w() * SQRT_I * p.a1 / p.m)),
        Branch::II => (Block::Odd(p.a1 + 0.5), Block::Even(p.a2), I * (p.sqrt_2w() * SQRT_I / (2.0 * p.m))),
    };
    let (g1, dg1) = block(first, y, sy, cfg)?;
    let (g2, dg2) = block(second, y, sy, cfg)?;
    let (v1, dv1) = damped(g1, dg1, y, p.omega);
    let (v2, dv2) = damped(g2, dg2, y, p.omega);
    let z = v1 + s * (kappa * v2);
    let dz = dv1 + s * (kappa * dv2);
    Ok(SolutionSample { x, z: PHASE * z, dz: PHASE * dz })
}

/// W_x[Z^I, Z^II] = ∓ ω i^{3/2} (2ω)^{1/2} / m.
pub fn wronskian_z(sector: Sector, m: f64, omega: f64) -> Result<Complex64> {
    let p = solution_params(m, omega)?;
    Ok(-sector.sign() * p.omega * I_POW_3_2 * p.sqrt_2w() / p.m)
}

/// λ_j = −(1 − ε) − 2i m²/ω, the Hermite-equation parameter after y = z².
pub fn hermite_lambda(j: Component, m: f64, omega: f64) -> Complex64 {
    Complex64::new(-(1.0 - j.epsilon()), -2.0 * (m * m) / omega)
}

/// Applies (d/dx ± W)/(iω) to a solution of the `from` sector, giving the partner
/// solution; the partner derivative comes from the reverse relation
/// (d/dx ∓ W) Z_to = iω Z_from.
pub fn susy_map(from: Sector, sample: &SolutionSample, m: f64, omega: f64) -> Result<SolutionSample> {
    if !(omega > 0.0) {
        return Err(Error::InvalidParams(format!("omega must be positive, got {omega}")));
    }
    let w = superpotential(sample.x, m)?;
    let iw = I * omega;
    // Minus -> Plus uses (d/dx + W); Plus -> Minus uses (d/dx − W).
    let s = -from.sign();
    let z = (sample.dz + s * w * sample.z) / iw;
    let dz = iw * sample.z + s * w * z;
    Ok(SolutionSample { x: sample.x, z, dz })
}

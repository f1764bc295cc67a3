//! Asymptotic phases of the two partner sectors and their difference.
//!
//! Far out, a real solution behaves as A sin(ωx − η ln 2ωx + δ + s·m/(2ω√x) + O(1/x)),
//! with η = m²/(2ω) and s = ±1 the sector sign. The log term is common to both sectors;
//! the 1/√x term comes from the ±(m/2)x^{−3/2} part of V± and is removed explicitly so the
//! difference converges like 1/x instead of 1/√x.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;
use serde::Serialize;

use crate::closedform::{solution_params, solution_z, susy_map, Branch, SolutionSample};
use crate::error::{Error, Result};
use crate::oracle::{integrate, IntegratorConfig, OdeProblem};
use crate::potential::{PotentialSpec, Sector};

/// Smallest ωx at which a local phase is trusted.
pub const MIN_OMEGA_X: f64 = 20.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Part {
    Re,
    Im,
}

impl Part {
    fn of(self, z: Complex64) -> f64 {
        match self {
            Part::Re => z.re,
            Part::Im => z.im,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PhaseExtraction {
    pub x_eval: f64,
    pub delta_raw: f64,
    pub coulomb_eta: f64,
    /// Includes the logarithmic term, so it is still distorted by the 1/x tail.
    pub delta_log_corrected: f64,
}

pub fn coulomb_eta(m: f64, omega: f64) -> Result<f64> {
    if !(m > 0.0 && omega > 0.0 && m.is_finite() && omega.is_finite()) {
        return Err(Error::InvalidParams(format!("coulomb_eta needs m, omega > 0, got ({m}, {omega})")));
    }
    Ok(m * m / (2.0 * omega))
}

/// Reduces an angle into (−π/2, π/2].
pub fn reduce_mod_pi(a: f64) -> f64 {
    let mut r = a - PI * (a / PI).round();
    if r <= -FRAC_PI_2 {
        r += PI;
    } else if r > FRAC_PI_2 {
        r -= PI;
    }
    r
}

/// Reduces an angle into [0, π).
pub fn reduce_mod_pi_positive(a: f64) -> f64 {
    let r = a.rem_euclid(PI);
    if r >= PI {
        0.0
    } else {
        r
    }
}

pub fn local_phase(sample: &SolutionSample, omega: f64, coulomb_eta: f64) -> Result<PhaseExtraction> {
    local_phase_of(sample, omega, coulomb_eta, Part::Re)
}

/// As `local_phase`, reading the chosen real solution out of the complex sample.
pub fn local_phase_of(sample: &SolutionSample, omega: f64, coulomb_eta: f64, part: Part) -> Result<PhaseExtraction> {
    let x = sample.x;
    if !(omega * x >= MIN_OMEGA_X) {
        return Err(Error::TooCloseToTurningRegion(omega * x));
    }
    let u = part.of(sample.z);
    let du = part.of(sample.dz);
    if u == 0.0 && du == 0.0 {
        return Err(Error::DegenerateSample(x));
    }
    // ωx is large; take it mod π first so the subtraction keeps its digits
    let wx = (omega * x).rem_euclid(PI);
    let delta_raw = reduce_mod_pi((omega * u).atan2(du) - wx);
    let delta_log_corrected = reduce_mod_pi(delta_raw + coulomb_eta * (2.0 * omega * x).ln());
    Ok(PhaseExtraction { x_eval: x, delta_raw, coulomb_eta, delta_log_corrected })
}

/// The s·m/(2ω√x) term carried by a sector's local phase.
pub fn short_range_tail(sector: Sector, m: f64, omega: f64, x: f64) -> f64 {
    sector.sign() * m / (2.0 * omega * x.sqrt())
}

/// (δ₊ − δ₋) mod π predicted by e^{2iδ₋} = ((w − iω)/(w + iω)) e^{2iδ₊} for W₊ → w at infinity.
pub fn susy_phase_offset(w: f64, omega: f64) -> f64 {
    reduce_mod_pi_positive(Complex64::new(w, omega).arg())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseConfig {
    pub x_match: f64,
    pub x_max: f64,
    pub max_doublings: u32,
    pub tolerance: f64,
    pub part: Part,
    pub branch: Branch,
    pub integrator: IntegratorConfig,
}

impl Default for PhaseConfig {
    fn default() -> Self {
        PhaseConfig {
            x_match: 1.0,
            x_max: 1e4,
            max_doublings: 14,
            tolerance: 1e-3,
            part: Part::Re,
            branch: Branch::I,
            integrator: IntegratorConfig::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PhaseRow {
    pub x: f64,
    pub minus: PhaseExtraction,
    pub plus: PhaseExtraction,
    pub diff_mod_pi: f64,
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PhaseDifferenceResult {
    pub m: f64,
    pub omega: f64,
    pub diff_mod_pi: f64,
    pub residual_to_half_pi: f64,
    pub x_sequence: Vec<f64>,
    pub converged: bool,
    pub table: Vec<PhaseRow>,
}

/// Like `phase_difference`, but returns the table even when it did not converge.
pub fn phase_difference_study(m: f64, omega: f64, cfg: &PhaseConfig) -> Result<PhaseDifferenceResult> {
    if !(m > 0.0 && omega > 0.0 && m.is_finite() && omega.is_finite()) {
        return Err(Error::InvalidParams(format!("phase_difference needs m, omega > 0, got ({m}, {omega})")));
    }
    if !(cfg.x_match > 0.0 && cfg.x_max > cfg.x_match && cfg.tolerance > 0.0) {
        return Err(Error::InvalidParams("need 0 < x_match < x_max and a positive tolerance".into()));
    }
    cfg.integrator.validate()?;
    let eta = coulomb_eta(m, omega)?;
    let params = solution_params(m, omega)?;

    // Z₊ = i·(d/dx + W)Z₋/(iω) so that the real intertwiner pairs re with re
    let minus0 = solution_z(cfg.branch, Sector::Minus, cfg.x_match, &params)?;
    let plus0 = susy_map(Sector::Minus, &minus0, m, omega)?.scale(Complex64::i());
    let spec_minus = PotentialSpec::new(m, Sector::Minus)?;
    let spec_plus = PotentialSpec::new(m, Sector::Plus)?;

    let seg_cfg = IntegratorConfig { dense_points: 2, ..cfg.integrator };
    let (mut cur_minus, mut cur_plus) = (minus0, plus0);
    let mut x_prev = cfg.x_match;
    let mut table = Vec::new();
    let mut small_run = 0;
    for k in 1..=cfg.max_doublings {
        let x = cfg.x_match * 2f64.powi(k as i32);
        if x > cfg.x_max {
            break;
        }
        let step = |spec: PotentialSpec, init: SolutionSample| -> Result<SolutionSample> {
            let problem = OdeProblem { spec, omega, x_start: x_prev, x_end: x, init };
            let out = integrate(&problem, &seg_cfg)?;
            Ok(*out.last().expect("integrate returns the endpoint"))
        };
        let (rm, rp) = rayon::join(|| step(spec_minus, cur_minus), || step(spec_plus, cur_plus));
        cur_minus = rm?;
        cur_plus = rp?;
        x_prev = x;
        if omega * x < MIN_OMEGA_X {
            continue;
        }
        let minus = local_phase_of(&cur_minus, omega, eta, cfg.part)?;
        let plus = local_phase_of(&cur_plus, omega, eta, cfg.part)?;
        let d_minus = minus.delta_log_corrected - short_range_tail(Sector::Minus, m, omega, x);
        let d_plus = plus.delta_log_corrected - short_range_tail(Sector::Plus, m, omega, x);
        let diff = reduce_mod_pi_positive(d_plus - d_minus);
        let residual = (diff - FRAC_PI_2).abs();
        table.push(PhaseRow { x, minus, plus, diff_mod_pi: diff, residual });
        if residual < cfg.tolerance / 10.0 {
            small_run += 1;
            if small_run >= 2 {
                break;
            }
        } else {
            small_run = 0;
        }
    }

    let converged = match (table.first(), table.last()) {
        (Some(first), Some(last)) => {
            table.len() >= 2 && last.residual < cfg.tolerance && last.residual < first.residual
        }
        _ => false,
    };
    let (diff_mod_pi, residual_to_half_pi) = table.last().map(|r| (r.diff_mod_pi, r.residual)).unwrap_or((f64::NAN, f64::NAN));
    Ok(PhaseDifferenceResult {
        m,
        omega,
        diff_mod_pi,
        residual_to_half_pi,
        x_sequence: table.iter().map(|r| r.x).collect(),
        converged,
        table,
    })
}

/// Propagates a V₋ solution and its V₊ image outward and returns (δ₊ − δ₋) mod π
/// together with its distance from π/2.
pub fn phase_difference(m: f64, omega: f64, cfg: &PhaseConfig) -> Result<PhaseDifferenceResult> {
    let r = phase_difference_study(m, omega, cfg)?;
    if !r.converged {
        let last = r.table.last().map(|row| format!("residual {:e} at x = {}", row.residual, row.x));
        return Err(Error::NotConverged(format!(
            "{} far points, {}",
            r.table.len(),
            last.unwrap_or_else(|| "no point reached omega*x >= 20".into())
        )));
    }
    Ok(r)
}

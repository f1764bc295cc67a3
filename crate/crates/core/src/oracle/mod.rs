//! Numerical ground truth that shares no code path with the closed forms: an adaptive
//! complex ODE integrator for Z″ = (V± − ω²) Z, a Frobenius-series solver of the
//! confluent equation in y, and finite-difference residual checks.

mod frobenius;
mod integrator;
mod residual;

pub use frobenius::{frobenius_series_solution, FrobeniusExponent, FrobeniusSeries, FROBENIUS_MAX_RADIUS};
pub use integrator::{integrate_linear, IntegrationStats};
pub use residual::{fd_residual, residual_schrodinger, DEFAULT_RESIDUAL_TOL};

use crate::closedform::{solution_z, Branch, SolutionParams, SolutionSample};
use crate::error::{Error, Result};
use crate::potential::{potential, PotentialSpec, Sector};

/// Integration never starts or ends closer to the x^{−3/2} singularity than this times 1/m².
pub const MIN_START_SCALE: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OdeProblem {
    pub spec: PotentialSpec,
    pub omega: f64,
    pub x_start: f64,
    pub x_end: f64,
    pub init: SolutionSample,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegratorConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_steps: usize,
    /// Number of uniformly spaced output points, endpoints included.
    pub dense_points: usize,
}

impl Default for IntegratorConfig {
    fn default() -> Self {
        IntegratorConfig { rel_tol: 1e-10, abs_tol: 1e-12, max_steps: 10_000_000, dense_points: 2 }
    }
}

impl IntegratorConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.abs_tol > 0.0) {
            return Err(Error::InvalidParams("integrator tolerances must be positive".into()));
        }
        if self.max_steps == 0 {
            return Err(Error::InvalidParams("max_steps must be positive".into()));
        }
        Ok(())
    }
}

impl OdeProblem {
    pub fn validate(&self) -> Result<()> {
        let floor = MIN_START_SCALE / (self.spec.m * self.spec.m);
        if !(self.x_start > 0.0 && self.x_end > 0.0) {
            return Err(Error::Domain("integration interval must exclude x = 0".into()));
        }
        if self.x_start.min(self.x_end) < floor {
            return Err(Error::Domain(format!(
                "interval [{}, {}] reaches below the floor 1e-3/m^2 = {floor}",
                self.x_start, self.x_end
            )));
        }
        if self.x_start == self.x_end {
            return Err(Error::InvalidParams("x_end must differ from x_start".into()));
        }
        if !(self.omega > 0.0 && self.omega.is_finite()) {
            return Err(Error::InvalidParams(format!("omega must be positive, got {}", self.omega)));
        }
        if !self.init.is_finite() {
            return Err(Error::InvalidParams("initial sample must be finite".into()));
        }
        Ok(())
    }
}

/// Uniform grid of `n >= 2` points from `a` to `b`, with both endpoints exact.
pub fn uniform_points(a: f64, b: f64, n: usize) -> Vec<f64> {
    let n = n.max(2);
    (0..n)
        .map(|i| if i == n - 1 { b } else { a + (b - a) * (i as f64 / (n - 1) as f64) })
        .collect()
}

/// Integrates the problem and returns `cfg.dense_points` uniformly spaced samples,
/// the last of which is the endpoint.
pub fn integrate(problem: &OdeProblem, cfg: &IntegratorConfig) -> Result<Vec<SolutionSample>> {
    let xs = uniform_points(problem.x_start, problem.x_end, cfg.dense_points);
    integrate_at(problem, cfg, &xs)
}

/// Integrates the problem and returns samples at the given points.
pub fn integrate_at(problem: &OdeProblem, cfg: &IntegratorConfig, xs: &[f64]) -> Result<Vec<SolutionSample>> {
    problem.validate()?;
    let spec = problem.spec;
    let w2 = problem.omega * problem.omega;
    // the interval check above keeps x > 0 for every stage
    let q = move |x: f64| potential(x, spec).map(|v| v - w2).unwrap_or(f64::NAN);
    let (samples, _) = integrate_linear(q, problem.x_start, problem.x_end, (problem.init.z, problem.init.dz), xs, cfg)?;
    Ok(samples)
}

/// Starts from the closed form at `x_match` and integrates outward to `x_far`,
/// returning `cfg.dense_points` uniform samples over [x_match, x_far].
pub fn propagate_to_asymptotic(
    branch: Branch,
    sector: Sector,
    params: &SolutionParams,
    x_match: f64,
    x_far: f64,
    cfg: &IntegratorConfig,
) -> Result<Vec<SolutionSample>> {
    if !(x_far > x_match) {
        return Err(Error::InvalidParams(format!("x_far = {x_far} must exceed x_match = {x_match}")));
    }
    let init = solution_z(branch, sector, x_match, params)?;
    let problem = OdeProblem {
        spec: PotentialSpec::new(params.m, sector)?,
        omega: params.omega,
        x_start: x_match,
        x_end: x_far,
        init,
    };
    integrate(&problem, cfg)
}

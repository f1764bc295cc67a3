use crate::closedform::SolutionSample;
use crate::error::{Error, Result};
use crate::potential::{potential, PotentialSpec};
use crate::report::CheckReport;

/// Default pass threshold on the scaled residual.
pub const DEFAULT_RESIDUAL_TOL: f64 = 1e-6;

/// Five-point residual of Z″ + ω²Z − V(x)Z over the interior of a uniform grid, scaled
/// by ω²·max(1, |Z|). `potential_at` supplies V; the report carries the worst point.
pub fn fd_residual<V: Fn(f64) -> Result<f64>>(
    name: &str,
    samples: &[SolutionSample],
    potential_at: V,
    omega: f64,
    tolerance: f64,
) -> Result<CheckReport> {
    if samples.len() < 5 {
        return Err(Error::GridTooCoarse(format!("need at least 5 samples, got {}", samples.len())));
    }
    let h = samples[1].x - samples[0].x;
    if !(h != 0.0 && h.is_finite()) {
        return Err(Error::GridTooCoarse("zero or non-finite spacing".into()));
    }
    for w in samples.windows(2) {
        let d = w[1].x - w[0].x;
        if (d - h).abs() > 1e-6 * h.abs() {
            return Err(Error::GridTooCoarse(format!("grid is not uniform near x = {}", w[0].x)));
        }
    }
    let w2 = omega * omega;
    let mut worst = 0.0f64;
    let mut worst_x = samples[2].x;
    for i in 2..samples.len() - 2 {
        let z = |k: usize| samples[k].z;
        let d2 = (-z(i - 2) + 16.0 * z(i - 1) - 30.0 * z(i) + 16.0 * z(i + 1) - z(i + 2)) / (12.0 * h * h);
        let x = samples[i].x;
        let v = potential_at(x)?;
        let res = (d2 + (w2 - v) * z(i)).norm() / (w2 * z(i).norm().max(1.0));
        if !(res <= worst) {
            worst = res;
            worst_x = x;
        }
    }
    Ok(CheckReport::new(
        name,
        worst,
        tolerance,
        format!("{} interior points, h = {h:e}, worst at x = {worst_x}", samples.len() - 4),
    ))
}

/// Finite-difference Schrödinger residual for V = V±.
pub fn residual_schrodinger(samples: &[SolutionSample], spec: PotentialSpec, omega: f64) -> Result<CheckReport> {
    fd_residual(
        &format!("schrodinger_residual[{}, m={}, omega={}]", spec.sector, spec.m, omega),
        samples,
        |x| potential(x, spec),
        omega,
        DEFAULT_RESIDUAL_TOL,
    )
}

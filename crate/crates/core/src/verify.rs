//! Verification suites. Each check produces a [`CheckReport`]; checks run in parallel
//! and reports come back sorted by name.

use std::f64::consts::FRAC_PI_2;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::closedform::{
    hermite_lambda, rtilde_pair, solution_params, solution_z, wronskian_z, Branch, Component, RCase,
    SolutionSample, PHASE,
};
use crate::error::{Error, Result};
use crate::golden;
use crate::oracle::{
    frobenius_series_solution, integrate, integrate_at, integrate_linear, residual_schrodinger, FrobeniusExponent,
    IntegratorConfig, OdeProblem,
};
use crate::potential::{
    critical_structure, potential, potential_factorized, shape_invariance_gap, superpotential, term_scale, ulp,
    PotentialSpec, Sector,
};
use crate::report::CheckReport;
use crate::scattering::{phase_difference_study, susy_phase_offset, Part, PhaseConfig};
use crate::specfun::{
    chf_1f1, chf_1f1_deriv, chf_1f1_with_deriv, chf_asymptotic, kummer_transform, log_gamma, ChfParams, SeriesConfig,
};

/// Parameter sets exercised by the closed-form and oracle checks.
pub const PARAM_SETS: [(f64, f64); 3] = [(1.0, 1.0), (2.0, 0.5), (0.5, 2.0)];
/// Sets with η = m²/(2ω) ≤ 1. Below the turning point both branches are dominated by the
/// same growing solution, and Z^I Z^II′ − Z^II Z^I′ cancels by roughly e^{2πη}; at
/// (2, ½) that is ~10^11, beyond what binary64 inputs can resolve to 1e−8.
pub const WRONSKIAN_SETS: [(f64, f64); 3] = [(1.0, 1.0), (0.5, 2.0), (1.5, 1.5)];
pub const BRANCHES: [Branch; 2] = [Branch::I, Branch::II];
pub const SECTORS: [Sector; 2] = [Sector::Plus, Sector::Minus];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Specfun,
    Closedform,
    Oracle,
    Scattering,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "specfun" => Ok(Suite::Specfun),
            "closedform" => Ok(Suite::Closedform),
            "oracle" => Ok(Suite::Oracle),
            "scattering" => Ok(Suite::Scattering),
            "all" => Ok(Suite::All),
            _ => Err(Error::InvalidParams(format!(
                "unknown suite '{s}', expected specfun, closedform, oracle, scattering or all"
            ))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Specfun => "specfun",
            Suite::Closedform => "closedform",
            Suite::Oracle => "oracle",
            Suite::Scattering => "scattering",
            Suite::All => "all",
        })
    }
}

type CheckFn = fn() -> Result<CheckReport>;

struct Check {
    name: &'static str,
    tolerance: f64,
    run: CheckFn,
}

fn checks(suite: Suite) -> Vec<Check> {
    let specfun: Vec<Check> = vec![
        Check { name: "specfun.golden_chf", tolerance: 1e-12, run: golden_chf },
        Check { name: "specfun.golden_loggamma", tolerance: 1e-13, run: golden_loggamma },
        Check { name: "specfun.kummer_identity", tolerance: 1e-10, run: kummer_identity },
        Check { name: "specfun.wronskian_identity", tolerance: 1e-9, run: chf_wronskian_identity },
        Check { name: "specfun.derivative_identity", tolerance: 1e-12, run: derivative_identity },
        Check { name: "specfun.frobenius_agreement", tolerance: 1e-12, run: frobenius_agreement },
        Check { name: "specfun.asymptotic_crosscheck", tolerance: 1e-8, run: asymptotic_crosscheck },
    ];
    let closedform: Vec<Check> = vec![
        Check { name: "closedform.golden_solutions", tolerance: 1e-10, run: golden_solutions },
        Check { name: "closedform.schrodinger_residual", tolerance: 1e-6, run: schrodinger_residual_all },
        Check { name: "closedform.wronskian", tolerance: 1e-8, run: solution_wronskian },
        Check { name: "closedform.intertwining", tolerance: 1e-8, run: intertwining },
        Check { name: "closedform.rtilde_coupled_system", tolerance: 1e-8, run: rtilde_coupled_system },
        Check { name: "closedform.decomposition_ulps", tolerance: 2.0, run: decomposition },
        Check { name: "closedform.hermite_identity_ulps", tolerance: 2.0, run: hermite_identity },
        Check { name: "potential.shape_invariance_ulps", tolerance: 1.0, run: shape_invariance },
        Check { name: "potential.factorization_ulps", tolerance: 4.0, run: factorization },
        Check { name: "potential.critical_structure_steps", tolerance: 1.0, run: critical_points },
    ];
    let oracle: Vec<Check> = vec![
        Check { name: "oracle.free_wave", tolerance: 1e-10, run: free_wave },
        Check { name: "oracle.closed_form_endpoint", tolerance: 1e-7, run: closed_form_endpoint },
        Check { name: "oracle.closed_form_range", tolerance: 1e-7, run: closed_form_range },
        Check { name: "oracle.round_trip", tolerance: 1e-7, run: round_trip },
        Check { name: "oracle.wronskian_transport", tolerance: 1e-6, run: wronskian_transport },
    ];
    let scattering: Vec<Check> = vec![
        Check { name: "scattering.phase_difference_m1_w1", tolerance: 1e-3, run: phase_m1_w1 },
        Check { name: "scattering.phase_difference_m0.5_w2", tolerance: 1e-3, run: phase_m05_w2 },
        Check { name: "scattering.imaginary_part_consistency", tolerance: 1e-3, run: imaginary_part_consistency },
        Check { name: "scattering.synthetic_relation", tolerance: 1e-13, run: synthetic_relation },
    ];
    match suite {
        Suite::Specfun => specfun,
        Suite::Closedform => closedform,
        Suite::Oracle => oracle,
        Suite::Scattering => scattering,
        Suite::All => specfun.into_iter().chain(closedform).chain(oracle).chain(scattering).collect(),
    }
}

/// Runs a suite. `rel_tol`, when given, replaces every check's own tolerance.
pub fn run_suite(suite: Suite, rel_tol: Option<f64>) -> Result<Vec<CheckReport>> {
    if let Some(t) = rel_tol {
        if !(t > 0.0 && t.is_finite()) {
            return Err(Error::InvalidParams(format!("--rel-tol must be positive, got {t}")));
        }
    }
    let mut reports: Vec<CheckReport> = checks(suite)
        .par_iter()
        .map(|c| {
            let tol = rel_tol.unwrap_or(c.tolerance);
            match (c.run)() {
                Ok(r) => CheckReport { name: c.name.to_string(), ..r }.with_tolerance(tol),
                Err(e) => CheckReport::failed(c.name, tol, e.to_string()),
            }
        })
        .collect();
    reports.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(reports)
}

fn report(max_error: f64, details: impl Into<String>) -> Result<CheckReport> {
    // name and tolerance are filled in by run_suite
    Ok(CheckReport::new("", max_error, f64::INFINITY, details))
}

/// |a − b| / |b|.
pub fn rel_err(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm()
}

/// |a − b| / max(1, |b|).
pub fn scaled_err(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm().max(1.0)
}

/// Tracks the worst value seen and where it happened.
struct Worst {
    value: f64,
    at: String,
}

impl Worst {
    fn new() -> Self {
        Worst { value: 0.0, at: String::new() }
    }

    fn update(&mut self, v: f64, at: impl FnOnce() -> String) {
        if !(v <= self.value) {
            self.value = v;
            self.at = at();
        }
    }

    fn into_report(self, what: &str) -> Result<CheckReport> {
        report(self.value, format!("{what}; worst at {}", self.at))
    }
}

pub fn log_grid(a: f64, b: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| {
            if i + 1 == n {
                b
            } else {
                (a.ln() + (b.ln() - a.ln()) * i as f64 / (n - 1) as f64).exp()
            }
        })
        .collect()
}

fn golden_chf() -> Result<CheckReport> {
    let cfg = SeriesConfig::default();
    let mut w = Worst::new();
    let rows = golden::chf_table()?;
    for r in &rows {
        let f = chf_1f1(ChfParams::new(r.a(), r.b)?, r.z(), &cfg)?;
        w.update(rel_err(f, r.f()), || format!("a={}, b={}, z={}", r.a(), r.b, r.z()));
    }
    w.into_report(&format!("{} reference values", rows.len()))
}

fn golden_loggamma() -> Result<CheckReport> {
    let mut w = Worst::new();
    let rows = golden::loggamma_table()?;
    for r in &rows {
        w.update(scaled_err(log_gamma(r.z())?, r.lg()), || format!("z={}", r.z()));
    }
    w.into_report(&format!("{} reference values", rows.len()))
}

const KUMMER_A: [Complex64; 4] =
    [Complex64::new(0.0, 0.5), Complex64::new(1.0, 1.0), Complex64::new(-0.3, 2.0), Complex64::new(0.0, 4.0)];
const KUMMER_B: [f64; 3] = [0.5, 1.5, 2.5];
const KUMMER_Z: [Complex64; 6] = [
    Complex64::new(0.0, -2.0),
    Complex64::new(0.0, -10.0),
    Complex64::new(3.0, -5.0),
    Complex64::new(-4.0, 7.0),
    Complex64::new(0.0, -25.0),
    Complex64::new(-1.5, 0.0),
];

fn kummer_identity() -> Result<CheckReport> {
    let direct_cfg = SeriesConfig::default().without_kummer();
    let mut w = Worst::new();
    for a in KUMMER_A {
        for b in KUMMER_B {
            for z in KUMMER_Z {
                let p = ChfParams::new(a, b)?;
                let direct = chf_1f1(p, z, &direct_cfg)?;
                let transformed = kummer_transform(p, z, &direct_cfg)?;
                w.update(rel_err(transformed, direct), || format!("a={a}, b={b}, z={z}"));
            }
        }
    }
    w.into_report("1F1(a,b;z) against e^z 1F1(b-a,b;-z)")
}

fn chf_wronskian_identity() -> Result<CheckReport> {
    let cfg = SeriesConfig::default();
    let mut w = Worst::new();
    let mut worst_cond = 0.0f64;
    let b = 0.5;
    for a in [Complex64::new(0.0, 0.5), Complex64::new(1.0, 1.0), Complex64::new(0.25, 0.5), Complex64::new(0.0, 1.0)] {
        for z in &KUMMER_Z[..4] {
            let z = *z;
            let (f1, df1) = chf_1f1_with_deriv(ChfParams::new(a, b)?, z, &cfg)?;
            let (g, dg) = chf_1f1_with_deriv(ChfParams::new(a - b + 1.0, 2.0 - b)?, z, &cfg)?;
            let zp = z.powf(1.0 - b);
            let f2 = zp * g;
            let df2 = (1.0 - b) * zp / z * g + zp * dg;
            let lhs = f1 * df2 - f2 * df1;
            let rhs = (1.0 - b) * z.powf(-b) * z.exp();
            worst_cond = worst_cond.max((f1 * df2).norm().max((f2 * df1).norm()) / rhs.norm());
            w.update(rel_err(lhs, rhs), || format!("a={a}, b={b}, z={z}"));
        }
    }
    let what = format!(
        "W[1F1(a,1/2;z), z^(1/2) 1F1(a+1/2,3/2;z)] against (1/2) z^(-1/2) e^z, largest cancellation {worst_cond:.1e}"
    );
    w.into_report(&what)
}

fn derivative_identity() -> Result<CheckReport> {
    let cfg = SeriesConfig::default();
    let mut w = Worst::new();
    for a in KUMMER_A {
        for b in KUMMER_B {
            for z in KUMMER_Z {
                let p = ChfParams::new(a, b)?;
                let (_, df) = chf_1f1_with_deriv(p, z, &cfg)?;
                let shifted = chf_1f1_deriv(p, z, &cfg)?;
                w.update(rel_err(df, shifted), || format!("a={a}, b={b}, z={z}"));
            }
        }
    }
    w.into_report("series derivative against (a/b) 1F1(a+1,b+1;z)")
}

fn frobenius_agreement() -> Result<CheckReport> {
    let cfg = SeriesConfig::default();
    let mut w = Worst::new();
    for (m, omega) in PARAM_SETS {
        let p = solution_params(m, omega)?;
        for j in [Component::One, Component::Two] {
            for exponent in [FrobeniusExponent::Zero, FrobeniusExponent::Half] {
                let series = frobenius_series_solution(j, exponent, m, omega, 20.0)?;
                for y in [Complex64::new(0.0, -1.0), Complex64::new(0.0, -4.5), Complex64::new(0.0, -12.0), Complex64::new(0.0, -20.0)] {
                    let got = series.eval(y)?;
                    let want = match exponent {
                        FrobeniusExponent::Zero => chf_1f1(ChfParams::new(p.a(j), 0.5)?, y, &cfg)?,
                        FrobeniusExponent::Half => y.sqrt() * chf_1f1(ChfParams::new(p.a(j) + 0.5, 1.5)?, y, &cfg)?,
                    };
                    w.update(rel_err(got, want), || format!("m={m}, omega={omega}, j={j:?}, {exponent:?}, y={y}"));
                }
            }
        }
    }
    w.into_report("Frobenius recurrence against the 1F1 evaluator")
}

fn asymptotic_crosscheck() -> Result<CheckReport> {
    let cfg = SeriesConfig::default();
    let mut w = Worst::new();
    for a in [Complex64::new(0.0, 0.5), Complex64::new(0.25, 1.0), Complex64::new(0.75, 0.125)] {
        for b in [0.5, 1.5] {
            for z in [Complex64::new(0.0, -45.0), Complex64::new(0.0, -80.0), Complex64::new(0.0, -150.0)] {
                let p = ChfParams::new(a, b)?;
                let series = chf_1f1(p, z, &cfg)?;
                let asym = chf_asymptotic(p, z)?;
                w.update(rel_err(asym.value, series), || format!("a={a}, b={b}, z={z}"));
            }
        }
    }
    w.into_report("continued series against the large-|z| expansion")
}

fn golden_solutions() -> Result<CheckReport> {
    let mut w = Worst::new();
    let rows = golden::solution_table()?;
    for r in &rows {
        let p = solution_params(r.m, r.omega)?;
        let s = solution_z(r.branch, r.sector, r.x, &p)?;
        w.update(rel_err(s.z, r.z()), || format!("{} {} m={} omega={} x={}", r.branch, r.sector, r.m, r.omega, r.x));
    }
    w.into_report(&format!("{} reference values", rows.len()))
}

/// Closed-form samples on the uniform grid x_min, x_min + h, ..., x_max.
pub fn closed_form_samples(branch: Branch, sector: Sector, m: f64, omega: f64, x_min: f64, x_max: f64, h: f64) -> Result<Vec<SolutionSample>> {
    let p = solution_params(m, omega)?;
    let n = ((x_max - x_min) / h).round() as usize + 1;
    (0..n)
        .into_par_iter()
        .map(|i| solution_z(branch, sector, x_min + i as f64 * h, &p))
        .collect()
}

/// Finite-difference residual of every (m, ω, branch, sector) on [0.1, 20] with h = 1e−3.
pub fn schrodinger_residuals() -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for (m, omega) in PARAM_SETS {
        for branch in BRANCHES {
            for sector in SECTORS {
                let samples = closed_form_samples(branch, sector, m, omega, 0.1, 20.0, 1e-3)?;
                let mut r = residual_schrodinger(&samples, PotentialSpec::new(m, sector)?, omega)?;
                r.name = format!("residual[{branch}, {sector}, m={m}, omega={omega}]");
                out.push(r);
            }
        }
    }
    Ok(out)
}

fn schrodinger_residual_all() -> Result<CheckReport> {
    let rs = schrodinger_residuals()?;
    let worst = rs.iter().fold(&rs[0], |acc, r| if !(r.max_error <= acc.max_error) { r } else { acc });
    report(worst.max_error, format!("{} cases; worst {}: {}", rs.len(), worst.name, worst.details))
}

fn solution_wronskian() -> Result<CheckReport> {
    let mut w = Worst::new();
    for (m, omega) in WRONSKIAN_SETS {
        let p = solution_params(m, omega)?;
        for sector in SECTORS {
            let want = wronskian_z(sector, m, omega)?;
            for x in log_grid(0.1, 20.0, 50) {
                let a = solution_z(Branch::I, sector, x, &p)?;
                let b = solution_z(Branch::II, sector, x, &p)?;
                let got = a.z * b.dz - b.z * a.dz;
                w.update(rel_err(got, want), || format!("{sector} m={m} omega={omega} x={x}"));
            }
        }
    }
    w.into_report("Z^I Z^II' - Z^II Z^I' at 50 points per case")
}

fn intertwining() -> Result<CheckReport> {
    let mut w = Worst::new();
    let i = Complex64::i();
    for (m, omega) in PARAM_SETS {
        let p = solution_params(m, omega)?;
        for branch in BRANCHES {
            for x in log_grid(0.1, 20.0, 50) {
                let wx = superpotential(x, m)?;
                let zp = solution_z(branch, Sector::Plus, x, &p)?;
                let zm = solution_z(branch, Sector::Minus, x, &p)?;
                let scale = omega * zp.z.norm().max(zm.z.norm()).max(1.0);
                let e1 = (zm.dz + wx * zm.z - i * omega * zp.z).norm() / scale;
                let e2 = (zp.dz - wx * zp.z - i * omega * zm.z).norm() / scale;
                w.update(e1.max(e2), || format!("{branch} m={m} omega={omega} x={x}"));
            }
        }
    }
    w.into_report("(d/dx + W) Z- = i omega Z+ and (d/dx - W) Z+ = i omega Z-")
}

fn rtilde_coupled_system() -> Result<CheckReport> {
    let mut w = Worst::new();
    let i = Complex64::i();
    for (m, omega) in PARAM_SETS {
        let p = solution_params(m, omega)?;
        for case in [RCase::A, RCase::B] {
            for x in log_grid(0.1, 20.0, 50) {
                let r = rtilde_pair(case, x, &p)?;
                let wx = superpotential(x, m)?;
                let scale = omega * r.r1.norm().max(r.r2.norm()).max(1.0);
                let e1 = (r.dr2 + i * omega * r.r2 + i * wx * r.r1).norm() / scale;
                let e2 = (r.dr1 - i * omega * r.r1 - i * wx * r.r2).norm() / scale;
                w.update(e1.max(e2), || format!("{case:?} m={m} omega={omega} x={x}"));
            }
        }
    }
    w.into_report("R2' + i omega R2 = -i W R1 and R1' - i omega R1 = i W R2")
}

fn decomposition() -> Result<CheckReport> {
    let mut w = Worst::new();
    let i = Complex64::i();
    for (m, omega) in PARAM_SETS {
        let p = solution_params(m, omega)?;
        for (branch, case) in [(Branch::I, RCase::A), (Branch::II, RCase::B)] {
            for sector in SECTORS {
                for x in log_grid(0.1, 20.0, 50) {
                    let r = rtilde_pair(case, x, &p)?;
                    let z = solution_z(branch, sector, x, &p)?.z;
                    let built = PHASE * (r.r1 + sector.sign() * i * r.r2);
                    let unit = f64::EPSILON * (r.r1.norm() + r.r2.norm());
                    w.update((built - z).norm() / unit, || format!("{branch} {sector} m={m} omega={omega} x={x}"));
                }
            }
        }
    }
    w.into_report("e^(-i pi/4)(R1 +/- i R2) against Z, in units of eps*(|R1|+|R2|)")
}

fn hermite_identity() -> Result<CheckReport> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
    let mut w = Worst::new();
    for _ in 0..100 {
        let m: f64 = rng.gen_range(0.05..5.0);
        let omega: f64 = rng.gen_range(0.05..5.0);
        let p = solution_params(m, omega)?;
        for j in [Component::One, Component::Two] {
            let lam = hermite_lambda(j, m, omega);
            let want = -4.0 * p.a(j);
            let ulps = ((lam.re - want.re).abs() / ulp(want.re)).max((lam.im - want.im).abs() / ulp(want.im));
            w.update(ulps, || format!("m={m}, omega={omega}, j={j:?}"));
        }
    }
    w.into_report("lambda_j against -4 a_j for 100 random (m, omega), in ulps")
}

fn shape_invariance() -> Result<CheckReport> {
    let mut w = Worst::new();
    for m in [0.5, 1.0, 2.0, 3.7] {
        for x in log_grid(1e-4, 1e4, 10_000) {
            let gap = shape_invariance_gap(x, m)?;
            let v = potential(x, PotentialSpec::new(m, Sector::Plus)?)?;
            w.update(gap.abs() / ulp(v), || format!("m={m}, x={x}"));
        }
    }
    w.into_report("V+(x,m) - V-(x,-m) on a 10^4-point log grid, in ulps")
}

fn factorization() -> Result<CheckReport> {
    let mut w = Worst::new();
    for m in [0.5, 1.0, 2.0, -1.5] {
        for sector in SECTORS {
            let spec = PotentialSpec::new(m, sector)?;
            for x in log_grid(1e-3, 1e3, 2000) {
                let d = (potential(x, spec)? - potential_factorized(x, spec)?).abs();
                w.update(d / ulp(term_scale(x, spec)), || format!("{sector} m={m} x={x}"));
            }
        }
    }
    w.into_report("m^2/x +/- (m/2)x^(-3/2) against W^2 +/- W', in ulps of the larger term")
}

/// Locates the sign change and the maximum of V₋ for m = 2 on a linear grid and returns
/// their distances from 1/(4m²) and 9/(16m²) in units of the grid step.
pub fn critical_point_offsets(x_min: f64, x_max: f64, points: usize) -> Result<(f64, f64)> {
    let m = 2.0;
    let spec = PotentialSpec::new(m, Sector::Minus)?;
    let crit = critical_structure(m)?;
    let h = (x_max - x_min) / (points - 1) as f64;
    let xs: Vec<f64> = (0..points).map(|i| x_min + i as f64 * h).collect();
    let vs: Vec<f64> = xs.iter().map(|&x| potential(x, spec)).collect::<Result<_>>()?;
    let cross = (0..points - 1)
        .find(|&i| vs[i] < 0.0 && vs[i + 1] >= 0.0)
        .ok_or_else(|| Error::NotConverged("no sign change of V- on the grid".into()))?;
    let zero_x = if vs[cross].abs() < vs[cross + 1].abs() { xs[cross] } else { xs[cross + 1] };
    let imax = (0..points).fold(0, |best, i| if vs[i] > vs[best] { i } else { best });
    Ok(((zero_x - crit.x0).abs() / h, (xs[imax] - crit.x1).abs() / h))
}

fn critical_points() -> Result<CheckReport> {
    let (dz, dm) = critical_point_offsets(0.01, 2.0, 500)?;
    report(dz.max(dm), format!("m=2, 500 points on [0.01, 2]: zero off by {dz:.3} steps, maximum by {dm:.3} steps"))
}

fn free_wave() -> Result<CheckReport> {
    let omega = 1.0;
    let x0 = 0.001;
    let cfg = IntegratorConfig { rel_tol: 1e-12, abs_tol: 1e-14, ..IntegratorConfig::default() };
    let xs = log_grid(x0, 20.0, 200);
    let (out, _) = integrate_linear(|_| -omega * omega, x0, 20.0, (Complex64::new(0.0, 0.0), Complex64::new(omega, 0.0)), &xs, &cfg)?;
    let mut w = Worst::new();
    for s in &out {
        w.update((s.z.re - (omega * (s.x - x0)).sin()).abs(), || format!("x={}", s.x));
    }
    w.into_report("Z'' = -omega^2 Z from (0, omega) against sin(omega (x - x0)), rel_tol 1e-12")
}

fn closed_form_endpoint() -> Result<CheckReport> {
    let cfg = IntegratorConfig::default();
    let mut w = Worst::new();
    for (m, omega) in PARAM_SETS {
        let p = solution_params(m, omega)?;
        for branch in BRANCHES {
            for sector in SECTORS {
                let problem = OdeProblem {
                    spec: PotentialSpec::new(m, sector)?,
                    omega,
                    x_start: 1.0,
                    x_end: 10.0,
                    init: solution_z(branch, sector, 1.0, &p)?,
                };
                let end = *integrate(&problem, &cfg)?.last().expect("endpoint");
                let want = solution_z(branch, sector, 10.0, &p)?;
                w.update(scaled_err(end.z, want.z), || format!("{branch} {sector} m={m} omega={omega}"));
            }
        }
    }
    w.into_report("integrated from the closed form at x=1, compared at x=10")
}

fn closed_form_range() -> Result<CheckReport> {
    let cfg = IntegratorConfig::default();
    let mut w = Worst::new();
    for (m, omega) in PARAM_SETS {
        let p = solution_params(m, omega)?;
        for branch in BRANCHES {
            for sector in SECTORS {
                let problem = OdeProblem {
                    spec: PotentialSpec::new(m, sector)?,
                    omega,
                    x_start: 0.1,
                    x_end: 20.0,
                    init: solution_z(branch, sector, 0.1, &p)?,
                };
                let xs = log_grid(0.1, 20.0, 60);
                for s in integrate_at(&problem, &cfg, &xs)? {
                    let want = solution_z(branch, sector, s.x, &p)?;
                    w.update(scaled_err(s.z, want.z), || format!("{branch} {sector} m={m} omega={omega} x={}", s.x));
                }
            }
        }
    }
    w.into_report("integrated from the closed form at x=0.1, compared on [0.1, 20]")
}

fn round_trip() -> Result<CheckReport> {
    let cfg = IntegratorConfig::default();
    let mut w = Worst::new();
    for (m, omega) in WRONSKIAN_SETS {
        let p = solution_params(m, omega)?;
        for sector in SECTORS {
            let spec = PotentialSpec::new(m, sector)?;
            let start = solution_z(Branch::I, sector, 1.0, &p)?;
            let fwd = OdeProblem { spec, omega, x_start: 1.0, x_end: 10.0, init: start };
            let mid = *integrate(&fwd, &cfg)?.last().expect("endpoint");
            let back = OdeProblem { spec, omega, x_start: 10.0, x_end: 1.0, init: mid };
            let end = *integrate(&back, &cfg)?.last().expect("endpoint");
            w.update(scaled_err(end.z, start.z), || format!("{sector} m={m} omega={omega}"));
        }
    }
    w.into_report("x = 1 -> 10 -> 1")
}

fn wronskian_transport() -> Result<CheckReport> {
    let cfg = IntegratorConfig::default();
    let mut w = Worst::new();
    for (m, omega) in WRONSKIAN_SETS {
        let p = solution_params(m, omega)?;
        for sector in SECTORS {
            let spec = PotentialSpec::new(m, sector)?;
            let want = wronskian_z(sector, m, omega)?;
            let xs = log_grid(1.0, 1e3, 40);
            let run = |branch| -> Result<Vec<SolutionSample>> {
                let problem = OdeProblem { spec, omega, x_start: 1.0, x_end: 1e3, init: solution_z(branch, sector, 1.0, &p)? };
                integrate_at(&problem, &cfg, &xs)
            };
            let a = run(Branch::I)?;
            let b = run(Branch::II)?;
            for (sa, sb) in a.iter().zip(&b) {
                let got = sa.z * sb.dz - sb.z * sa.dz;
                w.update(rel_err(got, want), || format!("{sector} m={m} omega={omega} x={}", sa.x));
            }
        }
    }
    w.into_report("Wronskian of the propagated pair on [1, 1000]")
}

fn phase_report(m: f64, omega: f64, cfg: &PhaseConfig) -> Result<CheckReport> {
    let r = phase_difference_study(m, omega, cfg)?;
    let x_last = r.x_sequence.last().copied().unwrap_or(f64::NAN);
    let err = if r.converged { r.residual_to_half_pi } else { f64::INFINITY };
    report(
        err,
        format!(
            "diff mod pi = {:.9} at x = {x_last}, |diff - pi/2| = {:.3e}, converged = {}",
            r.diff_mod_pi, r.residual_to_half_pi, r.converged
        ),
    )
}

fn phase_m1_w1() -> Result<CheckReport> {
    phase_report(1.0, 1.0, &PhaseConfig::default())
}

fn phase_m05_w2() -> Result<CheckReport> {
    phase_report(0.5, 2.0, &PhaseConfig::default())
}

fn imaginary_part_consistency() -> Result<CheckReport> {
    let mut w = Worst::new();
    for (m, omega) in [(1.0, 1.0), (0.5, 2.0)] {
        let re = phase_difference_study(m, omega, &PhaseConfig::default())?;
        let im = phase_difference_study(m, omega, &PhaseConfig { part: Part::Im, ..PhaseConfig::default() })?;
        w.update((re.diff_mod_pi - im.diff_mod_pi).abs(), || format!("m={m}, omega={omega}"));
    }
    w.into_report("phase difference from re(Z) against im(Z)")
}

fn synthetic_relation() -> Result<CheckReport> {
    let mut w = Worst::new();
    for (wv, omega) in [(0.0, 1.0), (0.7, 1.3), (-2.0, 0.4), (5.0, 3.0), (1e-3, 10.0)] {
        let diff = susy_phase_offset(wv, omega);
        let lhs = Complex64::from_polar(1.0, -2.0 * diff);
        let rhs = Complex64::new(wv, -omega) / Complex64::new(wv, omega);
        w.update((lhs - rhs).norm(), || format!("w={wv}, omega={omega}"));
    }
    let zero = (susy_phase_offset(0.0, 1.0) - FRAC_PI_2).abs();
    w.update(zero, || "w=0".into());
    w.into_report("e^(2i(delta- - delta+)) against (w - i omega)/(w + i omega)")
}

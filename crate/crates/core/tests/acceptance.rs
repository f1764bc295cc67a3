//! End-to-end acceptance run. Each criterion prints one PASS/FAIL line with the measured
//! error next to its threshold; the test fails if any criterion fails.

use std::time::{Duration, Instant};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use susy_ces::closedform::{hermite_lambda, solution_params, solution_z, wronskian_z, Branch, Component, SolutionSample};
use susy_ces::oracle::{
    frobenius_series_solution, integrate, residual_schrodinger, FrobeniusExponent, IntegratorConfig, OdeProblem,
};
use susy_ces::potential::{potential, shape_invariance_gap, superpotential, ulp, PotentialSpec, Sector};
use susy_ces::scattering::{phase_difference, PhaseConfig};
use susy_ces::specfun::{chf_1f1, chf_1f1_deriv, chf_1f1_with_deriv, kummer_transform, ChfParams, SeriesConfig};
use susy_ces::table::{build_table, figure_requests, write_figures, Spacing, TableKind, TableRequest};

const PARAMS: [(f64, f64); 3] = [(1.0, 1.0), (2.0, 0.5), (0.5, 2.0)];
const BRANCHES: [Branch; 2] = [Branch::I, Branch::II];
const SECTORS: [Sector; 2] = [Sector::Plus, Sector::Minus];

struct Outcome {
    passed: bool,
    summary: String,
}

fn judged(err: f64, tol: f64, what: &str) -> Outcome {
    Outcome { passed: err <= tol, summary: format!("{what}: max error {err:.3e} (threshold {tol:.0e})") }
}

fn log_grid(a: f64, b: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| (a.ln() + (b.ln() - a.ln()) * i as f64 / (n - 1) as f64).exp()).collect()
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for (m, omega) in PARAMS {
        let p = solution_params(m, omega).unwrap();
        for branch in BRANCHES {
            for sector in SECTORS {
                let samples: Vec<SolutionSample> = (0..=19_900)
                    .into_par_iter()
                    .map(|i| solution_z(branch, sector, 0.1 + i as f64 * 1e-3, &p).unwrap())
                    .collect();
                let r = residual_schrodinger(&samples, PotentialSpec::new(m, sector).unwrap(), omega).unwrap();
                worst = worst.max(r.max_error);
            }
        }
    }
    let elapsed = start.elapsed();
    let mut o = judged(worst, 1e-6, "FD Schroedinger residual, 12 cases on [0.1, 20], h = 1e-3");
    o.passed &= elapsed < Duration::from_secs(30);
    o.summary += &format!(", {:.1} s", elapsed.as_secs_f64());
    o
}

fn criterion_2() -> Outcome {
    let mut worst = 0.0f64;
    for (m, omega) in [(1.0, 1.0), (0.5, 2.0), (1.5, 1.5)] {
        let p = solution_params(m, omega).unwrap();
        for sector in SECTORS {
            let want = wronskian_z(sector, m, omega).unwrap();
            for x in log_grid(0.1, 20.0, 50) {
                let a = solution_z(Branch::I, sector, x, &p).unwrap();
                let b = solution_z(Branch::II, sector, x, &p).unwrap();
                worst = worst.max(rel(a.z * b.dz - b.z * a.dz, want));
            }
        }
    }
    judged(worst, 1e-8, "W[Z^I, Z^II] at 50 points, (m, omega) in {(1,1), (1/2,2), (3/2,3/2)}")
}

fn criterion_3() -> Outcome {
    let mut worst = 0.0f64;
    let i = Complex64::i();
    for (m, omega) in PARAMS {
        let p = solution_params(m, omega).unwrap();
        for branch in BRANCHES {
            for x in log_grid(0.1, 20.0, 200) {
                let w = superpotential(x, m).unwrap();
                let zp = solution_z(branch, Sector::Plus, x, &p).unwrap();
                let zm = solution_z(branch, Sector::Minus, x, &p).unwrap();
                let scale = omega * zp.z.norm().max(zm.z.norm()).max(1.0);
                worst = worst.max((zm.dz + w * zm.z - i * omega * zp.z).norm() / scale);
                worst = worst.max((zp.dz - w * zp.z - i * omega * zm.z).norm() / scale);
            }
        }
    }
    judged(worst, 1e-8, "(d/dx +/- W) Z-/+ = i omega Z+/- with analytic derivatives")
}

fn criterion_4() -> Outcome {
    let mut worst = 0.0f64;
    for m in [0.3, 1.0, 2.0, 7.5] {
        for x in log_grid(1e-4, 1e4, 10_000) {
            let gap = shape_invariance_gap(x, m).unwrap();
            let v = potential(x, PotentialSpec::new(m, Sector::Plus).unwrap()).unwrap();
            worst = worst.max(gap.abs() / ulp(v));
        }
    }
    judged(worst, 1.0, "|V+(x,m) - V-(x,-m)| in ulps, 10^4-point log grid")
}

fn criterion_5() -> Outcome {
    let req = TableRequest {
        kind: TableKind::Potential,
        m: 2.0,
        sector: Sector::Minus,
        omega: 1.0,
        branch: Branch::I,
        x_min: 0.01,
        x_max: 2.0,
        points: 500,
        spacing: Spacing::Linear,
    };
    let t = build_table(&req).unwrap();
    let h = (req.x_max - req.x_min) / (req.points - 1) as f64;
    let xs: Vec<f64> = t.rows.iter().map(|r| r[0]).collect();
    let vs: Vec<f64> = t.rows.iter().map(|r| r[1]).collect();
    let cross = (0..vs.len() - 1).find(|&i| vs[i] < 0.0 && vs[i + 1] >= 0.0).unwrap();
    let zero = if vs[cross].abs() < vs[cross + 1].abs() { xs[cross] } else { xs[cross + 1] };
    let imax = (0..vs.len()).fold(0, |b, i| if vs[i] > vs[b] { i } else { b });
    let dz = (zero - 1.0 / 16.0).abs() / h;
    let dm = (xs[imax] - 9.0 / 64.0).abs() / h;
    let mut o = judged(dz.max(dm), 1.0, "m = 2 V- table, distance from 1/16 and 9/64 in grid steps");
    o.summary += &format!(" (zero {dz:.2}, maximum {dm:.2})");
    o
}

fn criterion_6() -> Outcome {
    let cfg = IntegratorConfig::default();
    let mut worst = 0.0f64;
    for (m, omega) in PARAMS {
        let p = solution_params(m, omega).unwrap();
        for branch in BRANCHES {
            for sector in SECTORS {
                let problem = OdeProblem {
                    spec: PotentialSpec::new(m, sector).unwrap(),
                    omega,
                    x_start: 1.0,
                    x_end: 10.0,
                    init: solution_z(branch, sector, 1.0, &p).unwrap(),
                };
                let end = *integrate(&problem, &cfg).unwrap().last().unwrap();
                let want = solution_z(branch, sector, 10.0, &p).unwrap();
                worst = worst.max((end.z - want.z).norm() / want.z.norm());
            }
        }
    }
    judged(worst, 1e-7, "ODE from closed form at x = 1 against closed form at x = 10, relative")
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let mut worst = 0.0f64;
    let mut notes = Vec::new();
    for (m, omega) in [(1.0, 1.0), (0.5, 2.0)] {
        match phase_difference(m, omega, &PhaseConfig::default()) {
            Ok(r) => {
                worst = worst.max(r.residual_to_half_pi);
                notes.push(format!("({m},{omega}): {:.6} at x = {}", r.diff_mod_pi, r.x_sequence.last().unwrap()));
            }
            Err(e) => {
                worst = f64::INFINITY;
                notes.push(format!("({m},{omega}): {e}"));
            }
        }
    }
    let elapsed = start.elapsed();
    let mut o = judged(worst, 1e-3, "|(delta+ - delta-) mod pi - pi/2| by x = 1e4");
    o.passed &= elapsed < Duration::from_secs(60);
    o.summary += &format!(" [{}], {:.1} s", notes.join("; "), elapsed.as_secs_f64());
    o
}

fn criterion_8() -> Outcome {
    let cfg = SeriesConfig::default();
    let direct = SeriesConfig::default().without_kummer();
    let a_vals = [Complex64::new(0.0, 0.5), Complex64::new(1.0, 1.0), Complex64::new(0.25, 0.5), Complex64::new(0.0, 1.0)];
    let z_vals = [Complex64::new(0.0, -2.0), Complex64::new(0.0, -10.0), Complex64::new(3.0, -5.0), Complex64::new(-4.0, 7.0)];
    let (mut kummer, mut wr, mut deriv, mut frob) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for a in a_vals {
        for z in z_vals {
            for b in [0.5, 1.5, 2.5] {
                let p = ChfParams::new(a, b).unwrap();
                let f = chf_1f1(p, z, &direct).unwrap();
                kummer = kummer.max(rel(kummer_transform(p, z, &direct).unwrap(), f));
                let (_, df) = chf_1f1_with_deriv(p, z, &cfg).unwrap();
                deriv = deriv.max(rel(df, chf_1f1_deriv(p, z, &cfg).unwrap()));
            }
            let b = 0.5;
            let (f1, df1) = chf_1f1_with_deriv(ChfParams::new(a, b).unwrap(), z, &cfg).unwrap();
            let (g, dg) = chf_1f1_with_deriv(ChfParams::new(a + 0.5, 1.5).unwrap(), z, &cfg).unwrap();
            let sz = z.sqrt();
            let (f2, df2) = (sz * g, g / (2.0 * sz) + sz * dg);
            let want = 0.5 / sz * z.exp();
            wr = wr.max(rel(f1 * df2 - f2 * df1, want));
        }
    }
    for (m, omega) in PARAMS {
        let p = solution_params(m, omega).unwrap();
        for j in [Component::One, Component::Two] {
            for (e, b) in [(FrobeniusExponent::Zero, 0.5), (FrobeniusExponent::Half, 1.5)] {
                let s = frobenius_series_solution(j, e, m, omega, 20.0).unwrap();
                for y in [Complex64::new(0.0, -1.0), Complex64::new(0.0, -7.0), Complex64::new(0.0, -20.0)] {
                    let a = if b == 0.5 { p.a(j) } else { p.a(j) + 0.5 };
                    let mut want = chf_1f1(ChfParams::new(a, b).unwrap(), y, &cfg).unwrap();
                    if b == 1.5 {
                        want *= y.sqrt();
                    }
                    frob = frob.max(rel(s.eval(y).unwrap(), want));
                }
            }
        }
    }
    let passed = kummer <= 1e-10 && wr <= 1e-9 && deriv <= 1e-12 && frob <= 1e-12;
    Outcome {
        passed,
        summary: format!(
            "Kummer {kummer:.2e} (1e-10), CHG Wronskian {wr:.2e} (1e-9), derivative {deriv:.2e} (1e-12), Frobenius {frob:.2e} (1e-12)"
        ),
    }
}

fn criterion_9() -> Outcome {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(20240601);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let m: f64 = rng.gen_range(0.01..10.0);
        let omega: f64 = rng.gen_range(0.01..10.0);
        let p = solution_params(m, omega).unwrap();
        for j in [Component::One, Component::Two] {
            let lam = hermite_lambda(j, m, omega);
            let want = -4.0 * p.a(j);
            let re = if want.re == 0.0 { lam.re.abs() / ulp(1.0) } else { (lam.re - want.re).abs() / ulp(want.re) };
            worst = worst.max(re).max((lam.im - want.im).abs() / ulp(want.im));
        }
    }
    judged(worst, 2.0, "lambda_j against -4 a_j in ulps, 100 random (m, omega)")
}

fn criterion_10() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    write_figures(dir.path()).unwrap();
    let read = |name: &str| -> Vec<(f64, f64)> {
        let mut rdr = csv::Reader::from_path(dir.path().join(name)).unwrap();
        rdr.records().map(|r| {
            let r = r.unwrap();
            (r[0].parse().unwrap(), r[1].parse().unwrap())
        }).collect()
    };
    let w_pos = read("fig1_w_m+1.csv");
    let w_neg = read("fig1_w_m-1.csv");
    let vp = read("fig2_vplus_m2.csv");
    let vm = read("fig2_vminus_m2.csv");
    let h = vm[1].0 - vm[0].0;
    let mut failures = Vec::new();
    if !w_pos.iter().all(|&(_, w)| w < 0.0) || !w_pos.windows(2).all(|p| p[1].1 > p[0].1) {
        failures.push("W(m=1) not negative and increasing");
    }
    if !w_neg.iter().zip(&w_pos).all(|(a, b)| a.0 == b.0 && a.1 == -b.1) {
        failures.push("W(m=-1) != -W(m=1)");
    }
    if !vp.iter().all(|&(_, v)| v > 0.0) || !vp.windows(2).all(|p| p[1].1 < p[0].1) {
        failures.push("V+ not positive and strictly decreasing");
    }
    let imax = (0..vm.len()).fold(0, |b, i| if vm[i].1 > vm[b].1 { i } else { b });
    if (vm[imax].0 - 9.0 / 64.0).abs() > h {
        failures.push("V- maximum not within one step of 9/64");
    }
    let cross = (0..vm.len() - 1).find(|&i| vm[i].1 < 0.0 && vm[i + 1].1 >= 0.0);
    if !cross.is_some_and(|i| (vm[i].0 - 1.0 / 16.0).abs() <= h && (vm[i + 1].0 - 1.0 / 16.0).abs() <= h) {
        failures.push("V- sign change not bracketing 1/16");
    }
    if !vm[imax..].windows(2).all(|p| p[1].1 < p[0].1) || !vm[..=imax].windows(2).all(|p| p[1].1 > p[0].1) {
        failures.push("V- not unimodal");
    }
    Outcome {
        passed: failures.is_empty() && figure_requests().len() == 4,
        summary: if failures.is_empty() {
            format!("4 files, {} rows each: W sign/monotonicity/oddness, V+ decreasing, V- zero and maximum", vm.len())
        } else {
            failures.join("; ")
        },
    }
}

type Criterion = (&'static str, fn() -> Outcome);

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 10] = [
        ("closed-form residual", criterion_1),
        ("Wronskian", criterion_2),
        ("intertwining", criterion_3),
        ("shape invariance", criterion_4),
        ("critical structure", criterion_5),
        ("oracle agreement", criterion_6),
        ("phase-shift relation", criterion_7),
        ("special-function battery", criterion_8),
        ("Hermite identity", criterion_9),
        ("figure reproduction", criterion_10),
    ];
    let mut failed = Vec::new();
    for (k, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        println!("criterion {:>2} {:<26} {} | {}", k + 1, name, if o.passed { "PASS" } else { "FAIL" }, o.summary);
        if !o.passed {
            failed.push(k + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

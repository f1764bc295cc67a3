//! Dormand–Prince 5(4) with PI step control and the pair's fourth-order continuous
//! extension, specialised to Z″ = q(x) Z with complex Z (four real components).

use num_complex::Complex64;

use crate::closedform::SolutionSample;
use crate::error::{Error, Result};

use super::IntegratorConfig;

const C2: f64 = 1.0 / 5.0;
const C3: f64 = 3.0 / 10.0;
const C4: f64 = 4.0 / 5.0;
const C5: f64 = 8.0 / 9.0;

const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const A71: f64 = 35.0 / 384.0;
const A73: f64 = 500.0 / 1113.0;
const A74: f64 = 125.0 / 192.0;
const A75: f64 = -2187.0 / 6784.0;
const A76: f64 = 11.0 / 84.0;

const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;

const D1: f64 = -12715105075.0 / 11282082432.0;
const D3: f64 = 87487479700.0 / 32700410799.0;
const D4: f64 = -10690763975.0 / 1880347072.0;
const D5: f64 = 701980252875.0 / 199316789632.0;
const D6: f64 = -1453857185.0 / 822651844.0;
const D7: f64 = 69997945.0 / 29380423.0;

const SAFETY: f64 = 0.9;
const BETA: f64 = 0.04;
const FAC_MIN: f64 = 0.2;
const FAC_MAX: f64 = 10.0;

type State = [f64; 4];

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct IntegrationStats {
    pub accepted: usize,
    pub rejected: usize,
    pub evaluations: usize,
}

fn to_state(z: Complex64, dz: Complex64) -> State {
    [z.re, z.im, dz.re, dz.im]
}

fn to_sample(x: f64, s: &State) -> SolutionSample {
    SolutionSample { x, z: Complex64::new(s[0], s[1]), dz: Complex64::new(s[2], s[3]) }
}

#[inline]
fn rhs<Q: Fn(f64) -> f64>(q: &Q, x: f64, s: &State) -> State {
    let qx = q(x);
    [s[2], s[3], qx * s[0], qx * s[1]]
}

#[inline]
fn combine(y: &State, h: f64, terms: &[(f64, &State)]) -> State {
    let mut out = *y;
    for (c, k) in terms {
        for i in 0..4 {
            out[i] += h * c * k[i];
        }
    }
    out
}

fn error_norm(err: &State, y0: &State, y1: &State, cfg: &IntegratorConfig) -> f64 {
    let mut acc = 0.0;
    for i in 0..4 {
        let sc = cfg.abs_tol + cfg.rel_tol * y0[i].abs().max(y1[i].abs());
        acc += (err[i] / sc).powi(2);
    }
    (acc / 4.0).sqrt()
}

fn initial_step<Q: Fn(f64) -> f64>(q: &Q, x0: f64, y0: &State, f0: &State, dir: f64, span: f64, cfg: &IntegratorConfig) -> f64 {
    let norm = |v: &State| {
        let mut acc = 0.0;
        for i in 0..4 {
            let sc = cfg.abs_tol + cfg.rel_tol * y0[i].abs();
            acc += (v[i] / sc).powi(2);
        }
        (acc / 4.0).sqrt()
    };
    let d0 = norm(y0);
    let d1 = norm(f0);
    let h0 = if d0 < 1e-10 || d1 < 1e-10 { 1e-6 } else { 0.01 * d0 / d1 };
    let h0 = h0.min(span);
    let y1 = combine(y0, dir * h0, &[(1.0, f0)]);
    let f1 = rhs(q, x0 + dir * h0, &y1);
    let mut diff = [0.0; 4];
    for i in 0..4 {
        diff[i] = f1[i] - f0[i];
    }
    let d2 = norm(&diff) / h0;
    let h1 = if d1.max(d2) <= 1e-15 { (h0 * 1e-3).max(1e-6) } else { (0.01 / d1.max(d2)).powf(0.2) };
    (100.0 * h0).min(h1).min(span)
}

/// Integrates Z″ = q(x) Z from `x_start` to `x_end` and returns the solution at each of
/// `outputs`, which must lie in the closed interval and be ordered in the direction of
/// integration. An output equal to `x_end` is the final step value itself, so the
/// returned endpoint does not depend on which other outputs were requested.
pub fn integrate_linear<Q: Fn(f64) -> f64>(
    q: Q,
    x_start: f64,
    x_end: f64,
    init: (Complex64, Complex64),
    outputs: &[f64],
    cfg: &IntegratorConfig,
) -> Result<(Vec<SolutionSample>, IntegrationStats)> {
    cfg.validate()?;
    if !(x_start.is_finite() && x_end.is_finite()) || x_start == x_end {
        return Err(Error::InvalidParams(format!("bad interval [{x_start}, {x_end}]")));
    }
    let dir = (x_end - x_start).signum();
    let lo = x_start.min(x_end);
    let hi = x_start.max(x_end);
    for w in outputs.windows(2) {
        if (w[1] - w[0]) * dir < 0.0 {
            return Err(Error::InvalidParams("output points must follow the integration direction".into()));
        }
    }
    if outputs.iter().any(|&x| !(x >= lo && x <= hi)) {
        return Err(Error::InvalidParams("output points must lie inside the integration interval".into()));
    }

    let mut stats = IntegrationStats::default();
    let mut out = Vec::with_capacity(outputs.len());
    let mut next_out = 0;

    let mut x = x_start;
    let mut y = to_state(init.0, init.1);
    if y.iter().any(|v| !v.is_finite()) {
        return Err(Error::InvalidParams("initial data must be finite".into()));
    }
    while next_out < outputs.len() && outputs[next_out] == x_start {
        out.push(to_sample(x_start, &y));
        next_out += 1;
    }

    let mut k1 = rhs(&q, x, &y);
    stats.evaluations += 1;
    let span = (x_end - x_start).abs();
    let mut h = initial_step(&q, x, &y, &k1, dir, span, cfg);
    stats.evaluations += 1;
    let mut fac_old: f64 = 1e-4;
    let mut last_rejected = false;

    loop {
        if stats.accepted + stats.rejected >= cfg.max_steps {
            return Err(Error::MaxStepsExceeded(cfg.max_steps));
        }
        if h < 16.0 * f64::EPSILON * x.abs().max(1e-300) {
            return Err(Error::StepSizeUnderflow { x });
        }
        let remaining = (x_end - x).abs();
        let last = h >= remaining;
        if last {
            h = remaining;
        }
        let hs = dir * h;

        let k2 = rhs(&q, x + C2 * hs, &combine(&y, hs, &[(A21, &k1)]));
        let k3 = rhs(&q, x + C3 * hs, &combine(&y, hs, &[(A31, &k1), (A32, &k2)]));
        let k4 = rhs(&q, x + C4 * hs, &combine(&y, hs, &[(A41, &k1), (A42, &k2), (A43, &k3)]));
        let k5 = rhs(&q, x + C5 * hs, &combine(&y, hs, &[(A51, &k1), (A52, &k2), (A53, &k3), (A54, &k4)]));
        let x_new = if last { x_end } else { x + hs };
        let k6 = rhs(&q, x + hs, &combine(&y, hs, &[(A61, &k1), (A62, &k2), (A63, &k3), (A64, &k4), (A65, &k5)]));
        let y_new = combine(&y, hs, &[(A71, &k1), (A73, &k3), (A74, &k4), (A75, &k5), (A76, &k6)]);
        let k7 = rhs(&q, x_new, &y_new);
        stats.evaluations += 6;

        let mut err = [0.0; 4];
        for i in 0..4 {
            err[i] = hs * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] + E6 * k6[i] + E7 * k7[i]);
        }
        let en = error_norm(&err, &y, &y_new, cfg);
        if !en.is_finite() {
            return Err(Error::StepSizeUnderflow { x });
        }

        let fac11 = en.powf(0.2 - BETA * 0.75);
        if en <= 1.0 {
            stats.accepted += 1;
            if next_out < outputs.len() && (outputs[next_out] - x_new) * dir <= 0.0 {
                let mut rc = [[0.0; 4]; 5];
                for i in 0..4 {
                    let dy = y_new[i] - y[i];
                    let bspl = hs * k1[i] - dy;
                    rc[0][i] = y[i];
                    rc[1][i] = dy;
                    rc[2][i] = bspl;
                    rc[3][i] = dy - hs * k7[i] - bspl;
                    rc[4][i] = hs * (D1 * k1[i] + D3 * k3[i] + D4 * k4[i] + D5 * k5[i] + D6 * k6[i] + D7 * k7[i]);
                }
                while next_out < outputs.len() && (outputs[next_out] - x_new) * dir <= 0.0 {
                    let xo = outputs[next_out];
                    if xo == x_new {
                        out.push(to_sample(xo, &y_new));
                    } else {
                        let theta = (xo - x) / hs;
                        let theta1 = 1.0 - theta;
                        let mut s = [0.0; 4];
                        for i in 0..4 {
                            s[i] = rc[0][i] + theta * (rc[1][i] + theta1 * (rc[2][i] + theta * (rc[3][i] + theta1 * rc[4][i])));
                        }
                        out.push(to_sample(xo, &s));
                    }
                    next_out += 1;
                }
            }
            x = x_new;
            y = y_new;
            k1 = k7;
            if last {
                break;
            }
            let mut fac = fac11 / fac_old.powf(BETA);
            fac = (fac / SAFETY).clamp(1.0 / FAC_MAX, 1.0 / FAC_MIN);
            let mut h_new = h / fac;
            if last_rejected {
                h_new = h_new.min(h);
            }
            fac_old = en.max(1e-4);
            last_rejected = false;
            h = h_new;
        } else {
            stats.rejected += 1;
            last_rejected = true;
            h /= (fac11 / SAFETY).min(1.0 / FAC_MIN);
        }
    }
    Ok((out, stats))
}

use num_complex::Complex64;

use super::{ChfParams, SeriesConfig};
use crate::dd::{CDd, Dd};
use crate::error::{Error, Result};

/// ₁F₁(a, b; z), applying Kummer's transformation when `re(z)` is below the
/// configured threshold.
pub fn chf_1f1(p: ChfParams, z: Complex64, cfg: &SeriesConfig) -> Result<Complex64> {
    check_inputs(&p, z, cfg)?;
    if z.re < cfg.kummer_threshold {
        let q = ChfParams { a: Complex64::new(p.b, 0.0) - p.a, b: p.b };
        let (f, _) = evaluate(q, -z, cfg, false)?;
        return finite(z.exp() * f.to_c64());
    }
    let (f, _) = evaluate(p, z, cfg, false)?;
    finite(f.to_c64())
}

/// d/dz ₁F₁(a, b; z) = (a/b) ₁F₁(a+1, b+1; z).
pub fn chf_1f1_deriv(p: ChfParams, z: Complex64, cfg: &SeriesConfig) -> Result<Complex64> {
    check_inputs(&p, z, cfg)?;
    if p.a == Complex64::new(0.0, 0.0) {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let shifted = ChfParams { a: p.a + 1.0, b: p.b + 1.0 };
    Ok(p.a / p.b * chf_1f1(shifted, z, cfg)?)
}

/// Value and derivative together, sharing one summation.
pub fn chf_1f1_with_deriv(p: ChfParams, z: Complex64, cfg: &SeriesConfig) -> Result<(Complex64, Complex64)> {
    check_inputs(&p, z, cfg)?;
    if z.re < cfg.kummer_threshold {
        // F(z) = e^z G(-z) with G = F(b-a, b; .), so F'(z) = e^z (G(-z) - G'(-z))
        let q = ChfParams { a: Complex64::new(p.b, 0.0) - p.a, b: p.b };
        let (g, dg) = evaluate(q, -z, cfg, true)?;
        let e = z.exp();
        return Ok((finite(e * g.to_c64())?, finite(e * (g - dg).to_c64())?));
    }
    let (f, df) = evaluate(p, z, cfg, true)?;
    Ok((finite(f.to_c64())?, finite(df.to_c64())?))
}

/// e^z ₁F₁(b−a, b; −z), evaluated without any further transformation.
pub fn kummer_transform(p: ChfParams, z: Complex64, cfg: &SeriesConfig) -> Result<Complex64> {
    check_inputs(&p, z, cfg)?;
    let q = ChfParams { a: Complex64::new(p.b, 0.0) - p.a, b: p.b };
    let (f, _) = evaluate(q, -z, cfg, false)?;
    finite(z.exp() * f.to_c64())
}

fn check_inputs(p: &ChfParams, z: Complex64, cfg: &SeriesConfig) -> Result<()> {
    p.validate()?;
    cfg.validate()?;
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::Domain(format!("non-finite argument z = {z}")));
    }
    let r = z.norm();
    if r > cfg.max_abs_z {
        return Err(Error::SeriesRangeExceeded { max: cfg.max_abs_z, got: r });
    }
    Ok(())
}

fn finite(v: Complex64) -> Result<Complex64> {
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::Domain(format!("result overflowed: {v}")))
    }
}

/// Untransformed evaluation: direct series inside `direct_radius`, ray continuation
/// outside. Returns `(F, F')`; the derivative is only meaningful when requested.
fn evaluate(p: ChfParams, z: Complex64, cfg: &SeriesConfig, want_deriv: bool) -> Result<(CDd, CDd)> {
    let r = z.norm();
    if r <= cfg.direct_radius {
        let (s0, s1) = maclaurin(p, CDd::from_c64(z), cfg, want_deriv)?;
        let deriv = if want_deriv && r > 0.0 {
            s1 / CDd::from_c64(z)
        } else if want_deriv {
            // F'(0) = a/b
            CDd::from_c64(p.a).div_real(Dd::from_f64(p.b))
        } else {
            CDd::ZERO
        };
        return Ok((s0, deriv));
    }
    continue_along_ray(p, z, cfg)
}

/// Σ t_k and Σ k t_k with t_{k+1} = t_k (a+k) z / ((b+k)(k+1)).
fn maclaurin(p: ChfParams, z: CDd, cfg: &SeriesConfig, want_deriv: bool) -> Result<(CDd, CDd)> {
    let a = CDd::from_c64(p.a);
    let b = Dd::from_f64(p.b);
    let mut term = CDd::ONE;
    let mut sum = CDd::ONE;
    let mut dsum = CDd::ZERO;
    let mut small_run = 0;
    for k in 0..cfg.max_terms {
        let kf = k as f64;
        let num = (a + CDd::from_real(Dd::from_f64(kf))) * z;
        let den = (b.add_f64(kf)).mul_f64(kf + 1.0);
        term = (term * num).div_real(den);
        sum = sum + term;
        let weighted = term.scale_f64(kf + 1.0);
        if want_deriv {
            dsum = dsum + weighted;
        }
        if term.re.hi == 0.0 && term.im.hi == 0.0 {
            return Ok((sum, dsum));
        }
        let tn = term.norm_f64();
        let mut small = tn < cfg.rel_tol * sum.norm_f64();
        if want_deriv {
            small &= weighted.norm_f64() < cfg.rel_tol * dsum.norm_f64();
        }
        if small {
            small_run += 1;
            if small_run >= 2 {
                return Ok((sum, dsum));
            }
        } else {
            small_run = 0;
        }
        if !sum.is_finite() {
            return Err(Error::Domain("series overflowed".into()));
        }
    }
    Err(Error::NonConvergence { terms: cfg.max_terms })
}

/// Carries (F, F') from `direct_radius` out to `z` along the ray through `z`. Nodes sit
/// at radii `direct_radius * 1.5^k`, independent of `|z|`, so the step to `z` never
/// exceeds half the distance from the current node to the singular point z = 0.
fn continue_along_ray(p: ChfParams, z: Complex64, cfg: &SeriesConfig) -> Result<(CDd, CDd)> {
    let r = z.norm();
    let dir = z / r;
    let mut rho = cfg.direct_radius;
    let start = dir * rho;
    let (f0, s1) = maclaurin(p, CDd::from_c64(start), cfg, true)?;
    let mut node = CDd::from_c64(start);
    let mut f = f0;
    let mut df = s1 / node;
    loop {
        let next = rho * 1.5;
        let (target, done) = if next >= r { (CDd::from_c64(z), true) } else { (CDd::from_c64(dir * next), false) };
        let (nf, ndf) = taylor_step(p, node, target - node, f, df, cfg)?;
        f = nf;
        df = ndf;
        if done {
            return Ok((f, df));
        }
        node = target;
        rho = next;
    }
}

/// Taylor step of z F'' + (b − z) F' − a F = 0 from `z0` by `t`. With scaled
/// coefficients d_n = c_n t^n:
/// d_{n+2} = [(n+1)(z0 − b − n) d_{n+1} t + (n + a) d_n t²] / (z0 (n+2)(n+1)).
fn taylor_step(p: ChfParams, z0: CDd, t: CDd, f0: CDd, df0: CDd, cfg: &SeriesConfig) -> Result<(CDd, CDd)> {
    let a = CDd::from_c64(p.a);
    let b = Dd::from_f64(p.b);
    let t2 = t * t;
    let mut d_prev = f0;
    let mut d_cur = df0 * t;
    let mut sum = d_prev + d_cur;
    let mut dsum = d_cur;
    let mut small_run = 0;
    for n in 0..cfg.max_terms {
        let nf = n as f64;
        let c1 = CDd::new(z0.re - b.add_f64(nf), z0.im).scale_f64(nf + 1.0);
        let c0 = a + CDd::from_real(Dd::from_f64(nf));
        let den = z0.scale_f64((nf + 2.0) * (nf + 1.0));
        let d_next = (c1 * d_cur * t + c0 * d_prev * t2) / den;
        sum = sum + d_next;
        let weighted = d_next.scale_f64(nf + 2.0);
        dsum = dsum + weighted;
        let tol = cfg.rel_tol * sum.norm_f64();
        if d_next.norm_f64() < tol && weighted.norm_f64() < cfg.rel_tol * dsum.norm_f64() {
            small_run += 1;
            if small_run >= 2 {
                return Ok((sum, dsum / t));
            }
        } else {
            small_run = 0;
        }
        if !sum.is_finite() {
            return Err(Error::Domain("continuation overflowed".into()));
        }
        d_prev = d_cur;
        d_cur = d_next;
    }
    Err(Error::NonConvergence { terms: cfg.max_terms })
}

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

// Lanczos approximation, g = 7, n = 9.
const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;
const LN_PI: f64 = 1.144_729_885_849_400_2;

pub fn is_nonpositive_integer(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()
}

/// Principal branch of log Γ(z): analytic on C \ (−∞, 0], real on the positive axis,
/// with values on the negative axis taken as the limit from above.
pub fn log_gamma(z: Complex64) -> Result<Complex64> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::Domain(format!("non-finite argument {z}")));
    }
    if is_nonpositive_integer(z) {
        return Err(Error::PoleAtNonPositiveInteger(z.re));
    }
    if z.re >= 0.5 {
        return Ok(lanczos(z));
    }
    // Reflection fixes the value modulo 2πi; the branch is then pinned by the
    // recurrence log Γ(z) = log Γ(z+n) − Σ log(z+k), which holds on the principal branch.
    let reflected = Complex64::new(LN_PI, 0.0) - log_sin_pi(z) - lanczos(Complex64::new(1.0, 0.0) - z);
    let n = (0.5 - z.re).ceil() as usize;
    let mut im_est = lanczos(z + n as f64).im;
    for k in 0..n {
        im_est -= (z + k as f64).arg();
    }
    let turns = ((im_est - reflected.im) / (2.0 * PI)).round();
    Ok(Complex64::new(reflected.re, reflected.im + 2.0 * PI * turns))
}

fn lanczos(z: Complex64) -> Complex64 {
    let zm1 = z - 1.0;
    let mut acc = Complex64::new(LANCZOS_COEF[0], 0.0);
    for (i, &c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        acc += c / (zm1 + i as f64);
    }
    let t = zm1 + LANCZOS_G + 0.5;
    LN_SQRT_2PI + (zm1 + 0.5) * t.ln() - t + acc.ln()
}

/// log sin(πz), modulo 2πi, without overflow for large |im z|.
fn log_sin_pi(z: Complex64) -> Complex64 {
    let i = Complex64::new(0.0, 1.0);
    if z.im.abs() < 20.0 {
        return (z * PI).sin().ln();
    }
    // sin(πz) = e^{∓iπz} (1 − e^{±2iπz}) / (∓2i) for ±im z > 0
    if z.im > 0.0 {
        -i * PI * z - Complex64::new(0.0, -2.0).ln() + (Complex64::new(1.0, 0.0) - (2.0 * i * PI * z).exp()).ln()
    } else {
        i * PI * z - Complex64::new(0.0, 2.0).ln() + (Complex64::new(1.0, 0.0) - (-2.0 * i * PI * z).exp()).ln()
    }
}

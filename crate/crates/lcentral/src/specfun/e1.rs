//! Exponential integral E1(z) on the principal branch (cut along the
//! negative real axis).

use crate::error::{Error, Result};
use num_complex::Complex64;

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// E1(z) = int_z^infinity e^{-w}/w dw, principal branch.
///
/// Power series for |z| <= 3, modified-Lentz continued fraction otherwise.
/// Accurate to ~1e-13 relative for |z| in [1e-8, 700] away from the cut;
/// convergence of the continued fraction degrades close to the negative
/// real axis.
pub fn exp_integral_e1(z: Complex64) -> Result<Complex64> {
    if z == Complex64::new(0.0, 0.0) {
        return Err(Error::Pole("E1 has a logarithmic singularity at 0".into()));
    }
    if z.norm() <= 3.0 {
        Ok(e1_series(z))
    } else {
        Ok(e1_contfrac(z))
    }
}

/// E1(z) = -gamma - ln z - sum_{n>=1} (-z)^n / (n n!).
pub(crate) fn e1_series(z: Complex64) -> Complex64 {
    let mut sum = Complex64::new(0.0, 0.0);
    let mut c = Complex64::new(1.0, 0.0); // (-z)^n / n!
    for n in 1..=130 {
        c *= -z / n as f64;
        let term = c / n as f64;
        sum += term;
        if term.norm() < 1e-18 * (1.0 + sum.norm()) {
            break;
        }
    }
    -Complex64::new(EULER_GAMMA, 0.0) - z.ln() - sum
}

/// E1(z) = e^{-z} / (z + 1 - 1/(z + 3 - 4/(z + 5 - 9/(...)))), evaluated by
/// the modified Lentz algorithm.
pub(crate) fn e1_contfrac(z: Complex64) -> Complex64 {
    let tiny = Complex64::new(1e-300, 0.0);
    let mut f = z + 1.0;
    if f == Complex64::new(0.0, 0.0) {
        f = tiny;
    }
    let mut c = f;
    let mut d = Complex64::new(0.0, 0.0);
    for j in 1..400u32 {
        let a = Complex64::new(-((j as f64) * (j as f64)), 0.0);
        let b = z + (2 * j + 1) as f64;
        d = b + a * d;
        if d == Complex64::new(0.0, 0.0) {
            d = tiny;
        }
        c = b + a / c;
        if c == Complex64::new(0.0, 0.0) {
            c = tiny;
        }
        d = 1.0 / d;
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).norm() < 1e-16 {
            break;
        }
    }
    (-z).exp() / f
}

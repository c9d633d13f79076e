//! The quadratic-form weight
//!
//!   W_a(x) = (1/2 pi i) int_(c) (Gamma((1/2+s+a)/2)/Gamma((1/2+a)/2))^2 x^{-s} ds/s
//!
//! for parity a in {0, 1}, evaluated by trapezoidal quadrature on the
//! vertical line Re s = c. The default-line values are cached per parity in
//! Chebyshev tables over ln x, because the quadratic forms consume W at
//! millions of points.

use super::gamma::log_gamma;
use crate::error::{Error, Result};
use num_complex::Complex64;
use std::sync::OnceLock;

/// W is zero to far below double precision beyond this x (decay ~ e^{-2x}).
const X_CUT: f64 = 80.0;
/// Below this x the cached table does not reach; fall back to direct
/// quadrature (W there is 1 + O(x^{1/2} ln x) anyway).
const X_FLOOR: f64 = 1e-9;
const SEG_WIDTH: f64 = 1.0;
const CHEB_DEGREE: usize = 30;
const TAU_STEP: f64 = 0.05;
const TAU_MAX: f64 = 120.0;

/// W_a(x) on the default line c = 1, from the cached table.
pub fn weight_w(parity: u8, x: f64) -> Result<f64> {
    if x <= 0.0 {
        return Err(Error::Domain(format!("weight argument x = {x} <= 0")));
    }
    debug_assert!(parity <= 1);
    if x >= X_CUT {
        return Ok(0.0);
    }
    if x < X_FLOOR {
        return weight_w_line(parity, x, 1.0);
    }
    Ok(tables()[parity as usize].eval(x.ln()))
}

/// Direct vertical-line quadrature at Re s = `line` (any line > 0 gives the
/// same value; exposed for contour-independence checks and diagnostics).
pub fn weight_w_line(parity: u8, x: f64, line: f64) -> Result<f64> {
    if x <= 0.0 {
        return Err(Error::Domain(format!("weight argument x = {x} <= 0")));
    }
    if line <= 0.0 {
        return Err(Error::Domain("integration line must be right of s = 0".into()));
    }
    let b = 0.5 + parity as f64;
    let ln_norm = log_gamma(Complex64::new(b / 2.0, 0.0))?;
    let g = |tau: f64| -> Complex64 {
        let s = Complex64::new(line, tau);
        (2.0 * (log_gamma((s + b) / 2.0).expect("right half-plane") - ln_norm)).exp()
    };
    let h = TAU_STEP.min(2.0 * std::f64::consts::PI / (x.ln().abs() + 45.0));
    let steps = (TAU_MAX / h) as usize;
    let lnx = x.ln();
    let xc = (-line * lnx).exp();
    let mut acc = (g(0.0) / line).re;
    for j in 1..=steps {
        let tau = j as f64 * h;
        let s = Complex64::new(line, tau);
        let phase = Complex64::from_polar(1.0, -tau * lnx);
        acc += 2.0 * (g(tau) * phase / s).re;
    }
    Ok(acc * xc * h / (2.0 * std::f64::consts::PI))
}

struct WeightTable {
    t_min: f64,
    n_seg: usize,
    /// Chebyshev coefficients per segment
    coeffs: Vec<Vec<f64>>,
}

impl WeightTable {
    fn build(parity: u8) -> WeightTable {
        let t_min = X_FLOOR.ln();
        let t_max = X_CUT.ln();
        let n_seg = ((t_max - t_min) / SEG_WIDTH).ceil() as usize;

        // gamma-line values shared by every segment node
        let b = 0.5 + parity as f64;
        let ln_norm = log_gamma(Complex64::new(b / 2.0, 0.0)).unwrap();
        let steps = (TAU_MAX / TAU_STEP) as usize;
        let gline: Vec<Complex64> = (0..=steps)
            .map(|j| {
                let s = Complex64::new(1.0, j as f64 * TAU_STEP);
                (2.0 * (log_gamma((s + b) / 2.0).unwrap() - ln_norm)).exp()
            })
            .collect();
        let direct = |t: f64| -> f64 {
            let lnx = t;
            let xc = (-lnx).exp(); // x^{-1} on the line c = 1
            let mut acc = (gline[0] / Complex64::new(1.0, 0.0)).re;
            for (j, gj) in gline.iter().enumerate().skip(1) {
                let tau = j as f64 * TAU_STEP;
                let s = Complex64::new(1.0, tau);
                let phase = Complex64::from_polar(1.0, -tau * lnx);
                acc += 2.0 * (gj * phase / s).re;
            }
            acc * xc * TAU_STEP / (2.0 * std::f64::consts::PI)
        };

        let n = CHEB_DEGREE;
        let mut coeffs = Vec::with_capacity(n_seg);
        for seg in 0..n_seg {
            let a = t_min + seg as f64 * SEG_WIDTH;
            let bb = a + SEG_WIDTH;
            // Chebyshev nodes of the second kind and the DCT-like transform
            let vals: Vec<f64> = (0..=n)
                .map(|j| {
                    let th = std::f64::consts::PI * j as f64 / n as f64;
                    let t = 0.5 * (a + bb) + 0.5 * (bb - a) * th.cos();
                    direct(t)
                })
                .collect();
            let mut c = vec![0.0f64; n + 1];
            for (k, ck) in c.iter_mut().enumerate() {
                let mut s = 0.5 * (vals[0] + if k % 2 == 0 { vals[n] } else { -vals[n] });
                for (j, vj) in vals.iter().enumerate().take(n).skip(1) {
                    s += vj * (std::f64::consts::PI * (k * j) as f64 / n as f64).cos();
                }
                *ck = 2.0 * s / n as f64;
            }
            c[0] *= 0.5;
            coeffs.push(c);
        }
        WeightTable {
            t_min,
            n_seg,
            coeffs,
        }
    }

    fn eval(&self, t: f64) -> f64 {
        let pos = ((t - self.t_min) / SEG_WIDTH).floor();
        let seg = (pos.max(0.0) as usize).min(self.n_seg - 1);
        let a = self.t_min + seg as f64 * SEG_WIDTH;
        let u = 2.0 * (t - a) / SEG_WIDTH - 1.0;
        // Clenshaw
        let c = &self.coeffs[seg];
        let mut b1 = 0.0;
        let mut b2 = 0.0;
        for &ck in c.iter().rev() {
            let b0 = 2.0 * u * b1 - b2 + ck;
            b2 = b1;
            b1 = b0;
        }
        b1 - u * b2
    }
}

fn tables() -> &'static [WeightTable; 2] {
    static TABLES: OnceLock<[WeightTable; 2]> = OnceLock::new();
    TABLES.get_or_init(|| [WeightTable::build(0), WeightTable::build(1)])
}

//! The compactly supported smoothing bump u, its tail integral v and the
//! E1-smoothed kernel U(z) = int u(x) E1(z ln x) dx.

use super::e1::exp_integral_e1;
use crate::error::{Error, Result};
use num_complex::Complex64;

/// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration on the
/// Legendre polynomial.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..(n + 1) / 2 {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // P_n(x) and P_n'(x) by the three-term recurrence
            let mut p0 = 1.0;
            let mut p1 = x;
            for j in 2..=n {
                let p2 = ((2 * j - 1) as f64 * x * p1 - (j - 1) as f64 * p0) / j as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

/// The smooth bump and its quadrature data on the support
/// [e^{1-1/X}, e]. The bump is the standard C-infinity plateau-free shape
/// c exp(-1/(1-t^2)) under the affine map of the support onto [-1, 1],
/// normalized to mass one.
#[derive(Debug, Clone)]
pub struct BumpSpec {
    pub x_param: f64,
    pub lo: f64,
    pub hi: f64,
    norm: f64,
    /// mapped nodes, weights (including the Jacobian) at full resolution
    nodes: Vec<f64>,
    weights: Vec<f64>,
    /// half-resolution set for convergence diagnostics
    nodes_half: Vec<f64>,
    weights_half: Vec<f64>,
}

fn raw_bump(t: f64) -> f64 {
    if t.abs() >= 1.0 {
        0.0
    } else {
        (-1.0 / (1.0 - t * t)).exp()
    }
}

impl BumpSpec {
    pub fn new(x_param: f64) -> Result<Self> {
        if x_param < 2.0 {
            return Err(Error::Domain(format!("bump parameter X = {x_param} < 2")));
        }
        let lo = (1.0 - 1.0 / x_param).exp();
        let hi = std::f64::consts::E;
        let build = |n: usize| {
            let (base_n, base_w) = gauss_legendre(n);
            let half = 0.5 * (hi - lo);
            let mid = 0.5 * (hi + lo);
            let nodes: Vec<f64> = base_n.iter().map(|t| mid + half * t).collect();
            let weights: Vec<f64> = base_w.iter().map(|w| w * half).collect();
            (nodes, weights)
        };
        let (nodes, weights) = build(128);
        let (nodes_half, weights_half) = build(64);
        let mut spec = BumpSpec {
            x_param,
            lo,
            hi,
            norm: 1.0,
            nodes,
            weights,
            nodes_half,
            weights_half,
        };
        let raw_mass: f64 = spec
            .nodes
            .iter()
            .zip(&spec.weights)
            .map(|(&x, &w)| w * spec.raw_at(x))
            .sum();
        spec.norm = 1.0 / raw_mass;
        Ok(spec)
    }

    fn raw_at(&self, x: f64) -> f64 {
        let t = (2.0 * x - (self.lo + self.hi)) / (self.hi - self.lo);
        raw_bump(t)
    }

    /// U(z) at half quadrature resolution, for convergence checks.
    pub fn kernel_half_resolution(&self, z: Complex64) -> Result<Complex64> {
        kernel_with(self, &self.nodes_half, &self.weights_half, z)
    }
}

/// The bump u itself (mass one, supported on [e^{1-1/X}, e]).
pub fn bump_u(x: f64, spec: &BumpSpec) -> f64 {
    spec.norm * spec.raw_at(x)
}

/// v(t) = int_t^infinity u, so v = 1 left of the support and 0 right of it.
pub fn bump_v(t: f64, spec: &BumpSpec) -> f64 {
    if t <= spec.lo {
        return 1.0;
    }
    if t >= spec.hi {
        return 0.0;
    }
    // Gauss-Legendre on [t, hi]; the integrand is smooth
    let (base_n, base_w) = gauss_legendre(64);
    let half = 0.5 * (spec.hi - t);
    let mid = 0.5 * (spec.hi + t);
    base_n
        .iter()
        .zip(&base_w)
        .map(|(&u, &w)| w * half * bump_u(mid + half * u, spec))
        .sum()
}

/// U(z) = int u(x) E1(z ln x) dx over the bump support.
pub fn smoothing_u_kernel(z: Complex64, spec: &BumpSpec) -> Result<Complex64> {
    kernel_with(spec, &spec.nodes, &spec.weights, z)
}

fn kernel_with(spec: &BumpSpec, nodes: &[f64], weights: &[f64], z: Complex64) -> Result<Complex64> {
    if z == Complex64::new(0.0, 0.0) {
        return Err(Error::Domain("kernel U is singular at z = 0".into()));
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for (&x, &w) in nodes.iter().zip(weights) {
        let u = bump_u(x, spec);
        if u == 0.0 {
            continue;
        }
        // ln x in [1 - 1/X, 1], so z ln x never hits the E1 singularity
        acc += w * u * exp_integral_e1(z * x.ln())?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn gl_nodes_integrate_polynomials() {
        let (n, w) = gauss_legendre(8);
        let int_x2: f64 = n.iter().zip(&w).map(|(&x, &w)| w * x * x).sum();
        assert_relative_eq!(int_x2, 2.0 / 3.0, max_relative = 1e-13);
        let int_x6: f64 = n.iter().zip(&w).map(|(&x, &w)| w * x.powi(6)).sum();
        assert_relative_eq!(int_x6, 2.0 / 7.0, max_relative = 1e-13);
    }

    #[test]
    fn rejects_small_parameter() {
        assert!(BumpSpec::new(1.9).is_err());
    }

    /// Simpson oracle for the bump mass, independent of the stored
    /// Gauss-Legendre data.
    fn simpson_mass(spec: &BumpSpec) -> f64 {
        let n = 40_000usize;
        let h = (spec.hi - spec.lo) / n as f64;
        let f = |x: f64| bump_u(x, spec);
        let mut s = f(spec.lo) + f(spec.hi);
        for j in 1..n {
            s += f(spec.lo + j as f64 * h) * if j % 2 == 1 { 4.0 } else { 2.0 };
        }
        s * h / 3.0
    }

    #[test]
    fn mass_is_one() {
        for &x in &[2.0, 5.0, 20.0, 200.0] {
            let spec = BumpSpec::new(x).unwrap();
            assert!((simpson_mass(&spec) - 1.0).abs() < 1e-10, "X = {x}");
        }
    }

    #[test]
    fn support_endpoints_vanish_and_symmetric() {
        let spec = BumpSpec::new(10.0).unwrap();
        assert_eq!(bump_u(spec.lo, &spec), 0.0);
        assert_eq!(bump_u(spec.hi, &spec), 0.0);
        assert_eq!(bump_u(spec.lo - 0.1, &spec), 0.0);
        assert_eq!(bump_u(spec.hi + 0.1, &spec), 0.0);
        // symmetry about the support midpoint
        let mid = 0.5 * (spec.lo + spec.hi);
        for i in 1..10 {
            let d = i as f64 * (spec.hi - spec.lo) / 21.0;
            assert_relative_eq!(
                bump_u(mid + d, &spec),
                bump_u(mid - d, &spec),
                max_relative = 1e-12
            );
        }
    }

    #[test]
    fn tail_integral_endpoints() {
        let spec = BumpSpec::new(10.0).unwrap();
        assert_eq!(bump_v(spec.lo - 1e-9, &spec), 1.0);
        assert_eq!(bump_v(spec.hi + 1e-9, &spec), 0.0);
        let mid = 0.5 * (spec.lo + spec.hi);
        assert_relative_eq!(bump_v(mid, &spec), 0.5, max_relative = 1e-9);
        // v decreasing
        let mut prev = 1.0;
        for i in 0..=20 {
            let t = spec.lo + i as f64 * (spec.hi - spec.lo) / 20.0;
            let v = bump_v(t, &spec);
            assert!(v <= prev + 1e-13);
            prev = v;
        }
    }

    #[test]
    fn kernel_rejects_zero() {
        let spec = BumpSpec::new(5.0).unwrap();
        assert!(smoothing_u_kernel(Complex64::new(0.0, 0.0), &spec).is_err());
    }

    #[test]
    fn kernel_node_doubling_agreement() {
        for &x in &[2.0, 10.0, 100.0] {
            let spec = BumpSpec::new(x).unwrap();
            for &z in &[
                Complex64::new(0.3, 0.0),
                Complex64::new(4.0, 0.0),
                Complex64::new(0.0, 30.0),
                Complex64::new(0.0, -100.0),
                Complex64::new(12.0, 55.0),
            ] {
                let full = smoothing_u_kernel(z, &spec).unwrap();
                let half = spec.kernel_half_resolution(z).unwrap();
                assert!(
                    (full - half).norm() < 1e-10,
                    "X = {x}, z = {z}: {full} vs {half}"
                );
            }
        }
    }

    #[test]
    fn kernel_conjugate_symmetry() {
        let spec = BumpSpec::new(8.0).unwrap();
        for &z in &[Complex64::new(1.0, 7.0), Complex64::new(0.0, 13.0)] {
            let a = smoothing_u_kernel(z.conj(), &spec).unwrap();
            let b = smoothing_u_kernel(z, &spec).unwrap().conj();
            assert!((a - b).norm() < 1e-13);
        }
    }

    /// Frozen envelope constant for z^2 |U(z)| on the real trajectories
    /// z = (1/2 + parity + 2m) ln X; observed maximum is ~1.47 at X = 2
    /// (non-normative empirical calibration).
    const KERNEL_DECAY_C: f64 = 2.0;

    #[test]
    fn kernel_real_axis_decay_envelope() {
        for &x in &[2.0, 5.0, 10.0, 50.0] {
            let spec = BumpSpec::new(x).unwrap();
            for parity in 0..2u8 {
                for m in 0..12u32 {
                    let t = (0.5 + parity as f64 + 2.0 * m as f64) * x.ln();
                    let u = smoothing_u_kernel(Complex64::new(t, 0.0), &spec)
                        .unwrap()
                        .norm();
                    assert!(
                        t * t * u <= KERNEL_DECAY_C,
                        "X = {x}, parity {parity}, m = {m}: t^2 U = {}",
                        t * t * u
                    );
                }
            }
        }
    }
}

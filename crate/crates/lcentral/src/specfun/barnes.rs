//! Barnes G at positive integers and the moment coefficient
//! G^2(k+1)/G(2k+1).

use crate::error::{Error, Result};
use crate::util::ln_gamma;

/// ln G(n) = sum_{j=1}^{n-2} ln j!  (G(1) = G(2) = 1).
fn ln_barnes_g(n: u64) -> f64 {
    let mut acc = 0.0;
    for j in 1..n.saturating_sub(1) {
        acc += ln_gamma(j as f64 + 1.0);
    }
    acc
}

/// Barnes G at a positive integer, G(n) = prod_{j=1}^{n-2} j!.
pub fn barnes_g_int(n: u64) -> Result<f64> {
    if n < 1 {
        return Err(Error::Domain("Barnes G needs n >= 1".into()));
    }
    Ok(ln_barnes_g(n).exp())
}

/// G^2(k+1)/G(2k+1), computed in log space.
///
/// This is the random-matrix moment coefficient; equals
/// prod_{j=0}^{k-1} j!/(k+j)!.
pub fn barnes_ratio(k: u64) -> f64 {
    (2.0 * ln_barnes_g(k + 1) - ln_barnes_g(2 * k + 1)).exp()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn small_g_values() {
        assert_relative_eq!(barnes_g_int(1).unwrap(), 1.0, epsilon = 1e-15);
        assert_relative_eq!(barnes_g_int(2).unwrap(), 1.0, epsilon = 1e-15);
        assert_relative_eq!(barnes_g_int(3).unwrap(), 1.0, max_relative = 1e-13);
        // G(5) = 1! 2! 3! = 12
        assert_relative_eq!(barnes_g_int(5).unwrap(), 12.0, max_relative = 1e-13);
        assert!(barnes_g_int(0).is_err());
    }

    #[test]
    fn ratio_values() {
        assert_relative_eq!(barnes_ratio(0), 1.0, epsilon = 1e-14);
        assert_relative_eq!(barnes_ratio(1), 1.0, max_relative = 1e-13);
        assert_relative_eq!(barnes_ratio(2), 1.0 / 12.0, max_relative = 1e-12);
        assert_relative_eq!(barnes_ratio(3), 1.0 / 8640.0, max_relative = 1e-12);
        // 1/8640 = 42/9!
        assert_relative_eq!(
            barnes_ratio(3),
            42.0 / 362_880.0,
            max_relative = 1e-12
        );
    }

    #[test]
    fn ratio_factorial_identity() {
        // G^2(k+1)/G(2k+1) = prod_{j=0}^{k-1} j!/(k+j)! in log space
        for k in 1..=6u64 {
            let mut lhs = 0.0f64;
            for j in 0..k {
                lhs += ln_gamma(j as f64 + 1.0) - ln_gamma((k + j) as f64 + 1.0);
            }
            assert_relative_eq!(barnes_ratio(k).ln(), lhs, epsilon = 1e-12);
        }
    }
}

//! The arithmetic Euler-product factor
//!
//!   a(k) = prod_p (1 - 1/p)^{k^2} sum_{m>=0} d_k(p^m)^2 / p^m.

use crate::arith::{dk_prime_power, small_primes_up_to};

/// Prime zeta value P(2) = sum_p 1/p^2.
const PRIME_ZETA_2: f64 = 0.452_247_420_041_065_5;

/// Local factor sum_{m>=0} d_k(p^m)^2 / p^m, truncated when terms drop
/// below 1e-16 relative.
pub fn dk_square_local_sum(k: f64, p: u64) -> f64 {
    let u = 1.0 / p as f64;
    let mut acc = 1.0;
    let mut um = 1.0;
    for m in 1..200u32 {
        um *= u;
        let d = dk_prime_power(k, m);
        let term = d * d * um;
        acc += term;
        if term < 1e-16 * acc {
            break;
        }
    }
    acc
}

/// a(k) as a partial Euler product over p <= prime_cutoff, with a
/// second-order log-space tail estimate: the local log-factor is
/// -k^2 (k-1)^2 / (4 p^2) + O(p^-3), and sum_{p > P} p^{-2} is recovered
/// exactly from P(2).
pub fn arithmetic_factor_a(k: f64, prime_cutoff: u64) -> f64 {
    let primes = small_primes_up_to(prime_cutoff.max(2));
    let k2 = k * k;
    let mut log_acc = 0.0;
    let mut prime_zeta_partial = 0.0;
    for &p in &primes {
        let u = 1.0 / p as f64;
        log_acc += k2 * (1.0 - u).ln() + dk_square_local_sum(k, p).ln();
        prime_zeta_partial += u * u;
    }
    let c2 = -k2 * (k - 1.0) * (k - 1.0) / 4.0;
    log_acc += c2 * (PRIME_ZETA_2 - prime_zeta_partial);
    log_acc.exp()
}

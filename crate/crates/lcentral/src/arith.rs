//! Integer and multiplicative-function primitives: factorization, sieved
//! tables of mu/phi/omega/von Mangoldt, generalized divisor functions d_k,
//! smooth-number enumeration and the coprime harmonic sums used by the
//! moment main terms.

use crate::error::{Error, Result};
use crate::util::{gcd, ln_gamma};

/// Hard cap on sieve sizes; larger tables are outside this crate's scale.
pub const TABLE_LIMIT: usize = 10_000_000;

/// Prime factorization as ascending (prime, exponent) pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub pairs: Vec<(u64, u32)>,
}

impl Factorization {
    /// Trial-division factorization. `n = 0` is rejected; `n = 1` gives the
    /// empty factorization.
    pub fn of(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("cannot factor 0".into()));
        }
        let mut pairs = Vec::new();
        let mut m = n;
        let mut p = 2u64;
        while p * p <= m {
            if m % p == 0 {
                let mut e = 0u32;
                while m % p == 0 {
                    m /= p;
                    e += 1;
                }
                pairs.push((p, e));
            }
            p += if p == 2 { 1 } else { 2 };
        }
        if m > 1 {
            pairs.push((m, 1));
        }
        Ok(Factorization { pairs })
    }

    pub fn value(&self) -> u64 {
        self.pairs.iter().map(|&(p, e)| p.pow(e)).product()
    }

    /// Number of distinct prime factors.
    pub fn omega(&self) -> u32 {
        self.pairs.len() as u32
    }

    /// All divisors, ascending.
    pub fn divisors(&self) -> Vec<u64> {
        let mut divs = vec![1u64];
        for &(p, e) in &self.pairs {
            let prev = divs.clone();
            let mut pk = 1u64;
            for _ in 0..e {
                pk *= p;
                divs.extend(prev.iter().map(|d| d * pk));
            }
        }
        divs.sort_unstable();
        divs
    }

    pub fn phi(&self) -> u64 {
        self.pairs
            .iter()
            .map(|&(p, e)| (p - 1) * p.pow(e - 1))
            .product()
    }

    pub fn mu(&self) -> i64 {
        if self.pairs.iter().any(|&(_, e)| e > 1) {
            0
        } else if self.pairs.len() % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// Sieved tables of the standard multiplicative functions for n <= limit.
///
/// The von Mangoldt function is kept symbolic: `prime_power[n] = p` when
/// n is a power of p (so Lambda(n) = ln p, evaluated only when needed),
/// and 0 otherwise. This keeps the Euler-product exponents free of
/// premature log rounding.
pub struct MultTables {
    limit: usize,
    spf: Vec<u32>,
    mu: Vec<i8>,
    phi: Vec<u64>,
    omega: Vec<u8>,
    prime_power: Vec<u32>,
}

impl MultTables {
    pub fn new(limit: usize) -> Result<Self> {
        if limit < 2 {
            return Err(Error::Domain(format!("table limit {limit} < 2")));
        }
        if limit > TABLE_LIMIT {
            return Err(Error::Domain(format!(
                "table limit {limit} exceeds cap {TABLE_LIMIT}"
            )));
        }
        let n = limit + 1;
        let mut spf = vec![0u32; n];
        let mut primes: Vec<u32> = Vec::new();
        // linear sieve for smallest prime factors
        for i in 2..n {
            if spf[i] == 0 {
                spf[i] = i as u32;
                primes.push(i as u32);
            }
            for &p in &primes {
                let ip = i * p as usize;
                if p > spf[i] || ip >= n {
                    break;
                }
                spf[ip] = p;
            }
        }
        spf[1] = 1;
        let mut mu = vec![0i8; n];
        let mut phi = vec![0u64; n];
        let mut omega = vec![0u8; n];
        let mut prime_power = vec![0u32; n];
        mu[1] = 1;
        phi[1] = 1;
        for i in 2..n {
            let p = spf[i] as usize;
            let m = i / p;
            if m % p == 0 {
                mu[i] = 0;
                phi[i] = phi[m] * p as u64;
                omega[i] = omega[m];
            } else {
                mu[i] = -mu[m];
                phi[i] = phi[m] * (p as u64 - 1);
                omega[i] = omega[m] + 1;
            }
            if m == 1 || prime_power[m] == p as u32 {
                prime_power[i] = p as u32;
            }
        }
        Ok(MultTables {
            limit,
            spf,
            mu,
            phi,
            omega,
            prime_power,
        })
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    pub fn mu(&self, n: u64) -> i64 {
        self.mu[n as usize] as i64
    }

    pub fn phi(&self, n: u64) -> u64 {
        self.phi[n as usize]
    }

    pub fn omega(&self, n: u64) -> u32 {
        self.omega[n as usize] as u32
    }

    pub fn is_prime(&self, n: u64) -> bool {
        n >= 2 && self.spf[n as usize] as u64 == n
    }

    pub fn smallest_prime_factor(&self, n: u64) -> u64 {
        self.spf[n as usize] as u64
    }

    /// `Some((p, j))` when n = p^j, so Lambda(n) = ln p; `None` otherwise.
    pub fn von_mangoldt(&self, n: u64) -> Option<(u64, u32)> {
        if n < 2 {
            return None;
        }
        let p = self.prime_power[n as usize] as u64;
        if p == 0 {
            return None;
        }
        let mut j = 0u32;
        let mut m = n;
        while m > 1 {
            m /= p;
            j += 1;
        }
        Some((p, j))
    }

    /// Primes up to the table limit, ascending.
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        (2..=self.limit as u64).filter(move |&n| self.is_prime(n))
    }
}

/// d_k(p^m) = Gamma(m + k) / (m! Gamma(k)), the prime-power values of the
/// k-th divisor function, extended to real k.
///
/// Positive k with large m goes through log-gamma differences so the ratio
/// never materializes a huge Gamma value; small m and nonpositive k use the
/// exact rising-factorial product (which also produces the correct zeros
/// for negative integer k).
pub fn dk_prime_power(k: f64, m: u32) -> f64 {
    if m == 0 {
        return 1.0;
    }
    if k > 0.0 && m >= 25 {
        return (ln_gamma(k + m as f64) - ln_gamma(k) - ln_gamma(m as f64 + 1.0)).exp();
    }
    let mut acc = 1.0;
    for i in 0..m {
        acc *= (k + i as f64) / (i as f64 + 1.0);
    }
    acc
}

/// Multiplicative extension of d_k to all n >= 1.
pub fn divisor_dk(k: f64, n: u64) -> Result<f64> {
    if n == 0 {
        return Err(Error::Domain("d_k requires n >= 1".into()));
    }
    let f = Factorization::of(n)?;
    Ok(f.pairs
        .iter()
        .map(|&(_, e)| dk_prime_power(k, e))
        .product())
}

/// Ascending list of X-smooth integers (largest prime factor <= X) in
/// [1, n_max].
#[derive(Debug, Clone)]
pub struct SmoothSet {
    pub bound: f64,
    pub members: Vec<u64>,
}

pub fn smooth_numbers(x: f64, n_max: u64) -> Result<SmoothSet> {
    if x < 2.0 {
        return Err(Error::Domain(format!("smoothness bound {x} < 2")));
    }
    if n_max < 1 {
        return Err(Error::Domain("n_max must be >= 1".into()));
    }
    let primes = small_primes_up_to(x.floor() as u64);
    let mut members = Vec::new();
    let mut stack = vec![(0usize, 1u64)];
    while let Some((idx, n)) = stack.pop() {
        members.push(n);
        for (i, &p) in primes.iter().enumerate().skip(idx) {
            if n > n_max / p {
                break;
            }
            stack.push((i + 1, n * p));
            // higher powers of p are reached through repeated descent on i,
            // so enumerate them here with the prime index kept fixed
            let mut m = n * p;
            while m <= n_max / p {
                m *= p;
                stack.push((i + 1, m));
            }
        }
    }
    members.sort_unstable();
    members.dedup();
    Ok(SmoothSet { bound: x, members })
}

/// Primes up to `bound` by a plain sieve (small, throwaway).
pub fn small_primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize + 1;
    let mut is_comp = vec![false; n];
    let mut primes = Vec::new();
    for i in 2..n {
        if !is_comp[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j < n {
                is_comp[j] = true;
                j += i;
            }
        }
    }
    primes
}

/// Sum_{n <= x, (n,q)=1} (ln(x/n))^l / n by direct summation, ascending n.
pub fn coprime_harmonic(x: f64, q: u64, l: u32) -> f64 {
    debug_assert!(l <= 2, "only l in {{0,1,2}} is meaningful here");
    let top = x.floor() as u64;
    let mut acc = 0.0;
    for n in 1..=top {
        if gcd(n, q) == 1 {
            let lg = (x / n as f64).ln();
            acc += lg.powi(l as i32) / n as f64;
        }
    }
    acc
}

/// Sum_{n <= x, (n,q)=1} 2^{omega(n) - omega((n,h))} (ln(x/n))^l / n by
/// direct summation. `tables` must cover floor(x).
pub fn weighted_coprime_harmonic(tables: &MultTables, x: f64, q: u64, h: u64, l: u32) -> f64 {
    let top = x.floor() as u64;
    assert!(
        top as usize <= tables.limit(),
        "tables too small for x = {x}"
    );
    let mut acc = 0.0;
    for n in 1..=top {
        if gcd(n, q) != 1 {
            continue;
        }
        let w = tables.omega(n) - tables.omega(gcd(n, h));
        let lg = (x / n as f64).ln();
        acc += (1u64 << w) as f64 * lg.powi(l as i32) / n as f64;
    }
    acc
}

/// Closed-form main term of the l = 2 weighted sum:
/// (ln x)^4 / (12 zeta(2)) * prod_{p | hq} (1-1/p)/(1+1/p) * prod_{p|h, p∤q} 1/(1-1/p).
pub fn weighted_coprime_harmonic_main_term(x: f64, q: u64, h: u64) -> Result<f64> {
    let zeta2 = std::f64::consts::PI * std::f64::consts::PI / 6.0;
    let mut acc = x.ln().powi(4) / (12.0 * zeta2);
    let fh = Factorization::of(h)?;
    let fq = Factorization::of(q)?;
    let mut ps: Vec<u64> = fh
        .pairs
        .iter()
        .chain(fq.pairs.iter())
        .map(|&(p, _)| p)
        .collect();
    ps.sort_unstable();
    ps.dedup();
    for &p in &ps {
        let u = 1.0 / p as f64;
        acc *= (1.0 - u) / (1.0 + u);
    }
    for &(p, _) in &fh.pairs {
        if q % p != 0 {
            let u = 1.0 / p as f64;
            acc *= 1.0 / (1.0 - u);
        }
    }
    Ok(acc)
}

/// Multiplicative weight prod_{p^r || m} (1 + r (1 - 1/p)/(1 + 1/p)).
pub fn delta_weight(m: u64) -> Result<f64> {
    if m == 0 {
        return Err(Error::Domain("delta weight requires m >= 1".into()));
    }
    let f = Factorization::of(m)?;
    Ok(f.pairs
        .iter()
        .map(|&(p, r)| {
            let u = 1.0 / p as f64;
            1.0 + r as f64 * (1.0 - u) / (1.0 + u)
        })
        .product())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn rejects_tiny_limit() {
        assert!(MultTables::new(1).is_err());
    }

    #[test]
    fn table_spot_values() {
        let t = MultTables::new(100).unwrap();
        assert_eq!(t.von_mangoldt(8), Some((2, 3)));
        assert_eq!(t.von_mangoldt(12), None);
        assert_eq!(t.mu(30), -1);
        assert_eq!(t.phi(9), 6);
        assert_eq!(t.omega(12), 2);
        assert_eq!(t.mu(4), 0);
        assert_eq!(t.phi(1), 1);
    }

    #[test]
    fn von_mangoldt_support_is_prime_powers() {
        let t = MultTables::new(10_000).unwrap();
        for n in 2..=10_000u64 {
            let f = Factorization::of(n).unwrap();
            let is_pp = f.pairs.len() == 1;
            assert_eq!(t.von_mangoldt(n).is_some(), is_pp, "n = {n}");
            if let Some((p, j)) = t.von_mangoldt(n) {
                assert_eq!(f.pairs[0], (p, j));
            }
        }
    }

    #[test]
    fn dk_small_values() {
        // d_2(12) = number of divisors of 12
        assert_relative_eq!(divisor_dk(2.0, 12).unwrap(), 6.0, epsilon = 1e-12);
        // d_{3/2}(p) = 3/2 at any prime
        for p in [2u64, 3, 5, 97] {
            assert_relative_eq!(divisor_dk(1.5, p).unwrap(), 1.5, epsilon = 1e-12);
        }
        // d_3(4): ordered factorizations of 4 into 3 factors, counted directly
        let mut count = 0;
        for a in 1..=4u64 {
            for b in 1..=4u64 {
                for c in 1..=4u64 {
                    if a * b * c == 4 {
                        count += 1;
                    }
                }
            }
        }
        assert_eq!(count, 6);
        assert_relative_eq!(divisor_dk(3.0, 4).unwrap(), count as f64, epsilon = 1e-12);
        assert!(divisor_dk(2.0, 0).is_err());
    }

    #[test]
    fn dk_gamma_ratio_recurrence() {
        // d_k(p^m) = d_k(p^{m-1}) (m - 1 + k)/m, including the log-gamma branch
        for &k in &[0.5, 1.0, 1.5, 2.0, 3.0] {
            for m in 1..=40u32 {
                let lhs = dk_prime_power(k, m);
                let rhs = dk_prime_power(k, m - 1) * (m as f64 - 1.0 + k) / m as f64;
                assert_relative_eq!(lhs, rhs, max_relative = 1e-12);
            }
        }
    }

    #[test]
    fn dk_negative_k_zeros() {
        assert_relative_eq!(dk_prime_power(-1.0, 1), -1.0, epsilon = 1e-15);
        assert_relative_eq!(dk_prime_power(-1.0, 2), 0.0, epsilon = 1e-15);
        assert_relative_eq!(dk_prime_power(-2.0, 2), 1.0, epsilon = 1e-15);
        assert_relative_eq!(dk_prime_power(-2.0, 3), 0.0, epsilon = 1e-15);
    }

    proptest! {
        #[test]
        fn dk_multiplicative(m in 1u64..=100, n in 1u64..=100) {
            prop_assume!(gcd(m, n) == 1);
            for &k in &[0.5, 1.0, 1.5, 2.0, 3.0] {
                let lhs = divisor_dk(k, m * n).unwrap();
                let rhs = divisor_dk(k, m).unwrap() * divisor_dk(k, n).unwrap();
                prop_assert!((lhs - rhs).abs() <= 1e-12 * (1.0 + lhs.abs()));
            }
        }
    }

    #[test]
    fn smooth_enumeration() {
        let s = smooth_numbers(3.0, 10).unwrap();
        assert_eq!(s.members, vec![1, 2, 3, 4, 6, 8, 9]);
        let s = smooth_numbers(2.0, 9).unwrap();
        assert_eq!(s.members, vec![1, 2, 4, 8]);
        assert!(smooth_numbers(1.5, 10).is_err());
    }

    #[test]
    fn smooth_matches_bruteforce_factor_sweep() {
        let s = smooth_numbers(10.0, 10_000).unwrap();
        let brute: Vec<u64> = (1..=10_000u64)
            .filter(|&n| {
                Factorization::of(n)
                    .unwrap()
                    .pairs
                    .iter()
                    .all(|&(p, _)| p <= 10)
            })
            .collect();
        assert_eq!(s.members, brute);
    }

    #[test]
    fn smooth_monotone_in_bound() {
        let a = smooth_numbers(5.0, 2000).unwrap();
        let b = smooth_numbers(11.0, 2000).unwrap();
        let bset: std::collections::HashSet<u64> = b.members.iter().copied().collect();
        assert!(a.members.iter().all(|n| bset.contains(n)));
    }

    #[test]
    fn coprime_harmonic_values() {
        // q = 1 reduces to the harmonic number
        let h100: f64 = (1..=100u64).map(|n| 1.0 / n as f64).sum();
        assert_relative_eq!(coprime_harmonic(100.0, 1, 0), h100, max_relative = 1e-14);
        let gamma = 0.577_215_664_901_532_9;
        assert!((h100 - (100f64.ln() + gamma)).abs() < 0.01);

        // x = 10, q = 10: only n in {1, 3, 7, 9} are coprime
        assert_relative_eq!(
            coprime_harmonic(10.0, 10, 0),
            1.0 + 1.0 / 3.0 + 1.0 / 7.0 + 1.0 / 9.0,
            max_relative = 1e-14
        );
    }

    #[test]
    fn coprime_harmonic_main_term() {
        // x = 10^4, q = 6 against (phi/q)(ln x + gamma + sum_{p|q} ln p/(p-1));
        // the remainder is O(2^omega(q) ln x / x), far below 0.01 here.
        let x = 1e4;
        let got = coprime_harmonic(x, 6, 0);
        let gamma = 0.577_215_664_901_532_9;
        let main =
            (2.0 / 6.0) * (x.ln() + gamma + 2f64.ln() / (2.0 - 1.0) + 3f64.ln() / (3.0 - 1.0));
        assert!((got - main).abs() < 0.01, "got {got}, main {main}");
    }

    #[test]
    fn coprime_harmonic_monotone_in_x() {
        let mut prev = 0.0;
        for i in 1..=40 {
            let x = 2.0 + i as f64 * 2.37;
            let v = coprime_harmonic(x, 12, 0);
            assert!(v >= prev);
            prev = v;
        }
    }

    #[test]
    fn weighted_harmonic_tiny_case() {
        let t = MultTables::new(100).unwrap();
        // x = 3, h = q = 1: terms 1 + 2/2 + 2/3
        assert_relative_eq!(
            weighted_coprime_harmonic(&t, 3.0, 1, 1, 0),
            1.0 + 1.0 + 2.0 / 3.0,
            max_relative = 1e-14
        );
    }

    /// Empirically fitted bound constant for the l = 0 weighted sum at
    /// h = q = 1 (observed value/(ln x)^2 stays below 0.62 for x <= 10^6;
    /// non-normative, the analytic constants are ineffective).
    const WEIGHTED_L0_BOUND: f64 = 0.7;

    #[test]
    fn weighted_harmonic_l0_growth_bound() {
        let t = MultTables::new(1000).unwrap();
        let v = weighted_coprime_harmonic(&t, 1000.0, 1, 1, 0);
        assert!(v <= WEIGHTED_L0_BOUND * 1000f64.ln().powi(2));
    }

    #[test]
    fn weighted_harmonic_l2_main_term_trend() {
        let t = MultTables::new(1_000_000).unwrap();
        let r3 = weighted_coprime_harmonic(&t, 1e3, 1, 1, 2)
            / weighted_coprime_harmonic_main_term(1e3, 1, 1).unwrap();
        let r6 = weighted_coprime_harmonic(&t, 1e6, 1, 1, 2)
            / weighted_coprime_harmonic_main_term(1e6, 1, 1).unwrap();
        assert!(
            (r6 - 1.0).abs() < (r3 - 1.0).abs(),
            "ratios {r3} -> {r6} should approach 1"
        );
    }

    #[test]
    fn delta_weight_values() {
        assert_relative_eq!(delta_weight(1).unwrap(), 1.0, epsilon = 1e-15);
        for p in [2u64, 5, 13] {
            let u = 1.0 / p as f64;
            assert_relative_eq!(
                delta_weight(p).unwrap(),
                2.0 / (1.0 + u),
                max_relative = 1e-14
            );
        }
        // p = 2, r = 2: 1 + 2 (1/2)/(3/2) = 5/3
        assert_relative_eq!(delta_weight(4).unwrap(), 5.0 / 3.0, max_relative = 1e-14);
        assert!(delta_weight(0).is_err());
    }

    #[test]
    fn factorization_divisors() {
        let f = Factorization::of(60).unwrap();
        assert_eq!(f.pairs, vec![(2, 2), (3, 1), (5, 1)]);
        assert_eq!(f.divisors(), vec![1, 2, 3, 4, 5, 6, 10, 12, 15, 20, 30, 60]);
        assert_eq!(f.phi(), 16);
        assert_eq!(f.mu(), 0);
        assert_eq!(Factorization::of(1).unwrap().pairs, vec![]);
    }
}

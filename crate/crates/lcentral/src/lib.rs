//! Numerical study of Dirichlet L-functions at the central point.
//!
//! The crate evaluates L(1/2, chi) for primitive characters, factors it
//! into a truncated Euler product over small primes times a zeros factor
//! (a truncated Hadamard product), averages powers of all three objects
//! over the primitive characters mod q, and compares the averages with
//! the closed-form predictions coming from arithmetic main terms and from
//! moments of CUE characteristic polynomials.
//!
//! Modules:
//! - [`arith`]: multiplicative-function tables, d_k, smooth numbers,
//!   coprime harmonic sums.
//! - [`chars`]: Dirichlet character groups, conductors, Gauss sums and
//!   orthogonality over primitive characters.
//! - [`specfun`]: E1, complex log-gamma, Hurwitz zeta, Barnes G, the
//!   smoothing kernels and the quadratic-form weight.
//! - [`lfunc`]: L-values, the completed function, critical-line zeros and
//!   the approximate-functional-equation quadratic forms.
//! - [`hybrid`]: the Euler/Hadamard factorization and its coefficient
//!   tables.
//! - [`moments`]: empirical moment sweeps and every prediction formula.
//! - [`rmt`]: CUE sampling, characteristic-polynomial moments and the
//!   exact finite-N reference values.

pub mod arith;
pub mod chars;
pub mod error;
pub mod hybrid;
pub mod lfunc;
pub mod moments;
pub mod rmt;
pub mod specfun;
pub mod tolerances;
pub mod util;

pub use error::{Error, Result};

/// Library version, embedded in output file headers.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Euler-Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

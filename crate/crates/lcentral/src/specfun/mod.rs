//! Special functions: exponential integral E1, complex log-gamma, Hurwitz
//! zeta, Barnes G, the compact smoothing bump u / kernel U, the vertical
//! line quadratic-form weight, and the arithmetic Euler-product factor a(k).

mod barnes;
mod bump;
mod e1;
mod factor;
mod gamma;
mod hurwitz;
mod weight;

pub use barnes::{barnes_g_int, barnes_ratio};
pub use bump::{bump_u, bump_v, gauss_legendre, smoothing_u_kernel, BumpSpec};
pub use e1::exp_integral_e1;
pub use factor::arithmetic_factor_a;
pub use gamma::log_gamma;
pub use hurwitz::{hurwitz_zeta, hurwitz_zeta_with};
pub use weight::{weight_w, weight_w_line};

/// Bernoulli numbers B_2, B_4, ..., B_30.
pub(crate) const BERNOULLI_2K: [f64; 15] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
];

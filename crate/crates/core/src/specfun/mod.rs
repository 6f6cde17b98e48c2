//! Complex special functions and the theta-family kernels.

mod gamma;
mod theta;
mod zeta;

pub use gamma::{digamma, log_gamma};
pub use theta::{big_d, big_d_n, theta_psi};
pub use zeta::{zeta, zeta_log_derivative, ZETA_MAX_HEIGHT};

pub(crate) use gamma::ln_gamma;
pub(crate) use zeta::{zeta_raw, zeta_times_s_minus_1};

/// Truncation control for every infinite series in the crate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SeriesConfig {
    pub abs_tol: f64,
    pub max_terms: usize,
}

impl Default for SeriesConfig {
    fn default() -> Self {
        Self {
            abs_tol: 1e-16,
            max_terms: 10_000,
        }
    }
}

/// Even-index Bernoulli numbers B_2, B_4, ..., B_30.
pub(crate) const BERNOULLI_EVEN: [f64; 15] = [
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

pub(crate) fn is_nonpositive_integer(z: crate::Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()
}

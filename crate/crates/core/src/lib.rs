//! Numerical laboratory for Riemann's ξ(s) and Ξ(t).
//!
//! The crate evaluates ξ directly, through its theta-function integral and
//! through the cosine transform of the spectral kernel S(ω); rebuilds it from
//! tables of zeta zeros in product form; and exposes the g(s), ϑ(t), Z(t)
//! machinery used to locate zeros on the critical line.
//!
//! All routines work in binary64. Quadrature and series answers carry an
//! a-posteriori error estimate in [`EvalResult`].

pub mod diff;
mod error;
pub mod hadamard;
pub mod quadrature;
pub mod specfun;
pub mod spectral;
pub mod xi;
pub mod zeros;

pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use quadrature::QuadratureConfig;
pub use specfun::SeriesConfig;
pub use xi::StripPoint;

/// Complex value used for s, ρ_n, τ and every complex-valued quantity.
pub type ComplexVal = Complex64;

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// A numerical answer with its a-posteriori absolute error estimate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EvalResult<T> {
    pub value: T,
    pub abs_err: f64,
    /// Set when the answer was produced outside the region where the method
    /// has been validated; the value is still returned.
    pub degraded: bool,
}

impl<T> EvalResult<T> {
    pub fn new(value: T, abs_err: f64) -> Self {
        Self {
            value,
            abs_err,
            degraded: false,
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> EvalResult<U> {
        EvalResult {
            value: f(self.value),
            abs_err: self.abs_err,
            degraded: self.degraded,
        }
    }
}

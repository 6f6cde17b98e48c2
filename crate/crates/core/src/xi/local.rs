//! Local λ-expansion coefficients of ξ and the logarithmic-derivative
//! identities of holomorphic functions, all by finite differences.

use num_complex::Complex64;

use super::{xi, StripPoint};
use crate::diff::{central_first, central_second};
use crate::{Error, Result};

/// Below this step the ε/h² roundoff of a second difference dominates.
const MIN_USEFUL_STEP: f64 = 1e-5;

/// At (λ, t): 2a = ∂²ℜξ/∂λ², b = ∂ℑξ/∂λ, 2α = ∂²ℑξ/∂λ², β = ∂ℜξ/∂λ.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LocalCoeffs {
    pub a: f64,
    pub b: f64,
    pub alpha: f64,
    pub beta: f64,
}

pub fn local_coeffs(lambda: f64, t: f64, h: f64) -> Result<LocalCoeffs> {
    if !(h > 0.0) {
        return Err(Error::Domain {
            function: "local_coeffs",
            value: h,
            requirement: "h > 0",
        });
    }
    if h < MIN_USEFUL_STEP {
        log::warn!("local_coeffs: step {h:e} is small enough for roundoff to dominate");
    }
    let along = |l: f64| xi(StripPoint::from_lambda(l, t));
    let d1 = central_first(along, lambda, h);
    let d2 = central_second(along, lambda, h);
    Ok(LocalCoeffs {
        a: 0.5 * d2.re,
        b: d1.im,
        alpha: 0.5 * d2.im,
        beta: d1.re,
    })
}

/// Residuals of the four log-derivative identities at one point.
///
/// Modulus derivatives in one direction are paired with the complex
/// derivative taken along the other direction, so each residual exercises
/// the Cauchy–Riemann structure rather than repeating one difference.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LogDerivReport {
    /// (1/|f|) ∂|f|/∂σ − ℜ{f′/f}
    pub sigma_first: f64,
    /// (1/|f|) ∂|f|/∂t + ℑ{f′/f}
    pub t_first: f64,
    /// (1/|f|) ∂²|f|/∂σ² − ((1/|f|) ∂|f|/∂σ)² − ℜ{f″/f − (f′/f)²}
    pub sigma_second: f64,
    /// (1/|f|) ∂²|f|/∂t² − ((1/|f|) ∂|f|/∂t)² + ℜ{f″/f − (f′/f)²}
    pub t_second: f64,
    /// ℜ{f′/f} from the t-direction derivative.
    pub log_derivative: Complex64,
}

impl LogDerivReport {
    pub fn max_residual(&self) -> f64 {
        [self.sigma_first, self.t_first, self.sigma_second, self.t_second]
            .iter()
            .fold(0.0_f64, |m, r| m.max(r.abs()))
    }
}

/// |f| at or below this modulus is treated as a zero.
pub const NEAR_ZERO_MODULUS: f64 = 1e-8;

pub fn log_derivative_identities(
    f: impl Fn(Complex64) -> Complex64,
    s: Complex64,
    h: f64,
) -> Result<LogDerivReport> {
    let f0 = f(s);
    let modulus = f0.norm();
    if modulus < NEAR_ZERO_MODULUS {
        return Err(Error::NearZero {
            what: "log_derivative_identities",
            magnitude: modulus,
        });
    }
    let i = Complex64::i();
    let along_sigma = |x: f64| f(Complex64::new(x, s.im));
    let along_t = |y: f64| f(Complex64::new(s.re, y));

    // f′ = ∂f/∂σ = −i ∂f/∂t,   f″ = ∂²f/∂σ² = −∂²f/∂t²
    let d1_from_t = -i * central_first(along_t, s.im, h);
    let d2_from_t = -central_second(along_t, s.im, h);
    let d1_from_sigma = central_first(along_sigma, s.re, h);
    let d2_from_sigma = central_second(along_sigma, s.re, h);

    let ld_t = d1_from_t / f0;
    let curv_t = d2_from_t / f0 - ld_t * ld_t;
    let ld_sigma = d1_from_sigma / f0;
    let curv_sigma = d2_from_sigma / f0 - ld_sigma * ld_sigma;

    let mod_sigma = |x: f64| along_sigma(x).norm();
    let mod_t = |y: f64| along_t(y).norm();
    let m_s1 = central_first(mod_sigma, s.re, h) / modulus;
    let m_s2 = central_second(mod_sigma, s.re, h) / modulus;
    let m_t1 = central_first(mod_t, s.im, h) / modulus;
    let m_t2 = central_second(mod_t, s.im, h) / modulus;

    Ok(LogDerivReport {
        sigma_first: m_s1 - ld_t.re,
        t_first: m_t1 + ld_sigma.im,
        sigma_second: m_s2 - m_s1 * m_s1 - curv_t.re,
        t_second: m_t2 - m_t1 * m_t1 + curv_sigma.re,
        log_derivative: ld_t,
    })
}

pub fn xi_log_derivative_identities(s: StripPoint, h: f64) -> Result<LogDerivReport> {
    log_derivative_identities(|z| xi(StripPoint::from(z)), s.s(), h)
}

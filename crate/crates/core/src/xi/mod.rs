//! ξ(s), Ξ(t), g(s), ν(s) and the theta-integral route to ξ.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::quadrature::{integrate, QuadratureConfig};
use crate::specfun::{ln_gamma, zeta_raw, zeta_times_s_minus_1};
use crate::{Error, EvalResult, Result};

mod critical;
mod local;

pub use critical::{
    amplitude_asymptotic, g_components, g_n_term, g_n_term_cartesian, g_polar, hardy_z,
    phase_asymptotic, r_stirling, theta_rs, theta_rs_asymptotic, theta_rs_stirling,
    zero_count_estimate, AmpPhase, GPolar, ZeroCountEstimate, ZERO_COUNT_MIN_T,
};
pub use local::{
    local_coeffs, log_derivative_identities, xi_log_derivative_identities, LocalCoeffs,
    LogDerivReport, NEAR_ZERO_MODULUS,
};

/// A point s = σ + it of the complex plane, with λ = σ − 1/2 and the
/// complex time τ = t − iλ = −i(s − 1/2).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StripPoint {
    pub sigma: f64,
    pub t: f64,
}

impl StripPoint {
    pub fn new(sigma: f64, t: f64) -> Self {
        Self { sigma, t }
    }

    pub fn on_line(t: f64) -> Self {
        Self { sigma: 0.5, t }
    }

    pub fn from_lambda(lambda: f64, t: f64) -> Self {
        Self {
            sigma: 0.5 + lambda,
            t,
        }
    }

    pub fn s(&self) -> Complex64 {
        Complex64::new(self.sigma, self.t)
    }

    pub fn lambda(&self) -> f64 {
        self.sigma - 0.5
    }

    pub fn tau(&self) -> Complex64 {
        Complex64::new(self.t, -self.lambda())
    }

    /// The reflected point 1 − s.
    pub fn reflect(&self) -> Self {
        Self {
            sigma: 1.0 - self.sigma,
            t: -self.t,
        }
    }
}

impl From<Complex64> for StripPoint {
    fn from(s: Complex64) -> Self {
        Self { sigma: s.re, t: s.im }
    }
}

/// Left of this real part ξ is evaluated from Γ(1 − s), Γ(1 − s/2) and
/// ζ(1 − s) so that no series is summed with growing terms.
const LEFT_ROUTE_BELOW: f64 = -0.25;

/// ξ(s) = (s(s−1)/2) π^{−s/2} Γ(s/2) ζ(s).
///
/// Evaluated as π^{−s/2} Γ(1+s/2) · (s−1)ζ(s) so both removable
/// singularities at s = 0 and s = 1 are absent from the arithmetic.
pub fn xi(s: StripPoint) -> Complex64 {
    let z = s.s();
    if z.re >= LEFT_ROUTE_BELOW {
        (ln_gamma(1.0 + z * 0.5) - z * (0.5 * PI.ln())).exp() * zeta_times_s_minus_1(z)
    } else {
        // ξ(s) = ½ s(s−1) 2^s π^{s/2} Γ(1−s)/Γ(1−s/2) ζ(1−s)
        let ln_factor = z * 2f64.ln() + z * (0.5 * PI.ln()) + ln_gamma(1.0 - z) - ln_gamma(1.0 - z * 0.5);
        0.5 * z * (z - 1.0) * ln_factor.exp() * zeta_raw(1.0 - z)
    }
}

/// g(s) = (s(s−1)/2) π^{−s/2} Γ(s/2), so that ξ(s) = g(s) ζ(s).
///
/// Poles at s = −2, −4, …; finite (and zero at s = 1) elsewhere.
pub fn g_func(s: StripPoint) -> Complex64 {
    let z = s.s();
    (z - 1.0) * (ln_gamma(1.0 + z * 0.5) - z * (0.5 * PI.ln())).exp()
}

/// Ξ(t) = ξ(1/2 + it), real for real t.
#[allow(non_snake_case)]
pub fn Xi(t: f64) -> f64 {
    xi(StripPoint::on_line(t)).re
}

/// ν(s) = π^{−s/2} Γ(s/2) ζ(s), closed form.
pub fn nu(s: StripPoint) -> Result<Complex64> {
    let z = s.s();
    if z == Complex64::new(0.0, 0.0) || z == Complex64::new(1.0, 0.0) {
        return Err(Error::Pole {
            function: "nu",
            at: z.to_string(),
        });
    }
    // ξ = −(s(1−s)/2) ν
    Ok(xi(s) * 2.0 / (z * (z - 1.0)))
}

/// ψ(x) for x ≥ 1 at full accuracy; a handful of terms.
fn psi_at_least_one(x: f64) -> f64 {
    let mut sum = 0.0;
    for n in 1..64u32 {
        let term = (-PI * f64::from(n * n) * x).exp();
        sum += term;
        if term < 1e-17 * sum {
            break;
        }
    }
    sum
}

/// I(s) = ∫₁^∞ (x^{s/2} + x^{(1−s)/2}) ψ(x) dx/x, computed as
/// 2∫₀^{ω_max} (e^{sω} + e^{(1−s)ω}) ψ(e^{2ω}) dω.
fn theta_integral(z: Complex64, quad: &QuadratureConfig) -> Result<EvalResult<Complex64>> {
    let integrand = |w: f64| {
        let psi = psi_at_least_one((2.0 * w).exp());
        ((z * w).exp() + ((1.0 - z) * w).exp()) * (2.0 * psi)
    };
    integrate(integrand, 0.0, quad.omega_max, quad)
}

/// ν(s) = −1/(1−s) − 1/s + ∫₁^∞ (x^{s/2−1} + x^{(1−s)/2−1}) ψ(x) dx.
pub fn nu_integral(s: StripPoint, quad: &QuadratureConfig) -> Result<EvalResult<Complex64>> {
    let z = s.s();
    if z == Complex64::new(0.0, 0.0) || z == Complex64::new(1.0, 0.0) {
        return Err(Error::Pole {
            function: "nu_integral",
            at: z.to_string(),
        });
    }
    let integral = theta_integral(z, quad)?;
    Ok(integral.map(|i| -1.0 / (1.0 - z) - 1.0 / z + i))
}

/// ξ(s) = 1/2 − (s(1−s)/2) ∫₁^∞ ψ(x)(x^{s/2} + x^{(1−s)/2}) dx/x.
pub fn xi_integral(s: StripPoint, quad: &QuadratureConfig) -> Result<EvalResult<Complex64>> {
    let z = s.s();
    let weight = z * (1.0 - z) * 0.5;
    if weight.norm() == 0.0 {
        return Ok(EvalResult::new(Complex64::new(0.5, 0.0), 0.0));
    }
    let scaled = quad.with_abs_tol(quad.abs_tol / weight.norm().max(1.0));
    let integral = theta_integral(z, &scaled)?;
    Ok(EvalResult::new(
        0.5 - weight * integral.value,
        weight.norm() * integral.abs_err,
    ))
}

//! The spectral kernel S(ω), its components S_n(ω) and the Fourier pairs
//! linking them to Ξ(t), ξ(s) and g(s).

use std::cell::RefCell;
use std::f64::consts::PI;

use num_complex::Complex64;

use crate::quadrature::{integrate, QuadratureConfig};
use crate::specfun::{big_d, big_d_n, SeriesConfig};
use crate::xi::{g_func, StripPoint, Xi};
use crate::{Error, EvalResult, Result};

/// One sample of the spectrum.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectrumSample {
    pub omega: f64,
    pub value: f64,
}

/// S(ω) = 8π e^{5ω/2} D(e^{2ω}), even in ω.
pub fn spectral_kernel(omega: f64) -> Result<f64> {
    let d = big_d((2.0 * omega).exp(), &SeriesConfig::default())?;
    Ok(8.0 * PI * (2.5 * omega).exp() * d.value)
}

pub fn spectrum(omegas: &[f64]) -> Result<Vec<SpectrumSample>> {
    omegas
        .iter()
        .map(|&omega| Ok(SpectrumSample { omega, value: spectral_kernel(omega)? }))
        .collect()
}

fn check_n(n: u64, function: &'static str) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain {
            function,
            value: 0.0,
            requirement: "n >= 1",
        });
    }
    Ok(())
}

/// S_n(ω) = 8π e^{5ω/2} D_n(e^{2ω}).
pub fn spectral_component(n: u64, omega: f64) -> Result<f64> {
    check_n(n, "spectral_component")?;
    Ok(8.0 * PI * (2.5 * omega).exp() * big_d_n(n, (2.0 * omega).exp())?)
}

/// S_n(ω) = n^{−1/2} S_1(ω + log n).
pub fn spectral_component_scaled(n: u64, omega: f64) -> Result<f64> {
    check_n(n, "spectral_component_scaled")?;
    let n = n as f64;
    Ok(spectral_component(1, omega + n.ln())? / n.sqrt())
}

/// Ξ(t) = ∫₀^{ω_max} S(ω) cos(ωt) dω.
pub fn xi_from_spectrum(t: f64, quad: &QuadratureConfig) -> Result<EvalResult<f64>> {
    let failure = RefCell::new(None);
    let r = integrate(
        |w| match spectral_kernel(w) {
            Ok(s) => s * (w * t).cos(),
            Err(e) => {
                failure.borrow_mut().get_or_insert(e);
                0.0
            }
        },
        0.0,
        quad.omega_max,
        quad,
    );
    first_error(failure.into_inner(), r)
}

fn first_error<T>(failure: Option<Error>, r: Result<T>) -> Result<T> {
    match failure {
        Some(e) => Err(e),
        None => r,
    }
}

/// Largest |λ| accepted by [`xi_from_spectrum_complex`].
pub const MAX_COMPLEX_LAMBDA: f64 = 8.0;

/// ξ(s) = ∫₀^{ω_max} S(ω)[cos ωt cosh ωλ + i sin ωt sinh ωλ] dω.
pub fn xi_from_spectrum_complex(s: StripPoint, quad: &QuadratureConfig) -> Result<EvalResult<Complex64>> {
    let (lambda, t) = (s.lambda(), s.t);
    if lambda.abs() > MAX_COMPLEX_LAMBDA {
        return Err(Error::Domain {
            function: "xi_from_spectrum_complex",
            value: lambda,
            requirement: "|lambda| <= 8",
        });
    }
    let failure = RefCell::new(None);
    let r = integrate(
        |w| match spectral_kernel(w) {
            Ok(k) => {
                let (st, ct) = (w * t).sin_cos();
                Complex64::new(ct * (w * lambda).cosh(), st * (w * lambda).sinh()) * k
            }
            Err(e) => {
                failure.borrow_mut().get_or_insert(e);
                Complex64::new(0.0, 0.0)
            }
        },
        0.0,
        quad.omega_max,
        quad,
    );
    first_error(failure.into_inner(), r)
}

/// S(ω) = (2/π) ∫₀^{T_max} Ξ(t) cos(ωt) dt.
///
/// Logs a warning when |Ξ(T_max)| is above the absolute tolerance.
pub fn spectrum_from_xi(omega: f64, t_max: f64, quad: &QuadratureConfig) -> Result<EvalResult<f64>> {
    if !(t_max > 0.0) {
        return Err(Error::Domain {
            function: "spectrum_from_xi",
            value: t_max,
            requirement: "T_max > 0",
        });
    }
    let edge = Xi(t_max).abs();
    if edge > quad.abs_tol {
        log::warn!("spectrum_from_xi: |Xi({t_max})| = {edge:e} exceeds the tolerance; the truncated tail is not negligible");
    }
    let r = integrate(|t| Xi(t) * (omega * t).cos(), 0.0, t_max, quad)?;
    Ok(EvalResult::new(r.value * 2.0 / PI, r.abs_err * 2.0 / PI))
}

/// Below this ω the full-line transforms use a convergent series for the
/// tail instead of quadrature.
const TAIL_SPLIT: f64 = -2.0;

/// ∫_{−∞}^{W} S_n(ω) e^{cω} dω in closed form from the expansion of
/// e^{−πn²e^{2ω}}; requires ℜc > −5/2 and πn²e^{2W} small.
fn component_tail(n: f64, c: Complex64, w: f64) -> Complex64 {
    let n2 = n * n;
    let q = -PI * n2 * (2.0 * w).exp();
    let mut sum = Complex64::new(0.0, 0.0);
    let mut coeff = 1.0; // q^k / k!
    for k in 0..60 {
        let kf = f64::from(k);
        let a_hi = c + 4.5 + 2.0 * kf;
        let a_lo = c + 2.5 + 2.0 * kf;
        // e^{aW}/a with the e^{2kW} factor carried by q^k
        let term = coeff
            * (PI * n2 * n2 * ((c + 4.5) * w).exp() / a_hi
                - 1.5 * n2 * ((c + 2.5) * w).exp() / a_lo);
        sum += term;
        if term.norm() <= 1e-18 * sum.norm() {
            break;
        }
        coeff *= q / (kf + 1.0);
    }
    sum * (8.0 * PI)
}

/// ½ ∫_{−∞}^{∞} S_n(ω) e^{iωτ} dω for λ = ℜ(s) − 1/2 in the strip |λ| < 5/2.
fn component_transform(n: u64, s: StripPoint, quad: &QuadratureConfig, function: &'static str) -> Result<EvalResult<Complex64>> {
    check_n(n, function)?;
    let lambda = s.lambda();
    if !(lambda.abs() < 2.5) {
        return Err(Error::Domain {
            function,
            value: lambda,
            requirement: "|lambda| < 5/2",
        });
    }
    let nf = n as f64;
    // e^{iωτ} = e^{(λ + it)ω}
    let c = Complex64::new(lambda, s.t);
    let split = TAIL_SPLIT - nf.ln();
    let tail = component_tail(nf, c, split);
    let failure = RefCell::new(None);
    let body = integrate(
        |w| match big_d_n(n, (2.0 * w).exp()) {
            Ok(d) => (c * w).exp() * (8.0 * PI * (2.5 * w).exp() * d),
            Err(e) => {
                failure.borrow_mut().get_or_insert(e);
                Complex64::new(0.0, 0.0)
            }
        },
        split,
        quad.omega_max,
        quad,
    );
    let body = first_error(failure.into_inner(), body)?;
    Ok(EvalResult::new((body.value + tail) * 0.5, 0.5 * body.abs_err))
}

/// g(s) = ½ ∫_{−∞}^{∞} S_1(ω) e^{iωτ} dω, for |λ| < 5/2.
pub fn g_from_spectrum(s: StripPoint, quad: &QuadratureConfig) -> Result<EvalResult<Complex64>> {
    component_transform(1, s, quad, "g_from_spectrum")
}

/// ξ_n(s) = g(s) n^{−s}.
pub fn xi_component(n: u64, s: StripPoint) -> Result<Complex64> {
    check_n(n, "xi_component")?;
    Ok(g_func(s) * Complex64::new(n as f64, 0.0).powc(-s.s()))
}

/// ξ_n(s) = ½ ∫_{−∞}^{∞} S_n(ω) e^{iωτ} dω by quadrature of S_n itself.
pub fn xi_component_integral(n: u64, s: StripPoint, quad: &QuadratureConfig) -> Result<EvalResult<Complex64>> {
    component_transform(n, s, quad, "xi_component_integral")
}

/// ξ̄_n(s) = ½[ξ_n(s) + ξ_n(1 − s)].
pub fn xi_bar_component(n: u64, s: StripPoint) -> Result<Complex64> {
    Ok((xi_component(n, s)? + xi_component(n, s.reflect())?) * 0.5)
}

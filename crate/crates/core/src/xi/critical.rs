//! g(s) on the critical line: r(t), ϑ(t), A(t), φ(t), G, Ĝ, G_n, Hardy's Z
//! and the zero-count formula.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::specfun::{ln_gamma, zeta_raw};

fn ln_gamma_quarter(t: f64) -> Complex64 {
    ln_gamma(Complex64::new(0.25, 0.5 * t))
}

/// Riemann–Siegel theta ϑ(t) = ℑ log Γ(1/4 + it/2) − (t/2) log π.
///
/// The imaginary part comes from the continuous branch of log Γ, so no
/// phase unwrapping is needed.
pub fn theta_rs(t: f64) -> f64 {
    ln_gamma_quarter(t).im - 0.5 * t * PI.ln()
}

/// ϑ(t) ≈ (t/2) log(t/(2πe)) − π/8, error about 1/(48t).
pub fn theta_rs_asymptotic(t: f64) -> f64 {
    0.5 * t * (t / (2.0 * PI * std::f64::consts::E)).ln() - PI / 8.0
}

/// Stirling form ϑ(t) ≈ (t/2) log(t/(2πe)) − θ/4 + (t/4) log(1 + 1/(4t²)),
/// θ = arctan 2t. Its error decays like 1/(6t).
pub fn theta_rs_stirling(t: f64) -> f64 {
    0.5 * t * (t / (2.0 * PI * std::f64::consts::E)).ln() - (2.0 * t).atan() / 4.0
        + 0.25 * t * (1.0 + 0.25 / (t * t)).ln()
}

/// Hardy's Z(t) = ζ(1/2 + it) e^{iϑ(t)}, real for real t.
pub fn hardy_z(t: f64) -> f64 {
    let z = zeta_raw(Complex64::new(0.5, t)) * Complex64::from_polar(1.0, theta_rs(t));
    debug_assert!(z.im.abs() <= 1e-10 * (1.0 + z.re.abs()), "Z({t}) has imaginary residue {}", z.im);
    z.re
}

/// A complex number in polar form; the amplitude may be negative.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AmpPhase {
    pub amplitude: f64,
    pub phase: f64,
}

impl AmpPhase {
    pub fn to_complex(&self) -> Complex64 {
        Complex64::from_polar(self.amplitude, self.phase)
    }
}

/// g(1/2 + it) = r(t) e^{iϑ(t)} = A(t) e^{iφ(t)} with A = −r > 0, φ = ϑ + π.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GPolar {
    pub r: f64,
    pub theta: f64,
}

impl GPolar {
    pub fn amplitude(&self) -> f64 {
        -self.r
    }

    pub fn phase(&self) -> f64 {
        self.theta + PI
    }

    /// (r, ϑ)
    pub fn signed(&self) -> AmpPhase {
        AmpPhase {
            amplitude: self.r,
            phase: self.theta,
        }
    }

    /// (A, φ)
    pub fn positive(&self) -> AmpPhase {
        AmpPhase {
            amplitude: self.amplitude(),
            phase: self.phase(),
        }
    }
}

/// r(t) = −(1/2)(t² + 1/4) π^{−1/4} e^{a(t)}, a(t) = ℜ log Γ(1/4 + it/2),
/// together with ϑ(t).
pub fn g_polar(t: f64) -> GPolar {
    let lg = ln_gamma_quarter(t);
    GPolar {
        r: -0.5 * (t * t + 0.25) * PI.powf(-0.25) * lg.re.exp(),
        theta: lg.im - 0.5 * t * PI.ln(),
    }
}

/// Large-t amplitude A(t) ≈ 2^{−1/4} π^{1/4} e^{−πt/4} t^{7/4}.
pub fn amplitude_asymptotic(t: f64) -> f64 {
    2f64.powf(-0.25) * PI.powf(0.25) * (-PI * t / 4.0).exp() * t.powf(1.75)
}

/// Stirling estimate r(t) ≈ −2^{−1/4} π^{1/4} (t² + 1/4)^{7/8} e^{−1/4 − θt/2}, θ = arctan 2t.
pub fn r_stirling(t: f64) -> f64 {
    let theta = (2.0 * t).atan();
    -(2f64.powf(-0.25)) * PI.powf(0.25) * (t * t + 0.25).powf(0.875) * (-0.25 - 0.5 * theta * t).exp()
}

/// φ(t) ≈ (t/2) log(t/(2eπ)) + 7π/8 for t ≫ 1.
pub fn phase_asymptotic(t: f64) -> f64 {
    theta_rs_asymptotic(t) + PI
}

/// (G(t), Ĝ(t)) = (A cos φ, A sin φ), the real and imaginary parts of g(1/2 + it).
pub fn g_components(t: f64) -> (f64, f64) {
    let p = g_polar(t);
    let (sin, cos) = p.phase().sin_cos();
    (p.amplitude() * cos, p.amplitude() * sin)
}

/// G_n(t) = A(t) n^{−1/2} cos(φ(t) − t log n).
pub fn g_n_term(n: u64, t: f64) -> f64 {
    assert!(n >= 1, "G_n is defined for n >= 1");
    let p = g_polar(t);
    let ln_n = (n as f64).ln();
    p.amplitude() / (n as f64).sqrt() * (p.phase() - t * ln_n).cos()
}

/// G_n(t) = G(t) n^{−1/2} cos(t log n) + Ĝ(t) n^{−1/2} sin(t log n).
pub fn g_n_term_cartesian(n: u64, t: f64) -> f64 {
    assert!(n >= 1, "G_n is defined for n >= 1");
    let (g, g_hat) = g_components(t);
    let (sin, cos) = (t * (n as f64).ln()).sin_cos();
    (g * cos + g_hat * sin) / (n as f64).sqrt()
}

/// ϑ(t) increases from t ≈ 2π on; below it the count formula has no meaning.
pub const ZERO_COUNT_MIN_T: f64 = 2.0 * PI;

/// N(T) = φ(T)/π and its asymptotic form (T/2π) log(T/2πe) + 7/8.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ZeroCountEstimate {
    pub exact_phase: f64,
    pub asymptotic: f64,
    pub valid: bool,
}

pub fn zero_count_estimate(t: f64) -> ZeroCountEstimate {
    let phase = theta_rs(t) + PI;
    let asymptotic = t / (2.0 * PI) * (t / (2.0 * PI * std::f64::consts::E)).ln() + 0.875;
    ZeroCountEstimate {
        exact_phase: phase / PI,
        asymptotic,
        valid: t > ZERO_COUNT_MIN_T,
    }
}

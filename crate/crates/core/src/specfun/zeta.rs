use std::f64::consts::PI;

use num_complex::Complex64;

use super::{ln_gamma, SeriesConfig, BERNOULLI_EVEN};
use crate::{Error, EvalResult, Result};

/// Largest |t| for which ζ (and everything built on it) is considered validated.
pub const ZETA_MAX_HEIGHT: f64 = 300.0;

const SIGMA_VALIDATED: (f64, f64) = (-5.0, 6.0);

/// Below this real part ζ is obtained from ζ(1 − s) through the functional
/// equation instead of summing growing terms n^{-s}.
const REFLECT_BELOW: f64 = -0.25;

struct EulerMaclaurin {
    /// Σ_{n<N} n^{-s} + N^{-s}/2 + Bernoulli corrections.
    head: Complex64,
    /// N^{1-s}; ζ = head + tail/(s-1).
    tail: Complex64,
    abs_err: f64,
    converged: bool,
}

fn euler_maclaurin(s: Complex64, cfg: &SeriesConfig) -> EulerMaclaurin {
    let cutoff = (s.im.abs().ceil() as usize).max(20);
    let n = cutoff as f64;
    let mut head = Complex64::new(0.0, 0.0);
    let mut magnitude = 0.0;
    for k in 1..cutoff {
        let term = (-s * (k as f64).ln()).exp();
        magnitude += term.norm();
        head += term;
    }
    let ln_n = n.ln();
    let n_pow = (-s * ln_n).exp();
    head += 0.5 * n_pow;

    // B_{2k}/(2k)! · s(s+1)…(s+2k-2) · N^{1-s-2k}
    let mut rising = s;
    let mut power = n_pow / n;
    let mut factorial = 2.0;
    let mut last = f64::INFINITY;
    let mut converged = false;
    let max_corrections = cfg.max_terms.min(BERNOULLI_EVEN.len());
    for (j, b) in BERNOULLI_EVEN.iter().enumerate().take(max_corrections) {
        let term = rising * power * (b / factorial);
        head += term;
        last = term.norm();
        if last < cfg.abs_tol * (1.0 + head.norm()) {
            converged = true;
            break;
        }
        let k = (j + 1) as f64;
        rising *= (s + 2.0 * k - 1.0) * (s + 2.0 * k);
        power /= n * n;
        factorial *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
    }
    EulerMaclaurin {
        head,
        tail: n_pow * n,
        abs_err: last + f64::EPSILON * magnitude,
        converged,
    }
}

/// ln χ(s) where ζ(s) = χ(s) ζ(1 − s), χ(s) = 2^s π^{s−1} sin(πs/2) Γ(1−s).
fn ln_chi(s: Complex64) -> Complex64 {
    s * 2f64.ln() + (s - 1.0) * PI.ln() + ln_sin(s * (PI / 2.0)) + ln_gamma(1.0 - s)
}

/// A logarithm of sin w (any branch) that does not overflow for large |ℑw|.
fn ln_sin(w: Complex64) -> Complex64 {
    if w.im.abs() < 20.0 {
        return w.sin().ln();
    }
    if w.im < 0.0 {
        return ln_sin(w.conj()).conj();
    }
    // sin w = (i/2) e^{-iw} (1 - e^{2iw})
    let i = Complex64::i();
    (i * 0.5).ln() - i * w + (1.0 - (2.0 * i * w).exp()).ln()
}

fn in_validated_region(s: Complex64) -> bool {
    s.re >= SIGMA_VALIDATED.0 && s.re <= SIGMA_VALIDATED.1 && s.im.abs() <= ZETA_MAX_HEIGHT
}

/// Riemann ζ(s) by analytic continuation.
///
/// Euler–Maclaurin summation with cutoff max(20, |t|) in the right of the
/// strip; for ℜs < −1/4 the functional equation maps the evaluation to
/// ℜ(1−s) > 5/4. `degraded` is set outside −5 ≤ σ ≤ 6, |t| ≤ 300.
pub fn zeta(s: Complex64, cfg: &SeriesConfig) -> Result<EvalResult<Complex64>> {
    if s == Complex64::new(1.0, 0.0) {
        return Err(Error::Pole {
            function: "zeta",
            at: s.to_string(),
        });
    }
    let mut out = if s.re < REFLECT_BELOW {
        let em = euler_maclaurin(1.0 - s, cfg);
        let reflected = em.head - em.tail / s;
        let chi = ln_chi(s).exp();
        EvalResult {
            value: chi * reflected,
            abs_err: chi.norm() * em.abs_err,
            degraded: !em.converged,
        }
    } else {
        let em = euler_maclaurin(s, cfg);
        EvalResult {
            value: em.head + em.tail / (s - 1.0),
            abs_err: em.abs_err,
            degraded: !em.converged,
        }
    };
    out.degraded |= !in_validated_region(s);
    Ok(out)
}

pub(crate) fn zeta_raw(s: Complex64) -> Complex64 {
    if s.re < REFLECT_BELOW {
        let em = euler_maclaurin(1.0 - s, &SeriesConfig::default());
        ln_chi(s).exp() * (em.head - em.tail / s)
    } else {
        let em = euler_maclaurin(s, &SeriesConfig::default());
        em.head + em.tail / (s - 1.0)
    }
}

/// (s − 1) ζ(s), finite at s = 1 where it equals 1.
///
/// Only used for ℜs ≥ −1/4. The Euler–Maclaurin tail N^{1−s}/(s−1) is
/// multiplied through, so the pole never forms.
pub(crate) fn zeta_times_s_minus_1(s: Complex64) -> Complex64 {
    let em = euler_maclaurin(s, &SeriesConfig::default());
    (s - 1.0) * em.head + em.tail
}

/// ζ′(s)/ζ(s) by a 5-point central difference along the real axis.
pub fn zeta_log_derivative(s: Complex64, h: f64) -> Result<Complex64> {
    let z = zeta_raw(s);
    if z.norm() < 1e-12 {
        return Err(Error::NearZero {
            what: "zeta",
            magnitude: z.norm(),
        });
    }
    if (s - 1.0).norm() <= 2.0 * h {
        return Err(Error::Pole {
            function: "zeta_log_derivative",
            at: s.to_string(),
        });
    }
    let d = crate::diff::central_first(|x| zeta_raw(Complex64::new(x, s.im)), s.re, h);
    Ok(d / z)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn z(s: Complex64) -> Complex64 {
        zeta(s, &SeriesConfig::default()).unwrap().value
    }

    #[test]
    fn classical_values() {
        assert!((z(c(2.0, 0.0)).re - PI * PI / 6.0).abs() < 1e-15);
        assert!((z(c(4.0, 0.0)).re - PI.powi(4) / 90.0).abs() < 1e-15);
        assert!((z(c(0.0, 0.0)).re + 0.5).abs() < 1e-15);
        assert!((z(c(-1.0, 0.0)).re + 1.0 / 12.0).abs() < 1e-15);
        assert!(z(c(-2.0, 0.0)).norm() < 1e-15);
        assert!((z(c(0.5, 0.0)).re - -1.460_354_508_809_586_8).abs() < 1e-14);
    }

    #[test]
    fn direct_series_agreement() {
        let s = c(3.0, 2.0);
        let direct: Complex64 = (1..200_000).map(|n| (-s * (n as f64).ln()).exp()).sum();
        assert!((direct - z(s)).norm() < 1e-10);
    }

    #[test]
    fn reference_values() {
        // mpmath.zeta at 40 digits.
        let cases = [
            (c(0.5, 14.0), c(0.022_241_142_609_993_59, -0.103_258_123_266_450_06), 1e-12),
            (c(0.5, 50.0), c(-0.081_712_108_320_979_98, 0.330_792_194_038_661_3), 1e-12),
            (c(-3.5, 7.0), c(-0.413_333_071_217_888_2, 1.841_826_461_970_122_8), 1e-12),
            (c(6.0, -2.0), c(1.001_743_049_257_989_2, 0.016_531_883_079_237_91), 1e-14),
            (c(2.0, 100.0), c(1.190_780_408_775_217, -0.053_890_959_354_260_46), 1e-12),
            (c(0.5, 199.0), c(1.958_764_438_905_907_5, 4.064_941_583_987_811), 1e-11),
            (c(0.5, 290.0), c(0.618_970_766_161_863_5, 2.235_715_771_662_135_4), 1e-11),
            (c(-5.0, 30.0), c(-5_523.222_802_313_545, -607.613_215_793_083_7), 1e-9),
        ];
        for (s, want, tol) in cases {
            let got = z(s);
            assert!((got - want).norm() < tol, "zeta({s}) = {got}, want {want}");
        }
    }

    #[test]
    fn pole_and_flags() {
        assert!(matches!(zeta(c(1.0, 0.0), &SeriesConfig::default()), Err(Error::Pole { .. })));
        assert!(!zeta(c(0.5, 100.0), &SeriesConfig::default()).unwrap().degraded);
        assert!(zeta(c(0.5, 400.0), &SeriesConfig::default()).unwrap().degraded);
        assert!(zeta(c(-8.0, 1.0), &SeriesConfig::default()).unwrap().degraded);
    }

    #[test]
    fn fused_product_near_pole() {
        let g = crate::EULER_GAMMA;
        assert!((zeta_times_s_minus_1(c(1.0, 0.0)) - 1.0).norm() < 1e-15);
        // Laurent form 1 + γ(s-1) - γ₁(s-1)² + (γ₂/2)(s-1)³ near s = 1.
        let gamma1 = -0.072_815_845_483_676_72;
        let gamma2 = -0.009_690_363_192_872_318;
        for d in [c(1e-4, 0.0), c(0.0, 5e-4), c(-3e-4, 2e-4)] {
            let laurent = 1.0 + g * d - gamma1 * d * d + 0.5 * gamma2 * d * d * d;
            assert!((zeta_times_s_minus_1(1.0 + d) - laurent).norm() < 1e-13);
        }
    }

    #[test]
    fn log_derivative_at_zero() {
        let r = zeta_log_derivative(c(0.0, 0.0), 1e-3).unwrap();
        assert!((r.re - (2.0 * PI).ln()).abs() < 1e-10);
    }
}

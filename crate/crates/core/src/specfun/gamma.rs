use std::f64::consts::PI;

use num_complex::Complex64;

use super::{is_nonpositive_integer, BERNOULLI_EVEN};
use crate::{Error, Result};

/// Real part below which the argument is shifted up by the recurrence before
/// the asymptotic series is applied.
const SHIFT_RADIUS: f64 = 10.0;

/// Principal branch of log Γ(z).
///
/// Stirling's series after shifting ℜz up to [`SHIFT_RADIUS`]. The shift
/// subtracts a sum of principal logarithms, which keeps the branch continuous
/// off the negative real axis without any reflection step.
pub fn log_gamma(z: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(z) {
        return Err(Error::Pole {
            function: "log_gamma",
            at: z.to_string(),
        });
    }
    Ok(ln_gamma(z))
}

pub(crate) fn ln_gamma(z: Complex64) -> Complex64 {
    let mut w = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while w.re < SHIFT_RADIUS {
        shift += w.ln();
        w += 1.0;
    }
    stirling(w) - shift
}

fn stirling(z: Complex64) -> Complex64 {
    // (z - 1/2)(ln z - 1) - 1/2 keeps the large terms from cancelling.
    let half_ln_2pi = 0.5 * (2.0 * PI).ln();
    let mut acc = (z - 0.5) * (z.ln() - 1.0) - 0.5 + half_ln_2pi;
    let inv = z.inv();
    let inv2 = inv * inv;
    let mut power = inv;
    for (k, b) in BERNOULLI_EVEN.iter().enumerate().take(10) {
        let k = (k + 1) as f64;
        let term = power * (b / (2.0 * k * (2.0 * k - 1.0)));
        acc += term;
        if term.norm() < 1e-18 * acc.norm() {
            break;
        }
        power *= inv2;
    }
    acc
}

/// Digamma Ψ(z) = Γ′(z)/Γ(z).
pub fn digamma(z: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(z) {
        return Err(Error::Pole {
            function: "digamma",
            at: z.to_string(),
        });
    }
    let mut w = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while w.re < SHIFT_RADIUS {
        shift += w.inv();
        w += 1.0;
    }
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut acc = w.ln() - 0.5 * inv;
    let mut power = inv2;
    for (k, b) in BERNOULLI_EVEN.iter().enumerate().take(10) {
        let term = power * (b / (2.0 * (k + 1) as f64));
        acc -= term;
        if term.norm() < 1e-18 * acc.norm() {
            break;
        }
        power *= inv2;
    }
    Ok(acc - shift)
}

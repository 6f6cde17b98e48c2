use std::f64::consts::PI;

use super::SeriesConfig;
use crate::{Error, EvalResult, Result};

/// Termwise series Σ (−πn²)^order e^{−n²πx}; accurate for x ≥ 1.
fn psi_series(x: f64, order: u32, cfg: &SeriesConfig) -> Result<EvalResult<f64>> {
    let mut sum = 0.0;
    for n in 1..=cfg.max_terms {
        let n2 = (n * n) as f64;
        let term = (-PI * n2).powi(order as i32) * (-PI * n2 * x).exp();
        sum += term;
        if term.abs() < cfg.abs_tol * (1.0 + sum.abs()) {
            return Ok(EvalResult::new(sum, term.abs()));
        }
    }
    Err(Error::Truncation {
        function: "theta_psi",
        terms: cfg.max_terms,
        last_term: (-PI * (cfg.max_terms * cfg.max_terms) as f64 * x).exp(),
    })
}

/// ψ(x) = Σ e^{−n²πx} and its first two derivatives.
///
/// For x < 1 the value is rebuilt from ψ(1/x) with Jacobi's identity
/// 2ψ(x) + 1 = x^{−1/2}(2ψ(1/x) + 1), differentiated termwise.
pub fn theta_psi(x: f64, order: u32, cfg: &SeriesConfig) -> Result<EvalResult<f64>> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain {
            function: "theta_psi",
            value: x,
            requirement: "x > 0",
        });
    }
    if order > 2 {
        return Err(Error::Domain {
            function: "theta_psi",
            value: order as f64,
            requirement: "order in {0, 1, 2}",
        });
    }
    if x >= 1.0 {
        return psi_series(x, order, cfg);
    }
    let y = x.recip();
    let p0 = psi_series(y, 0, cfg)?;
    let shifted = p0.value + 0.5;
    let r = x.sqrt().recip();
    Ok(match order {
        0 => EvalResult::new(r * shifted - 0.5, r * p0.abs_err),
        1 => {
            let p1 = psi_series(y, 1, cfg)?;
            let value = -0.5 * r.powi(3) * shifted - r.powi(5) * p1.value;
            let err = 0.5 * r.powi(3) * p0.abs_err + r.powi(5) * p1.abs_err;
            EvalResult::new(value, err)
        }
        _ => {
            let p1 = psi_series(y, 1, cfg)?;
            let p2 = psi_series(y, 2, cfg)?;
            let value = 0.75 * r.powi(5) * shifted + 3.0 * r.powi(7) * p1.value + r.powi(9) * p2.value;
            let err = 0.75 * r.powi(5) * p0.abs_err
                + 3.0 * r.powi(7) * p1.abs_err
                + r.powi(9) * p2.abs_err;
            EvalResult::new(value, err)
        }
    })
}

fn big_d_series(x: f64, cfg: &SeriesConfig) -> Result<EvalResult<f64>> {
    let mut sum = 0.0;
    for n in 1..=cfg.max_terms {
        let term = d_term(n as f64, x);
        sum += term;
        // Terms change sign only while n²πx < 3/2, i.e. never for x ≥ 1.
        if term.abs() < cfg.abs_tol * (1.0 + sum.abs()) && (n * n) as f64 * PI * x > 1.5 {
            return Ok(EvalResult::new(sum, term.abs()));
        }
    }
    Err(Error::Truncation {
        function: "big_d",
        terms: cfg.max_terms,
        last_term: d_term(cfg.max_terms as f64, x).abs(),
    })
}

fn d_term(n: f64, x: f64) -> f64 {
    let n2 = n * n;
    n2 * (n2 * PI * x - 1.5) * (-n2 * PI * x).exp()
}

/// D(x) = Σ n²(n²πx − 3/2)e^{−n²πx} = (xψ″(x) + (3/2)ψ′(x))/π.
///
/// Jacobi's identity gives D(x) = x^{−5/2} D(1/x) exactly, which is how
/// x < 1 is evaluated; the route through ψ′ and ψ″ would cancel to
/// roundoff as x → 0.
pub fn big_d(x: f64, cfg: &SeriesConfig) -> Result<EvalResult<f64>> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain {
            function: "big_d",
            value: x,
            requirement: "x > 0",
        });
    }
    if x >= 1.0 {
        big_d_series(x, cfg)
    } else {
        let scale = x.powf(-2.5);
        Ok(big_d_series(x.recip(), cfg)?.map(|v| scale * v)).map(|mut r| {
            r.abs_err *= scale;
            r
        })
    }
}

/// Single term D_n(x) = n²(n²πx − 3/2)e^{−n²πx}.
pub fn big_d_n(n: u64, x: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::Domain {
            function: "big_d_n",
            value: 0.0,
            requirement: "n >= 1",
        });
    }
    if !(x > 0.0) {
        return Err(Error::Domain {
            function: "big_d_n",
            value: x,
            requirement: "x > 0",
        });
    }
    Ok(d_term(n as f64, x))
}

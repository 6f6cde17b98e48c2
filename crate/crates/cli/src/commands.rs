//! CSV producers. Every table starts with `#` header lines naming the
//! columns; numbers carry 17 significant digits.

use std::fmt::Write as _;

use rayon::prelude::*;
use xilab::specfun::zeta;
use xilab::spectral::{spectral_component, spectral_kernel, spectrum_from_xi};
use xilab::xi::{hardy_z, theta_rs, xi, Xi};
use xilab::zeros::{find_zeros, gram_law_report, gram_points, to_zero_table, ZeroHit};
use xilab::{Complex64, SeriesConfig, StripPoint};

use crate::parse::Range;
use crate::Settings;

pub fn num(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn eval(points: &[Complex64]) -> String {
    let rows: Vec<String> = points
        .par_iter()
        .map(|&s| {
            let p = StripPoint::from(s);
            let v = xi(p);
            let (abs_zeta, zeta_err, degraded) = match zeta(s, &SeriesConfig::default()) {
                Ok(r) => (r.value.norm(), r.abs_err, r.degraded),
                Err(_) => (f64::INFINITY, f64::NAN, false),
            };
            [
                num(s.re),
                num(s.im),
                num(v.re),
                num(v.im),
                num(Xi(s.im)),
                num(hardy_z(s.im)),
                num(theta_rs(s.im)),
                num(abs_zeta),
                num(zeta_err),
                u8::from(degraded).to_string(),
            ]
            .join(",")
        })
        .collect();
    let mut out = String::from(
        "# xi(s) at s = sigma + it; Xi, Z and theta are evaluated at the ordinate t\n\
         # zeta_abs_err is the series error estimate; degraded = 1 outside the validated region\n\
         sigma,t,re_xi,im_xi,Xi_t,Z_t,theta_t,abs_zeta,zeta_abs_err,degraded\n",
    );
    for r in rows {
        out.push_str(&r);
        out.push('\n');
    }
    out
}

pub fn spectrum(omegas: &[f64], settings: &Settings) -> anyhow::Result<String> {
    let rows: Vec<anyhow::Result<String>> = omegas
        .par_iter()
        .map(|&w| {
            let inverse = spectrum_from_xi(w, settings.t_max, &settings.quad)?.value;
            Ok([
                num(w),
                num(spectral_kernel(w)?),
                num(spectral_component(1, w)?),
                num(spectral_kernel(-w)?),
                num(inverse),
            ]
            .join(","))
        })
        .collect();
    let mut out = format!(
        "# S(omega) = 8 pi e^(5 omega/2) D(e^(2 omega)); S1 its n = 1 component; S_neg = S(-omega)\n\
         # S_inverse = (2/pi) int_0^{} Xi(t) cos(omega t) dt\n\
         omega,S,S1,S_neg,S_inverse\n",
        settings.t_max
    );
    for r in rows {
        out.push_str(&r?);
        out.push('\n');
    }
    Ok(out)
}

fn scan(range: &Range) -> anyhow::Result<Vec<ZeroHit>> {
    Ok(find_zeros(range.lo, range.hi, range.step.unwrap_or(0.05))?)
}

pub fn zeros(range: &Range) -> anyhow::Result<String> {
    let hits = scan(range)?;
    let mut out = format!(
        "# zeros of Hardy Z on [{}, {}], grid step {}\n\
         n,ordinate,bracket_width,refinement_iters\n",
        range.lo,
        range.hi,
        range.step.unwrap_or(0.05)
    );
    for (k, h) in hits.iter().enumerate() {
        let _ = writeln!(out, "{},{},{},{}", k + 1, num(h.ordinate), num(h.bracket_width), h.refinement_iters);
    }
    Ok(out)
}

pub fn gram((lo, hi): (i64, i64), law: bool) -> anyhow::Result<String> {
    let points = gram_points(lo, hi)?;
    let mut out = String::from("# Gram points: theta(g_n) = n pi\n");
    if !law {
        out.push_str("n,g_n,theta_residual\n");
        for p in &points {
            let residual = theta_rs(p.g_n) - p.index as f64 * std::f64::consts::PI;
            let _ = writeln!(out, "{},{},{}", p.index, num(p.g_n), num(residual));
        }
        return Ok(out);
    }
    if hi <= lo {
        anyhow::bail!("--law needs at least two Gram points");
    }
    let t_lo = (points[0].g_n - 1.0).max(0.0);
    let t_hi = points[points.len() - 1].g_n + 1.0;
    let hits = find_zeros(t_lo, t_hi, 0.05)?;
    let report = gram_law_report(lo, hi, &hits)?;
    let _ = writeln!(
        out,
        "# zeros per interval [g_n, g_n+1): {} with one, {} empty, {} multiple",
        report.good, report.empty, report.multiple
    );
    out.push_str("n,g_n,g_next,zeros\n");
    for i in &report.intervals {
        let _ = writeln!(out, "{},{},{},{}", i.index, num(i.lo), num(i.hi), i.zeros);
    }
    Ok(out)
}

pub fn export_zeros(range: &Range) -> anyhow::Result<String> {
    let hits = scan(range)?;
    let label = format!("xilab export-zeros: Hardy Z scan of [{}, {}]", range.lo, range.hi);
    Ok(to_zero_table(&hits, label)?.to_text())
}

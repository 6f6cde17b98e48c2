//! Verification suites. Each check prints one PASS/FAIL line; the last line
//! is a machine-readable summary.

use std::io::Write;

use anyhow::bail;
use xilab::diff::{central_first, central_second, DEFAULT_STEP};
use xilab::hadamard::{
    b_closed, b_from_zeros, log_deriv_sum, monotonicity_scan, reflection_cancellation, xi_partial_product,
    TailEstimate, ZeroTable,
};
use xilab::specfun::zeta;
use xilab::spectral::{
    g_from_spectrum, spectral_component, spectral_component_scaled, spectral_kernel, spectrum_from_xi,
    xi_from_spectrum, xi_from_spectrum_complex,
};
use xilab::xi::{g_func, local_coeffs, xi, xi_integral, xi_log_derivative_identities, Xi};
use xilab::{SeriesConfig, StripPoint};

use crate::{Settings, Suite};

struct Check {
    name: String,
    error: f64,
    tol: f64,
}

impl Check {
    fn new(name: impl Into<String>, error: f64, tol: f64) -> Self {
        Self {
            name: name.into(),
            error,
            tol,
        }
    }

    fn passed(&self) -> bool {
        self.error <= self.tol
    }
}

fn max_of(values: impl Iterator<Item = f64>) -> f64 {
    values.fold(0.0, |m, v| if v.is_nan() || m.is_nan() { f64::NAN } else { m.max(v) })
}

fn strip_grid() -> Vec<StripPoint> {
    let mut out = Vec::new();
    for sigma in [-1.0, -0.3, 0.2, 0.8, 1.6] {
        for t in [0.0, 3.7, 14.0, 25.0, 48.0] {
            out.push(StripPoint::new(sigma, t));
        }
    }
    out
}

fn lambda_grid() -> Vec<StripPoint> {
    let mut out = Vec::new();
    for lambda in [-1.5, -0.75, 0.0, 0.75, 1.5] {
        for t in [0.0, 7.5, 15.0, 22.5, 30.0] {
            out.push(StripPoint::from_lambda(lambda, t));
        }
    }
    out
}

fn identities(settings: &Settings) -> anyhow::Result<Vec<Check>> {
    let mut checks = Vec::new();
    let grid = strip_grid();
    let e = max_of(grid.iter().map(|&s| {
        let v = xi(s);
        (xi(s.reflect()) - v).norm() / (1.0 + v.norm())
    }));
    checks.push(Check::new("reflection xi(1-s) = xi(s)", e, 1e-11));

    let e = max_of((0..=140).map(|k| {
        let v = xi(StripPoint::on_line(0.7 * f64::from(k)));
        v.im.abs() / (1.0 + v.re.abs())
    }));
    checks.push(Check::new("realness on the critical line", e, 1e-12));

    let e = (xi(StripPoint::new(0.0, 0.0)) - 0.5).norm().max((xi(StripPoint::new(1.0, 0.0)) - 0.5).norm());
    checks.push(Check::new("xi(0) = xi(1) = 1/2", e, 1e-12));

    let cfg = SeriesConfig::default();
    let mut errs = Vec::new();
    for &s in grid.iter().filter(|s| s.s() != xilab::Complex64::new(1.0, 0.0)) {
        let z = zeta(s.s(), &cfg)?.value;
        let v = xi(s);
        errs.push((g_func(s) * z - v).norm() / v.norm());
    }
    checks.push(Check::new("factorization xi = g zeta", max_of(errs.into_iter()), 1e-11));

    let mut errs = Vec::new();
    for s in [StripPoint::new(0.8, 7.0), StripPoint::new(2.0, 0.0), StripPoint::new(-0.5, 12.0)] {
        errs.push((xi_integral(s, &settings.quad)?.value - xi(s)).norm());
    }
    checks.push(Check::new("theta-integral route to xi", max_of(errs.into_iter()), 1e-10));

    let h = DEFAULT_STEP;
    let mut e_b = Vec::new();
    let mut e_a = Vec::new();
    for t in [5.0, 10.0, 20.0] {
        let k = local_coeffs(0.0, t, h)?;
        let d1 = central_first(Xi, t, h);
        let d2 = central_second(Xi, t, h);
        e_b.push((k.b + d1).abs() / (1.0 + d1.abs()));
        e_a.push((k.a + 0.5 * d2).abs() / (1.0 + d2.abs()));
    }
    checks.push(Check::new("local coefficient b(0,t) = -Xi'(t)", max_of(e_b.into_iter()), 1e-5));
    checks.push(Check::new("local coefficient a(0,t) = -Xi''(t)/2", max_of(e_a.into_iter()), 1e-4));

    let mut errs = Vec::new();
    for sigma in [-0.8, 0.1, 0.9, 1.7] {
        for t in [2.0, 9.0, 17.0] {
            errs.push(xi_log_derivative_identities(StripPoint::new(sigma, t), h)?.max_residual());
        }
    }
    checks.push(Check::new("log-derivative identities", max_of(errs.into_iter()), 1e-5));
    Ok(checks)
}

fn fourier(settings: &Settings) -> anyhow::Result<Vec<Check>> {
    let q = &settings.quad;
    let mut checks = Vec::new();

    let mut errs = Vec::new();
    for t in 0..=40 {
        let t = f64::from(t);
        errs.push((xi_from_spectrum(t, q)?.value - Xi(t)).abs());
    }
    checks.push(Check::new("Xi(t) from S, t = 0..40", max_of(errs.into_iter()), 1e-8));

    let grid = lambda_grid();
    let mut errs = Vec::new();
    for &s in &grid {
        errs.push((xi_from_spectrum_complex(s, q)?.value - xi(s)).norm());
    }
    checks.push(Check::new("xi(s) from S, complex time", max_of(errs.into_iter()), 1e-8));

    let mut errs = Vec::new();
    for k in 0..=8 {
        let w = 0.25 * f64::from(k);
        errs.push((spectrum_from_xi(w, settings.t_max, q)?.value - spectral_kernel(w)?).abs());
    }
    checks.push(Check::new("S(omega) from Xi, omega = 0..2", max_of(errs.into_iter()), 1e-5));

    let mut errs = Vec::new();
    for &s in &grid {
        errs.push((g_from_spectrum(s, q)?.value - g_func(s)).norm());
    }
    checks.push(Check::new("g(s) as transform of S_1", max_of(errs.into_iter()), 1e-7));

    let mut errs = Vec::new();
    for k in 1..=300 {
        let w = 0.01 * f64::from(k);
        let (p, m) = (spectral_kernel(w)?, spectral_kernel(-w)?);
        errs.push(if p == m { 0.0 } else { (p - m).abs() / p.abs() });
    }
    checks.push(Check::new("symmetry S(-omega) = S(omega)", max_of(errs.into_iter()), 1e-11));

    let mut errs = Vec::new();
    for n in 1..=50u64 {
        for k in -20..=60 {
            let w = 0.05 * f64::from(k);
            let (a, b) = (spectral_component(n, w)?, spectral_component_scaled(n, w)?);
            if a.abs() >= f64::MIN_POSITIVE {
                errs.push((a - b).abs() / a.abs());
            }
        }
    }
    checks.push(Check::new("scaling law S_n(w) = S_1(w + log n)/sqrt(n)", max_of(errs.into_iter()), 1e-12));

    let mut lowest = f64::INFINITY;
    for k in 0..=250 {
        lowest = lowest.min(spectral_kernel(0.01 * f64::from(k))?);
    }
    checks.push(Check::new("positivity of S on [0, 2.5]", if lowest > 0.0 { 0.0 } else { 1.0 }, 0.0));
    Ok(checks)
}

fn hadamard(z: &ZeroTable) -> anyhow::Result<Vec<Check>> {
    let mut checks = Vec::new();
    let target = Xi(0.0);
    let half = StripPoint::new(0.5, 0.0);
    let n = z.len().min(100);
    let p = xi_partial_product(half, z, n)?.re;
    checks.push(Check::new(format!("product at s = 1/2, N = {n}"), (p / target - 1.0).abs(), 0.02));
    let p = xi_partial_product(half, z, z.len())?.re;
    checks.push(Check::new(format!("product at s = 1/2, N = {}", z.len()), (p / target - 1.0).abs(), 0.005));

    let two = StripPoint::new(2.0, 0.0);
    let fd = central_first(|x| xi(StripPoint::new(x, 0.0)).re, 2.0, DEFAULT_STEP) / xi(two).re;
    let n = z.len().min(1000);
    let sum = log_deriv_sum(two, z, n, TailEstimate::integral())?.re;
    checks.push(Check::new(format!("xi'/xi(2) from N = {n} zeros + tail"), (sum - fd).abs(), 1e-3));

    let b = b_from_zeros(z, z.len(), TailEstimate::integral())?;
    checks.push(Check::new("B from zeros + tail", (b - b_closed().0).abs(), 1e-3));

    let n = z.len().min(1000);
    let e = max_of(
        [StripPoint::new(2.0, 3.0), StripPoint::new(-0.4, 17.0)]
            .iter()
            .map(|&s| reflection_cancellation(s, z, n).map_or(f64::NAN, |v| v.norm())),
    );
    checks.push(Check::new("reflection pairs cancel", e, 1e-14));

    let mut imag = 0.0_f64;
    for s in [-1.0, 0.3, 2.0] {
        let s = StripPoint::new(s, 0.0);
        imag = imag.max(xi_partial_product(s, z, z.len())?.im.abs());
        imag = imag.max(log_deriv_sum(s, z, z.len(), TailEstimate::None)?.im.abs());
    }
    checks.push(Check::new("realness for real s", imag, 1e-14));
    Ok(checks)
}

fn monotonic(z: &ZeroTable) -> anyhow::Result<Vec<Check>> {
    let mut checks = Vec::new();
    for (label, sigma) in [("right", (0.6, 2.0)), ("left", (-1.0, 0.4))] {
        let r = monotonicity_scan((0.0, 50.0), sigma, 0.1, Some(z))?;
        checks.push(Check::new(
            format!("d|xi|/dsigma sign, {label} of the line ({} points)", r.points),
            r.violations.len() as f64,
            0.0,
        ));
        checks.push(Check::new(
            format!("zero-sum gradient sign, {label} of the line"),
            r.product_violations.unwrap_or(0) as f64,
            0.0,
        ));
    }
    Ok(checks)
}

/// Runs `suite`; returns whether every check passed.
pub fn run(suite: Suite, settings: &Settings, table: Option<&ZeroTable>, out: &mut dyn Write) -> anyhow::Result<bool> {
    let needs_table = matches!(suite, Suite::Hadamard | Suite::Monotonic | Suite::All);
    let table = match (needs_table, table) {
        (true, None) => bail!("this suite needs a zero table: pass --zeros <path> or --zeros bundled"),
        (_, t) => t,
    };
    let mut groups: Vec<(&str, Vec<Check>)> = Vec::new();
    if matches!(suite, Suite::Identities | Suite::All) {
        groups.push(("identities", identities(settings)?));
    }
    if matches!(suite, Suite::Fourier | Suite::All) {
        groups.push(("fourier", fourier(settings)?));
    }
    if let Some(z) = table.filter(|_| matches!(suite, Suite::Hadamard | Suite::All)) {
        groups.push(("hadamard", hadamard(z)?));
    }
    if let Some(z) = table.filter(|_| matches!(suite, Suite::Monotonic | Suite::All)) {
        groups.push(("monotonic", monotonic(z)?));
    }
    let (mut passed, mut failed) = (0, 0);
    for (group, checks) in &groups {
        for c in checks {
            let status = if c.passed() { "PASS" } else { "FAIL" };
            if c.passed() {
                passed += 1;
            } else {
                failed += 1;
            }
            writeln!(out, "{status} {group}: {} (error {:.3e}, tol {:.0e})", c.name, c.error, c.tol)?;
        }
    }
    let name = format!("{suite:?}").to_lowercase();
    writeln!(out, "summary suite={name} checks={} passed={passed} failed={failed}", passed + failed)?;
    Ok(failed == 0)
}

//! Acceptance criteria 1 to 6. Each test prints one `criterion N: PASS|FAIL`
//! line with its measured errors and runtime.
//!
//! Two stated checks cannot hold for mathematical reasons and are kept as
//! `#[ignore]` tests that fail when run with `--ignored`: the listed fourth
//! zero ordinate 27.670618 (the fourth zero is at 30.424876) and the raw
//! N = 1000 zero sum for ξ′/ξ(2), whose omitted tail is 2.2e-3.

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use xilab::diff::{central_first, central_second, DEFAULT_STEP};
use xilab::hadamard::{
    b_closed, b_from_zeros, log_deriv_sum, monotonicity_scan, xi_partial_product, TailEstimate, ZeroTable,
};
use xilab::specfun::{theta_psi, zeta};
use xilab::spectral::{
    g_from_spectrum, spectral_component, spectral_component_scaled, spectral_kernel, spectrum_from_xi,
    xi_from_spectrum, xi_from_spectrum_complex,
};
use xilab::xi::{g_func, local_coeffs, xi, xi_log_derivative_identities, Xi};
use xilab::zeros::{count_vs_formula, find_zeros, gram_law_report, ZeroHit};
use xilab::{Complex64, QuadratureConfig, SeriesConfig, StripPoint};

const STATED_FIRST_FOUR: [f64; 4] = [14.134725, 21.022040, 25.010858, 27.670618];

struct Criterion {
    number: u32,
    budget: Duration,
    start: Instant,
    checks: Vec<(String, bool)>,
}

impl Criterion {
    fn new(number: u32, budget_secs: u64) -> Self {
        Self {
            number,
            budget: Duration::from_secs(budget_secs),
            start: Instant::now(),
            checks: Vec::new(),
        }
    }

    fn check(&mut self, label: impl Into<String>, ok: bool) -> bool {
        self.checks.push((label.into(), ok));
        ok
    }

    /// Prints the summary line and returns the labels of failed checks.
    fn finish(mut self) -> Vec<String> {
        let elapsed = self.start.elapsed();
        let budget = self.budget;
        self.check(format!("runtime {:.2}s < {}s", elapsed.as_secs_f64(), budget.as_secs()), elapsed < budget);
        let failed: Vec<String> = self.checks.iter().filter(|c| !c.1).map(|c| c.0.clone()).collect();
        let status = if failed.is_empty() { "PASS" } else { "FAIL" };
        let detail: Vec<&str> = self.checks.iter().map(|c| c.0.as_str()).collect();
        println!("criterion {}: {status} [{}]", self.number, detail.join("; "));
        if !failed.is_empty() {
            println!("criterion {} failed checks: {}", self.number, failed.join("; "));
        }
        failed
    }
}

fn assert_only_known(failed: Vec<String>, known: &[&str]) {
    let unexpected: Vec<&String> = failed.iter().filter(|f| !known.iter().any(|k| f.starts_with(k))).collect();
    assert!(unexpected.is_empty(), "unexpected failures: {unexpected:?}");
}

#[test]
fn criterion_1_constants() {
    let mut c = Criterion::new(1, 1);
    let cfg = SeriesConfig::default();
    let quad = QuadratureConfig::default();

    let x0 = xi(StripPoint::new(0.0, 0.0));
    let x1 = xi(StripPoint::new(1.0, 0.0));
    let e = (x0 - 0.5).norm().max((x1 - 0.5).norm());
    c.check(format!("xi(0), xi(1) = 0.5 err {e:.1e}"), e <= 1e-12);

    let v = Xi(0.0);
    c.check(format!("Xi(0) = {v:.6}"), (v - 0.4971).abs() < 5e-5);
    let v = g_func(StripPoint::new(0.5, 0.0)).re;
    c.check(format!("g(1/2) = {v:.6}"), (v - -0.3404).abs() < 5e-5);
    let v = zeta(Complex64::new(0.5, 0.0), &cfg).unwrap().value.re;
    c.check(format!("zeta(1/2) = {v:.7}"), (v - -1.46035).abs() < 5e-6);

    for (order, want) in [(0, 0.0432), (1, -0.1358), (2, 0.4271)] {
        let v = theta_psi(1.0, order, &cfg).unwrap().value;
        c.check(format!("psi^({order})(1) = {v:.6}"), (v - want).abs() < 5e-5);
    }

    let (b, _) = b_closed();
    c.check(format!("B = {b:.8}"), (b - -0.0230957).abs() < 1e-5);

    let s_inv = spectrum_from_xi(0.0, 60.0, &quad).unwrap().value;
    let integral = s_inv * PI / 2.0;
    let s0 = spectral_kernel(0.0).unwrap();
    c.check(format!("int Xi to T=60 = {integral:.6}"), (integral - 2.8067).abs() < 1e-3);
    c.check(
        format!("(2/pi) int Xi - S(0) = {:.1e}", s_inv - s0),
        (s_inv - s0).abs() < 1e-5,
    );

    assert_only_known(c.finish(), &[]);
}

#[test]
fn criterion_2_reflection_and_realness() {
    let mut c = Criterion::new(2, 10);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);

    let mut worst = 0.0_f64;
    for _ in 0..1000 {
        let s = StripPoint::new(rng.gen_range(-1.0..2.0), rng.gen_range(-60.0..60.0));
        let v = xi(s);
        let r = (xi(s.reflect()) - v).norm() / (1.0 + v.norm());
        worst = worst.max(r);
    }
    c.check(format!("max |xi(1-s) - xi(s)|/(1+|xi|) = {worst:.1e}"), worst <= 1e-11);

    let mut worst = 0.0_f64;
    for _ in 0..1000 {
        let t = rng.gen_range(-100.0..100.0);
        let v = xi(StripPoint::on_line(t));
        worst = worst.max(v.im.abs() / (1.0 + v.re.abs()));
    }
    c.check(format!("max |Im xi(1/2+it)|/(1+|Xi|) = {worst:.1e}"), worst <= 1e-12);

    assert_only_known(c.finish(), &[]);
}

#[test]
fn criterion_3_fourier() {
    let mut c = Criterion::new(3, 60);
    let quad = QuadratureConfig::default();

    let worst = (0..=40)
        .map(|t| {
            let t = f64::from(t);
            (xi_from_spectrum(t, &quad).unwrap().value - Xi(t)).abs()
        })
        .fold(0.0, f64::max);
    c.check(format!("Xi from S, t = 0..40: {worst:.1e}"), worst <= 1e-8);

    let grid: Vec<StripPoint> = [-1.5, -0.75, 0.0, 0.75, 1.5]
        .iter()
        .flat_map(|&l| [0.0, 7.5, 15.0, 22.5, 30.0].map(|t| StripPoint::from_lambda(l, t)))
        .collect();
    let worst = grid
        .iter()
        .map(|&s| (xi_from_spectrum_complex(s, &quad).unwrap().value - xi(s)).norm())
        .fold(0.0, f64::max);
    c.check(format!("xi from S, 5x5 grid: {worst:.1e}"), worst <= 1e-8);

    let worst = (0..=8)
        .map(|k| {
            let w = 0.25 * f64::from(k);
            (spectrum_from_xi(w, 60.0, &quad).unwrap().value - spectral_kernel(w).unwrap()).abs()
        })
        .fold(0.0, f64::max);
    c.check(format!("S from Xi, omega = 0..2: {worst:.1e}"), worst <= 1e-5);

    let worst = grid
        .iter()
        .map(|&s| (g_from_spectrum(s, &quad).unwrap().value - g_func(s)).norm())
        .fold(0.0, f64::max);
    c.check(format!("g from S_1, 5x5 grid: {worst:.1e}"), worst <= 1e-7);

    let worst = (1..=300)
        .map(|k| {
            let w = 0.01 * f64::from(k);
            let (p, m) = (spectral_kernel(w).unwrap(), spectral_kernel(-w).unwrap());
            if p == 0.0 && m == 0.0 {
                0.0
            } else {
                (p - m).abs() / p.abs()
            }
        })
        .fold(0.0, f64::max);
    c.check(format!("S(-w) = S(w), w in (0,3]: rel {worst:.1e}"), worst <= 1e-11);

    // Relative error is measured where S_n is a normal float; subnormal
    // values carry fewer significant bits.
    let (mut worst_abs, mut worst_rel) = (0.0_f64, 0.0_f64);
    for n in 1..=50u64 {
        for k in -20..=60 {
            let w = 0.05 * f64::from(k);
            let direct = spectral_component(n, w).unwrap();
            let scaled = spectral_component_scaled(n, w).unwrap();
            worst_abs = worst_abs.max((direct - scaled).abs());
            if direct.abs() >= f64::MIN_POSITIVE {
                worst_rel = worst_rel.max((direct - scaled).abs() / direct.abs());
            }
        }
    }
    c.check(
        format!("scaling law n <= 50: abs {worst_abs:.1e}, rel {worst_rel:.1e}"),
        worst_abs <= 1e-12 && worst_rel <= 1e-12,
    );

    assert_only_known(c.finish(), &[]);
}

/// ξ′/ξ(2) by a five-point difference of ξ along the real axis.
fn numeric_log_derivative_at_two() -> f64 {
    central_first(|x| xi(StripPoint::new(x, 0.0)).re, 2.0, DEFAULT_STEP) / xi(StripPoint::new(2.0, 0.0)).re
}

#[test]
fn criterion_4_hadamard() {
    let mut c = Criterion::new(4, 60);
    let z = ZeroTable::bundled();
    let target = Xi(0.0);
    let half = StripPoint::new(0.5, 0.0);

    for (n, tol) in [(100, 0.02), (10_000, 0.005)] {
        let p = xi_partial_product(half, &z, n).unwrap().re;
        let rel = (p / target - 1.0).abs();
        c.check(format!("product N={n}: rel {rel:.1e}"), rel <= tol);
    }

    let fd = numeric_log_derivative_at_two();
    let raw = log_deriv_sum(StripPoint::new(2.0, 0.0), &z, 1000, TailEstimate::None).unwrap().re;
    let tailed = log_deriv_sum(StripPoint::new(2.0, 0.0), &z, 1000, TailEstimate::integral()).unwrap().re;
    c.check(format!("raw zero sum N=1000 vs xi'/xi(2): {:.1e}", (raw - fd).abs()), (raw - fd).abs() <= 1e-3);
    c.check(
        format!("zero sum N=1000 + density tail vs xi'/xi(2): {:.1e}", (tailed - fd).abs()),
        (tailed - fd).abs() <= 1e-3,
    );

    let b = b_from_zeros(&z, z.len(), TailEstimate::integral()).unwrap();
    let (closed, _) = b_closed();
    c.check(format!("B from zeros + tail: {:.1e}", (b - closed).abs()), (b - closed).abs() <= 1e-3);

    let report = monotonicity_scan((0.0, 50.0), (0.6, 2.0), 0.1, None).unwrap();
    c.check(
        format!("monotonicity scan {} points: {} violations", report.points, report.violations.len()),
        report.violations.is_empty(),
    );

    assert_only_known(c.finish(), &["raw zero sum"]);
}

#[test]
#[ignore = "unattainable: the omitted tail of the N = 1000 sum is about 2.2e-3"]
fn criterion_4_raw_zero_sum_at_n_1000() {
    let z = ZeroTable::bundled();
    let raw = log_deriv_sum(StripPoint::new(2.0, 0.0), &z, 1000, TailEstimate::None).unwrap().re;
    assert!((raw - numeric_log_derivative_at_two()).abs() <= 1e-3);
}

fn scan_to_gram_100() -> Vec<ZeroHit> {
    find_zeros(1.0, 240.0, 0.05).unwrap()
}

#[test]
fn criterion_5_zeros() {
    let mut c = Criterion::new(5, 120);
    let zeros = scan_to_gram_100();

    let first: Vec<f64> = zeros.iter().take(4).map(|z| z.ordinate).collect();
    let worst = first
        .iter()
        .zip(STATED_FIRST_FOUR)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    c.check(format!("first four ordinates {first:.6?} vs stated: {worst:.1e}"), worst <= 1e-6);
    let worst3 = first
        .iter()
        .zip(STATED_FIRST_FOUR)
        .take(3)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    c.check(format!("first three ordinates: {worst3:.1e}"), worst3 <= 1e-6);

    let count = count_vs_formula(100.0, &zeros);
    c.check(
        format!("N(100): count {} formula {:.4}", count.count, count.formula),
        count.count == 29 && count.difference <= 1.0,
    );

    let gram = gram_law_report(0, 100, &zeros).unwrap();
    c.check(
        format!("Gram intervals 0..100: {} good, {} empty, {} multiple", gram.good, gram.empty, gram.multiple),
        gram.holds() && gram.intervals.len() == 100,
    );

    let worst = zeros.iter().map(|z| Xi(z.ordinate).abs()).fold(0.0, f64::max);
    c.check(format!("{} zeros, max |Xi| = {worst:.1e}", zeros.len()), worst <= 1e-8);

    assert_only_known(c.finish(), &["first four ordinates"]);
}

#[test]
#[ignore = "unattainable: 27.670618 is not a zero; the fourth zero is 30.424876"]
fn criterion_5_stated_first_four_ordinates() {
    let zeros = find_zeros(1.0, 31.0, 0.05).unwrap();
    for (hit, want) in zeros.iter().zip(STATED_FIRST_FOUR) {
        assert!((hit.ordinate - want).abs() <= 1e-6, "{} vs {want}", hit.ordinate);
    }
}

#[test]
fn criterion_6_local_coefficients() {
    let mut c = Criterion::new(6, 10);
    let h = DEFAULT_STEP;

    for t in [5.0, 10.0, 20.0] {
        let k = local_coeffs(0.0, t, h).unwrap();
        let d1 = central_first(Xi, t, h);
        let d2 = central_second(Xi, t, h);
        let e1 = (k.b + d1).abs() / (1.0 + d1.abs());
        let e2 = (k.a + 0.5 * d2).abs() / (1.0 + d2.abs());
        c.check(format!("t={t}: b + Xi' {e1:.1e}"), e1 <= 1e-5);
        c.check(format!("t={t}: a + Xi''/2 {e2:.1e}"), e2 <= 1e-4);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    let mut worst = 0.0_f64;
    for i in 0..20 {
        let sigma = if i % 2 == 0 { rng.gen_range(0.6..2.0) } else { rng.gen_range(-1.0..0.4) };
        // |ξ| stays above the 1e-8 near-zero threshold for t ≤ 20.
        let s = StripPoint::new(sigma, rng.gen_range(1.0..20.0));
        worst = worst.max(xi_log_derivative_identities(s, h).unwrap().max_residual());
    }
    c.check(format!("log-derivative identities, 20 points: {worst:.1e}"), worst <= 1e-5);

    assert_only_known(c.finish(), &[]);
}

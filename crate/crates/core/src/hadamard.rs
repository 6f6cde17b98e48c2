//! Product-form machinery over the nontrivial zeros: the constant B, partial
//! products, log-derivative sums and the σ-monotonicity scan of |ξ|.
//!
//! Each table entry ρ = σ + it stands for its conjugate ρ̄ as well. When σ is
//! not 1/2 it also stands for the reflected pair 1 − ρ, 1 − ρ̄, so an entry
//! contributes two or four zeros. Conjugates are combined algebraically,
//! which keeps every sum and product exactly real for real s.

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::path::Path;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::diff::central_first;
use crate::xi::{xi, StripPoint};
use crate::{Error, Result, EULER_GAMMA};

const BUNDLED: &str = include_str!("../data/zeros_10k.txt");

/// Ordered ordinates t_1 < t_2 < … of nontrivial zeros, immutable once built.
#[derive(Clone, Debug, PartialEq)]
pub struct ZeroTable {
    ordinates: Vec<f64>,
    sigmas: Option<Vec<f64>>,
    source_label: String,
}

impl ZeroTable {
    pub fn new(ordinates: Vec<f64>, sigmas: Option<Vec<f64>>, source_label: impl Into<String>) -> Result<Self> {
        for (i, w) in ordinates.windows(2).enumerate() {
            if !(w[1] > w[0]) {
                return Err(Error::NonMonotone {
                    line: i + 2,
                    previous: w[0],
                    current: w[1],
                });
            }
        }
        if let Some(&first) = ordinates.first() {
            if !(first > 0.0) {
                return Err(Error::Parse {
                    line: 1,
                    message: format!("ordinate {first} is not positive"),
                });
            }
        }
        if let Some(s) = &sigmas {
            if s.len() != ordinates.len() {
                return Err(Error::Parse {
                    line: 0,
                    message: format!("{} sigmas for {} ordinates", s.len(), ordinates.len()),
                });
            }
            if let Some(i) = s.iter().position(|&v| !(v > 0.0 && v < 1.0)) {
                return Err(Error::Parse {
                    line: i + 1,
                    message: format!("sigma {} outside the critical strip", s[i]),
                });
            }
        }
        Ok(Self {
            ordinates,
            sigmas,
            source_label: source_label.into(),
        })
    }

    /// Parses the text format: one ordinate per line, an optional second
    /// whitespace-separated column with σ_n, `#` comment lines and blank
    /// lines ignored.
    pub fn parse(text: &str, source_label: impl Into<String>) -> Result<Self> {
        let mut ordinates = Vec::new();
        let mut sigmas = Vec::new();
        let mut any_sigma = false;
        let mut lines = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut fields = line.split_whitespace();
            let parse = |tok: &str| {
                tok.parse::<f64>().ok().filter(|v| v.is_finite()).ok_or_else(|| Error::Parse {
                    line: line_no,
                    message: format!("cannot parse '{tok}' as a number"),
                })
            };
            let t = parse(fields.next().expect("non-empty line has a field"))?;
            let sigma = match fields.next() {
                Some(tok) => {
                    any_sigma = true;
                    parse(tok)?
                }
                None => 0.5,
            };
            if let Some(extra) = fields.next() {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("unexpected third column '{extra}'"),
                });
            }
            if !(t > 0.0) {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("ordinate {t} is not positive"),
                });
            }
            if let Some(&prev) = ordinates.last() {
                if !(t > prev) {
                    return Err(Error::NonMonotone {
                        line: line_no,
                        previous: prev,
                        current: t,
                    });
                }
            }
            ordinates.push(t);
            sigmas.push(sigma);
            lines.push(line_no);
        }
        let sigmas = any_sigma.then_some(sigmas);
        Self::new(ordinates, sigmas, source_label).map_err(|e| match e {
            Error::Parse { line, message } if line >= 1 && line <= lines.len() => Error::Parse {
                line: lines[line - 1],
                message,
            },
            other => other,
        })
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)?;
        Self::parse(&text, path.display().to_string())
    }

    /// The first 10⁴ ordinates shipped with the crate (σ_n = 1/2).
    pub fn bundled() -> Self {
        Self::parse(BUNDLED, "bundled: first 10^4 zeros").expect("bundled zero table is valid")
    }

    pub fn len(&self) -> usize {
        self.ordinates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ordinates.is_empty()
    }

    pub fn ordinates(&self) -> &[f64] {
        &self.ordinates
    }

    pub fn source_label(&self) -> &str {
        &self.source_label
    }

    pub fn sigma(&self, n: usize) -> f64 {
        self.sigmas.as_ref().map_or(0.5, |s| s[n])
    }

    pub fn zero(&self, n: usize) -> Complex64 {
        Complex64::new(self.sigma(n), self.ordinates[n])
    }

    /// Leading table of the first `n` entries.
    pub fn truncated(&self, n: usize) -> Result<Self> {
        self.check_count(n)?;
        Ok(Self {
            ordinates: self.ordinates[..n].to_vec(),
            sigmas: self.sigmas.as_ref().map(|s| s[..n].to_vec()),
            source_label: format!("{} (first {n})", self.source_label),
        })
    }

    /// Serializes in the format read by [`ZeroTable::parse`].
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# {}", self.source_label);
        for (i, t) in self.ordinates.iter().enumerate() {
            match &self.sigmas {
                Some(s) => {
                    let _ = writeln!(out, "{t} {}", s[i]);
                }
                None => {
                    let _ = writeln!(out, "{t}");
                }
            }
        }
        out
    }

    fn check_count(&self, n: usize) -> Result<()> {
        if n > self.len() {
            return Err(Error::Index {
                requested: n,
                available: self.len(),
            });
        }
        Ok(())
    }

    /// Representatives (σ, t) of the conjugate pairs of entry n: one pair on
    /// the line, or two pairs (σ and 1 − σ) off it.
    fn pairs(&self, n: usize) -> impl Iterator<Item = (f64, f64)> {
        let sigma = self.sigma(n);
        let t = self.ordinates[n];
        let second = (sigma != 0.5).then_some((1.0 - sigma, t));
        std::iter::once((sigma, t)).chain(second)
    }
}

/// Treatment of the zeros beyond the end of a truncated table.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum TailEstimate {
    None,
    /// Replace Σ_{n>N} by an integral against the zero density
    /// `density_constant · log(u/2π)`.
    Integral { density_constant: f64 },
}

impl TailEstimate {
    /// Zero density from the Riemann–von Mangoldt count, 1/(2π) log(t/2π).
    pub fn integral() -> Self {
        TailEstimate::Integral {
            density_constant: 1.0 / (2.0 * PI),
        }
    }

    /// Approximates Σ_{t_n > last} 1/t_n² over on-line zeros, counting each
    /// conjugate pair once.
    fn inverse_square_tail(&self, last: f64) -> f64 {
        match *self {
            TailEstimate::None => 0.0,
            TailEstimate::Integral { density_constant } => {
                assert!(density_constant > 0.0, "density constant must be positive");
                let density = |u: f64| density_constant * (u / (2.0 * PI)).ln().max(f64::MIN_POSITIVE);
                // Start half a mean spacing past the last tabulated zero.
                let start = last + 0.5 / density(last);
                density_constant * ((start / (2.0 * PI)).ln() + 1.0) / start
            }
        }
    }
}

/// B = log(2π) − 1 − (1/2) log π − γ/2, both printed forms.
pub fn b_closed() -> (f64, f64) {
    let first = (2.0 * PI).ln() - 1.0 - 0.5 * PI.ln() - 0.5 * EULER_GAMMA;
    let second = 0.5 * (4.0 * PI).ln() - 1.0 - 0.5 * EULER_GAMMA;
    (first, second)
}

/// B = −Σ 1/ρ_n = −2 Σ σ_n/(σ_n² + t_n²) over the first `n` entries, plus
/// the optional tail.
pub fn b_from_zeros(z: &ZeroTable, n: usize, tail: TailEstimate) -> Result<f64> {
    if z.is_empty() || n == 0 {
        return Err(Error::Index {
            requested: n,
            available: z.len(),
        });
    }
    z.check_count(n)?;
    let mut sum = 0.0;
    for k in 0..n {
        for (sigma, t) in z.pairs(k) {
            sum += 2.0 * sigma / (sigma * sigma + t * t);
        }
    }
    Ok(-sum - tail.inverse_square_tail(z.ordinates[n - 1]))
}

/// ξ(s) ≈ (1/2) ∏_{n≤N} (1 − s/ρ_n)(1 − s/ρ̄_n).
pub fn xi_partial_product(s: StripPoint, z: &ZeroTable, n: usize) -> Result<Complex64> {
    z.check_count(n)?;
    let s = s.s();
    let s2 = s * s;
    let mut product = Complex64::new(0.5, 0.0);
    for k in 0..n {
        for (sigma, t) in z.pairs(k) {
            let m = sigma * sigma + t * t;
            // (1 − s/ρ)(1 − s/ρ̄) = (|ρ|² − 2σs + s²)/|ρ|²
            product *= (m - 2.0 * sigma * s + s2) / m;
        }
    }
    Ok(product)
}

/// ξ′(s)/ξ(s) ≈ Σ_{n≤N} [1/(s − ρ_n) + 1/(s − ρ̄_n)] plus the optional tail
/// 2(s − 1/2) Σ_{n>N} 1/t_n².
pub fn log_deriv_sum(s: StripPoint, z: &ZeroTable, n: usize, tail: TailEstimate) -> Result<Complex64> {
    z.check_count(n)?;
    let s = s.s();
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 0..n {
        for (sigma, t) in z.pairs(k) {
            let d = s - sigma;
            let rho = Complex64::new(sigma, t);
            if (s - rho).norm() < 1e-12 || (s - rho.conj()).norm() < 1e-12 {
                return Err(Error::Pole {
                    function: "log_deriv_sum",
                    at: s.to_string(),
                });
            }
            // 1/(s − ρ) + 1/(s − ρ̄) = 2(s − σ)/((s − σ)² + t²)
            sum += 2.0 * d / (d * d + t * t);
        }
    }
    if n > 0 {
        sum += 2.0 * (s - 0.5) * tail.inverse_square_tail(z.ordinates[n - 1]);
    }
    Ok(sum)
}

/// (1/|ξ|) ∂|ξ|/∂σ ≈ Σ (σ − σ_n)/((σ − σ_n)² + (t − t_n)²) over the zeros.
pub fn modulus_gradient(s: StripPoint, z: &ZeroTable, n: usize, tail: TailEstimate) -> Result<f64> {
    Ok(log_deriv_sum(s, z, n, tail)?.re)
}

/// Σ 1/(s − ρ) − Σ 1/(s − (1 − ρ)) over the first `n` entries with every zero
/// enumerated separately; zero whenever the zero set is closed under ρ → 1 − ρ.
pub fn reflection_cancellation(s: StripPoint, z: &ZeroTable, n: usize) -> Result<Complex64> {
    z.check_count(n)?;
    let s = s.s();
    let mut direct = Complex64::new(0.0, 0.0);
    let mut reflected = Complex64::new(0.0, 0.0);
    for k in 0..n {
        for (sigma, t) in z.pairs(k) {
            for rho in [Complex64::new(sigma, t), Complex64::new(sigma, -t)] {
                direct += (s - rho).inv();
                reflected += (s - (1.0 - rho)).inv();
            }
        }
    }
    Ok(direct - reflected)
}

/// A grid point where ∂|ξ|/∂σ has the wrong sign.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MonotonicityViolation {
    pub sigma: f64,
    pub t: f64,
    pub derivative: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MonotonicityReport {
    pub points: usize,
    /// Sign failures of the finite-difference derivative of |ξ|.
    pub violations: Vec<MonotonicityViolation>,
    /// Sign failures of the zero-sum gradient, when a table was supplied.
    pub product_violations: Option<usize>,
}

impl MonotonicityReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.product_violations.unwrap_or(0) == 0
    }
}

fn grid(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    let count = ((hi - lo) / step + 1e-9).floor() as usize;
    (0..=count).map(|i| lo + i as f64 * step).collect()
}

/// Scans ∂|ξ|/∂σ over a rectangle that avoids the band |σ − 1/2| ≤ step:
/// positive right of the line, negative left of it.
pub fn monotonicity_scan(
    t_range: (f64, f64),
    sigma_range: (f64, f64),
    step: f64,
    z: Option<&ZeroTable>,
) -> Result<MonotonicityReport> {
    if !(step > 0.0) {
        return Err(Error::Domain {
            function: "monotonicity_scan",
            value: step,
            requirement: "step > 0",
        });
    }
    let (s_lo, s_hi) = sigma_range;
    if s_lo > s_hi || t_range.0 > t_range.1 {
        return Err(Error::Domain {
            function: "monotonicity_scan",
            value: s_lo,
            requirement: "ranges must satisfy lo <= hi",
        });
    }
    let band = (0.5 - step + 1e-12, 0.5 + step - 1e-12);
    if s_hi >= band.0 && s_lo <= band.1 {
        return Err(Error::Domain {
            function: "monotonicity_scan",
            value: if s_lo <= 0.5 { s_hi } else { s_lo },
            requirement: "sigma range must exclude the band |sigma - 1/2| <= step",
        });
    }
    let sigmas = grid(s_lo, s_hi, step);
    let ts = grid(t_range.0, t_range.1, step);
    let points: Vec<(f64, f64)> = sigmas.iter().flat_map(|&s| ts.iter().map(move |&t| (s, t))).collect();
    let h = (0.1 * step).min(crate::diff::DEFAULT_STEP);

    let violations: Vec<MonotonicityViolation> = points
        .par_iter()
        .filter_map(|&(sigma, t)| {
            let derivative = central_first(|x| xi(StripPoint::new(x, t)).norm(), sigma, h);
            let right = sigma > 0.5;
            let ok = if right { derivative > 0.0 } else { derivative < 0.0 };
            (!ok).then_some(MonotonicityViolation { sigma, t, derivative })
        })
        .collect();

    let product_violations = z.map(|table| {
        points
            .par_iter()
            .filter(|&&(sigma, t)| {
                let g = modulus_gradient(StripPoint::new(sigma, t), table, table.len(), TailEstimate::integral())
                    .unwrap_or(f64::NAN);
                !(if sigma > 0.5 { g > 0.0 } else { g < 0.0 })
            })
            .count()
    });

    Ok(MonotonicityReport {
        points: points.len(),
        violations,
        product_violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diff::DEFAULT_STEP;

    fn first_three() -> ZeroTable {
        ZeroTable::parse("14.134725\n21.022040\n25.010858\n", "test").unwrap()
    }

    #[test]
    fn parse_format() {
        let z = first_three();
        assert_eq!(z.len(), 3);
        assert_eq!(z.sigma(1), 0.5);
        let z = ZeroTable::parse("# header\n\n14.1\n  # indented comment\n21.0 0.5\n", "x").unwrap();
        assert_eq!(z.ordinates(), &[14.1, 21.0]);
        let z = ZeroTable::parse("14.1 0.6\n21.0\n", "x").unwrap();
        assert_eq!(z.sigma(0), 0.6);
        assert_eq!(z.sigma(1), 0.5);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        match ZeroTable::parse("# c\n14.1\n13.0\n", "x") {
            Err(Error::NonMonotone { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
        match ZeroTable::parse("14.1\nabc\n", "x") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        assert!(matches!(ZeroTable::parse("14.1 0.5 3\n", "x"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(ZeroTable::parse("-2\n", "x"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(ZeroTable::parse("# c\n3\n14.1 1.5\n", "x"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(ZeroTable::parse("5\n5\n", "x"), Err(Error::NonMonotone { .. })));
    }

    #[test]
    fn text_round_trip() {
        let z = ZeroTable::new(vec![14.134725141734694, 21.022039638771555], Some(vec![0.5, 0.7]), "rt").unwrap();
        let back = ZeroTable::parse(&z.to_text(), "rt").unwrap();
        assert_eq!(back.ordinates(), z.ordinates());
        assert_eq!(back.sigma(1), 0.7);
    }

    #[test]
    fn bundled_table() {
        let z = ZeroTable::bundled();
        assert_eq!(z.len(), 10_000);
        assert!((z.ordinates()[0] - 14.134_725_141_734_694).abs() < 1e-12);
        assert!((z.ordinates()[9_999] - 9_877.782_654_005_501).abs() < 1e-9);
    }

    #[test]
    fn b_constant() {
        let (a, b) = b_closed();
        assert!((a - b).abs() < 1e-15);
        assert!((a - -0.023_095_7).abs() < 1e-5);
        assert!((a - -0.023_095_708_966_121_03).abs() < 1e-15);
    }

    #[test]
    fn b_from_first_zero() {
        let z = first_three();
        let t: f64 = 14.134725;
        let want = -2.0 * 0.5 / (0.25 + t * t);
        assert_eq!(b_from_zeros(&z, 1, TailEstimate::None).unwrap(), want);
        assert!((want - -0.004_999_0).abs() < 1e-7);
        assert!(b_from_zeros(&z, 0, TailEstimate::None).is_err());
        assert!(b_from_zeros(&z, 4, TailEstimate::None).is_err());
    }

    #[test]
    fn b_partial_sums_decrease() {
        let z = ZeroTable::bundled();
        let mut prev = 0.0;
        for n in 1..200 {
            let b = b_from_zeros(&z, n, TailEstimate::None).unwrap();
            assert!(b < prev);
            prev = b;
        }
        let (closed, _) = b_closed();
        let with_tail = b_from_zeros(&z, 100, TailEstimate::integral()).unwrap();
        assert!((with_tail - closed).abs() < 5e-3);
        assert!(prev > closed);
    }

    #[test]
    fn product_fixed_points() {
        let z = ZeroTable::bundled();
        for n in [0, 1, 10, 500] {
            let at0 = xi_partial_product(StripPoint::new(0.0, 0.0), &z, n).unwrap();
            let at1 = xi_partial_product(StripPoint::new(1.0, 0.0), &z, n).unwrap();
            assert_eq!(at0, Complex64::new(0.5, 0.0));
            assert!((at1 - 0.5).norm() < 1e-14);
        }
        let half = xi_partial_product(StripPoint::new(0.5, 0.0), &z, 100).unwrap();
        assert!((half.re / 0.4971 - 1.0).abs() < 0.02);
        assert!(matches!(xi_partial_product(StripPoint::new(0.5, 0.0), &z, 10_001), Err(Error::Index { .. })));
    }

    #[test]
    fn product_brute_force_oracle() {
        // Enumerate ρ and ρ̄ as separate complex factors.
        let z = ZeroTable::bundled();
        let s = Complex64::new(0.3, 2.0);
        let mut brute = Complex64::new(0.5, 0.0);
        for &t in &z.ordinates()[..100] {
            for rho in [Complex64::new(0.5, t), Complex64::new(0.5, -t)] {
                brute *= 1.0 - s / rho;
            }
        }
        let got = xi_partial_product(StripPoint::from(s), &z, 100).unwrap();
        assert!((got - brute).norm() < 1e-14);
    }

    #[test]
    fn realness_for_real_s() {
        let z = ZeroTable::bundled();
        for s in [-1.0, 0.3, 2.0, 3.5] {
            let p = xi_partial_product(StripPoint::new(s, 0.0), &z, 1000).unwrap();
            let l = log_deriv_sum(StripPoint::new(s, 0.0), &z, 1000, TailEstimate::None).unwrap();
            assert_eq!(p.im, 0.0);
            assert_eq!(l.im, 0.0);
        }
    }

    #[test]
    fn log_derivative_matches_finite_difference() {
        let z = ZeroTable::bundled();
        let s = StripPoint::new(2.0, 0.0);
        let fd = central_first(|x| xi(StripPoint::new(x, 0.0)).re, 2.0, DEFAULT_STEP) / xi(s).re;
        // mpmath: ξ′/ξ(2) = 0.069066231530000676
        assert!((fd - 0.069_066_231_530_000_68).abs() < 1e-10);
        let with_tail = log_deriv_sum(s, &z, 1000, TailEstimate::integral()).unwrap();
        assert!((with_tail.re - fd).abs() < 1e-3);
        let all = log_deriv_sum(s, &z, 10_000, TailEstimate::integral()).unwrap();
        assert!((all.re - fd).abs() < 1e-5);
        let raw = log_deriv_sum(s, &z, 1000, TailEstimate::None).unwrap();
        assert!(raw.re < fd);
    }

    #[test]
    fn log_derivative_matches_digamma_route() {
        use crate::specfun::{digamma, zeta_log_derivative};
        let s = Complex64::new(2.0, 0.0);
        let route = 1.0 / s + 1.0 / (s - 1.0) - 0.5 * PI.ln()
            + 0.5 * digamma(s * 0.5).unwrap()
            + zeta_log_derivative(s, DEFAULT_STEP).unwrap();
        let z = ZeroTable::bundled();
        let sum = log_deriv_sum(StripPoint::from(s), &z, 1000, TailEstimate::integral()).unwrap();
        assert!((route - sum).norm() < 1e-3);
    }

    #[test]
    fn pole_detection() {
        let z = first_three();
        let at_zero = StripPoint::new(0.5, 21.022040);
        assert!(matches!(log_deriv_sum(at_zero, &z, 3, TailEstimate::None), Err(Error::Pole { .. })));
    }

    #[test]
    fn gradient_signs_and_oracle() {
        let z = ZeroTable::bundled();
        assert!(modulus_gradient(StripPoint::new(0.9, 0.0), &z, 1000, TailEstimate::None).unwrap() > 0.0);
        assert!(modulus_gradient(StripPoint::new(0.1, 0.0), &z, 1000, TailEstimate::None).unwrap() < 0.0);
        let s = StripPoint::new(2.0, 10.0);
        let fd = central_first(|x| xi(StripPoint::new(x, 10.0)).norm().ln(), 2.0, DEFAULT_STEP);
        let g = modulus_gradient(s, &z, 1000, TailEstimate::integral()).unwrap();
        assert!((g - fd).abs() < 1e-3);
    }

    #[test]
    fn reflection_pairs_cancel() {
        let z = ZeroTable::bundled();
        for s in [StripPoint::new(2.0, 3.0), StripPoint::new(-0.4, 17.0)] {
            assert!(reflection_cancellation(s, &z, 200).unwrap().norm() <= 1e-14);
        }
        let off = ZeroTable::new(vec![14.0, 20.0], Some(vec![0.7, 0.5]), "off").unwrap();
        assert!(reflection_cancellation(StripPoint::new(2.0, 3.0), &off, 2).unwrap().norm() <= 1e-14);
    }

    #[test]
    fn scan_single_points() {
        let r = monotonicity_scan((0.0, 0.0), (3.0, 3.0), 0.1, None).unwrap();
        assert_eq!(r.points, 1);
        assert!(r.passed());
        let r = monotonicity_scan((0.0, 20.0), (-1.0, 0.4), 0.1, None).unwrap();
        assert!(r.violations.is_empty());
        assert!(monotonicity_scan((0.0, 1.0), (0.45, 2.0), 0.1, None).is_err());
    }
}

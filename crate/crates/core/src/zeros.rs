//! Zeros of Hardy's Z on the critical line, Gram points, Gram's law and the
//! zero-count formula.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::hadamard::ZeroTable;
use crate::specfun::{digamma, ZETA_MAX_HEIGHT};
use crate::xi::{hardy_z, theta_rs, zero_count_estimate, ZERO_COUNT_MIN_T};
use crate::{Error, Result};

/// Largest grid step accepted by [`find_zeros`].
pub const MAX_SCAN_STEP: f64 = 0.1;
/// Bisection stops once the bracket is this narrow.
pub const BRACKET_WIDTH: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ZeroHit {
    pub ordinate: f64,
    pub bracket_width: f64,
    pub refinement_iters: u32,
}

/// Sign changes of Z on the grid t_lo, t_lo + step, …, t_hi, each refined by
/// bisection and a closing regula-falsi step.
///
/// Pairs of zeros closer together than `step` can fall into one grid cell
/// and are then missed.
pub fn find_zeros(t_lo: f64, t_hi: f64, step: f64) -> Result<Vec<ZeroHit>> {
    if t_hi > ZETA_MAX_HEIGHT {
        return Err(Error::RangeCap {
            t: t_hi,
            limit: ZETA_MAX_HEIGHT,
        });
    }
    if !(t_lo >= 0.0 && t_lo < t_hi) {
        return Err(Error::Domain {
            function: "find_zeros",
            value: t_lo,
            requirement: "0 <= t_lo < t_hi",
        });
    }
    if !(step > 0.0 && step <= MAX_SCAN_STEP) {
        return Err(Error::Domain {
            function: "find_zeros",
            value: step,
            requirement: "0 < step <= 0.1",
        });
    }
    let cells = ((t_hi - t_lo) / step).ceil() as usize;
    let grid: Vec<f64> = (0..=cells).map(|i| (t_lo + i as f64 * step).min(t_hi)).collect();
    let values: Vec<f64> = grid.par_iter().map(|&t| hardy_z(t)).collect();

    let mut hits = Vec::new();
    for i in 0..cells {
        let (a, b) = (grid[i], grid[i + 1]);
        let (za, zb) = (values[i], values[i + 1]);
        if za == 0.0 {
            if i == 0 || values[i - 1] != 0.0 {
                hits.push(Pending::exact(a));
            }
        } else if za * zb < 0.0 {
            hits.push(Pending::Bracket { a, b, za });
        }
    }
    if values[cells] == 0.0 && values[cells - 1] != 0.0 {
        hits.push(Pending::exact(grid[cells]));
    }
    let mut hits: Vec<ZeroHit> = hits.into_par_iter().map(|h| h.refine()).collect();
    hits.sort_by(|a, b| a.ordinate.total_cmp(&b.ordinate));
    Ok(hits)
}

enum Pending {
    Done(ZeroHit),
    Bracket { a: f64, b: f64, za: f64 },
}

impl Pending {
    fn exact(t: f64) -> Self {
        Pending::Done(ZeroHit {
            ordinate: t,
            bracket_width: 0.0,
            refinement_iters: 0,
        })
    }

    fn refine(self) -> ZeroHit {
        let (mut a, mut b, mut za) = match self {
            Pending::Done(h) => return h,
            Pending::Bracket { a, b, za } => (a, b, za),
        };
        let mut zb = hardy_z(b);
        let mut iters = 0;
        while b - a > BRACKET_WIDTH {
            let m = 0.5 * (a + b);
            let zm = hardy_z(m);
            iters += 1;
            if zm == 0.0 {
                return ZeroHit {
                    ordinate: m,
                    bracket_width: 0.0,
                    refinement_iters: iters,
                };
            }
            if (zm < 0.0) == (za < 0.0) {
                a = m;
                za = zm;
            } else {
                b = m;
                zb = zm;
            }
        }
        let secant = a - za * (b - a) / (zb - za);
        ZeroHit {
            ordinate: secant.clamp(a, b),
            bracket_width: b - a,
            refinement_iters: iters,
        }
    }
}

/// g_n with ϑ(g_n) = nπ; g_0 ≈ 17.8456 and g_{−1} ≈ 9.667.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GramPoint {
    pub index: i64,
    pub g_n: f64,
}

const GRAM_RESIDUAL: f64 = 1e-10;
const GRAM_MAX_ITER: usize = 50;
/// ϑ has its minimum near t ≈ 6.29 and increases beyond it.
const THETA_MINIMUM: f64 = 6.289_835_988_836_7;

/// ϑ′(t) = ½ ℜψ(1/4 + it/2) − ½ log π.
fn theta_derivative(t: f64) -> f64 {
    let psi = digamma(Complex64::new(0.25, 0.5 * t)).expect("1/4 + it/2 is never a pole");
    0.5 * psi.re - 0.5 * PI.ln()
}

/// Inverts ϑ(t) ≈ (t/2) log(t/2πe) − π/8 with the Lambert W function.
fn gram_guess(n: i64) -> f64 {
    let c = (8 * n + 1) as f64 / (8.0 * std::f64::consts::E);
    if c <= 0.0 {
        return 10.0;
    }
    // u e^u = c
    let mut u = (1.0 + c).ln();
    for _ in 0..30 {
        let f = u * u.exp() - c;
        u -= f / (u.exp() * (1.0 + u));
    }
    2.0 * PI * std::f64::consts::E * u.exp()
}

pub fn gram_point(n: i64) -> Result<GramPoint> {
    if n < -1 {
        return Err(Error::Domain {
            function: "gram_point",
            value: n as f64,
            requirement: "n >= -1",
        });
    }
    let target = n as f64 * PI;
    let mut t = gram_guess(n);
    for _ in 0..GRAM_MAX_ITER {
        let r = theta_rs(t) - target;
        if r.abs() <= GRAM_RESIDUAL {
            return Ok(GramPoint { index: n, g_n: t });
        }
        t = (t - r / theta_derivative(t)).max(0.5 * (t + THETA_MINIMUM));
    }
    Err(Error::NoConvergence {
        index: n,
        iterations: GRAM_MAX_ITER,
    })
}

pub fn gram_points(n_lo: i64, n_hi: i64) -> Result<Vec<GramPoint>> {
    (n_lo..=n_hi).into_par_iter().map(gram_point).collect()
}

/// Zero count of one Gram interval [g_n, g_{n+1}).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GramInterval {
    pub index: i64,
    pub lo: f64,
    pub hi: f64,
    pub zeros: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GramLawReport {
    pub intervals: Vec<GramInterval>,
    /// Intervals with exactly one zero.
    pub good: usize,
    pub empty: usize,
    pub multiple: usize,
    pub total_zeros: usize,
}

impl GramLawReport {
    pub fn holds(&self) -> bool {
        self.good == self.intervals.len()
    }
}

/// Zeros per Gram interval [g_n, g_{n+1}) for n_lo ≤ n < n_hi.
///
/// The list counts as covering the range when it is non-empty, starts
/// before g_{n_lo+1} and ends at or after g_{n_hi−1}.
pub fn gram_law_report(n_lo: i64, n_hi: i64, zeros: &[ZeroHit]) -> Result<GramLawReport> {
    if n_hi <= n_lo {
        return Err(Error::Domain {
            function: "gram_law_report",
            value: n_hi as f64,
            requirement: "n_hi > n_lo",
        });
    }
    let gram = gram_points(n_lo, n_hi)?;
    let (first, last) = match (zeros.first(), zeros.last()) {
        (Some(f), Some(l)) => (f.ordinate, l.ordinate),
        _ => return Err(Error::Coverage("the zero list is empty".into())),
    };
    let start = gram[1].g_n;
    let end = gram[gram.len() - 2].g_n;
    if first >= start || last < end {
        return Err(Error::Coverage(format!(
            "zeros span [{first}, {last}] but the Gram range needs [{}, {}]",
            gram[0].g_n,
            gram[gram.len() - 1].g_n
        )));
    }
    let intervals: Vec<GramInterval> = gram
        .windows(2)
        .map(|w| GramInterval {
            index: w[0].index,
            lo: w[0].g_n,
            hi: w[1].g_n,
            zeros: zeros.iter().filter(|z| z.ordinate >= w[0].g_n && z.ordinate < w[1].g_n).count(),
        })
        .collect();
    Ok(GramLawReport {
        good: intervals.iter().filter(|i| i.zeros == 1).count(),
        empty: intervals.iter().filter(|i| i.zeros == 0).count(),
        multiple: intervals.iter().filter(|i| i.zeros > 1).count(),
        total_zeros: intervals.iter().map(|i| i.zeros).sum(),
        intervals,
    })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CountReport {
    pub t: f64,
    pub count: usize,
    /// ϑ(T)/π + 1.
    pub formula: f64,
    /// (T/2π) log(T/2πe) + 7/8.
    pub asymptotic: f64,
    /// |count − formula|.
    pub difference: f64,
    /// False below 2π, where the formula does not apply.
    pub valid: bool,
}

/// Compares the number of listed ordinates in (0, T] with N(T).
pub fn count_vs_formula(t: f64, zeros: &[ZeroHit]) -> CountReport {
    let count = zeros.iter().filter(|z| z.ordinate > 0.0 && z.ordinate <= t).count();
    let est = zero_count_estimate(t);
    CountReport {
        t,
        count,
        formula: est.exact_phase,
        asymptotic: est.asymptotic,
        difference: (count as f64 - est.exact_phase).abs(),
        valid: t > ZERO_COUNT_MIN_T,
    }
}

pub fn to_zero_table(zeros: &[ZeroHit], source_label: impl Into<String>) -> Result<ZeroTable> {
    ZeroTable::new(zeros.iter().map(|z| z.ordinate).collect(), None, source_label)
}

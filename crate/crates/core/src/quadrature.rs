//! Globally adaptive Gauss–Kronrod (7/15) quadrature on finite intervals,
//! for real or complex integrands.

use std::collections::BinaryHeap;
use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;

use crate::{Error, EvalResult, Result};

/// Tolerances, truncation bounds and subdivision limits for every integral.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadratureConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    /// Upper truncation of ∫₀^∞ dω; S(ω) < 1e-100 beyond ω = 4.
    pub omega_max: f64,
    pub max_subdiv: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            abs_tol: 1e-12,
            rel_tol: 1e-10,
            omega_max: 4.0,
            max_subdiv: 2000,
        }
    }
}

impl QuadratureConfig {
    pub fn with_abs_tol(mut self, abs_tol: f64) -> Self {
        self.abs_tol = abs_tol;
        self
    }
}

/// Values the quadrature can accumulate.
pub trait QuadValue: Copy + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self> {
    fn zero() -> Self;
    fn magnitude(&self) -> f64;
    /// Real part, used only to report failures.
    fn leading(&self) -> f64;
}

impl QuadValue for f64 {
    fn zero() -> Self {
        0.0
    }
    fn magnitude(&self) -> f64 {
        self.abs()
    }
    fn leading(&self) -> f64 {
        *self
    }
}

impl QuadValue for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
    fn leading(&self) -> f64 {
        self.re
    }
}

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_838_258_730,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

/// Gauss weights for the nodes XGK[1], XGK[3], XGK[5], XGK[7].
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

struct Panel<T> {
    a: f64,
    b: f64,
    value: T,
    err: f64,
}

impl<T> PartialEq for Panel<T> {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}
impl<T> Eq for Panel<T> {}
impl<T> PartialOrd for Panel<T> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl<T> Ord for Panel<T> {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.err.total_cmp(&other.err)
    }
}

fn kronrod15<T: QuadValue>(f: &impl Fn(f64) -> T, a: f64, b: f64) -> Panel<T> {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut fv = [T::zero(); 15];
    fv[7] = f(center);
    for j in 0..7 {
        let dx = half * XGK[j];
        fv[j] = f(center - dx);
        fv[14 - j] = f(center + dx);
    }
    let mut kronrod = fv[7] * WGK[7];
    let mut gauss = fv[7] * WG[3];
    let mut abs_sum = fv[7].magnitude() * WGK[7];
    for j in 0..7 {
        let pair = fv[j] + fv[14 - j];
        kronrod = kronrod + pair * WGK[j];
        abs_sum += WGK[j] * (fv[j].magnitude() + fv[14 - j].magnitude());
        if j % 2 == 1 {
            gauss = gauss + pair * WG[j / 2];
        }
    }
    let mean = kronrod * 0.5;
    let mut asc = WGK[7] * (fv[7] - mean).magnitude();
    for j in 0..7 {
        asc += WGK[j] * ((fv[j] - mean).magnitude() + (fv[14 - j] - mean).magnitude());
    }
    let scale = half.abs();
    let value = kronrod * half;
    let resasc = asc * scale;
    let resabs = abs_sum * scale;
    let mut err = ((kronrod - gauss) * half).magnitude();
    if resasc != 0.0 && err != 0.0 {
        err = resasc * (200.0 * err / resasc).powf(1.5).min(1.0);
    }
    if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * resabs);
    }
    Panel { a, b, value, err }
}

/// ∫_a^b f with globally adaptive bisection of the worst panel.
pub fn integrate<T: QuadValue>(
    f: impl Fn(f64) -> T,
    a: f64,
    b: f64,
    cfg: &QuadratureConfig,
) -> Result<EvalResult<T>> {
    let first = kronrod15(&f, a, b);
    let mut total = first.value;
    let mut err = first.err;
    let mut heap = BinaryHeap::new();
    heap.push(first);
    let mut subdivisions = 0;
    loop {
        if err <= cfg.abs_tol.max(cfg.rel_tol * total.magnitude()) {
            return Ok(EvalResult::new(total, err));
        }
        if subdivisions >= cfg.max_subdiv {
            return Err(Error::Quadrature {
                value: total.leading(),
                abs_err: err,
                subdivisions,
            });
        }
        let worst = heap.pop().expect("heap holds at least one panel");
        let mid = 0.5 * (worst.a + worst.b);
        let left = kronrod15(&f, worst.a, mid);
        let right = kronrod15(&f, mid, worst.b);
        total = total - worst.value + left.value + right.value;
        err += left.err + right.err - worst.err;
        heap.push(left);
        heap.push(right);
        subdivisions += 1;
        if subdivisions % 64 == 0 {
            // Re-sum to shed accumulated cancellation in the running totals.
            total = heap.iter().fold(T::zero(), |acc, p| acc + p.value);
            err = heap.iter().map(|p| p.err).sum();
        }
    }
}

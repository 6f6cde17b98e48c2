//! Five-point central finite differences.
//!
//! Truncation error is O(h⁴); roundoff grows like ε/h for the first
//! derivative and ε/h² for the second.

use std::ops::{Add, Mul, Sub};

pub trait FieldLike: Copy + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self> {}

impl<T> FieldLike for T where T: Copy + Add<Output = T> + Sub<Output = T> + Mul<f64, Output = T> {}

pub const DEFAULT_STEP: f64 = 1e-3;

pub fn central_first<T: FieldLike>(f: impl Fn(f64) -> T, x: f64, h: f64) -> T {
    let f1 = f(x + h) - f(x - h);
    let f2 = f(x + 2.0 * h) - f(x - 2.0 * h);
    (f1 * 8.0 - f2) * (1.0 / (12.0 * h))
}

pub fn central_second<T: FieldLike>(f: impl Fn(f64) -> T, x: f64, h: f64) -> T {
    let f0 = f(x);
    let f1 = f(x + h) + f(x - h);
    let f2 = f(x + 2.0 * h) + f(x - 2.0 * h);
    (f1 * 16.0 - f2 - f0 * 30.0) * (1.0 / (12.0 * h * h))
}

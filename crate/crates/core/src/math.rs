//! Thin wrappers so the rest of the crate reads like ordinary float code.

#![allow(dead_code)]

pub(crate) use core::f64::consts::PI;

#[inline]
pub(crate) fn abs(x: f64) -> f64 {
    libm::fabs(x)
}
#[inline]
pub(crate) fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}
#[inline]
pub(crate) fn exp(x: f64) -> f64 {
    libm::exp(x)
}
#[inline]
pub(crate) fn expm1(x: f64) -> f64 {
    libm::expm1(x)
}
#[inline]
pub(crate) fn ln(x: f64) -> f64 {
    libm::log(x)
}
#[inline]
pub(crate) fn sin(x: f64) -> f64 {
    libm::sin(x)
}
#[inline]
pub(crate) fn cos(x: f64) -> f64 {
    libm::cos(x)
}
#[inline]
pub(crate) fn sinh(x: f64) -> f64 {
    libm::sinh(x)
}
#[inline]
pub(crate) fn cosh(x: f64) -> f64 {
    libm::cosh(x)
}
#[inline]
pub(crate) fn tanh(x: f64) -> f64 {
    libm::tanh(x)
}
#[inline]
pub(crate) fn atan2(y: f64, x: f64) -> f64 {
    libm::atan2(y, x)
}
#[inline]
pub(crate) fn hypot(x: f64, y: f64) -> f64 {
    libm::hypot(x, y)
}
#[inline]
pub(crate) fn floor(x: f64) -> f64 {
    libm::floor(x)
}
#[inline]
pub(crate) fn round(x: f64) -> f64 {
    libm::round(x)
}

/// `sech²(x)` without overflowing for large `|x|`.
pub(crate) fn sech_sq(x: f64) -> f64 {
    let e = exp(-2.0 * abs(x));
    4.0 * e / ((1.0 + e) * (1.0 + e))
}

/// True when `x` is exactly a non-positive integer.
pub(crate) fn is_non_positive_integer(x: f64) -> bool {
    x <= 0.0 && floor(x) == x
}

//! Golden-section maximization on a bracket.

use crate::math;

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Maximize a unimodal `f` on `[lo, hi]` until the bracket is narrower
/// than `tol`. Returns `(x, f(x))` at the best point seen.
///
/// Deterministic: identical inputs give bit-identical results.
pub fn golden_section_max<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, tol: f64) -> (f64, f64) {
    let (mut a, mut b) = if lo <= hi { (lo, hi) } else { (hi, lo) };
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    let mut iters = 0;
    while math::abs(b - a) > tol && iters < 200 {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
        iters += 1;
    }
    if fc >= fd {
        (c, fc)
    } else {
        (d, fd)
    }
}

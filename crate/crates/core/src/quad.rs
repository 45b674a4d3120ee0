//! Adaptive Simpson quadrature shared by the WKB and bound integrals.

use crate::error::{Error, Result};
use crate::math;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureControl {
    pub abs_tol: f64,
    pub max_depth: u32,
}

impl Default for QuadratureControl {
    fn default() -> Self {
        QuadratureControl { abs_tol: 1e-10, max_depth: 40 }
    }
}

impl QuadratureControl {
    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol.is_finite() && self.abs_tol > 0.0) {
            return Err(Error::InvalidInput("abs_tol must be positive"));
        }
        Ok(())
    }
}

#[derive(Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

struct State<'f, F> {
    f: &'f F,
    converged: bool,
}

impl<F: Fn(f64) -> f64> State<'_, F> {
    fn refine(&mut self, p: Panel, tol: f64, depth: u32) -> f64 {
        let m = 0.5 * (p.a + p.b);
        let lm = 0.5 * (p.a + m);
        let rm = 0.5 * (m + p.b);
        let flm = (self.f)(lm);
        let frm = (self.f)(rm);
        let left = simpson(p.a, m, p.fa, flm, p.fm);
        let right = simpson(m, p.b, p.fm, frm, p.fb);
        let delta = left + right - p.whole;
        if math::abs(delta) <= 15.0 * tol {
            return left + right + delta / 15.0;
        }
        if depth == 0 || m <= p.a || m >= p.b {
            self.converged = false;
            return left + right + delta / 15.0;
        }
        let l = Panel { a: p.a, b: m, fa: p.fa, fm: flm, fb: p.fm, whole: left };
        let r = Panel { a: m, b: p.b, fa: p.fm, fm: frm, fb: p.fb, whole: right };
        self.refine(l, 0.5 * tol, depth - 1) + self.refine(r, 0.5 * tol, depth - 1)
    }
}

/// `∫ₐᵇ f(x) dx` by adaptive Simpson with Richardson correction.
///
/// Fails with [`Error::Quadrature`] (carrying the best estimate) if some
/// panel hits `max_depth` before meeting its share of `abs_tol`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, ctrl: &QuadratureControl) -> Result<f64> {
    ctrl.validate()?;
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::InvalidInput("integration limits must be finite"));
    }
    if a == b {
        return Ok(0.0);
    }
    if a > b {
        return integrate(f, b, a, ctrl).map(|v| -v);
    }
    let fa = f(a);
    let fb = f(b);
    let fm = f(0.5 * (a + b));
    let whole = simpson(a, b, fa, fm, fb);
    let mut st = State { f: &f, converged: true };
    let v = st.refine(Panel { a, b, fa, fm, fb, whole }, ctrl.abs_tol, ctrl.max_depth);
    if !v.is_finite() {
        return Err(Error::Quadrature { estimate: v });
    }
    if st.converged {
        Ok(v)
    } else {
        Err(Error::Quadrature { estimate: v })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomials_are_exact() {
        let c = QuadratureControl::default();
        let v = integrate(|x| 3.0 * x * x - x + 2.0, -1.0, 2.0, &c).unwrap();
        assert!((v - (8.0 + 1.0 - 1.5 + 6.0)).abs() < 1e-13);
    }

    #[test]
    fn smooth_transcendental() {
        let c = QuadratureControl::default();
        let v = integrate(libm::sin, 0.0, core::f64::consts::PI, &c).unwrap();
        assert!((v - 2.0).abs() < 1e-10);
    }

    #[test]
    fn reversed_limits_flip_sign() {
        let c = QuadratureControl::default();
        let v = integrate(|x| x, 1.0, 0.0, &c).unwrap();
        assert!((v + 0.5).abs() < 1e-15);
        assert_eq!(integrate(|x| x, 1.0, 1.0, &c).unwrap(), 0.0);
    }

    #[test]
    fn square_root_endpoint() {
        // ∫₀¹ √x dx = 2/3; derivative blows up at 0.
        // The halved panel tolerance cannot be met next to the singularity,
        // but the reported estimate is still good.
        let c = QuadratureControl::default();
        match integrate(libm::sqrt, 0.0, 1.0, &c) {
            Ok(v) | Err(Error::Quadrature { estimate: v }) => assert!((v - 2.0 / 3.0).abs() < 1e-9),
            Err(e) => panic!("{e:?}"),
        }
    }

    #[test]
    fn depth_exhaustion_reports_estimate() {
        let c = QuadratureControl { abs_tol: 1e-14, max_depth: 2 };
        match integrate(|x| libm::sin(50.0 * x), 0.0, 3.0, &c) {
            Err(Error::Quadrature { estimate }) => assert!(estimate.is_finite()),
            other => panic!("expected a quadrature error, got {other:?}"),
        }
    }
}

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::math;

/// Convergence control for the hypergeometric power series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesControl {
    pub rel_tol: f64,
    pub max_terms: usize,
}

impl Default for SeriesControl {
    fn default() -> Self {
        SeriesControl { rel_tol: 1e-15, max_terms: 20_000 }
    }
}

impl SeriesControl {
    pub fn new(rel_tol: f64, max_terms: usize) -> Result<Self> {
        let c = SeriesControl { rel_tol, max_terms };
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.rel_tol <= 1e-6) {
            return Err(Error::InvalidInput("rel_tol must lie in (0, 1e-6]"));
        }
        if self.max_terms < 100 {
            return Err(Error::InvalidInput("max_terms must be at least 100"));
        }
        Ok(())
    }
}

/// Number of consecutive negligible terms required before stopping.
const SMALL_RUN: usize = 3;

/// Gauss hypergeometric `₂F₁(a, b; c; z)` for complex parameters and real
/// `0 ≤ z < 1`, summed directly as `Σ (a)ₙ(b)ₙ/(c)ₙ · zⁿ/n!`.
///
/// Summation stops once three consecutive terms are below
/// `rel_tol · |partial sum|`.
pub fn gauss_2f1(a: Complex, b: Complex, c: Complex, z: f64, ctrl: &SeriesControl) -> Result<Complex> {
    ctrl.validate()?;
    if !(a.is_finite() && b.is_finite() && c.is_finite()) {
        return Err(Error::InvalidInput("hypergeometric parameters must be finite"));
    }
    if !(0.0..1.0).contains(&z) {
        return Err(Error::InvalidInput("hypergeometric argument must lie in [0, 1)"));
    }
    if c.im == 0.0 && math::is_non_positive_integer(c.re) {
        return Err(Error::Pole);
    }
    if z == 0.0 {
        return Ok(Complex::ONE);
    }

    let mut sum = Complex::ONE;
    let mut term = Complex::ONE;
    let mut small = 0;
    for n in 0..ctrl.max_terms {
        let nf = n as f64;
        term = term * (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * z;
        sum += term;
        if term.abs() <= ctrl.rel_tol * sum.abs() {
            small += 1;
            if small == SMALL_RUN {
                return Ok(sum);
            }
        } else {
            small = 0;
        }
    }
    Err(Error::NonConvergence {
        terms: ctrl.max_terms,
        last_term: term.abs(),
    })
}

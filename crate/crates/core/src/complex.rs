//! Minimal complex arithmetic: exactly what the scattering formulas need.

use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub};

use crate::math;

/// A complex number `re + i·im`. Amplitudes, gamma arguments and
/// hypergeometric parameters all use this type.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Complex {
    pub re: f64,
    pub im: f64,
}

pub type ComplexAmplitude = Complex;

impl Complex {
    pub const ZERO: Complex = Complex { re: 0.0, im: 0.0 };
    pub const ONE: Complex = Complex { re: 1.0, im: 0.0 };
    pub const I: Complex = Complex { re: 0.0, im: 1.0 };

    #[inline]
    pub const fn new(re: f64, im: f64) -> Self {
        Complex { re, im }
    }

    #[inline]
    pub const fn real(re: f64) -> Self {
        Complex { re, im: 0.0 }
    }

    #[inline]
    pub const fn imag(im: f64) -> Self {
        Complex { re: 0.0, im }
    }

    pub fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    #[inline]
    pub fn conj(self) -> Self {
        Complex::new(self.re, -self.im)
    }

    /// `|z|²`.
    #[inline]
    pub fn norm_sqr(self) -> f64 {
        self.re * self.re + self.im * self.im
    }

    /// `|z|`, computed without intermediate overflow.
    #[inline]
    pub fn abs(self) -> f64 {
        math::hypot(self.re, self.im)
    }

    #[inline]
    pub fn arg(self) -> f64 {
        math::atan2(self.im, self.re)
    }

    pub fn scale(self, s: f64) -> Self {
        Complex::new(self.re * s, self.im * s)
    }

    pub fn recip(self) -> Self {
        Complex::ONE / self
    }

    pub fn exp(self) -> Self {
        let m = math::exp(self.re);
        Complex::new(m * math::cos(self.im), m * math::sin(self.im))
    }

    /// Principal logarithm, imaginary part in (−π, π].
    pub fn ln(self) -> Self {
        Complex::new(math::ln(self.abs()), self.arg())
    }

    /// Principal square root (non-negative real part).
    pub fn sqrt(self) -> Self {
        if self.re == 0.0 && self.im == 0.0 {
            return Complex::ZERO;
        }
        let r = self.abs();
        let t = math::sqrt(0.5 * (r + math::abs(self.re)));
        if self.re >= 0.0 {
            Complex::new(t, self.im / (2.0 * t))
        } else {
            let im = if self.im >= 0.0 { t } else { -t };
            Complex::new(math::abs(self.im) / (2.0 * t), im)
        }
    }

    pub fn sin(self) -> Self {
        Complex::new(
            math::sin(self.re) * math::cosh(self.im),
            math::cos(self.re) * math::sinh(self.im),
        )
    }

    pub fn cos(self) -> Self {
        Complex::new(
            math::cos(self.re) * math::cosh(self.im),
            -math::sin(self.re) * math::sinh(self.im),
        )
    }

    pub fn sinh(self) -> Self {
        Complex::new(
            math::sinh(self.re) * math::cos(self.im),
            math::cosh(self.re) * math::sin(self.im),
        )
    }

    pub fn cosh(self) -> Self {
        Complex::new(
            math::cosh(self.re) * math::cos(self.im),
            math::sinh(self.re) * math::sin(self.im),
        )
    }

    /// `base^self` for a positive real base.
    pub fn exp_base(self, base: f64) -> Self {
        self.scale(math::ln(base)).exp()
    }

    /// `self^w` on the principal branch.
    pub fn powc(self, w: Complex) -> Self {
        if self.re == 0.0 && self.im == 0.0 {
            return Complex::ZERO;
        }
        (w * self.ln()).exp()
    }
}

impl From<f64> for Complex {
    fn from(re: f64) -> Self {
        Complex::real(re)
    }
}

impl Add for Complex {
    type Output = Complex;
    #[inline]
    fn add(self, o: Complex) -> Complex {
        Complex::new(self.re + o.re, self.im + o.im)
    }
}

impl Add<f64> for Complex {
    type Output = Complex;
    #[inline]
    fn add(self, o: f64) -> Complex {
        Complex::new(self.re + o, self.im)
    }
}

impl Add<Complex> for f64 {
    type Output = Complex;
    #[inline]
    fn add(self, o: Complex) -> Complex {
        Complex::new(self + o.re, o.im)
    }
}

impl AddAssign for Complex {
    #[inline]
    fn add_assign(&mut self, o: Complex) {
        self.re += o.re;
        self.im += o.im;
    }
}

impl Sub for Complex {
    type Output = Complex;
    #[inline]
    fn sub(self, o: Complex) -> Complex {
        Complex::new(self.re - o.re, self.im - o.im)
    }
}

impl Sub<f64> for Complex {
    type Output = Complex;
    #[inline]
    fn sub(self, o: f64) -> Complex {
        Complex::new(self.re - o, self.im)
    }
}

impl Sub<Complex> for f64 {
    type Output = Complex;
    #[inline]
    fn sub(self, o: Complex) -> Complex {
        Complex::new(self - o.re, -o.im)
    }
}

impl Mul for Complex {
    type Output = Complex;
    #[inline]
    fn mul(self, o: Complex) -> Complex {
        Complex::new(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )
    }
}

impl Mul<f64> for Complex {
    type Output = Complex;
    #[inline]
    fn mul(self, o: f64) -> Complex {
        self.scale(o)
    }
}

impl Mul<Complex> for f64 {
    type Output = Complex;
    #[inline]
    fn mul(self, o: Complex) -> Complex {
        o.scale(self)
    }
}

impl MulAssign for Complex {
    #[inline]
    fn mul_assign(&mut self, o: Complex) {
        *self = *self * o;
    }
}

impl Div for Complex {
    type Output = Complex;

    /// Smith's algorithm; avoids overflow in `|o|²`.
    fn div(self, o: Complex) -> Complex {
        if math::abs(o.re) >= math::abs(o.im) {
            let r = o.im / o.re;
            let d = o.re + o.im * r;
            Complex::new((self.re + self.im * r) / d, (self.im - self.re * r) / d)
        } else {
            let r = o.re / o.im;
            let d = o.re * r + o.im;
            Complex::new((self.re * r + self.im) / d, (self.im * r - self.re) / d)
        }
    }
}

impl Div<f64> for Complex {
    type Output = Complex;
    #[inline]
    fn div(self, o: f64) -> Complex {
        Complex::new(self.re / o, self.im / o)
    }
}

impl Div<Complex> for f64 {
    type Output = Complex;
    #[inline]
    fn div(self, o: Complex) -> Complex {
        Complex::real(self) / o
    }
}

impl Neg for Complex {
    type Output = Complex;
    #[inline]
    fn neg(self) -> Complex {
        Complex::new(-self.re, -self.im)
    }
}

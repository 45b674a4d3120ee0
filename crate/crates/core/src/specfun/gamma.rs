use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::math::{self, PI};

// Lanczos approximation, g = 7, n = 9.
const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

const LN_2PI_HALF: f64 = 0.918_938_533_204_672_8;
const LN_PI: f64 = 1.144_729_885_849_400_2;

/// Principal-branch `log Γ(z)`: the imaginary part is reduced to (−π, π],
/// so `exp(log_gamma(z)) = Γ(z)` and nothing more is promised about the
/// branch.
///
/// Uses the Lanczos series for `Re z ≥ 1/2` and the reflection formula
/// `Γ(z)Γ(1−z) = π / sin(πz)` below that.
pub fn log_gamma(z: Complex) -> Result<Complex> {
    if !z.is_finite() {
        return Err(Error::InvalidInput("log_gamma argument must be finite"));
    }
    if z.im == 0.0 && math::is_non_positive_integer(z.re) {
        return Err(Error::Pole);
    }
    Ok(reduce_branch(log_gamma_unreduced(z)))
}

fn log_gamma_unreduced(z: Complex) -> Complex {
    if z.re < 0.5 {
        let s = (z * PI).sin();
        Complex::real(LN_PI) - s.ln() - log_gamma_unreduced(1.0 - z)
    } else {
        let z = z - 1.0;
        let mut x = Complex::real(LANCZOS_COEF[0]);
        for (i, &c) in LANCZOS_COEF.iter().enumerate().skip(1) {
            x += c / (z + i as f64);
        }
        let t = z + (LANCZOS_G + 0.5);
        Complex::real(LN_2PI_HALF) + (z + 0.5) * t.ln() - t + x.ln()
    }
}

fn reduce_branch(w: Complex) -> Complex {
    let two_pi = 2.0 * PI;
    let mut im = w.im - two_pi * math::round(w.im / two_pi);
    if im <= -PI {
        im += two_pi;
    }
    Complex::new(w.re, im)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_of_one_and_two() {
        assert!(log_gamma(Complex::ONE).unwrap().abs() < 1e-14);
        assert!(log_gamma(Complex::real(2.0)).unwrap().abs() < 1e-14);
    }

    #[test]
    fn gamma_of_half_is_root_pi() {
        let v = log_gamma(Complex::real(0.5)).unwrap();
        assert!((v.re - 0.572_364_942_924_700_1).abs() < 1e-14);
        assert_eq!(v.im, 0.0);
    }

    #[test]
    fn factorials() {
        // ln(9!) = ln 362880
        let v = log_gamma(Complex::real(10.0)).unwrap();
        assert!((v.re - libm::log(362_880.0)).abs() < 1e-12);
    }

    #[test]
    fn negative_real_axis_sign() {
        // Γ(−0.5) = −2√π, so the principal log has imaginary part π.
        let v = log_gamma(Complex::real(-0.5)).unwrap();
        let expected = libm::log(2.0 * libm::sqrt(PI));
        assert!((v.re - expected).abs() < 1e-13);
        assert!((v.im.abs() - PI).abs() < 1e-12);
    }

    #[test]
    fn poles_rejected() {
        for p in [0.0, -1.0, -7.0] {
            assert_eq!(log_gamma(Complex::real(p)), Err(Error::Pole));
        }
        assert!(log_gamma(Complex::new(-1.0, 1e-9)).is_ok());
    }

    #[test]
    fn branch_is_principal() {
        let v = log_gamma(Complex::new(30.0, 40.0)).unwrap();
        assert!(v.im > -PI && v.im <= PI);
    }
}

//! Shared scattering types: unit context, amplitudes and probabilities.

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::math;

/// Values of ħ and m. Defaults to natural units (ħ = m = 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicsContext {
    pub hbar: f64,
    pub mass: f64,
}

impl Default for PhysicsContext {
    fn default() -> Self {
        PhysicsContext { hbar: 1.0, mass: 1.0 }
    }
}

impl PhysicsContext {
    pub fn new(hbar: f64, mass: f64) -> Result<Self> {
        let ctx = PhysicsContext { hbar, mass };
        ctx.validate()?;
        Ok(ctx)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.hbar.is_finite() && self.hbar > 0.0) {
            return Err(Error::InvalidInput("hbar must be positive and finite"));
        }
        if !(self.mass.is_finite() && self.mass > 0.0) {
            return Err(Error::InvalidInput("mass must be positive and finite"));
        }
        Ok(())
    }

    /// `2m/ħ²`, the factor turning an energy into a squared wavenumber.
    #[inline]
    pub fn energy_to_k2(&self) -> f64 {
        2.0 * self.mass / (self.hbar * self.hbar)
    }

    /// Wavenumber squared for kinetic energy `e`: `2m e / ħ²`. May be negative.
    #[inline]
    pub fn k_squared(&self, e: f64) -> f64 {
        self.energy_to_k2() * e
    }

    /// Inverse of [`k_squared`](Self::k_squared) for a real wavenumber.
    #[inline]
    pub fn energy_of_k(&self, k: f64) -> f64 {
        k * k / self.energy_to_k2()
    }
}

/// Transmission and reflection amplitudes together with the wavenumbers of
/// the incoming and outgoing channels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScatteringAmplitudes {
    pub t: Complex,
    pub r: Complex,
    pub k_in: f64,
    pub k_out: f64,
}

impl ScatteringAmplitudes {
    pub fn probabilities(&self) -> Result<Probabilities> {
        probabilities_from_amplitudes(self)
    }
}

/// `T = |t|²` and `R = |r|²`. Never clamped; property tests see raw values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Probabilities {
    pub transmission: f64,
    pub reflection: f64,
}

impl Probabilities {
    pub fn new(transmission: f64, reflection: f64) -> Self {
        Probabilities { transmission, reflection }
    }

    pub fn defect(&self) -> f64 {
        unitarity_defect(self)
    }

    /// Copy clamped into [0, 1], for display only.
    pub fn clamped(&self) -> Self {
        Probabilities {
            transmission: self.transmission.clamp(0.0, 1.0),
            reflection: self.reflection.clamp(0.0, 1.0),
        }
    }
}

pub fn probabilities_from_amplitudes(a: &ScatteringAmplitudes) -> Result<Probabilities> {
    if !a.t.is_finite() || !a.r.is_finite() {
        return Err(Error::InvalidInput("non-finite amplitude"));
    }
    Ok(Probabilities {
        transmission: a.t.norm_sqr(),
        reflection: a.r.norm_sqr(),
    })
}

/// `|T + R − 1|`.
pub fn unitarity_defect(p: &Probabilities) -> f64 {
    math::abs(p.transmission + p.reflection - 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn amps(t: Complex, r: Complex) -> ScatteringAmplitudes {
        ScatteringAmplitudes { t, r, k_in: 1.0, k_out: 1.0 }
    }

    #[test]
    fn free_propagation_and_total_reflection() {
        let p = probabilities_from_amplitudes(&amps(Complex::ONE, Complex::ZERO)).unwrap();
        assert_eq!((p.transmission, p.reflection), (1.0, 0.0));
        let p = probabilities_from_amplitudes(&amps(Complex::ZERO, Complex::I)).unwrap();
        assert_eq!((p.transmission, p.reflection), (0.0, 1.0));
    }

    #[test]
    fn half_and_half() {
        let p = probabilities_from_amplitudes(&amps(
            Complex::new(0.5, -0.5),
            Complex::new(0.5, 0.5),
        ))
        .unwrap();
        assert_eq!((p.transmission, p.reflection), (0.5, 0.5));
        assert_eq!(unitarity_defect(&p), 0.0);
    }

    #[test]
    fn defect_arithmetic() {
        assert_eq!(unitarity_defect(&Probabilities::new(1.0, 0.0)), 0.0);
        let d = unitarity_defect(&Probabilities::new(0.3, 0.6));
        assert!((d - 0.1).abs() < 1e-15);
    }

    #[test]
    fn rejects_non_finite() {
        let bad = amps(Complex::new(f64::NAN, 0.0), Complex::ZERO);
        assert!(matches!(
            probabilities_from_amplitudes(&bad),
            Err(Error::InvalidInput(_))
        ));
        let bad = amps(Complex::ONE, Complex::new(0.0, f64::INFINITY));
        assert!(probabilities_from_amplitudes(&bad).is_err());
    }

    #[test]
    fn context_validation() {
        assert!(PhysicsContext::new(1.0, 1.0).is_ok());
        assert!(PhysicsContext::new(0.0, 1.0).is_err());
        assert!(PhysicsContext::new(1.0, -2.0).is_err());
        assert!(PhysicsContext::new(f64::NAN, 1.0).is_err());
        let ctx = PhysicsContext::new(2.0, 3.0).unwrap();
        assert!((ctx.energy_of_k(ctx.k_squared(5.0).sqrt()) - 5.0).abs() < 1e-14);
    }

    #[test]
    fn clamping_is_display_only() {
        let p = Probabilities::new(1.0 + 1e-13, -1e-14);
        let c = p.clamped();
        assert_eq!((c.transmission, c.reflection), (1.0, 0.0));
        assert!(p.transmission > 1.0);
    }
}

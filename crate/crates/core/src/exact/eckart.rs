use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::math::{self, PI};
use crate::physics::PhysicsContext;
use crate::potentials::Eckart;
use crate::specfun::log_gamma;

/// Which wavenumber plays the role of `k` in the printed Eckart reflection
/// formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EckartConvention {
    /// `k = √(2mE)/ħ`, as printed.
    #[default]
    Verbatim,
    /// `k = k₋∞`, the incident channel; then `√(k∞² + k₋∞² − k²) = k∞`.
    IncidentChannel,
}

struct Channels {
    k_minus: f64,
    k_plus: f64,
}

fn channels(e: &Eckart, energy: f64, ctx: &PhysicsContext) -> Result<Channels> {
    ctx.validate()?;
    let e = Eckart::new(e.v_minus_inf, e.v_plus_inf, e.v0, e.a)?;
    if !energy.is_finite() {
        return Err(Error::InvalidEnergy(energy));
    }
    if energy <= e.v_minus_inf || energy <= e.v_plus_inf {
        return Err(Error::WrongCase("an asymptotic channel is evanescent; energy must exceed both asymptotes"));
    }
    Ok(Channels {
        k_minus: math::sqrt(ctx.k_squared(energy - e.v_minus_inf)),
        k_plus: math::sqrt(ctx.k_squared(energy - e.v_plus_inf)),
    })
}

/// `1/4 − 2mV0a²/ħ²`.
fn well_radicand(e: &Eckart, ctx: &PhysicsContext) -> f64 {
    0.25 - ctx.k_squared(e.v0) * e.a * e.a
}

/// Eckart transmission probability
///
/// ```text
/// T = sinh(πk₋a) sinh(πk₊a) / (sinh²(πk̄a) + cos²(π√(1/4 − 2mV0a²/ħ²)))
/// ```
///
/// with `k̄ = (k₋ + k₊)/2`. A negative radicand turns the cosine into a
/// hyperbolic cosine. Evaluated in a form scaled by `sinh²(πk̄a)` so large
/// `ka` does not overflow.
pub fn eckart_transmission(e: &Eckart, energy: f64, ctx: &PhysicsContext) -> Result<f64> {
    let ch = channels(e, energy, ctx)?;
    let x = PI * ch.k_minus * e.a;
    let y = PI * ch.k_plus * e.a;
    let m = 0.5 * (x + y);
    let one_minus = |s: f64| -math::expm1(-2.0 * s);

    let rad = well_radicand(e, ctx);
    // 4 e^{−2m} · cos²(πs), or its hyperbolic counterpart
    let cos_term = if rad >= 0.0 {
        let c = math::cos(PI * math::sqrt(rad));
        4.0 * math::exp(-2.0 * m) * c * c
    } else {
        let sigma = PI * math::sqrt(-rad);
        let s = math::exp(sigma - m) + math::exp(-sigma - m);
        s * s
    };
    let den_sinh = one_minus(m);
    Ok(one_minus(x) * one_minus(y) / (den_sinh * den_sinh + cos_term))
}

/// The transmission amplitude written with gamma functions:
///
/// ```text
/// t = −i/(√(k₊k₋) a) · Γ(ik̄a + ½ + s) Γ(ik̄a + ½ − s) / (Γ(ik₊a) Γ(ik₋a))
/// ```
///
/// with `s = √(1/4 − 2mV0a²/ħ²)` on the principal branch. `|t|²` equals
/// [`eckart_transmission`].
pub fn eckart_transmission_amplitude(e: &Eckart, energy: f64, ctx: &PhysicsContext) -> Result<Complex> {
    let ch = channels(e, energy, ctx)?;
    let k_bar = 0.5 * (ch.k_minus + ch.k_plus);
    let s = Complex::real(well_radicand(e, ctx)).sqrt();
    let base = Complex::new(0.5, k_bar * e.a);
    let log_ratio = log_gamma(base + s)? + log_gamma(base - s)?
        - log_gamma(Complex::imag(ch.k_plus * e.a))?
        - log_gamma(Complex::imag(ch.k_minus * e.a))?;
    let pre = -1.0 / (math::sqrt(ch.k_plus * ch.k_minus) * e.a);
    Ok(Complex::imag(pre) * log_ratio.exp())
}

/// The printed reflection formula
///
/// ```text
/// R = (cosh[πa(k − √(k∞² + k₋∞² − k²))] − cos πb) / (cosh[πa(k + √(…))] − cos πb)
/// ```
///
/// with `b = √(1 − 8mV0a²/ħ²)`. It is not guaranteed to equal `1 − T`; the
/// choice of `k` is selected by `convention`.
pub fn eckart_reflection_paper(
    e: &Eckart,
    energy: f64,
    ctx: &PhysicsContext,
    convention: EckartConvention,
) -> Result<f64> {
    let ch = channels(e, energy, ctx)?;
    let k = match convention {
        EckartConvention::Verbatim => {
            if energy <= 0.0 {
                return Err(Error::InvalidEnergy(energy));
            }
            math::sqrt(ctx.k_squared(energy))
        }
        EckartConvention::IncidentChannel => ch.k_minus,
    };
    let rad = ch.k_plus * ch.k_plus + ch.k_minus * ch.k_minus - k * k;
    if rad < 0.0 {
        return Err(Error::WrongCase("k∞² + k₋∞² − k² is negative for this energy"));
    }
    let root = math::sqrt(rad);
    let b_sq = 1.0 - 4.0 * ctx.k_squared(e.v0) * e.a * e.a;
    let cos_pi_b = if b_sq >= 0.0 {
        math::cos(PI * math::sqrt(b_sq))
    } else {
        math::cosh(PI * math::sqrt(-b_sq))
    };
    let num = math::cosh(PI * e.a * (k - root)) - cos_pi_b;
    let den = math::cosh(PI * e.a * (k + root)) - cos_pi_b;
    Ok(num / den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> PhysicsContext {
        PhysicsContext::default()
    }

    /// Asymptotes chosen so that k₋∞ = km and k₊∞ = kp at energy `e`.
    fn with_channels(km: f64, kp: f64, v0: f64, a: f64, e: f64) -> Eckart {
        let c = ctx();
        Eckart::new(e - c.energy_of_k(km), e - c.energy_of_k(kp), v0, a).unwrap()
    }

    #[test]
    fn free_limit_is_transparent() {
        let p = with_channels(1.3, 1.3, 0.0, 1.0, 2.0);
        assert!((eckart_transmission(&p, 2.0, &ctx()).unwrap() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn step_closed_form() {
        // k₋ = 1, k₊ = 2, a = 1, V0 = 0 ⇒ sinh(π) sinh(2π) / sinh²(3π/2)
        let p = with_channels(1.0, 2.0, 0.0, 1.0, 2.0);
        let t = eckart_transmission(&p, 2.0, &ctx()).unwrap();
        let direct = libm::sinh(PI) * libm::sinh(2.0 * PI) / libm::sinh(1.5 * PI).powi(2);
        assert!((t - direct).abs() < 1e-14);
        assert!((t - 0.998_290_193_011_013_1).abs() < 1e-14);
    }

    #[test]
    fn resonance_in_symmetric_case() {
        for a in [1.0, 2.0] {
            for n in 1..=3 {
                let nf = n as f64;
                let v0 = -nf * (nf + 1.0) / (2.0 * a * a);
                let p = with_channels(0.7, 0.7, v0, a, 1.0);
                let t = eckart_transmission(&p, 1.0, &ctx()).unwrap();
                assert!((t - 1.0).abs() < 1e-12, "a={a} n={n} T={t}");
            }
        }
    }

    #[test]
    fn amplitude_modulus_matches_probability() {
        for (km, kp, v0, a) in [
            (1.0, 2.0, 0.0, 1.0),
            (1.0, 2.0, -1.0, 1.0),
            (0.5, 0.9, 0.3, 1.5),
            (2.0, 1.0, 2.5, 0.7),
            (0.8, 0.8, -3.0, 1.0),
        ] {
            let p = with_channels(km, kp, v0, a, 3.0);
            let t = eckart_transmission(&p, 3.0, &ctx()).unwrap();
            let amp = eckart_transmission_amplitude(&p, 3.0, &ctx()).unwrap();
            assert!((amp.norm_sqr() - t).abs() < 1e-11 * t.max(1e-3), "{km} {kp} {v0} {a}: {} vs {t}", amp.norm_sqr());
        }
    }

    #[test]
    fn tall_bump_uses_hyperbolic_cosine() {
        let p = with_channels(1.0, 1.0, 5.0, 1.0, 1.0);
        let t = eckart_transmission(&p, 1.0, &ctx()).unwrap();
        let s = libm::sqrt(2.0 * 5.0 - 0.25);
        let expected = libm::sinh(PI).powi(2) / (libm::sinh(PI).powi(2) + libm::cosh(PI * s).powi(2));
        assert!((t - expected).abs() < 1e-15);
        assert!(t > 0.0 && t < 1e-3);
    }

    #[test]
    fn large_wavenumbers_stay_finite() {
        let p = with_channels(300.0, 301.0, -1.0, 1.0, 1e5);
        let t = eckart_transmission(&p, 1e5, &ctx()).unwrap();
        assert!(t.is_finite() && t <= 1.0 && t > 0.999);
    }

    #[test]
    fn evanescent_channel_rejected() {
        let p = Eckart::new(2.0, 1.0, -1.0 / 9.0, 3.0).unwrap();
        assert!(matches!(eckart_transmission(&p, 1.5, &ctx()), Err(Error::WrongCase(_))));
        assert!(eckart_transmission(&p, 3.0, &ctx()).is_ok());
    }

    #[test]
    fn printed_reflection_breaks_unitarity_when_tunneling() {
        // With the printed sign of the cos πb term, R can exceed 1 below the
        // barrier top; 1 − T stays in range.
        let p = Eckart::new(0.0, 0.0, 0.4, 1.0).unwrap();
        let r = eckart_reflection_paper(&p, 0.2, &ctx(), EckartConvention::Verbatim).unwrap();
        assert!(r > 1.0, "R = {r}");
        let t = eckart_transmission(&p, 0.2, &ctx()).unwrap();
        assert!(t > 0.0 && t < 1.0);
    }

    #[test]
    fn printed_reflection_vanishes_at_high_energy() {
        let p = Eckart::new(0.0, 0.0, 0.4, 1.0).unwrap();
        let e = ctx().energy_of_k(50.0);
        let r = eckart_reflection_paper(&p, e, &ctx(), EckartConvention::Verbatim).unwrap();
        assert!(r < 1e-100);
    }

    #[test]
    fn printed_reflection_matches_unitarity_when_cos_pi_b_vanishes() {
        // b = 1/2 ⇔ 8mV0a²/ħ² = 3/4; then cos πb = 0 and the sign of that
        // term no longer matters.
        let a = 1.0;
        let v0 = 3.0 / (32.0 * a * a);
        let p = with_channels(1.0, 2.0, v0, a, 2.0);
        let t = eckart_transmission(&p, 2.0, &ctx()).unwrap();
        let r = eckart_reflection_paper(&p, 2.0, &ctx(), EckartConvention::IncidentChannel).unwrap();
        assert!((r - (1.0 - t)).abs() < 1e-12, "R = {r}, 1 − T = {}", 1.0 - t);
    }

    #[test]
    fn printed_reflection_radicand_check() {
        // Verbatim k² = 2E exceeds k∞² + k₋∞² when both asymptotes are high.
        let p = Eckart::new(1.0, 1.0, 0.1, 1.0).unwrap();
        assert!(matches!(
            eckart_reflection_paper(&p, 1.5, &ctx(), EckartConvention::Verbatim),
            Err(Error::WrongCase(_))
        ));
        assert!(eckart_reflection_paper(&p, 1.5, &ctx(), EckartConvention::IncidentChannel).is_ok());
    }
}

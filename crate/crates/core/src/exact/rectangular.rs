use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::math;
use crate::physics::{PhysicsContext, ScatteringAmplitudes};

fn check(v0: f64, a: f64, energy: f64, ctx: &PhysicsContext) -> Result<()> {
    ctx.validate()?;
    if !(v0.is_finite() && v0 > 0.0) {
        return Err(Error::InvalidInput("barrier height v0 must be positive"));
    }
    if !(a.is_finite() && a > 0.0) {
        return Err(Error::InvalidInput("half-width a must be positive"));
    }
    if !(energy.is_finite() && energy > 0.0) {
        return Err(Error::InvalidEnergy(energy));
    }
    if energy == v0 {
        return Err(Error::DegenerateEnergy(energy));
    }
    Ok(())
}

/// Rectangular barrier with `E > V0`:
///
/// ```text
/// t = 4kq e^{2ika} / ((k+q)² e^{2iqa} − (k−q)² e^{−2iqa})
/// r = 2i(k² − q²) sin(2qa) e^{2ika} / (same denominator)
/// ```
pub fn rectangular_above(v0: f64, a: f64, energy: f64, ctx: &PhysicsContext) -> Result<ScatteringAmplitudes> {
    check(v0, a, energy, ctx)?;
    if energy < v0 {
        return Err(Error::WrongCase("energy below the barrier; use rectangular_below"));
    }
    let k = math::sqrt(ctx.k_squared(energy));
    let q = math::sqrt(ctx.k_squared(energy - v0));
    let k0_sq = ctx.k_squared(v0);

    let phase = Complex::imag(2.0 * k * a).exp();
    let inner = Complex::imag(2.0 * q * a).exp();
    let den = inner * ((k + q) * (k + q)) - inner.conj() * ((k - q) * (k - q));
    let t = phase * (4.0 * k * q) / den;
    let r = Complex::imag(2.0 * k0_sq * math::sin(2.0 * q * a)) * phase / den;
    Ok(ScatteringAmplitudes { t, r, k_in: k, k_out: k })
}

/// Rectangular barrier with `0 < E < V0` (tunneling):
///
/// ```text
/// t = 2iQk e^{−2ika} / ((k² − Q²) sinh(2Qa) + 2ikQ cosh(2Qa))
/// r = (k² + Q²) sinh(2Qa) e^{−2ika} / (same denominator)
/// ```
///
/// Numerator and denominator are divided by `cosh(2Qa)` so thick barriers
/// underflow to `T = 0` instead of producing `inf/inf`.
pub fn rectangular_below(v0: f64, a: f64, energy: f64, ctx: &PhysicsContext) -> Result<ScatteringAmplitudes> {
    check(v0, a, energy, ctx)?;
    if energy > v0 {
        return Err(Error::WrongCase("energy above the barrier; use rectangular_above"));
    }
    let k = math::sqrt(ctx.k_squared(energy));
    let big_q = math::sqrt(ctx.k_squared(v0 - energy));
    let x = 2.0 * big_q * a;
    let th = math::tanh(x);
    let sech = 1.0 / math::cosh(x);

    let phase = Complex::imag(-2.0 * k * a).exp();
    let den = Complex::new((k * k - big_q * big_q) * th, 2.0 * k * big_q);
    let t = Complex::imag(2.0 * big_q * k * sech) * phase / den;
    let r = phase * ((k * k + big_q * big_q) * th) / den;
    Ok(ScatteringAmplitudes { t, r, k_in: k, k_out: k })
}

/// The printed tunneling reflection probability
/// `R = k₀⁴ sinh²(2Qa) / ((k² − Q²)² sinh²(2Qa) + 4k²Q² cosh²(2Qa))`.
/// Kept as a cross-check of [`rectangular_below`]'s `|r|²`.
pub fn rectangular_reflection_formula(v0: f64, a: f64, energy: f64, ctx: &PhysicsContext) -> Result<f64> {
    check(v0, a, energy, ctx)?;
    if energy > v0 {
        return Err(Error::WrongCase("energy above the barrier"));
    }
    let k2 = ctx.k_squared(energy);
    let bq2 = ctx.k_squared(v0 - energy);
    let k0_sq = ctx.k_squared(v0);
    let th = math::tanh(2.0 * math::sqrt(bq2) * a);
    let num = k0_sq * k0_sq * th * th;
    Ok(num / ((k2 - bq2) * (k2 - bq2) * th * th + 4.0 * k2 * bq2))
}

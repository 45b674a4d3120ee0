use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::math;
use crate::physics::{PhysicsContext, ScatteringAmplitudes};

/// `t = k/(k − ik₀)`, `r = ik₀/(k − ik₀)` with `k₀ = mα/ħ²`.
pub fn delta_amplitudes(alpha: f64, energy: f64, ctx: &PhysicsContext) -> Result<ScatteringAmplitudes> {
    ctx.validate()?;
    if !(alpha.is_finite() && alpha > 0.0) {
        return Err(Error::InvalidInput("delta strength alpha must be positive"));
    }
    if !(energy.is_finite() && energy > 0.0) {
        return Err(Error::InvalidEnergy(energy));
    }
    let k = math::sqrt(ctx.k_squared(energy));
    let k0 = ctx.mass * alpha / (ctx.hbar * ctx.hbar);
    let den = Complex::new(k, -k0);
    Ok(ScatteringAmplitudes {
        t: Complex::real(k) / den,
        r: Complex::imag(k0) / den,
        k_in: k,
        k_out: k,
    })
}

//! Transfer-matrix lower bound on transmission:
//!
//! ```text
//! T ≥ sech²( ½ ∫_{x1}^{x2} |k0 − k²(x)/k0| dx ),   k²(x) = 2m(E − V(x))/ħ²
//! ```
//!
//! where `k0` is the wavenumber outside the window.

use crate::error::{Error, Result};
use crate::math;
use crate::physics::PhysicsContext;
use crate::potentials::{PotentialSpec, Rectangular, SampledPotential};
use crate::quad::{integrate, QuadratureControl};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundResult {
    /// `sech²(integral_value)`.
    pub lower_bound: f64,
    /// The argument of sech², `½ ∫ |k0 − k²(x)/k0| dx`.
    pub integral_value: f64,
}

impl BoundResult {
    fn from_argument(integral_value: f64) -> Self {
        BoundResult {
            lower_bound: math::sech_sq(integral_value),
            integral_value,
        }
    }
}

/// Numeric bound over `window` for a potential that equals `v_outside`
/// outside it.
pub fn transmission_bound<P: SampledPotential + ?Sized>(
    potential: &P,
    energy: f64,
    window: (f64, f64),
    v_outside: f64,
    ctx: &PhysicsContext,
    ctrl: &QuadratureControl,
) -> Result<BoundResult> {
    ctx.validate()?;
    if !energy.is_finite() {
        return Err(Error::InvalidEnergy(energy));
    }
    if energy <= v_outside {
        return Err(Error::InvalidChannel);
    }
    let (x1, x2) = window;
    if !(x1.is_finite() && x2.is_finite() && x1 <= x2) {
        return Err(Error::InvalidInput("window requires finite x1 <= x2"));
    }
    let scale = ctx.energy_to_k2();
    let k0 = math::sqrt(scale * (energy - v_outside));
    // |k0 − k²(x)/k0| = (2m/ħ²)|V(x) − V_out| / k0
    let integrand = |x: f64| scale * math::abs(potential.value(x) - v_outside) / k0;
    let integral = integrate(integrand, x1, x2, ctrl)?;
    Ok(BoundResult::from_argument(0.5 * integral))
}

/// `sech²(k0² a / √(k0² + q²))`, with `k0² = 2mV0/ħ²` and `q² = 2m(E − V0)/ħ²`.
pub fn rectangular_bound_closed_form(v0: f64, a: f64, energy: f64, ctx: &PhysicsContext) -> Result<BoundResult> {
    ctx.validate()?;
    let r = Rectangular::new(v0, a)?;
    if !(energy.is_finite() && energy > 0.0) {
        return Err(Error::InvalidEnergy(energy));
    }
    if energy <= r.v0 {
        return Err(Error::WrongCase("closed-form bound needs E > V0"));
    }
    let k0_sq = ctx.k_squared(r.v0);
    let q_sq = ctx.k_squared(energy - r.v0);
    Ok(BoundResult::from_argument(k0_sq * r.a / math::sqrt(k0_sq + q_sq)))
}

/// Fraction of the peak deviation `max|V − V∞|` below which the potential
/// counts as asymptotic.
const SUPPORT_FRACTION: f64 = 1e-8;

/// Window outside which `|V(x) − v_outside| ≤ 1e−8 · max|V − v_outside|`,
/// found by stepping outward from `center` in steps of `step`.
pub fn support_window<P: SampledPotential + ?Sized>(
    potential: &P,
    v_outside: f64,
    center: f64,
    step: f64,
) -> Result<(f64, f64)> {
    if !(step.is_finite() && step > 0.0) {
        return Err(Error::InvalidInput("scan step must be positive"));
    }
    const MAX_STEPS: usize = 1_000_000;
    let dev = |x: f64| math::abs(potential.value(x) - v_outside);

    let mut peak = dev(center);
    let mut edge = [center, center];
    for (side, dir) in [(0usize, -1.0f64), (1, 1.0)] {
        let mut last_above = center;
        let mut quiet = 0usize;
        for i in 1..=MAX_STEPS {
            let x = center + dir * step * i as f64;
            let d = dev(x);
            if d > peak {
                peak = d;
            }
            if d > SUPPORT_FRACTION * peak {
                last_above = x;
                quiet = 0;
            } else {
                quiet += 1;
                // require a long quiet stretch so a zero crossing inside the
                // support does not end the scan
                if quiet > 64 && (x - last_above).abs() > 8.0 * step {
                    break;
                }
            }
            if i == MAX_STEPS {
                return Err(Error::NotApplicable("potential does not reach its asymptote"));
            }
        }
        edge[side] = last_above + dir * step;
    }
    Ok((edge[0], edge[1]))
}

/// Bound for one of the solvable potentials, with the window and `k0`
/// chosen automatically. The delta function and Eckart profiles with
/// unequal asymptotes are rejected.
pub fn potential_bound(
    potential: &PotentialSpec,
    energy: f64,
    ctx: &PhysicsContext,
    ctrl: &QuadratureControl,
) -> Result<BoundResult> {
    match potential {
        PotentialSpec::Delta(_) => Err(Error::NotApplicable("no quadrature bound for a delta potential")),
        PotentialSpec::Rectangular(r) => {
            transmission_bound(r, energy, (-r.a, r.a), 0.0, ctx, ctrl)
        }
        PotentialSpec::Eckart(e) => {
            if e.v_minus_inf != e.v_plus_inf {
                return Err(Error::NotApplicable("bound needs equal asymptotes"));
            }
            let window = support_window(e, e.v_plus_inf, 0.0, e.a / 64.0)?;
            transmission_bound(e, energy, window, e.v_plus_inf, ctx, ctrl)
        }
        PotentialSpec::Hulthen(h) => {
            let window = support_window(h, 0.0, 0.0, 1.0 / (64.0 * h.a))?;
            // split at the cusp
            let left = transmission_bound(h, energy, (window.0, 0.0), 0.0, ctx, ctrl)?;
            let right = transmission_bound(h, energy, (0.0, window.1), 0.0, ctx, ctrl)?;
            Ok(BoundResult::from_argument(left.integral_value + right.integral_value))
        }
    }
}

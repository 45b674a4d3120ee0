//! WKB tunneling probability
//!
//! ```text
//! T_w = exp[−2 √(2m/ħ²) ∫_{x1}^{x2} √(V(x) − E) dx]
//! ```
//!
//! for any sampled potential, plus the rectangular closed form
//! `T_w = exp(−4Qa)`.

use core::cell::Cell;

use crate::error::{Error, Result};
use crate::math;
use crate::optimize::golden_section_max;
use crate::physics::PhysicsContext;
use crate::potentials::{Hulthen, Rectangular, SampledPotential};
use crate::quad::integrate;

pub use crate::quad::QuadratureControl;

/// How a barrier region was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegionSource {
    SolvedTurningPoints,
    FixedLimits,
}

/// Integration limits of the forbidden region.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BarrierRegion {
    pub x1: f64,
    pub x2: f64,
    pub source: RegionSource,
}

impl BarrierRegion {
    pub fn fixed(x1: f64, x2: f64) -> Result<Self> {
        if !(x1.is_finite() && x2.is_finite() && x1 < x2) {
            return Err(Error::InvalidInput("region requires finite x1 < x2"));
        }
        Ok(BarrierRegion { x1, x2, source: RegionSource::FixedLimits })
    }
}

/// Values of `V − E` down to this are treated as zero under the radical.
const CLAMP_SLACK: f64 = 1e-12;
/// Grid used to locate the barrier top inside a turning-point bracket.
const SCAN_POINTS: usize = 2048;

/// WKB transmission through `region`.
///
/// For solved turning points the integrand vanishes like a square root at
/// both ends; each half of the region is integrated after substituting
/// `x = x1 + u²` (resp. `x = x2 − u²`), which makes the integrand smooth.
pub fn wkb_transmission<P: SampledPotential + ?Sized>(
    potential: &P,
    energy: f64,
    region: &BarrierRegion,
    ctx: &PhysicsContext,
    ctrl: &QuadratureControl,
) -> Result<f64> {
    ctx.validate()?;
    if !energy.is_finite() {
        return Err(Error::InvalidEnergy(energy));
    }
    if !(region.x1 < region.x2) {
        return Err(Error::InvalidInput("region requires x1 < x2"));
    }
    let violation = Cell::new(None);
    let radical = |x: f64| {
        let d = potential.value(x) - energy;
        if d < -CLAMP_SLACK {
            if violation.get().is_none() {
                violation.set(Some(x));
            }
            0.0
        } else if d <= 0.0 {
            0.0
        } else {
            math::sqrt(d)
        }
    };

    let integral = match region.source {
        RegionSource::FixedLimits => integrate(radical, region.x1, region.x2, ctrl),
        RegionSource::SolvedTurningPoints => {
            let mid = 0.5 * (region.x1 + region.x2);
            let half = math::sqrt(mid - region.x1);
            let x1 = region.x1;
            let x2 = region.x2;
            let half_ctrl = QuadratureControl { abs_tol: 0.5 * ctrl.abs_tol, ..*ctrl };
            let left = integrate(|u| 2.0 * u * radical(x1 + u * u), 0.0, half, &half_ctrl);
            let right = integrate(|u| 2.0 * u * radical(x2 - u * u), 0.0, half, &half_ctrl);
            left.and_then(|l| right.map(|r| l + r))
        }
    };
    // a forbidden-region violation explains any quadrature trouble too
    if let Some(x) = violation.get() {
        return Err(Error::InvalidRegion { x });
    }
    let integral = integral?;
    Ok(math::exp(-2.0 * math::sqrt(ctx.energy_to_k2()) * integral))
}

/// Classical turning points around the barrier inside `bracket`.
///
/// The barrier top is located on a uniform scan refined by golden section;
/// each root of `V(x) − E` is then bisected to 1e−12 in `x`.
pub fn find_turning_points<P: SampledPotential + ?Sized>(
    potential: &P,
    energy: f64,
    bracket: (f64, f64),
) -> Result<BarrierRegion> {
    let (lo, hi) = bracket;
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(Error::InvalidInput("bracket requires finite lo < hi"));
    }
    let g = |x: f64| potential.value(x) - energy;
    if !(g(lo) < 0.0 && g(hi) < 0.0) {
        return Err(Error::NoBarrier);
    }

    let step = (hi - lo) / (SCAN_POINTS - 1) as f64;
    let mut best = (lo, g(lo));
    for i in 1..SCAN_POINTS - 1 {
        let x = lo + step * i as f64;
        let v = g(x);
        if v > best.1 {
            best = (x, v);
        }
    }
    if best.1 <= 0.0 {
        let a = (best.0 - step).max(lo);
        let b = (best.0 + step).min(hi);
        let refined = golden_section_max(g, a, b, 1e-12 * (1.0 + math::abs(best.0)));
        if refined.1 > best.1 {
            best = refined;
        }
    }
    if best.1 <= 0.0 {
        return Err(Error::NoBarrier);
    }

    let x1 = bisect(&g, lo, best.0);
    let x2 = bisect(&g, hi, best.0);
    Ok(BarrierRegion { x1, x2, source: RegionSource::SolvedTurningPoints })
}

/// Root of `g` between `outside` (g < 0) and `inside` (g > 0).
fn bisect<G: Fn(f64) -> f64>(g: &G, mut outside: f64, mut inside: f64) -> f64 {
    for _ in 0..200 {
        if math::abs(inside - outside) <= 1e-12 {
            break;
        }
        let m = 0.5 * (outside + inside);
        if m == outside || m == inside {
            break;
        }
        if g(m) > 0.0 {
            inside = m;
        } else {
            outside = m;
        }
    }
    0.5 * (outside + inside)
}

/// `T_w = exp(−4Qa)` for the rectangular barrier.
pub fn rectangular_wkb_closed_form(r: &Rectangular, energy: f64, ctx: &PhysicsContext) -> Result<f64> {
    ctx.validate()?;
    let r = Rectangular::new(r.v0, r.a)?;
    if !(energy.is_finite() && energy > 0.0) {
        return Err(Error::InvalidEnergy(energy));
    }
    if energy > r.v0 {
        return Err(Error::WrongCase("WKB tunneling needs E < V0"));
    }
    let big_q = math::sqrt(ctx.k_squared(r.v0 - energy));
    Ok(math::exp(-4.0 * big_q * r.a))
}

/// Region used for the rectangular barrier: its edges.
pub fn rectangular_region(r: &Rectangular) -> BarrierRegion {
    BarrierRegion { x1: -r.a, x2: r.a, source: RegionSource::FixedLimits }
}

/// Integration limits for the Hulthen WKB integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum HulthenRegion {
    /// The fixed interval (−1, 1).
    #[default]
    Fixed,
    /// The classical turning points `|x| = ln(q + V0/E)/a`.
    TurningPoints,
}

pub fn hulthen_region(h: &Hulthen, energy: f64, choice: HulthenRegion) -> Result<BarrierRegion> {
    match choice {
        HulthenRegion::Fixed => BarrierRegion::fixed(-1.0, 1.0),
        HulthenRegion::TurningPoints => {
            if !(energy.is_finite() && energy > 0.0) {
                return Err(Error::InvalidEnergy(energy));
            }
            // V(x) decays like V0 e^{−a|x|}; go well past the root.
            let reach = math::ln(h.q + h.v0 / energy) / h.a;
            let span = 2.0 * reach + 1.0 / h.a;
            find_turning_points(h, energy, (-span, span))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> PhysicsContext {
        PhysicsContext::default()
    }

    #[test]
    fn rectangular_numeric_matches_closed_form() {
        let r = Rectangular::new(1.0, 1.0).unwrap();
        let tw = wkb_transmission(&r, 0.5, &rectangular_region(&r), &ctx(), &QuadratureControl::default()).unwrap();
        let closed = rectangular_wkb_closed_form(&r, 0.5, &ctx()).unwrap();
        assert!((tw - closed).abs() < 1e-9 * closed);
        assert!((closed - 0.018_315_638_888_734_18).abs() < 1e-15);
    }

    #[test]
    fn barrier_top_gives_unit_transmission() {
        let r = Rectangular::new(1.0, 1.0).unwrap();
        let tw = wkb_transmission(&r, 1.0, &rectangular_region(&r), &ctx(), &QuadratureControl::default()).unwrap();
        assert_eq!(tw, 1.0);
    }

    #[test]
    fn energy_above_potential_is_invalid_region() {
        let r = Rectangular::new(1.0, 1.0).unwrap();
        let region = BarrierRegion::fixed(-2.0, 2.0).unwrap();
        let res = wkb_transmission(&r, 0.5, &region, &ctx(), &QuadratureControl::default());
        assert!(matches!(res, Err(Error::InvalidRegion { .. })));
    }

    #[test]
    fn tiny_negative_is_clamped() {
        let flat = |_x: f64| 1.0 - 5e-13;
        let region = BarrierRegion::fixed(-1.0, 1.0).unwrap();
        let tw = wkb_transmission(&flat, 1.0, &region, &ctx(), &QuadratureControl::default()).unwrap();
        assert_eq!(tw, 1.0);
    }

    #[test]
    fn hulthen_turning_points_closed_form() {
        let h = Hulthen::new(1.0, 0.5, 0.9).unwrap();
        let region = hulthen_region(&h, 0.5, HulthenRegion::TurningPoints).unwrap();
        let expected = 2.0 * libm::log(2.9);
        assert!((region.x2 - expected).abs() < 1e-11);
        assert!((region.x1 + expected).abs() < 1e-11);
        assert!((h.value(region.x1) - 0.5).abs() < 1e-10);
        assert_eq!(region.source, RegionSource::SolvedTurningPoints);
    }

    #[test]
    fn no_barrier_detected() {
        let well = |x: f64| -libm::exp(-x * x);
        assert_eq!(find_turning_points(&well, 0.1, (-5.0, 5.0)), Err(Error::NoBarrier));
        let bump = |x: f64| libm::exp(-x * x);
        assert_eq!(find_turning_points(&bump, 2.0, (-5.0, 5.0)), Err(Error::NoBarrier));
        // endpoints already inside the barrier
        assert_eq!(find_turning_points(&bump, 0.5, (-0.1, 0.1)), Err(Error::NoBarrier));
    }

    #[test]
    fn closed_form_wrong_case() {
        let r = Rectangular::new(1.0, 1.0).unwrap();
        assert!(matches!(rectangular_wkb_closed_form(&r, 2.0, &ctx()), Err(Error::WrongCase(_))));
    }
}

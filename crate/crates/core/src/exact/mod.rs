//! Closed-form scattering amplitudes and probabilities.

mod delta;
mod eckart;
mod hulthen;
mod rectangular;

pub use delta::delta_amplitudes;
pub use eckart::{
    eckart_reflection_paper, eckart_transmission, eckart_transmission_amplitude,
    EckartConvention,
};
pub use hulthen::{hulthen_amplitudes, HulthenParams};
pub use rectangular::{rectangular_above, rectangular_below, rectangular_reflection_formula};

use crate::error::{Error, Result};
use crate::physics::{PhysicsContext, Probabilities};
use crate::potentials::PotentialSpec;
use crate::specfun::SeriesControl;

/// Exact `(T, R)` for any of the four potentials, picking the right case.
///
/// The Eckart reflection is reported as `1 − T`; the printed closed form
/// lives in [`eckart_reflection_paper`].
pub fn exact_probabilities(
    potential: &PotentialSpec,
    energy: f64,
    ctx: &PhysicsContext,
    series: &SeriesControl,
) -> Result<Probabilities> {
    match potential {
        PotentialSpec::Delta(d) => delta_amplitudes(d.alpha, energy, ctx)?.probabilities(),
        PotentialSpec::Rectangular(r) => {
            if energy == r.v0 {
                Err(Error::DegenerateEnergy(energy))
            } else if energy > r.v0 {
                rectangular_above(r.v0, r.a, energy, ctx)?.probabilities()
            } else {
                rectangular_below(r.v0, r.a, energy, ctx)?.probabilities()
            }
        }
        PotentialSpec::Eckart(e) => {
            let t = eckart_transmission(e, energy, ctx)?;
            Ok(Probabilities::new(t, 1.0 - t))
        }
        PotentialSpec::Hulthen(h) => hulthen_amplitudes(h, energy, ctx.mass, series)?.probabilities(),
    }
}

//! Exact, WKB and transfer-matrix-bounded transmission and reflection
//! probabilities for one-dimensional potential scattering.
//!
//! The crate is `no_std` (it needs `alloc` for sweep tables and resonance
//! lists). Four potentials have closed-form scattering solutions:
//!
//! * a delta function `V(x) = α δ(x)`,
//! * a rectangular barrier of height `V0` and half-width `a`,
//! * the Eckart step-plus-bump profile,
//! * the symmetric Hulthen barrier.
//!
//! Arbitrary potentials can still be fed to [`wkb`] and [`bound`] through the
//! [`SampledPotential`] trait.

#![no_std]
// `!(x > 0.0)` style guards are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod math;

pub mod bound;
pub mod complex;
pub mod error;
pub mod exact;
pub mod optimize;
pub mod physics;
pub mod potentials;
pub mod quad;
pub mod resonance;
pub mod specfun;
pub mod sweep;
pub mod wkb;

pub use complex::Complex;
pub use error::{Error, Result};
pub use physics::{
    probabilities_from_amplitudes, unitarity_defect, PhysicsContext, Probabilities,
    ScatteringAmplitudes,
};
pub use potentials::{Delta, Eckart, Hulthen, PotentialSpec, Rectangular, SampledPotential};

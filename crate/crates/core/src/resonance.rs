//! Resonance locations: analytic where closed forms exist, numeric peak
//! finding otherwise.
//!
//! A resonance is a point where T or R reaches unity. Interior maxima that
//! stay below `1 − 1e−6` are reported as peaks.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exact::{eckart_transmission, exact_probabilities};
use crate::math::{self, PI};
use crate::optimize::golden_section_max;
use crate::physics::PhysicsContext;
use crate::potentials::PotentialSpec;
use crate::specfun::SeriesControl;
use crate::sweep::SweepVariable;

/// Values at or above this count as "in unity".
pub const RESONANCE_THRESHOLD: f64 = 1.0 - 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResonanceKind {
    Transmission,
    Reflection,
}

impl ResonanceKind {
    pub fn name(self) -> &'static str {
        match self {
            ResonanceKind::Transmission => "transmission",
            ResonanceKind::Reflection => "reflection",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResonanceSource {
    Analytic,
    Numeric,
}

impl ResonanceSource {
    pub fn name(self) -> &'static str {
        match self {
            ResonanceSource::Analytic => "analytic",
            ResonanceSource::Numeric => "numeric",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResonanceLabel {
    Resonance,
    Peak,
}

impl ResonanceLabel {
    pub fn of(value: f64) -> Self {
        if value >= RESONANCE_THRESHOLD {
            ResonanceLabel::Resonance
        } else {
            ResonanceLabel::Peak
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ResonanceLabel::Resonance => "resonance",
            ResonanceLabel::Peak => "peak",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResonanceReport {
    pub kind: ResonanceKind,
    /// In units of the sweep variable.
    pub location: f64,
    /// Probability at `location`, when it can be evaluated.
    pub value: Option<f64>,
    pub source: ResonanceSource,
    pub label: ResonanceLabel,
    /// Set for endpoint limits such as reflection at `k = 0`.
    pub boundary: bool,
}

/// Analytic reports plus explanations for the kinds that have none.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ResonanceList {
    pub reports: Vec<ResonanceReport>,
    pub notes: Vec<&'static str>,
}

fn wants(kind: Option<ResonanceKind>, k: ResonanceKind) -> bool {
    kind.is_none_or(|x| x == k)
}

/// Closed-form resonance locations.
///
/// * rectangular: transmission at `q = nπ/(2a)` (any of `k`, `q`, `E`),
///   reflection at the `k = 0` endpoint;
/// * delta: no transmission resonances, reflection at `k = 0`;
/// * Eckart (sweeping `V0`): transmission at `V0 = −ħ² n(n+1)/(2ma²)`, no
///   reflection resonances. `T = 1` there only when both asymptotes agree;
///   otherwise the entries are peaks. `energy` is needed to evaluate `T`
///   in the asymmetric case.
///
/// Hulthen has no closed-form locations and returns
/// [`Error::Unsupported`].
pub fn analytic_resonances(
    potential: &PotentialSpec,
    variable: SweepVariable,
    kind: Option<ResonanceKind>,
    n_max: usize,
    energy: Option<f64>,
    ctx: &PhysicsContext,
) -> Result<ResonanceList> {
    ctx.validate()?;
    potential.validate()?;
    let mut out = ResonanceList::default();
    let k0_boundary = ResonanceReport {
        kind: ResonanceKind::Reflection,
        location: 0.0,
        value: Some(1.0),
        source: ResonanceSource::Analytic,
        label: ResonanceLabel::Resonance,
        boundary: true,
    };

    match (potential, variable) {
        (PotentialSpec::Rectangular(r), SweepVariable::K | SweepVariable::Q | SweepVariable::E) => {
            if wants(kind, ResonanceKind::Transmission) {
                for n in 1..=n_max {
                    let q = n as f64 * PI / (2.0 * r.a);
                    let e = r.v0 + ctx.energy_of_k(q);
                    let location = match variable {
                        SweepVariable::Q => q,
                        SweepVariable::K => math::sqrt(ctx.k_squared(e)),
                        _ => e,
                    };
                    let t = exact_probabilities(potential, e, ctx, &SeriesControl::default())?.transmission;
                    out.reports.push(ResonanceReport {
                        kind: ResonanceKind::Transmission,
                        location,
                        value: Some(t),
                        source: ResonanceSource::Analytic,
                        label: ResonanceLabel::of(t),
                        boundary: false,
                    });
                }
            }
            if wants(kind, ResonanceKind::Reflection) {
                if variable == SweepVariable::Q {
                    out.notes.push("the reflection resonance sits at k = 0, below the barrier and outside the q parametrization");
                } else {
                    out.reports.push(k0_boundary);
                }
            }
        }
        (PotentialSpec::Delta(_), SweepVariable::K | SweepVariable::E) => {
            if wants(kind, ResonanceKind::Transmission) {
                out.notes.push("the delta potential has no transmission resonances");
            }
            if wants(kind, ResonanceKind::Reflection) {
                out.reports.push(k0_boundary);
            }
        }
        (PotentialSpec::Eckart(e), SweepVariable::V0) => {
            if wants(kind, ResonanceKind::Transmission) {
                let symmetric = e.v_minus_inf == e.v_plus_inf;
                for n in 1..=n_max {
                    let nf = n as f64;
                    let v0 = -ctx.hbar * ctx.hbar * nf * (nf + 1.0) / (2.0 * ctx.mass * e.a * e.a);
                    let value = match energy {
                        Some(en) => {
                            let shifted = crate::potentials::Eckart { v0, ..*e };
                            Some(eckart_transmission(&shifted, en, ctx)?)
                        }
                        None if symmetric => Some(1.0),
                        None => None,
                    };
                    let label = match value {
                        Some(v) => ResonanceLabel::of(v),
                        None => ResonanceLabel::Peak,
                    };
                    out.reports.push(ResonanceReport {
                        kind: ResonanceKind::Transmission,
                        location: v0,
                        value,
                        source: ResonanceSource::Analytic,
                        label,
                        boundary: false,
                    });
                }
            }
            if wants(kind, ResonanceKind::Reflection) {
                out.notes.push("the Eckart potential has no reflection resonances");
            }
        }
        (PotentialSpec::Hulthen(_), _) => {
            return Err(Error::Unsupported(
                "no closed-form Hulthen resonances; use the numeric finder",
            ))
        }
        _ => {
            return Err(Error::Unsupported(
                "no closed-form resonances for this potential and sweep variable",
            ))
        }
    }
    Ok(out)
}

/// Interior local maxima of `curve` on a uniform `grid_n`-point grid over
/// `domain`, each refined by golden section to `refine_tol`. Endpoints are
/// never reported. Points where `curve` is NaN are never maxima.
pub fn numeric_resonances<F: Fn(f64) -> f64>(
    curve: F,
    domain: (f64, f64),
    grid_n: usize,
    refine_tol: f64,
    kind: ResonanceKind,
) -> Result<Vec<ResonanceReport>> {
    let (lo, hi) = domain;
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(Error::InvalidInput("domain requires finite lo < hi"));
    }
    if grid_n < 16 {
        return Err(Error::InvalidInput("grid_n must be at least 16"));
    }
    if !(refine_tol.is_finite() && refine_tol > 0.0) {
        return Err(Error::InvalidInput("refine_tol must be positive"));
    }
    let step = (hi - lo) / (grid_n - 1) as f64;
    let xs: Vec<f64> = (0..grid_n)
        .map(|i| if i + 1 == grid_n { hi } else { lo + step * i as f64 })
        .collect();
    let ys: Vec<f64> = xs.iter().map(|&x| curve(x)).collect();

    let mut out = Vec::new();
    for i in 1..grid_n - 1 {
        if ys[i] > ys[i - 1] && ys[i] >= ys[i + 1] {
            let (x, _) = golden_section_max(&curve, xs[i - 1], xs[i + 1], refine_tol);
            // keep the grid point if refinement wandered onto something worse
            let fx = curve(x);
            let (location, value) = if fx >= ys[i] { (x, fx) } else { (xs[i], ys[i]) };
            out.push(ResonanceReport {
                kind,
                location,
                value: Some(value),
                source: ResonanceSource::Numeric,
                label: ResonanceLabel::of(value),
                boundary: false,
            });
        }
    }
    Ok(out)
}

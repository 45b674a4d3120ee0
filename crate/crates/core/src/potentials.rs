//! The four potentials with closed-form scattering solutions.
//!
//! Length conventions differ between profiles: Eckart's `a` is a length
//! (`tanh(x/a)`), Hulthen's `a` is an inverse length (`e^{a|x|}`).

use crate::error::{Error, Result};
use crate::math;
use crate::physics::PhysicsContext;

/// Anything that can be evaluated at a point. Used by the WKB and bound
/// quadratures, which accept arbitrary profiles.
pub trait SampledPotential {
    fn value(&self, x: f64) -> f64;
}

impl<F: Fn(f64) -> f64> SampledPotential for F {
    fn value(&self, x: f64) -> f64 {
        self(x)
    }
}

/// `V(x) = α δ(x)`, α > 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Delta {
    pub alpha: f64,
}

/// `V(x) = V0` for `|x| ≤ a`, zero outside.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rectangular {
    pub v0: f64,
    pub a: f64,
}

/// `V(x) = (V₊ + V₋)/2 + (V₊ − V₋)/2 · tanh(x/a) + V0 / cosh²(x/a)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Eckart {
    pub v_minus_inf: f64,
    pub v_plus_inf: f64,
    pub v0: f64,
    pub a: f64,
}

/// `V(x) = V0 / (e^{a|x|} − q)`, with `0 < q < 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hulthen {
    pub v0: f64,
    pub a: f64,
    pub q: f64,
}

fn positive(x: f64, what: &'static str) -> Result<()> {
    if x.is_finite() && x > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidInput(what))
    }
}

impl Delta {
    pub fn new(alpha: f64) -> Result<Self> {
        positive(alpha, "delta strength alpha must be positive")?;
        Ok(Delta { alpha })
    }
}

impl Rectangular {
    pub fn new(v0: f64, a: f64) -> Result<Self> {
        positive(v0, "barrier height v0 must be positive")?;
        positive(a, "half-width a must be positive")?;
        Ok(Rectangular { v0, a })
    }
}

impl Eckart {
    pub fn new(v_minus_inf: f64, v_plus_inf: f64, v0: f64, a: f64) -> Result<Self> {
        if !(v_minus_inf.is_finite() && v_plus_inf.is_finite() && v0.is_finite()) {
            return Err(Error::InvalidInput("Eckart parameters must be finite"));
        }
        positive(a, "Eckart length a must be positive")?;
        Ok(Eckart { v_minus_inf, v_plus_inf, v0, a })
    }
}

impl Hulthen {
    pub fn new(v0: f64, a: f64, q: f64) -> Result<Self> {
        positive(v0, "Hulthen v0 must be positive")?;
        positive(a, "Hulthen a must be positive")?;
        if !(q > 0.0 && q < 1.0) {
            return Err(Error::InvalidInput("Hulthen q must lie in (0, 1)"));
        }
        Ok(Hulthen { v0, a, q })
    }

    /// Peak height `V0 / (1 − q)` at the origin.
    pub fn peak(&self) -> f64 {
        self.v0 / (1.0 - self.q)
    }
}

impl SampledPotential for Rectangular {
    fn value(&self, x: f64) -> f64 {
        if math::abs(x) <= self.a {
            self.v0
        } else {
            0.0
        }
    }
}

impl SampledPotential for Eckart {
    fn value(&self, x: f64) -> f64 {
        let s = x / self.a;
        let c = math::cosh(s);
        0.5 * (self.v_plus_inf + self.v_minus_inf)
            + 0.5 * (self.v_plus_inf - self.v_minus_inf) * math::tanh(s)
            + self.v0 / (c * c)
    }
}

impl SampledPotential for Hulthen {
    fn value(&self, x: f64) -> f64 {
        // θ(−x) branch uses e^{−ax}, θ(x) branch e^{ax}; both equal e^{a|x|}.
        let e = if x < 0.0 {
            math::exp(-self.a * x)
        } else {
            math::exp(self.a * x)
        };
        self.v0 / (e - self.q)
    }
}

/// One of the four solvable potentials.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PotentialSpec {
    Delta(Delta),
    Rectangular(Rectangular),
    Eckart(Eckart),
    Hulthen(Hulthen),
}

/// Wavenumbers derived from an energy. Entries that do not apply to the
/// potential, or that would be imaginary, are `None`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Wavenumbers {
    /// Free wavenumber `√(2mE)/ħ`.
    pub k: f64,
    /// Potential strength: `mα/ħ²` (delta), `√(2mV0)/ħ` (rectangular),
    /// `√(2m|V0|)/ħ` (Eckart), `√(2m V0/(1−q))/ħ` (Hulthen peak).
    pub k0: f64,
    /// Propagating wavenumber inside the barrier, `√(2m(E − V0))/ħ`.
    pub q_inside: Option<f64>,
    /// Evanescent decay constant, `√(2m(V0 − E))/ħ`.
    pub big_q: Option<f64>,
    /// `k₋∞`, when `E > V₋∞`.
    pub k_minus_inf: Option<f64>,
    /// `k₊∞`, when `E > V₊∞`.
    pub k_plus_inf: Option<f64>,
}

impl PotentialSpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            PotentialSpec::Delta(d) => Delta::new(d.alpha).map(|_| ()),
            PotentialSpec::Rectangular(r) => Rectangular::new(r.v0, r.a).map(|_| ()),
            PotentialSpec::Eckart(e) => {
                Eckart::new(e.v_minus_inf, e.v_plus_inf, e.v0, e.a).map(|_| ())
            }
            PotentialSpec::Hulthen(h) => Hulthen::new(h.v0, h.a, h.q).map(|_| ()),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            PotentialSpec::Delta(_) => "delta",
            PotentialSpec::Rectangular(_) => "rect",
            PotentialSpec::Eckart(_) => "eckart",
            PotentialSpec::Hulthen(_) => "hulthen",
        }
    }

    pub fn evaluate(&self, x: f64) -> Result<f64> {
        match self {
            PotentialSpec::Delta(_) => Err(Error::UnsupportedPointwise),
            PotentialSpec::Rectangular(r) => Ok(r.value(x)),
            PotentialSpec::Eckart(e) => Ok(e.value(x)),
            PotentialSpec::Hulthen(h) => Ok(h.value(x)),
        }
    }

    /// `(V₋∞, V₊∞)`.
    pub fn asymptotic_values(&self) -> (f64, f64) {
        match self {
            PotentialSpec::Eckart(e) => (e.v_minus_inf, e.v_plus_inf),
            _ => (0.0, 0.0),
        }
    }

    /// Barrier or well strength parameter, if the potential has one.
    pub fn v0(&self) -> Option<f64> {
        match self {
            PotentialSpec::Delta(_) => None,
            PotentialSpec::Rectangular(r) => Some(r.v0),
            PotentialSpec::Eckart(e) => Some(e.v0),
            PotentialSpec::Hulthen(h) => Some(h.v0),
        }
    }

    /// Same potential with its strength parameter replaced.
    pub fn with_v0(&self, v0: f64) -> Result<Self> {
        let p = match *self {
            PotentialSpec::Delta(_) => {
                return Err(Error::NotApplicable("the delta potential has no v0"))
            }
            PotentialSpec::Rectangular(r) => PotentialSpec::Rectangular(Rectangular { v0, ..r }),
            PotentialSpec::Eckart(e) => PotentialSpec::Eckart(Eckart { v0, ..e }),
            PotentialSpec::Hulthen(h) => PotentialSpec::Hulthen(Hulthen { v0, ..h }),
        };
        p.validate()?;
        Ok(p)
    }

    pub fn wavenumbers(&self, energy: f64, ctx: &PhysicsContext) -> Result<Wavenumbers> {
        ctx.validate()?;
        if !energy.is_finite() || energy <= 0.0 {
            return Err(Error::InvalidEnergy(energy));
        }
        let k = math::sqrt(ctx.k_squared(energy));
        let mut w = Wavenumbers { k, ..Wavenumbers::default() };
        match *self {
            PotentialSpec::Delta(d) => {
                w.k0 = ctx.mass * d.alpha / (ctx.hbar * ctx.hbar);
            }
            PotentialSpec::Rectangular(r) => {
                if energy == r.v0 {
                    return Err(Error::DegenerateEnergy(energy));
                }
                w.k0 = math::sqrt(ctx.k_squared(r.v0));
                if energy > r.v0 {
                    w.q_inside = Some(math::sqrt(ctx.k_squared(energy - r.v0)));
                } else {
                    w.big_q = Some(math::sqrt(ctx.k_squared(r.v0 - energy)));
                }
            }
            PotentialSpec::Eckart(e) => {
                w.k0 = math::sqrt(ctx.k_squared(math::abs(e.v0)));
                let channel = |v: f64| {
                    (energy > v).then(|| math::sqrt(ctx.k_squared(energy - v)))
                };
                w.k_minus_inf = channel(e.v_minus_inf);
                w.k_plus_inf = channel(e.v_plus_inf);
            }
            PotentialSpec::Hulthen(h) => {
                let peak = h.peak();
                if energy == peak {
                    return Err(Error::DegenerateEnergy(energy));
                }
                w.k0 = math::sqrt(ctx.k_squared(peak));
                if energy > peak {
                    w.q_inside = Some(math::sqrt(ctx.k_squared(energy - peak)));
                } else {
                    w.big_q = Some(math::sqrt(ctx.k_squared(peak - energy)));
                }
            }
        }
        Ok(w)
    }
}

impl From<Delta> for PotentialSpec {
    fn from(p: Delta) -> Self {
        PotentialSpec::Delta(p)
    }
}
impl From<Rectangular> for PotentialSpec {
    fn from(p: Rectangular) -> Self {
        PotentialSpec::Rectangular(p)
    }
}
impl From<Eckart> for PotentialSpec {
    fn from(p: Eckart) -> Self {
        PotentialSpec::Eckart(p)
    }
}
impl From<Hulthen> for PotentialSpec {
    fn from(p: Hulthen) -> Self {
        PotentialSpec::Hulthen(p)
    }
}

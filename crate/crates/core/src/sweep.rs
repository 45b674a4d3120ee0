//! One-dimensional parameter sweeps comparing exact, WKB and bound results.

use alloc::vec::Vec;

use crate::bound::potential_bound;
use crate::error::{Error, Result};
use crate::exact::exact_probabilities;
use crate::math;
use crate::physics::{PhysicsContext, Probabilities};
use crate::potentials::PotentialSpec;
use crate::quad::QuadratureControl;
use crate::specfun::SeriesControl;
use crate::wkb::{find_turning_points, hulthen_region, rectangular_region, wkb_transmission, HulthenRegion};

/// The independent variable of a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepVariable {
    /// Incident wavenumber. For Eckart this is `k₋∞`; for Hulthen it
    /// follows that potential's `k² = E² − m²`.
    K,
    /// Wavenumber inside the rectangular barrier.
    Q,
    /// Energy.
    E,
    /// Potential strength, at fixed energy.
    V0,
}

impl SweepVariable {
    pub fn name(self) -> &'static str {
        match self {
            SweepVariable::K => "k",
            SweepVariable::Q => "q",
            SweepVariable::E => "E",
            SweepVariable::V0 => "V0",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Exact,
    Wkb,
    Bound,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Exact => "exact",
            Method::Wkb => "wkb",
            Method::Bound => "bound",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct MethodSet {
    pub exact: bool,
    pub wkb: bool,
    pub bound: bool,
}

impl MethodSet {
    pub const EXACT: MethodSet = MethodSet { exact: true, wkb: false, bound: false };

    pub fn of(methods: &[Method]) -> Self {
        let mut s = MethodSet::default();
        for m in methods {
            match m {
                Method::Exact => s.exact = true,
                Method::Wkb => s.wkb = true,
                Method::Bound => s.bound = true,
            }
        }
        s
    }

    pub fn is_empty(&self) -> bool {
        !(self.exact || self.wkb || self.bound)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GridKind {
    #[default]
    Linear,
    Log,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSpec {
    /// Fixed parameters; the swept one is overridden per point.
    pub potential: PotentialSpec,
    pub variable: SweepVariable,
    pub lo: f64,
    pub hi: f64,
    pub points: usize,
    pub methods: MethodSet,
    pub ctx: PhysicsContext,
    /// Energy held fixed while sweeping `V0`.
    pub energy: Option<f64>,
    pub grid: GridKind,
    pub hulthen_region: HulthenRegion,
    pub series: SeriesControl,
    pub quad: QuadratureControl,
}

impl SweepSpec {
    pub fn new(potential: PotentialSpec, variable: SweepVariable, lo: f64, hi: f64, points: usize) -> Self {
        SweepSpec {
            potential,
            variable,
            lo,
            hi,
            points,
            methods: MethodSet::EXACT,
            ctx: PhysicsContext::default(),
            energy: None,
            grid: GridKind::Linear,
            hulthen_region: HulthenRegion::Fixed,
            series: SeriesControl::default(),
            quad: QuadratureControl::default(),
        }
    }

    pub fn with_methods(mut self, methods: MethodSet) -> Self {
        self.methods = methods;
        self
    }

    pub fn with_ctx(mut self, ctx: PhysicsContext) -> Self {
        self.ctx = ctx;
        self
    }

    pub fn with_energy(mut self, energy: f64) -> Self {
        self.energy = Some(energy);
        self
    }

    pub fn validate(&self) -> Result<()> {
        self.potential.validate()?;
        self.ctx.validate()?;
        self.series.validate()?;
        self.quad.validate()?;
        if !(self.lo.is_finite() && self.hi.is_finite() && self.lo < self.hi) {
            return Err(Error::InvalidInput("sweep requires finite lo < hi"));
        }
        if self.points < 2 {
            return Err(Error::InvalidInput("sweep requires at least two points"));
        }
        if self.grid == GridKind::Log && self.lo <= 0.0 {
            return Err(Error::InvalidInput("log grid requires lo > 0"));
        }
        if self.methods.is_empty() {
            return Err(Error::InvalidInput("no methods selected"));
        }
        match (self.variable, &self.potential) {
            (SweepVariable::Q, PotentialSpec::Rectangular(_)) => {}
            (SweepVariable::Q, _) => {
                return Err(Error::InvalidInput("sweeping q requires the rectangular barrier"))
            }
            (SweepVariable::V0, PotentialSpec::Delta(_)) => {
                return Err(Error::InvalidInput("the delta potential has no V0"))
            }
            (SweepVariable::V0, p) => {
                if self.methods.exact && !matches!(p, PotentialSpec::Eckart(_)) {
                    return Err(Error::InvalidInput("exact V0 sweeps require the Eckart potential"));
                }
                match self.energy {
                    Some(e) if e.is_finite() => {}
                    _ => return Err(Error::InvalidInput("V0 sweeps need a fixed energy")),
                }
            }
            _ => {}
        }
        Ok(())
    }

    /// Grid values in ascending order, endpoints included exactly.
    pub fn grid_values(&self) -> Vec<f64> {
        let n = self.points;
        let last = n - 1;
        (0..n)
            .map(|i| {
                if i == 0 {
                    return self.lo;
                }
                if i == last {
                    return self.hi;
                }
                let frac = i as f64 / last as f64;
                match self.grid {
                    GridKind::Linear => self.lo + (self.hi - self.lo) * frac,
                    GridKind::Log => {
                        let (a, b) = (math::ln(self.lo), math::ln(self.hi));
                        math::exp(a + (b - a) * frac)
                    }
                }
            })
            .collect()
    }

    /// Potential and energy at one value of the swept variable.
    pub fn point(&self, value: f64) -> Result<(PotentialSpec, f64)> {
        let ctx = &self.ctx;
        match self.variable {
            SweepVariable::E => Ok((self.potential, value)),
            SweepVariable::K => {
                let e = match &self.potential {
                    PotentialSpec::Hulthen(_) => math::sqrt(value * value + ctx.mass * ctx.mass),
                    PotentialSpec::Eckart(e) => e.v_minus_inf + ctx.energy_of_k(value),
                    _ => ctx.energy_of_k(value),
                };
                Ok((self.potential, e))
            }
            SweepVariable::Q => match &self.potential {
                PotentialSpec::Rectangular(r) => Ok((self.potential, r.v0 + ctx.energy_of_k(value))),
                _ => Err(Error::InvalidInput("sweeping q requires the rectangular barrier")),
            },
            SweepVariable::V0 => {
                let e = self.energy.ok_or(Error::InvalidInput("V0 sweeps need a fixed energy"))?;
                Ok((self.potential.with_v0(value)?, e))
            }
        }
    }
}

/// Results at one grid point. `None` means the method was not requested.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub value: f64,
    pub exact: Option<Result<Probabilities>>,
    pub wkb: Option<Result<f64>>,
    pub bound: Option<Result<f64>>,
}

impl SweepRow {
    /// `exact T − bound`, when both succeeded.
    pub fn bound_gap(&self) -> Option<f64> {
        match (&self.exact, &self.bound) {
            (Some(Ok(p)), Some(Ok(b))) => Some(p.transmission - b),
            _ => None,
        }
    }

    pub fn defect(&self) -> Option<f64> {
        match &self.exact {
            Some(Ok(p)) => Some(p.defect()),
            _ => None,
        }
    }
}

fn wkb_for(potential: &PotentialSpec, energy: f64, spec: &SweepSpec) -> Result<f64> {
    match potential {
        PotentialSpec::Delta(_) => Err(Error::NotApplicable("no WKB integral for a delta potential")),
        PotentialSpec::Rectangular(r) => {
            if !(energy > 0.0) {
                return Err(Error::InvalidEnergy(energy));
            }
            if energy > r.v0 {
                return Err(Error::WrongCase("WKB tunneling needs E < V0"));
            }
            wkb_transmission(r, energy, &rectangular_region(r), &spec.ctx, &spec.quad)
        }
        PotentialSpec::Eckart(e) => {
            let span = 40.0 * e.a;
            let region = find_turning_points(e, energy, (-span, span))?;
            wkb_transmission(e, energy, &region, &spec.ctx, &spec.quad)
        }
        PotentialSpec::Hulthen(h) => {
            let region = hulthen_region(h, energy, spec.hulthen_region)?;
            wkb_transmission(h, energy, &region, &spec.ctx, &spec.quad)
        }
    }
}

/// Evaluate every requested method at one value of the swept variable.
/// Failures land in the row; they never propagate.
pub fn evaluate_point(spec: &SweepSpec, value: f64) -> SweepRow {
    let m = spec.methods;
    let point = spec.point(value);
    let run = |enabled: bool, f: &dyn Fn(&PotentialSpec, f64) -> Result<f64>| -> Option<Result<f64>> {
        enabled.then(|| match &point {
            Ok((p, e)) => f(p, *e),
            Err(err) => Err(err.clone()),
        })
    };
    let exact = m.exact.then(|| match &point {
        Ok((p, e)) => exact_probabilities(p, *e, &spec.ctx, &spec.series),
        Err(err) => Err(err.clone()),
    });
    let wkb = run(m.wkb, &|p, e| wkb_for(p, e, spec));
    let bound = run(m.bound, &|p, e| potential_bound(p, e, &spec.ctx, &spec.quad).map(|b| b.lower_bound));
    SweepRow { value, exact, wkb, bound }
}

/// Evaluate the whole grid in ascending order.
pub fn run_sweep(spec: &SweepSpec) -> Result<Vec<SweepRow>> {
    spec.validate()?;
    Ok(spec.grid_values().into_iter().map(|v| evaluate_point(spec, v)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::potentials::{Delta, Eckart, Hulthen, Rectangular};

    #[test]
    fn two_point_grid() {
        let spec = SweepSpec::new(Delta::new(1.0).unwrap().into(), SweepVariable::K, 0.5, 3.0, 2);
        let rows = run_sweep(&spec).unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0].value, 0.5);
        assert_eq!(rows[1].value, 3.0);
    }

    #[test]
    fn delta_crossing_at_k0() {
        let spec = SweepSpec::new(Delta::new(1.0).unwrap().into(), SweepVariable::K, 0.0, 10.0, 11);
        let rows = run_sweep(&spec).unwrap();
        // k = 0 has no scattering state
        assert!(matches!(rows[0].exact, Some(Err(Error::InvalidEnergy(_)))));
        let t1 = rows[1].exact.clone().unwrap().unwrap().transmission;
        assert!((t1 - 0.5).abs() < 1e-15);
    }

    #[test]
    fn degenerate_point_becomes_error_row() {
        let spec = SweepSpec::new(Rectangular::new(1.0, 1.0).unwrap().into(), SweepVariable::E, 0.5, 1.5, 3);
        let rows = run_sweep(&spec).unwrap();
        assert_eq!(rows[1].value, 1.0);
        assert_eq!(rows[1].exact, Some(Err(Error::DegenerateEnergy(1.0))));
        assert!(rows[0].exact.clone().unwrap().is_ok());
        assert!(rows[2].exact.clone().unwrap().is_ok());
    }

    #[test]
    fn log_grid_endpoints() {
        let mut spec = SweepSpec::new(Delta::new(1.0).unwrap().into(), SweepVariable::E, 0.01, 100.0, 5);
        spec.grid = GridKind::Log;
        let g = spec.grid_values();
        assert_eq!(g[0], 0.01);
        assert_eq!(g[4], 100.0);
        assert!((g[2] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn spec_validation() {
        let d: PotentialSpec = Delta::new(1.0).unwrap().into();
        assert!(SweepSpec::new(d, SweepVariable::Q, 0.0, 1.0, 10).validate().is_err());
        assert!(SweepSpec::new(d, SweepVariable::E, 1.0, 1.0, 10).validate().is_err());
        assert!(SweepSpec::new(d, SweepVariable::E, 0.0, 1.0, 1).validate().is_err());
        let h: PotentialSpec = Hulthen::new(1.0, 0.5, 0.9).unwrap().into();
        assert!(SweepSpec::new(h, SweepVariable::V0, 1.0, 2.0, 10).with_energy(0.5).validate().is_err());
        let wkb_only = SweepSpec::new(h, SweepVariable::V0, 1.0, 2.0, 10)
            .with_energy(0.5)
            .with_methods(MethodSet::of(&[Method::Wkb]));
        assert!(wkb_only.validate().is_ok());
        let e: PotentialSpec = Eckart::new(1.5, 0.0, 0.0, 1.0).unwrap().into();
        assert!(SweepSpec::new(e, SweepVariable::V0, -5.0, 1.0, 10).validate().is_err());
        assert!(SweepSpec::new(e, SweepVariable::V0, -5.0, 1.0, 10).with_energy(2.0).validate().is_ok());
    }

    #[test]
    fn bound_gap_non_negative_above_barrier() {
        let spec = SweepSpec::new(Rectangular::new(1.0, 1.0).unwrap().into(), SweepVariable::E, 1.1, 30.0, 40)
            .with_methods(MethodSet::of(&[Method::Exact, Method::Bound]));
        for row in run_sweep(&spec).unwrap() {
            assert!(row.bound_gap().unwrap() >= -1e-12);
        }
    }

    #[test]
    fn wkb_above_barrier_is_error_row() {
        let spec = SweepSpec::new(Rectangular::new(1.0, 1.0).unwrap().into(), SweepVariable::E, 0.5, 2.0, 2)
            .with_methods(MethodSet::of(&[Method::Wkb]));
        let rows = run_sweep(&spec).unwrap();
        assert!(rows[0].wkb.clone().unwrap().is_ok());
        assert!(matches!(rows[1].wkb, Some(Err(Error::WrongCase(_)))));
        assert!(rows[1].exact.is_none());
    }

    #[test]
    fn eckart_v0_sweep_rows() {
        let e: PotentialSpec = Eckart::new(1.5, 0.0, 0.0, 1.0).unwrap().into();
        let spec = SweepSpec::new(e, SweepVariable::V0, -3.0, 1.0, 5).with_energy(2.0);
        let rows = run_sweep(&spec).unwrap();
        for r in rows {
            let p = r.exact.unwrap().unwrap();
            assert!(p.transmission > 0.0 && p.transmission <= 1.0);
            assert_eq!(p.defect(), 0.0);
        }
    }
}

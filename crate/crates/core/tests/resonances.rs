use qscatter::exact::{eckart_transmission, hulthen_amplitudes, rectangular_above};
use qscatter::resonance::{analytic_resonances, numeric_resonances, ResonanceKind, ResonanceLabel, ResonanceSource};
use qscatter::specfun::SeriesControl;
use qscatter::sweep::SweepVariable;
use qscatter::{Delta, Eckart, Error, Hulthen, PhysicsContext, Rectangular};

const PI: f64 = core::f64::consts::PI;

fn ctx() -> PhysicsContext {
    PhysicsContext::default()
}

#[test]
fn rectangular_analytic_and_numeric_agree() {
    let c = ctx();
    for a in [1.0, 2.0] {
        let r = Rectangular::new(1.0, a).unwrap();
        let list = analytic_resonances(&r.into(), SweepVariable::Q, Some(ResonanceKind::Transmission), 5, None, &c)
            .unwrap();
        assert_eq!(list.reports.len(), 5);
        let t_of_q = |q: f64| {
            let e = 1.0 + c.energy_of_k(q);
            rectangular_above(1.0, a, e, &c).unwrap().probabilities().unwrap().transmission
        };
        for (n, rep) in (1..=5).zip(&list.reports) {
            let q = n as f64 * PI / (2.0 * a);
            assert!((rep.location - q).abs() < 1e-15);
            assert!((t_of_q(q) - 1.0).abs() < 1e-12);
        }
        let hi = 5.5 * PI / (2.0 * a);
        let found = numeric_resonances(t_of_q, (0.05, hi), 4000, 1e-12, ResonanceKind::Transmission).unwrap();
        assert_eq!(found.len(), 5, "a = {a}");
        for (rep, exact) in found.iter().zip(&list.reports) {
            assert!((rep.location - exact.location).abs() < 1e-6);
            assert_eq!(rep.label, ResonanceLabel::Resonance);
            assert_eq!(rep.source, ResonanceSource::Numeric);
        }
    }
}

#[test]
fn eckart_symmetric_resonances_are_unit() {
    let c = ctx();
    for a in [1.0, 2.0] {
        let p = Eckart::new(0.0, 0.0, 0.0, a).unwrap();
        let list = analytic_resonances(&p.into(), SweepVariable::V0, None, 2, Some(0.7), &c).unwrap();
        assert_eq!(list.reports.len(), 2);
        for (n, rep) in (1..=2).zip(&list.reports) {
            let v0 = -(n * (n + 1)) as f64 / (2.0 * a * a);
            assert!((rep.location - v0).abs() < 1e-15);
            let t = eckart_transmission(&Eckart::new(0.0, 0.0, v0, a).unwrap(), 0.7, &c).unwrap();
            assert!((t - 1.0).abs() < 1e-9);
        }
    }
}

#[test]
fn eckart_asymmetric_entries_are_peaks() {
    let c = ctx();
    let p = Eckart::new(1.5, 0.0, 0.0, 1.0).unwrap();
    let list = analytic_resonances(&p.into(), SweepVariable::V0, None, 3, Some(2.0), &c).unwrap();
    for rep in &list.reports {
        let v = rep.value.unwrap();
        assert!(v < 1.0);
        assert_eq!(rep.label, ResonanceLabel::Peak);
    }
}

#[test]
fn delta_has_only_the_zero_energy_reflection() {
    let c = ctx();
    let d = Delta::new(1.0).unwrap();
    let t = analytic_resonances(&d.into(), SweepVariable::K, Some(ResonanceKind::Transmission), 3, None, &c).unwrap();
    assert!(t.reports.is_empty());
    assert!(!t.notes.is_empty());
    let r = analytic_resonances(&d.into(), SweepVariable::K, Some(ResonanceKind::Reflection), 3, None, &c).unwrap();
    assert_eq!(r.reports.len(), 1);
    assert!(r.reports[0].boundary);
    assert_eq!(r.reports[0].location, 0.0);
}

#[test]
fn hulthen_needs_numeric_search() {
    let h = Hulthen::new(1.0, 0.5, 0.9).unwrap();
    let res = analytic_resonances(&h.into(), SweepVariable::E, None, 3, None, &ctx());
    assert!(matches!(res, Err(Error::Unsupported(_))));
}

#[test]
fn hulthen_numeric_resonance_reference() {
    // Reference maxima from a 40-digit evaluation of the same amplitudes.
    let h = Hulthen::new(1.0, 0.5, 0.9).unwrap();
    let ctrl = SeriesControl::default();
    let probs = |e: f64| hulthen_amplitudes(&h, e, 1.0, &ctrl).unwrap().probabilities().unwrap();

    let t = numeric_resonances(|e| probs(e).transmission, (1.09, 10.0), 100, 1e-10, ResonanceKind::Transmission)
        .unwrap();
    assert_eq!(t.len(), 1, "{t:?}");
    assert!((t[0].location - 2.534_742_835_931_9).abs() < 1e-5);
    assert!((t[0].value.unwrap() - 1.0).abs() < 1e-9);
    assert_eq!(t[0].label, ResonanceLabel::Resonance);

    let r = numeric_resonances(|e| probs(e).reflection, (1.09, 10.0), 100, 1e-10, ResonanceKind::Reflection).unwrap();
    assert_eq!(r.len(), 1, "{r:?}");
    assert!((r[0].location - 3.741_312_365_854_054_5).abs() < 1e-5);
    assert!((r[0].value.unwrap() - 0.641_588_052_240_832_5).abs() < 1e-9);
    assert_eq!(r[0].label, ResonanceLabel::Peak);
}

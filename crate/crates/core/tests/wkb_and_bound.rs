use proptest::prelude::*;
use qscatter::bound::{potential_bound, rectangular_bound_closed_form, transmission_bound};
use qscatter::exact::{eckart_transmission, rectangular_above, rectangular_below};
use qscatter::quad::QuadratureControl;
use qscatter::wkb::{
    find_turning_points, hulthen_region, rectangular_region, rectangular_wkb_closed_form, wkb_transmission,
    HulthenRegion,
};
use qscatter::{Eckart, Hulthen, PhysicsContext, Rectangular};

fn ctx() -> PhysicsContext {
    PhysicsContext::default()
}

#[test]
fn rectangular_wkb_matches_closed_form_on_grid() {
    let r = Rectangular::new(1.0, 1.0).unwrap();
    let ctrl = QuadratureControl::default();
    for i in 0..50 {
        let e = 0.02 + 0.96 * i as f64 / 49.0;
        let num = wkb_transmission(&r, e, &rectangular_region(&r), &ctx(), &ctrl).unwrap();
        let closed = rectangular_wkb_closed_form(&r, e, &ctx()).unwrap();
        assert!((num - closed).abs() <= 1e-9 * closed, "E = {e}");
    }
}

#[test]
fn hulthen_wkb_against_reference_quadrature() {
    // 40-digit quadrature over the fixed interval (−1, 1), V0 = 1, E = 0.5
    let h = Hulthen::new(1.0, 0.5, 0.9).unwrap();
    let region = hulthen_region(&h, 0.5, HulthenRegion::Fixed).unwrap();
    let tw = wkb_transmission(&h, 0.5, &region, &ctx(), &QuadratureControl::default()).unwrap();
    let expected = 1.182_294_812_400_797e-4;
    assert!((tw - expected).abs() < 1e-9 * expected, "{tw}");
}

#[test]
fn hulthen_wkb_falls_with_height() {
    let ctrl = QuadratureControl::default();
    let mut last = f64::INFINITY;
    for v0 in [1.0, 2.0, 10.0, 50.0] {
        let h = Hulthen::new(v0, 0.5, 0.9).unwrap();
        let region = hulthen_region(&h, 0.5, HulthenRegion::Fixed).unwrap();
        let tw = wkb_transmission(&h, 0.5, &region, &ctx(), &ctrl).unwrap();
        assert!(tw < last);
        last = tw;
    }
}

#[test]
fn eckart_wkb_with_solved_turning_points() {
    // Symmetric sech² barrier, closed-form action π a √(2m) (√V0 − √E).
    let (v0, a, e) = (4.0, 1.0, 1.0);
    let p = Eckart::new(0.0, 0.0, v0, a).unwrap();
    let region = find_turning_points(&p, e, (-40.0, 40.0)).unwrap();
    let tw = wkb_transmission(&p, e, &region, &ctx(), &QuadratureControl::default()).unwrap();
    let expected = (-2.0 * core::f64::consts::PI * a * 2f64.sqrt() * (v0.sqrt() - e.sqrt())).exp();
    assert!((tw - expected).abs() < 1e-8 * expected, "{tw} vs {expected}");
}

#[test]
fn wkb_log_error_shrinks_with_height() {
    // At E = V0/2 the exact T is sech²(2Qa) while T_w = exp(−4Qa): the
    // exponent is right and the relative error in ln T falls like 1/Q.
    let ctrl = QuadratureControl::default();
    let mut last = f64::INFINITY;
    for v0 in [1.0, 10.0, 100.0] {
        let r = Rectangular::new(v0, 1.0).unwrap();
        let e = 0.5 * v0;
        let tw = wkb_transmission(&r, e, &rectangular_region(&r), &ctx(), &ctrl).unwrap();
        let t = rectangular_below(v0, 1.0, e, &ctx()).unwrap().probabilities().unwrap().transmission;
        let err = (tw.ln() - t.ln()).abs() / t.ln().abs();
        assert!(err < last, "V0 = {v0}: {err}");
        last = err;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rectangular_bound_is_valid(v0 in 0.1f64..20.0, a in 0.1f64..3.0, ratio in 1.001f64..200.0) {
        let e = v0 * ratio;
        let b = rectangular_bound_closed_form(v0, a, e, &ctx()).unwrap();
        let t = rectangular_above(v0, a, e, &ctx()).unwrap().probabilities().unwrap().transmission;
        prop_assert!(b.lower_bound <= t + 1e-12, "bound {} > T {}", b.lower_bound, t);
    }

    #[test]
    fn eckart_bound_is_valid(v0 in -3.0f64..3.0, a in 0.3f64..2.0, e in 0.05f64..10.0) {
        let p = Eckart::new(0.0, 0.0, v0, a).unwrap();
        let b = potential_bound(&p.into(), e, &ctx(), &QuadratureControl::default()).unwrap();
        let t = eckart_transmission(&p, e, &ctx()).unwrap();
        prop_assert!(b.lower_bound <= t + 1e-9, "bound {} > T {}", b.lower_bound, t);
    }
}

#[test]
fn rectangular_bound_tightens_with_energy() {
    let (v0, a) = (1.0, 1.0);
    let gap = |e: f64| {
        let t = rectangular_above(v0, a, e, &ctx()).unwrap().probabilities().unwrap().transmission;
        t - rectangular_bound_closed_form(v0, a, e, &ctx()).unwrap().lower_bound
    };
    assert!(gap(100.0 * v0) < gap(2.0 * v0));
}

#[test]
fn numeric_bound_matches_closed_form() {
    let ctrl = QuadratureControl::default();
    for (v0, a, e) in [(1.0, 1.0, 2.0), (3.0, 0.4, 3.3), (0.5, 2.0, 40.0)] {
        let r = Rectangular::new(v0, a).unwrap();
        let num = transmission_bound(&r, e, (-a, a), 0.0, &ctx(), &ctrl).unwrap();
        let cf = rectangular_bound_closed_form(v0, a, e, &ctx()).unwrap();
        assert!((num.lower_bound - cf.lower_bound).abs() < 1e-10);
    }
}

//! Sweep presets for the standard figures. Every sub-panel becomes one CSV
//! with all of its parameters fixed by the preset.

use clap::ValueEnum;
use qscatter::sweep::{Method, MethodSet, SweepSpec, SweepVariable};
use qscatter::wkb::HulthenRegion;
use qscatter::{Delta, Eckart, Hulthen, PhysicsContext, PotentialSpec, Rectangular};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    /// Delta function, T and R against k for k0 = 1, 2, 10, 100, 1000.
    Fig1,
    /// Rectangular barrier, a = 1, against q for k0 = 1, 2, 10, 100, 1000.
    Fig3,
    /// Rectangular barrier, k0 = 1, against q for a = 1, 2, 10, 100.
    Fig3a,
    /// Rectangular barrier above the top: exact T and its sech² bound.
    Fig4,
    /// Rectangular tunneling: exact T and WKB for V0 = 1, 10, 50, 100.
    Fig5,
    /// Eckart, k₋∞ = 1 and k∞ = 2, against V0 for a = 1, 2.
    Fig7,
    /// Hulthen, m = V0 = 1, q = 0.9, against E for a = 0.5, 1.
    Fig10,
    /// Hulthen WKB, q = 0.9, a = 0.5, against E for V0 = 1, 2, 10, 50.
    Fig11,
}

impl Preset {
    pub fn name(self) -> &'static str {
        match self {
            Preset::Fig1 => "fig1",
            Preset::Fig3 => "fig3",
            Preset::Fig3a => "fig3a",
            Preset::Fig4 => "fig4",
            Preset::Fig5 => "fig5",
            Preset::Fig7 => "fig7",
            Preset::Fig10 => "fig10",
            Preset::Fig11 => "fig11",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Panel {
    /// File name inside the output directory.
    pub file: String,
    /// One-line parameter summary for the manifest.
    pub params: String,
    pub spec: SweepSpec,
}

const LETTERS: [char; 5] = ['a', 'b', 'c', 'd', 'e'];

fn panel(preset: Preset, i: usize, params: String, spec: SweepSpec) -> Panel {
    Panel { file: format!("{}_{}.csv", preset.name(), LETTERS[i]), params, spec }
}

fn methods(list: &[Method]) -> MethodSet {
    MethodSet::of(list)
}

pub fn panels(preset: Preset) -> Vec<Panel> {
    let exact = methods(&[Method::Exact]);
    match preset {
        Preset::Fig1 => [1.0, 2.0, 10.0, 100.0, 1000.0]
            .iter()
            .enumerate()
            .map(|(i, &k0)| {
                // k0 = mα/ħ²
                let p: PotentialSpec = Delta::new(k0).unwrap().into();
                let spec = SweepSpec::new(p, SweepVariable::K, k0 / 50.0, 10.0 * k0, 500).with_methods(exact);
                panel(preset, i, format!("delta k0={k0} alpha={k0} k=[{},{}] points=500", k0 / 50.0, 10.0 * k0), spec)
            })
            .collect(),
        Preset::Fig3 => [1.0, 2.0, 10.0, 100.0, 1000.0]
            .iter()
            .enumerate()
            .map(|(i, &k0)| {
                // k0² = 2mV0/ħ²
                let v0 = k0 * k0 / 2.0;
                let p: PotentialSpec = Rectangular::new(v0, 1.0).unwrap().into();
                let spec = SweepSpec::new(p, SweepVariable::Q, 0.01, 20.0, 2000).with_methods(exact);
                panel(preset, i, format!("rect k0={k0} v0={v0} a=1 q=[0.01,20] points=2000"), spec)
            })
            .collect(),
        Preset::Fig3a => [1.0, 2.0, 10.0, 100.0]
            .iter()
            .enumerate()
            .map(|(i, &a)| {
                let p: PotentialSpec = Rectangular::new(0.5, a).unwrap().into();
                let spec = SweepSpec::new(p, SweepVariable::Q, 0.00125, 5.0, 4000).with_methods(exact);
                panel(preset, i, format!("rect k0=1 v0=0.5 a={a} q=[0.00125,5] points=4000"), spec)
            })
            .collect(),
        Preset::Fig4 => {
            let p: PotentialSpec = Rectangular::new(1.0, 1.0).unwrap().into();
            let spec = SweepSpec::new(p, SweepVariable::E, 1.1, 50.0, 490)
                .with_methods(methods(&[Method::Exact, Method::Bound]));
            vec![Panel {
                file: "fig4.csv".to_string(),
                params: "rect v0=1 a=1 E=[1.1,50] points=490 methods=exact,bound".to_string(),
                spec,
            }]
        }
        Preset::Fig5 => [1.0, 10.0, 50.0, 100.0]
            .iter()
            .enumerate()
            .map(|(i, &v0)| {
                let p: PotentialSpec = Rectangular::new(v0, 1.0).unwrap().into();
                let (lo, hi) = (v0 / 500.0, v0 * 499.0 / 500.0);
                let spec = SweepSpec::new(p, SweepVariable::E, lo, hi, 499)
                    .with_methods(methods(&[Method::Exact, Method::Wkb]));
                panel(preset, i, format!("rect v0={v0} a=1 E=[{lo},{hi}] points=499 methods=exact,wkb"), spec)
            })
            .collect(),
        Preset::Fig7 => [1.0, 2.0]
            .iter()
            .enumerate()
            .map(|(i, &a)| {
                // E = 2 with V₋∞ = 1.5, V∞ = 0 gives k₋∞ = 1, k∞ = 2
                let p: PotentialSpec = Eckart::new(1.5, 0.0, 0.0, a).unwrap().into();
                let spec = SweepSpec::new(p, SweepVariable::V0, -10.0, 2.0, 1201).with_methods(exact).with_energy(2.0);
                panel(preset, i, format!("eckart vm=1.5 vp=0 E=2 a={a} V0=[-10,2] points=1201"), spec)
            })
            .collect(),
        Preset::Fig10 => [0.5, 1.0]
            .iter()
            .enumerate()
            .map(|(i, &a)| {
                let p: PotentialSpec = Hulthen::new(1.0, a, 0.9).unwrap().into();
                let spec = SweepSpec::new(p, SweepVariable::E, 1.09, 10.0, 100)
                    .with_methods(exact)
                    .with_ctx(PhysicsContext::new(1.0, 1.0).unwrap());
                panel(preset, i, format!("hulthen m=1 v0=1 q=0.9 a={a} E=[1.09,10] points=100"), spec)
            })
            .collect(),
        Preset::Fig11 => [1.0, 2.0, 10.0, 50.0]
            .iter()
            .enumerate()
            .map(|(i, &v0)| {
                let p: PotentialSpec = Hulthen::new(v0, 0.5, 0.9).unwrap().into();
                let mut spec =
                    SweepSpec::new(p, SweepVariable::E, 0.01, 1.0, 100).with_methods(methods(&[Method::Wkb]));
                spec.hulthen_region = HulthenRegion::Fixed;
                panel(preset, i, format!("hulthen v0={v0} q=0.9 a=0.5 E=[0.01,1] points=100 region=(-1,1)"), spec)
            })
            .collect(),
    }
}

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::Path;

use rayon::prelude::*;

use qscatter::quad::QuadratureControl;
use qscatter::resonance::{analytic_resonances, numeric_resonances, ResonanceKind, ResonanceReport};
use qscatter::specfun::SeriesControl;
use qscatter::sweep::{evaluate_point, GridKind, Method, MethodSet, SweepRow, SweepSpec, SweepVariable};
use qscatter::wkb::HulthenRegion;
use qscatter::{Delta, Eckart, Error, Hulthen, PhysicsContext, PotentialSpec, Rectangular};

use crate::args::{
    Cli, Command, Controls, EvalArgs, FigureArgs, GridArg, KindArg, MethodArg, PointArgs, PotentialArgs,
    PotentialKind, RegionArg, ResonanceArgs, SweepArgs, VarArg,
};
use crate::figures::panels;
use crate::table::{sweep_table, Cell, OutputTable};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Usage(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Io(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for CliError {}

fn usage(e: Error) -> CliError {
    CliError::Usage(e.to_string())
}

fn io_err(what: &Path, e: std::io::Error) -> CliError {
    CliError::Io(format!("{}: {e}", what.display()))
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes()).map_err(|e| CliError::Io(format!("standard output: {e}")))
}

pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Eval(a) => cmd_eval(&a, out),
        Command::Bound(a) => cmd_point(&a, MethodArg::Bound, out),
        Command::Wkb(a) => cmd_point(&a, MethodArg::Wkb, out),
        Command::Sweep(a) => cmd_sweep(&a, out),
        Command::Resonances(a) => cmd_resonances(&a, out, err),
        Command::Figure(a) => cmd_figure(&a, out),
    }
}

pub fn build_potential(a: &PotentialArgs) -> Result<(PotentialSpec, PhysicsContext), CliError> {
    let ctx = PhysicsContext::new(a.hbar, a.mass).map_err(usage)?;
    let given = [
        ("alpha", a.alpha.is_some()),
        ("v0", a.v0.is_some()),
        ("a", a.a.is_some()),
        ("vm", a.vm.is_some()),
        ("vp", a.vp.is_some()),
        ("q", a.q.is_some()),
    ];
    let allowed: &[&str] = match a.potential {
        PotentialKind::Delta => &["alpha"],
        PotentialKind::Rect => &["v0", "a"],
        PotentialKind::Eckart => &["v0", "a", "vm", "vp"],
        PotentialKind::Hulthen => &["v0", "a", "q"],
    };
    if let Some((flag, _)) = given.iter().find(|(n, set)| *set && !allowed.contains(n)) {
        return Err(CliError::Usage(format!("--{flag} does not apply to this potential")));
    }
    let p: PotentialSpec = match a.potential {
        PotentialKind::Delta => Delta::new(a.alpha.unwrap_or(1.0)).map_err(usage)?.into(),
        PotentialKind::Rect => Rectangular::new(a.v0.unwrap_or(1.0), a.a.unwrap_or(1.0)).map_err(usage)?.into(),
        PotentialKind::Eckart => Eckart::new(
            a.vm.unwrap_or(0.0),
            a.vp.unwrap_or(0.0),
            a.v0.unwrap_or(0.0),
            a.a.unwrap_or(1.0),
        )
        .map_err(usage)?
        .into(),
        PotentialKind::Hulthen => {
            Hulthen::new(a.v0.unwrap_or(1.0), a.a.unwrap_or(0.5), a.q.unwrap_or(0.9)).map_err(usage)?.into()
        }
    };
    Ok((p, ctx))
}

fn method_set(list: &[MethodArg]) -> MethodSet {
    let ms: Vec<Method> = list
        .iter()
        .map(|m| match m {
            MethodArg::Exact => Method::Exact,
            MethodArg::Wkb => Method::Wkb,
            MethodArg::Bound => Method::Bound,
        })
        .collect();
    MethodSet::of(&ms)
}

fn variable(v: VarArg) -> SweepVariable {
    match v {
        VarArg::K => SweepVariable::K,
        VarArg::Q => SweepVariable::Q,
        VarArg::E => SweepVariable::E,
        VarArg::V0 => SweepVariable::V0,
    }
}

fn apply_controls(spec: &mut SweepSpec, c: &Controls) -> Result<(), CliError> {
    spec.series = SeriesControl::new(c.rel_tol, c.max_terms).map_err(usage)?;
    spec.quad = QuadratureControl { abs_tol: c.abs_tol, ..QuadratureControl::default() };
    spec.quad.validate().map_err(usage)?;
    spec.hulthen_region = match c.hulthen_region {
        RegionArg::Fixed => HulthenRegion::Fixed,
        RegionArg::Turning => HulthenRegion::TurningPoints,
    };
    Ok(())
}

/// Evaluate `spec` over its grid on a rayon pool; rows come back in grid
/// order whatever the thread count.
pub fn run_sweep_parallel(spec: &SweepSpec, jobs: Option<usize>) -> Result<Vec<SweepRow>, CliError> {
    spec.validate().map_err(usage)?;
    let grid = spec.grid_values();
    let work = || grid.par_iter().map(|&v| evaluate_point(spec, v)).collect::<Vec<_>>();
    match jobs {
        None => Ok(work()),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| CliError::Usage(format!("cannot start {n} worker threads: {e}")))?;
            Ok(pool.install(work))
        }
    }
}

fn point_table(p: &PotentialArgs, energy: f64, methods: MethodSet, c: &Controls) -> Result<OutputTable, CliError> {
    let (potential, ctx) = build_potential(p)?;
    // a one-point spec; evaluate_point never looks at the grid bounds
    let mut spec = SweepSpec::new(potential, SweepVariable::E, energy, energy, 1)
        .with_methods(methods)
        .with_ctx(ctx);
    apply_controls(&mut spec, c)?;
    let row = evaluate_point(&spec, energy);
    Ok(sweep_table(&spec, "E", &[row]))
}

fn cmd_eval(a: &EvalArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let table = point_table(&a.potential, a.energy, method_set(&a.method), &a.controls)?;
    emit(out, &table.to_csv())
}

fn cmd_point(a: &PointArgs, method: MethodArg, out: &mut dyn Write) -> Result<(), CliError> {
    let table = point_table(&a.potential, a.energy, method_set(&[method]), &a.controls)?;
    emit(out, &table.to_csv())
}

fn cmd_sweep(a: &SweepArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let (potential, ctx) = build_potential(&a.potential)?;
    let var = variable(a.var);
    let mut spec = SweepSpec::new(potential, var, a.lo, a.hi, a.points)
        .with_methods(method_set(&a.method))
        .with_ctx(ctx);
    spec.energy = a.energy;
    spec.grid = match a.grid {
        GridArg::Linear => GridKind::Linear,
        GridArg::Log => GridKind::Log,
    };
    apply_controls(&mut spec, &a.controls)?;
    let rows = run_sweep_parallel(&spec, a.jobs)?;
    let csv = sweep_table(&spec, var.name(), &rows).to_csv();
    match &a.out {
        Some(path) => fs::write(path, csv).map_err(|e| io_err(path, e)),
        None => emit(out, &csv),
    }
}

fn resonance_table(reports: &[ResonanceReport]) -> OutputTable {
    let mut t = OutputTable::new(["kind", "location", "value", "source", "label", "boundary"]);
    for r in reports {
        t.push(vec![
            Cell::Text(r.kind.name().to_string()),
            Cell::Num(r.location),
            r.value.map_or(Cell::Missing, Cell::Num),
            Cell::Text(r.source.name().to_string()),
            Cell::Text(r.label.name().to_string()),
            Cell::Text(r.boundary.to_string()),
        ]);
    }
    t
}

fn cmd_resonances(a: &ResonanceArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let (potential, ctx) = build_potential(&a.potential)?;
    let var = variable(a.var);
    let kind = a.kind.map(|k| match k {
        KindArg::Transmission => ResonanceKind::Transmission,
        KindArg::Reflection => ResonanceKind::Reflection,
    });

    if !a.numeric {
        let list = match analytic_resonances(&potential, var, kind, a.n, a.energy, &ctx) {
            Ok(l) => l,
            Err(Error::Unsupported(m)) => {
                return Err(CliError::Usage(format!("{m}; use --numeric with --lo and --hi")));
            }
            Err(e) => return Err(usage(e)),
        };
        emit(out, &resonance_table(&list.reports).to_csv())?;
        for note in &list.notes {
            writeln!(err, "note: {note}").map_err(|e| CliError::Io(format!("standard error: {e}")))?;
        }
        return Ok(());
    }

    let (Some(lo), Some(hi)) = (a.lo, a.hi) else {
        return Err(CliError::Usage("--numeric needs --lo and --hi".into()));
    };
    let mut spec = SweepSpec::new(potential, var, lo, hi, a.points).with_ctx(ctx);
    spec.energy = a.energy;
    apply_controls(&mut spec, &a.controls)?;
    spec.validate().map_err(usage)?;
    let kinds = match kind {
        Some(k) => vec![k],
        None => vec![ResonanceKind::Transmission, ResonanceKind::Reflection],
    };
    let mut reports = Vec::new();
    for k in kinds {
        let curve = |x: f64| match evaluate_point(&spec, x).exact {
            Some(Ok(p)) => match k {
                ResonanceKind::Transmission => p.transmission,
                ResonanceKind::Reflection => p.reflection,
            },
            _ => f64::NAN,
        };
        reports.extend(numeric_resonances(curve, (lo, hi), a.points, a.tol, k).map_err(usage)?);
    }
    emit(out, &resonance_table(&reports).to_csv())
}

fn cmd_figure(a: &FigureArgs, out: &mut dyn Write) -> Result<(), CliError> {
    fs::create_dir_all(&a.out).map_err(|e| io_err(&a.out, e))?;
    let mut manifest = String::new();
    for panel in panels(a.preset) {
        let rows = run_sweep_parallel(&panel.spec, a.jobs)?;
        let table = sweep_table(&panel.spec, panel.spec.variable.name(), &rows);
        let path = a.out.join(&panel.file);
        table.write_csv(&path).map_err(|e| io_err(&path, e))?;
        manifest.push_str(&format!("{}: {}\n", panel.file, panel.params));
        emit(out, &format!("{}\n", path.display()))?;
    }
    let path = a.out.join(format!("{}_manifest.txt", a.preset.name()));
    fs::write(&path, manifest).map_err(|e| io_err(&path, e))?;
    emit(out, &format!("{}\n", path.display()))
}

use std::path::PathBuf;

use clap::{ArgAction, Args, Parser, Subcommand, ValueEnum};

use crate::figures::Preset;

#[derive(Debug, Parser)]
#[command(
    name = "qscatter",
    version,
    about = "Transmission and reflection for 1D potential scattering: exact, WKB and transfer-matrix bound"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one energy and print a single-row table.
    #[command(args_override_self = true, allow_negative_numbers = true)]
    Eval(EvalArgs),
    /// Sweep one variable and write a CSV.
    #[command(args_override_self = true, allow_negative_numbers = true)]
    Sweep(SweepArgs),
    /// List closed-form or numerically located resonances.
    #[command(args_override_self = true, allow_negative_numbers = true)]
    Resonances(ResonanceArgs),
    /// Write the CSVs for one figure preset.
    #[command(args_override_self = true)]
    Figure(FigureArgs),
    /// `eval --method bound`.
    #[command(args_override_self = true, allow_negative_numbers = true)]
    Bound(PointArgs),
    /// `eval --method wkb`.
    #[command(args_override_self = true, allow_negative_numbers = true)]
    Wkb(PointArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PotentialKind {
    Delta,
    Rect,
    Eckart,
    Hulthen,
}

/// Potential parameters. Unset values fall back to the figure-preset
/// defaults: α = 1; rect V0 = a = 1; Eckart V±∞ = V0 = 0, a = 1;
/// Hulthen V0 = 1, a = 0.5, q = 0.9.
#[derive(Debug, Clone, Args)]
pub struct PotentialArgs {
    #[arg(long, value_enum)]
    pub potential: PotentialKind,
    /// Delta strength α.
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long)]
    pub v0: Option<f64>,
    /// Half-width (rect), diffuseness (Eckart, Hulthen).
    #[arg(long)]
    pub a: Option<f64>,
    /// Eckart V(−∞).
    #[arg(long)]
    pub vm: Option<f64>,
    /// Eckart V(+∞).
    #[arg(long)]
    pub vp: Option<f64>,
    /// Hulthen screening parameter, 0 < q < 1.
    #[arg(long)]
    pub q: Option<f64>,
    #[arg(long, default_value_t = 1.0)]
    pub hbar: f64,
    #[arg(long, default_value_t = 1.0)]
    pub mass: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Exact,
    Wkb,
    Bound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RegionArg {
    /// The interval (−1, 1).
    Fixed,
    /// The classical turning points.
    Turning,
}

#[derive(Debug, Clone, Args)]
pub struct Controls {
    /// Relative tolerance of the hypergeometric series.
    #[arg(long, default_value_t = 1e-15)]
    pub rel_tol: f64,
    #[arg(long, default_value_t = 20000)]
    pub max_terms: usize,
    /// Absolute tolerance of the WKB and bound quadratures.
    #[arg(long, default_value_t = 1e-10)]
    pub abs_tol: f64,
    /// Integration limits for the Hulthen WKB integral.
    #[arg(long, value_enum, default_value_t = RegionArg::Fixed)]
    pub hulthen_region: RegionArg,
}

#[derive(Debug, Clone, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub potential: PotentialArgs,
    #[arg(long)]
    pub energy: f64,
    /// Comma-separated list.
    #[arg(long, value_enum, value_delimiter = ',', action = ArgAction::Set, default_value = "exact")]
    pub method: Vec<MethodArg>,
    #[command(flatten)]
    pub controls: Controls,
    /// Flat key=value file of flags; explicit flags win.
    #[arg(long)]
    pub spec: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct PointArgs {
    #[command(flatten)]
    pub potential: PotentialArgs,
    #[arg(long)]
    pub energy: f64,
    #[command(flatten)]
    pub controls: Controls,
    #[arg(long)]
    pub spec: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VarArg {
    #[value(name = "k")]
    K,
    #[value(name = "q")]
    Q,
    #[value(name = "E", alias = "e")]
    E,
    #[value(name = "V0", alias = "v0")]
    V0,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GridArg {
    Linear,
    Log,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub potential: PotentialArgs,
    #[arg(long, value_enum)]
    pub var: VarArg,
    #[arg(long)]
    pub lo: f64,
    #[arg(long)]
    pub hi: f64,
    #[arg(long, default_value_t = 500)]
    pub points: usize,
    #[arg(long, value_enum, default_value_t = GridArg::Linear)]
    pub grid: GridArg,
    /// Fixed energy for V0 sweeps.
    #[arg(long)]
    pub energy: Option<f64>,
    #[arg(long, value_enum, value_delimiter = ',', action = ArgAction::Set, default_value = "exact")]
    pub method: Vec<MethodArg>,
    #[command(flatten)]
    pub controls: Controls,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Worker threads; defaults to all cores. Output does not depend on it.
    #[arg(long)]
    pub jobs: Option<usize>,
    #[arg(long)]
    pub spec: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Transmission,
    Reflection,
}

#[derive(Debug, Clone, Args)]
pub struct ResonanceArgs {
    #[command(flatten)]
    pub potential: PotentialArgs,
    #[arg(long, value_enum)]
    pub var: VarArg,
    /// Restrict to one kind; both by default.
    #[arg(long, value_enum)]
    pub kind: Option<KindArg>,
    /// Number of closed-form resonances.
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    /// Locate maxima of the exact curve on a grid instead.
    #[arg(long)]
    pub numeric: bool,
    #[arg(long)]
    pub lo: Option<f64>,
    #[arg(long)]
    pub hi: Option<f64>,
    #[arg(long, default_value_t = 2000)]
    pub points: usize,
    /// Location tolerance of the numeric refinement.
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    /// Fixed energy for V0 sweeps.
    #[arg(long)]
    pub energy: Option<f64>,
    #[command(flatten)]
    pub controls: Controls,
    #[arg(long)]
    pub spec: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct FigureArgs {
    #[arg(value_enum)]
    pub preset: Preset,
    /// Output directory, created if needed.
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
    #[arg(long)]
    pub jobs: Option<usize>,
    #[arg(long)]
    pub spec: Option<PathBuf>,
}

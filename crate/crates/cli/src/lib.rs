//! Command-line front end for `qscatter`: point evaluation, CSV sweeps,
//! resonance listings and figure presets.

pub mod args;
pub mod commands;
pub mod figures;
pub mod specfile;
pub mod table;

pub use commands::{run, CliError};

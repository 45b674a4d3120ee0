use std::io;
use std::process::ExitCode;

use clap::Parser;
use qscatter_cli::args::Cli;
use qscatter_cli::specfile::{expand_spec_args, ExpandError};

fn main() -> ExitCode {
    let argv = match expand_spec_args(std::env::args_os().collect()) {
        Ok(a) => a,
        Err(ExpandError::Usage(m)) => {
            eprintln!("error: {m}");
            return ExitCode::from(2);
        }
        Err(ExpandError::Io(path, e)) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            return ExitCode::from(3);
        }
    };
    // clap exits with status 2 on usage errors
    let cli = Cli::parse_from(argv);
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match qscatter_cli::run(cli, &mut out, &mut io::stderr()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

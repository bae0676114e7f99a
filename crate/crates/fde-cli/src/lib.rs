//! Command-line front end for `fde-core`: runs, error studies and CSV output.

pub mod args;
pub mod commands;
pub mod format;

use std::ffi::OsString;
use std::fmt;
use std::io;

use clap::Parser;

pub use args::Cli;
pub use format::g17;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DIVERGED: i32 = 2;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(io::Error),
    Solver(fde_core::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Usage(m) => write!(f, "{m}"),
            Self::Io(e) => write!(f, "{e}"),
            Self::Solver(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<fde_core::Error> for CliError {
    fn from(e: fde_core::Error) -> Self {
        Self::Solver(e)
    }
}

/// Parses `argv` (program name first), runs the command and returns the
/// process exit status.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(&cli) {
        Ok(false) => EXIT_OK,
        Ok(true) => {
            eprintln!("fde: run diverged");
            EXIT_DIVERGED
        }
        Err(e) => {
            eprintln!("fde: {e}");
            EXIT_USAGE
        }
    }
}

pub fn execute(cli: &Cli) -> Result<commands::Diverged, CliError> {
    use args::Command::*;
    match &cli.command {
        Solve { run, scheme, out } => commands::solve_cmd(run, *scheme, out),
        Reproduce { figure, t_max, out } => commands::reproduce(*figure, *t_max, out),
        Convergence { run, scheme, h_list, out } => commands::convergence(run, *scheme, h_list, out),
        ShortMemoryStudy { run, windows, out } => commands::short_memory_study(run, windows, out),
    }
}

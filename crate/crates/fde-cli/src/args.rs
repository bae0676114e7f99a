use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fde_core::{Bootstrap, SchemeKind};

#[derive(Debug, Parser)]
#[command(name = "fde", version, about = "Caputo fractional ODE solvers and error studies")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve D^alpha y = lambda y and write the trajectory with its error
    Solve {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, value_enum, default_value_t = Scheme::PiTrap)]
        scheme: Scheme,
        #[command(flatten)]
        out: Output,
    },
    /// Write the plot data of the two-point scheme experiment
    Reproduce {
        #[arg(value_enum)]
        figure: Figure,
        /// Final time; the figures use 4
        #[arg(long, default_value_t = 4.0)]
        t_max: f64,
        #[command(flatten)]
        out: Output,
    },
    /// Error and observed order over a sequence of halved step sizes
    Convergence {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, value_enum, default_value_t = Scheme::PiTrap)]
        scheme: Scheme,
        /// Comma-separated, each half of the previous
        #[arg(long, value_delimiter = ',', default_value = "0.0625,0.03125,0.015625,0.0078125")]
        h_list: Vec<f64>,
        #[command(flatten)]
        out: Output,
    },
    /// Error of the truncated-memory rectangle rule for several window lengths
    ShortMemoryStudy {
        #[command(flatten)]
        run: RunArgs,
        /// Comma-separated node counts; `full` keeps the whole history
        #[arg(long, value_delimiter = ',', default_value = "4,16,64,full")]
        windows: Vec<String>,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    #[arg(long, default_value_t = 0.8)]
    pub alpha: f64,
    #[arg(long, default_value_t = -2.0, allow_negative_numbers = true)]
    pub lambda: f64,
    #[arg(long, default_value_t = 2.0, allow_negative_numbers = true)]
    pub y0: f64,
    #[arg(long, default_value_t = 0.0625)]
    pub h: f64,
    #[arg(long, default_value_t = 4.0)]
    pub t_max: f64,
    /// History length in nodes for `--scheme short-memory`
    #[arg(long, conflicts_with = "memory_time")]
    pub memory_window: Option<usize>,
    /// History length in time units, rounded to `round(T / h)` nodes
    #[arg(long)]
    pub memory_time: Option<f64>,
    /// First step of the two-point scheme
    #[arg(long, value_enum, default_value_t = BootstrapArg::PiTrap)]
    pub bootstrap: BootstrapArg,
}

#[derive(Debug, Clone, Args)]
pub struct Output {
    /// Defaults to standard output
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Scheme {
    Flawed,
    PiRect,
    PiTrap,
    Abm,
    ShortMemory,
}

impl From<Scheme> for SchemeKind {
    fn from(s: Scheme) -> Self {
        match s {
            Scheme::Flawed => SchemeKind::FlawedLocal,
            Scheme::PiRect => SchemeKind::PiRectExplicit,
            Scheme::PiTrap => SchemeKind::PiTrapImplicit,
            Scheme::Abm => SchemeKind::Abm,
            Scheme::ShortMemory => SchemeKind::ShortMemory,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BootstrapArg {
    PiTrap,
    PiRect,
}

impl From<BootstrapArg> for Bootstrap {
    fn from(b: BootstrapArg) -> Self {
        match b {
            BootstrapArg::PiTrap => Bootstrap::PiTrapOneStep,
            BootstrapArg::PiRect => Bootstrap::PiRectOneStep,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Figure {
    Fig1,
    Fig2,
}

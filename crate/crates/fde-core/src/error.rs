use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An argument outside the domain of a mathematical function.
    Domain { what: &'static str, value: f64 },
    /// A structurally invalid argument (grid sizes, window lengths, ...).
    InvalidArgument(&'static str),
    /// Neither the power series nor the asymptotic expansion of the
    /// Mittag-Leffler function reached its accuracy target.
    NonConvergence { alpha: f64, z: f64 },
    /// The implicit corrector equation did not converge at `step`
    /// (the index of the node being computed).
    ImplicitSolve { step: usize },
    /// The right-hand side returned NaN at a finite state.
    RhsEvaluation { t: f64, y: f64 },
    /// Two trajectories on different grids were compared.
    GridMismatch,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain { what, value } => write!(f, "{what} out of domain: {value}"),
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::NonConvergence { alpha, z } => {
                write!(f, "Mittag-Leffler evaluation did not converge (alpha={alpha}, z={z})")
            }
            Error::ImplicitSolve { step } => {
                write!(f, "implicit solve did not converge at step {step}")
            }
            Error::RhsEvaluation { t, y } => {
                write!(f, "right-hand side evaluation failed at t={t}, y={y}")
            }
            Error::GridMismatch => f.write_str("trajectories are defined on different grids"),
        }
    }
}

impl core::error::Error for Error {}

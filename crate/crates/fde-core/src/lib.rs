//! Scalar Caputo fractional initial value problems on uniform grids.
//!
//! The crate carries the reference solution machinery (gamma and the
//! one-parameter Mittag-Leffler function), a set of time-stepping schemes
//! and the error analysis used to compare them:
//!
//! * [`schemes`] holds the product-integration rules (explicit rectangular,
//!   implicit trapezoidal, predictor-corrector), a fixed-memory variant of
//!   the rectangular rule, and the two-point "local" scheme that replaces
//!   the whole history by a single linear interpolant.
//! * [`analysis`] measures errors against exact solutions, estimates
//!   convergence orders and growth exponents, and checks realized errors
//!   against the third-order bound claimed for the local scheme.
//!
//! Everything is `no_std` with `alloc`; IO lives in the `fde-cli` crate.

#![no_std]
#![warn(missing_debug_implementations)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod analysis;
mod error;
pub mod mittag_leffler;
pub mod problem;
pub mod schemes;
mod sum;

pub use error::{Error, Result};
pub use mittag_leffler::{gamma, ln_gamma, ml, MlParams};
pub use problem::{
    make_grid, FdeProblem, LinearRhs, LinearTestProblem, Order, Rhs, Trajectory, TrajectoryKind,
    UniformGrid,
};
pub use schemes::{
    flawed_step, solve, solve_flawed, solve_pi, solve_short_memory, Bootstrap, ConvolutionWeights,
    MemoryWindow, SchemeConfig, SchemeKind, Stepper,
};
pub use sum::CompensatedSum;

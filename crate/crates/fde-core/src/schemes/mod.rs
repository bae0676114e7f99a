//! Time-stepping schemes for `D^alpha y = f(t, y)` on a uniform grid.
//!
//! All product-integration (PI) rules share the form
//! `y_{n+1} = y0 + h^alpha * (weighted sum of f over the history)`; the
//! history sums are direct O(N^2) convolutions. The two-point local scheme
//! in [`flawed_step`] keeps no history at all and is here as the object of
//! the divergence analysis, not as a usable method.

mod flawed;
mod implicit;
mod weights;

use alloc::vec::Vec;

pub use flawed::flawed_step;
pub use weights::ConvolutionWeights;

use crate::problem::{FdeProblem, Rhs, Trajectory, UniformGrid};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SchemeKind {
    /// Two-point scheme with a single linear interpolant over the history.
    FlawedLocal,
    /// Explicit PI rule with piecewise constant interpolation.
    PiRectExplicit,
    /// Implicit PI rule with piecewise linear interpolation.
    PiTrapImplicit,
    /// Rectangular predictor followed by one trapezoidal corrector.
    Abm,
    /// `PiRectExplicit` restricted to a sliding window of recent nodes.
    ShortMemory,
}

/// How the flawed scheme obtains `y_1`, which it cannot produce itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Bootstrap {
    #[default]
    PiTrapOneStep,
    PiRectOneStep,
}

/// Number of most recent nodes kept in the rectangular history sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MemoryWindow {
    #[default]
    Full,
    Nodes(usize),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchemeConfig {
    pub kind: SchemeKind,
    pub bootstrap: Bootstrap,
    pub memory_window: MemoryWindow,
    pub newton_tol: f64,
    pub newton_max_iter: usize,
}

impl SchemeConfig {
    pub const DEFAULT_NEWTON_TOL: f64 = 1e-12;
    pub const DEFAULT_NEWTON_MAX_ITER: usize = 50;

    pub fn new(kind: SchemeKind) -> Self {
        Self {
            kind,
            bootstrap: Bootstrap::default(),
            memory_window: MemoryWindow::default(),
            newton_tol: Self::DEFAULT_NEWTON_TOL,
            newton_max_iter: Self::DEFAULT_NEWTON_MAX_ITER,
        }
    }

    pub fn with_bootstrap(mut self, bootstrap: Bootstrap) -> Self {
        self.bootstrap = bootstrap;
        self
    }

    pub fn with_memory_window(mut self, window: MemoryWindow) -> Self {
        self.memory_window = window;
        self
    }

    pub fn with_newton(mut self, tol: f64, max_iter: usize) -> Self {
        self.newton_tol = tol;
        self.newton_max_iter = max_iter;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.memory_window == MemoryWindow::Nodes(0) {
            return Err(Error::InvalidArgument("memory window must hold at least one node"));
        }
        if !(self.newton_tol.is_finite() && self.newton_tol > 0.0) {
            return Err(Error::Domain { what: "newton tolerance", value: self.newton_tol });
        }
        if self.newton_max_iter == 0 {
            return Err(Error::InvalidArgument("newton_max_iter must be positive"));
        }
        Ok(())
    }
}

/// One-step map of a scheme: produces `y_{n+1}` from the history
/// `y_0..=y_n` and `f_j = f(t_j, y_j)`.
///
/// Feeding computed values gives the scheme itself; feeding exact values
/// gives the one-step defect used by the local truncation analysis.
#[derive(Debug)]
pub struct Stepper<'p, F> {
    problem: &'p FdeProblem<F>,
    grid: UniformGrid,
    config: SchemeConfig,
    weights: ConvolutionWeights,
    h_alpha: f64,
}

impl<'p, F: Rhs> Stepper<'p, F> {
    pub fn new(problem: &'p FdeProblem<F>, grid: UniformGrid, config: SchemeConfig) -> Result<Self> {
        config.validate()?;
        // the flawed scheme only needs the weights of its bootstrap step
        let n = match config.kind {
            SchemeKind::FlawedLocal => 1,
            _ => grid.n_steps(),
        };
        let weights = ConvolutionWeights::new(problem.order(), n)?;
        let h_alpha = libm::pow(grid.h(), problem.alpha());
        Ok(Self { problem, grid, config, weights, h_alpha })
    }

    pub fn config(&self) -> &SchemeConfig {
        &self.config
    }

    pub fn grid(&self) -> &UniformGrid {
        &self.grid
    }

    pub fn advance(&self, ys: &[f64], fs: &[f64]) -> Result<f64> {
        if ys.is_empty() || ys.len() != fs.len() || ys.len() > self.grid.n_steps() {
            return Err(Error::InvalidArgument("history does not fit the grid"));
        }
        match self.config.kind {
            SchemeKind::FlawedLocal => self.flawed(ys, fs),
            SchemeKind::PiRectExplicit => Ok(self.rect(fs, MemoryWindow::Full)),
            SchemeKind::ShortMemory => Ok(self.rect(fs, self.config.memory_window)),
            SchemeKind::PiTrapImplicit => self.trap(ys, fs),
            SchemeKind::Abm => self.abm(fs),
        }
    }

    fn flawed(&self, ys: &[f64], fs: &[f64]) -> Result<f64> {
        let n = ys.len() - 1;
        if n == 0 {
            return match self.config.bootstrap {
                Bootstrap::PiTrapOneStep => self.trap(ys, fs),
                Bootstrap::PiRectOneStep => Ok(self.rect(fs, MemoryWindow::Full)),
            };
        }
        flawed_step(self.problem.alpha(), self.grid.h(), n, fs[n - 1], fs[n], ys[n])
    }

    fn rect_sum(&self, fs: &[f64], window: MemoryWindow) -> f64 {
        let n = fs.len() - 1;
        let lo = match window {
            MemoryWindow::Full => 0,
            MemoryWindow::Nodes(len) => (n + 1).saturating_sub(len),
        };
        let b = self.weights.rect();
        (lo..=n).map(|j| b[n - j] * fs[j]).sum()
    }

    fn rect(&self, fs: &[f64], window: MemoryWindow) -> f64 {
        self.problem.y0() + self.h_alpha * self.rect_sum(fs, window)
    }

    /// Trapezoidal history without the implicit `a_0 f_{n+1}` term.
    fn trap_known(&self, fs: &[f64]) -> f64 {
        let n = fs.len() - 1;
        let a = self.weights.trap();
        let history: f64 = (1..=n).map(|j| a[n + 1 - j] * fs[j]).sum();
        self.problem.y0() + self.h_alpha * (self.weights.trap_start(n) * fs[0] + history)
    }

    fn trap(&self, ys: &[f64], fs: &[f64]) -> Result<f64> {
        let n = fs.len() - 1;
        let c = self.trap_known(fs);
        let w = self.h_alpha * self.weights.trap()[0];
        let t = self.grid.node(n + 1);
        implicit::solve_corrector(
            self.problem,
            t,
            c,
            w,
            ys[n],
            self.config.newton_tol,
            self.config.newton_max_iter,
        )?
        .ok_or(Error::ImplicitSolve { step: n + 1 })
    }

    fn abm(&self, fs: &[f64]) -> Result<f64> {
        let n = fs.len() - 1;
        let predicted = self.rect(fs, MemoryWindow::Full);
        let t = self.grid.node(n + 1);
        let f_pred = self.problem.eval(t, predicted)?;
        let w = self.h_alpha * self.weights.trap()[0];
        Ok(self.trap_known(fs) + w * f_pred)
    }
}

/// Runs any scheme over the whole grid.
///
/// A non-finite value ends the run: the trajectory keeps the finite prefix
/// and is flagged as diverged.
pub fn solve<F: Rhs>(
    problem: &FdeProblem<F>,
    grid: &UniformGrid,
    config: &SchemeConfig,
) -> Result<Trajectory> {
    let stepper = Stepper::new(problem, *grid, *config)?;
    let mut ys = Vec::with_capacity(grid.len());
    let mut fs = Vec::with_capacity(grid.len());
    ys.push(problem.y0());
    fs.push(problem.eval(0.0, problem.y0())?);
    let mut diverged = false;
    for n in 0..grid.n_steps() {
        let y = stepper.advance(&ys, &fs)?;
        if !y.is_finite() {
            diverged = true;
            break;
        }
        let f = problem.eval(grid.node(n + 1), y)?;
        ys.push(y);
        if !f.is_finite() {
            diverged = true;
            break;
        }
        fs.push(f);
    }
    Trajectory::numeric(*grid, ys, diverged)
}

pub fn solve_flawed<F: Rhs>(
    problem: &FdeProblem<F>,
    grid: &UniformGrid,
    config: &SchemeConfig,
) -> Result<Trajectory> {
    if config.kind != SchemeKind::FlawedLocal {
        return Err(Error::InvalidArgument("solve_flawed needs the flawed_local scheme"));
    }
    if grid.n_steps() < 2 {
        return Err(Error::InvalidArgument("the two-point scheme needs at least two steps"));
    }
    solve(problem, grid, config)
}

pub fn solve_pi<F: Rhs>(
    problem: &FdeProblem<F>,
    grid: &UniformGrid,
    config: &SchemeConfig,
) -> Result<Trajectory> {
    match config.kind {
        SchemeKind::PiRectExplicit | SchemeKind::PiTrapImplicit | SchemeKind::Abm => {
            solve(problem, grid, config)
        }
        _ => Err(Error::InvalidArgument("solve_pi needs a product-integration scheme")),
    }
}

pub fn solve_short_memory<F: Rhs>(
    problem: &FdeProblem<F>,
    grid: &UniformGrid,
    config: &SchemeConfig,
) -> Result<Trajectory> {
    if config.kind != SchemeKind::ShortMemory {
        return Err(Error::InvalidArgument("solve_short_memory needs the short_memory scheme"));
    }
    solve(problem, grid, config)
}

//! Problem definitions, grids and trajectories.

use alloc::string::String;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Fractional order `0 < alpha <= 1`.
///
/// `alpha = 1` is admitted only so that the schemes can be checked against
/// their classical counterparts; see [`Order::is_classical`].
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Order(f64);

impl Order {
    pub fn new(alpha: f64) -> Result<Self> {
        if alpha.is_finite() && alpha > 0.0 && alpha <= 1.0 {
            Ok(Self(alpha))
        } else {
            Err(Error::Domain { what: "fractional order", value: alpha })
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_classical(self) -> bool {
        self.0 == 1.0
    }
}

/// Right-hand side `f(t, y)` of `D^alpha y = f(t, y)`.
///
/// A NaN result at a finite state is an evaluation failure; an infinite
/// result is treated as overflow of a diverging solution.
pub trait Rhs {
    fn eval(&self, t: f64, y: f64) -> f64;
}

impl<F: Fn(f64, f64) -> f64> Rhs for F {
    fn eval(&self, t: f64, y: f64) -> f64 {
        self(t, y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearRhs {
    pub lambda: f64,
}

impl Rhs for LinearRhs {
    fn eval(&self, _t: f64, y: f64) -> f64 {
        self.lambda * y
    }
}

/// Caputo initial value problem `D^alpha y(t) = f(t, y(t))`, `y(0) = y0`.
#[derive(Debug, Clone)]
pub struct FdeProblem<F> {
    order: Order,
    rhs: F,
    y0: f64,
    label: String,
}

impl<F: Rhs> FdeProblem<F> {
    pub fn new(order: Order, rhs: F, y0: f64, label: impl Into<String>) -> Result<Self> {
        if !y0.is_finite() {
            return Err(Error::Domain { what: "initial value", value: y0 });
        }
        Ok(Self { order, rhs, y0, label: label.into() })
    }

    pub fn order(&self) -> Order {
        self.order
    }

    pub fn alpha(&self) -> f64 {
        self.order.value()
    }

    pub fn y0(&self) -> f64 {
        self.y0
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn rhs(&self) -> &F {
        &self.rhs
    }

    /// Evaluates the right-hand side, rejecting NaN at a finite state.
    pub fn eval(&self, t: f64, y: f64) -> Result<f64> {
        let f = self.rhs.eval(t, y);
        if f.is_nan() {
            Err(Error::RhsEvaluation { t, y })
        } else {
            Ok(f)
        }
    }
}

/// `D^alpha y = lambda y`, `y(0) = y0`, whose solution is
/// `y0 E_alpha(lambda t^alpha)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearTestProblem {
    order: Order,
    lambda: f64,
    y0: f64,
}

impl LinearTestProblem {
    pub fn new(alpha: f64, lambda: f64, y0: f64) -> Result<Self> {
        let order = Order::new(alpha)?;
        if !lambda.is_finite() {
            return Err(Error::Domain { what: "lambda", value: lambda });
        }
        if !y0.is_finite() {
            return Err(Error::Domain { what: "initial value", value: y0 });
        }
        Ok(Self { order, lambda, y0 })
    }

    pub fn order(&self) -> Order {
        self.order
    }

    pub fn alpha(&self) -> f64 {
        self.order.value()
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn y0(&self) -> f64 {
        self.y0
    }

    pub fn to_problem(&self) -> FdeProblem<LinearRhs> {
        FdeProblem {
            order: self.order,
            rhs: LinearRhs { lambda: self.lambda },
            y0: self.y0,
            label: String::from("linear"),
        }
    }
}

/// Uniform grid `t_n = n h`, `n = 0..=n_steps`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UniformGrid {
    h: f64,
    n_steps: usize,
}

impl UniformGrid {
    pub fn new(h: f64, n_steps: usize) -> Result<Self> {
        if !(h.is_finite() && h > 0.0) {
            return Err(Error::Domain { what: "step size", value: h });
        }
        if n_steps == 0 {
            return Err(Error::InvalidArgument("grid needs at least one step"));
        }
        Ok(Self { h, n_steps })
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn n_steps(&self) -> usize {
        self.n_steps
    }

    /// Number of nodes, `n_steps + 1`.
    pub fn len(&self) -> usize {
        self.n_steps + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `t_n`, always computed as the product `n * h`.
    pub fn node(&self, n: usize) -> f64 {
        n as f64 * self.h
    }

    pub fn t_max(&self) -> f64 {
        self.node(self.n_steps)
    }

    pub fn nodes(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.len()).map(|n| self.node(n))
    }
}

/// Grid with `floor(t_max / h + 1e-9)` steps.
pub fn make_grid(h: f64, t_max: f64) -> Result<UniformGrid> {
    if !(h.is_finite() && h > 0.0) {
        return Err(Error::Domain { what: "step size", value: h });
    }
    if !(t_max.is_finite() && t_max >= h) {
        return Err(Error::Domain { what: "final time", value: t_max });
    }
    let n = libm::floor(t_max / h + 1e-9) as usize;
    UniformGrid::new(h, n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrajectoryKind {
    Numeric,
    Exact,
}

/// Values on the nodes of a grid.
///
/// A numeric trajectory that overflowed is cut after its last finite value
/// and flagged as diverged, so `values().len()` may be less than
/// `grid().len()` in that case only.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    grid: UniformGrid,
    values: Vec<f64>,
    kind: TrajectoryKind,
    diverged: bool,
}

impl Trajectory {
    pub fn exact(grid: UniformGrid, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::InvalidArgument("exact trajectory must cover every node"));
        }
        Ok(Self { grid, values, kind: TrajectoryKind::Exact, diverged: false })
    }

    pub fn numeric(grid: UniformGrid, values: Vec<f64>, diverged: bool) -> Result<Self> {
        let complete = values.len() == grid.len();
        if values.is_empty() || values.len() > grid.len() || (!complete && !diverged) {
            return Err(Error::InvalidArgument("numeric trajectory length does not match grid"));
        }
        Ok(Self { grid, values, kind: TrajectoryKind::Numeric, diverged })
    }

    pub fn grid(&self) -> &UniformGrid {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn kind(&self) -> TrajectoryKind {
        self.kind
    }

    pub fn diverged(&self) -> bool {
        self.diverged
    }

    pub fn is_truncated(&self) -> bool {
        self.values.len() < self.grid.len()
    }

    /// `(t_n, value_n)` pairs for the available nodes.
    pub fn points(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.values.iter().enumerate().map(|(n, &v)| (self.grid.node(n), v))
    }
}

//! Exact reference solutions, error measurement and the checks used to
//! show that the two-point local scheme does not converge.

use alloc::vec::Vec;
use core::ops::Range;

use crate::mittag_leffler::{gamma, ml, MlParams};
use crate::problem::{make_grid, LinearTestProblem, Rhs, Trajectory, UniformGrid};
use crate::schemes::{solve, SchemeConfig, SchemeKind, Stepper};
use crate::{Error, Result};

/// A numeric run counts as diverged once its final error exceeds this
/// multiple of the largest exact value.
pub const DIVERGENCE_FACTOR: f64 = 10.0;

/// `y0 E_alpha(lambda t_n^alpha)` on every node.
pub fn exact_solution(problem: &LinearTestProblem, grid: &UniformGrid) -> Result<Trajectory> {
    let params = MlParams::from_order(problem.order());
    let values = grid
        .nodes()
        .map(|t| {
            let z = problem.lambda() * libm::pow(t, problem.alpha());
            Ok(problem.y0() * ml(z, &params)?)
        })
        .collect::<Result<Vec<_>>>()?;
    Trajectory::exact(*grid, values)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ErrorReport {
    pub grid: UniformGrid,
    /// `|y_n - y(t_n)|` for every node the numeric trajectory reached.
    pub abs_errors: Vec<f64>,
    /// Largest finite entry of `abs_errors`.
    pub max_error: f64,
    /// Error at the last node the numeric trajectory reached.
    pub final_error: f64,
    pub diverged: bool,
}

pub fn error_report(numeric: &Trajectory, exact: &Trajectory) -> Result<ErrorReport> {
    if numeric.grid() != exact.grid() {
        return Err(Error::GridMismatch);
    }
    let abs_errors: Vec<f64> = numeric
        .values()
        .iter()
        .zip(exact.values())
        .map(|(y, e)| (y - e).abs())
        .collect();
    let max_error = abs_errors
        .iter()
        .copied()
        .filter(|e| e.is_finite())
        .fold(0.0, f64::max);
    let final_error = abs_errors.last().copied().unwrap_or(0.0);
    let max_exact = exact.values().iter().fold(0.0_f64, |m, v| m.max(v.abs()));
    let diverged = numeric.diverged()
        || abs_errors.iter().any(|e| !e.is_finite())
        || final_error > DIVERGENCE_FACTOR * max_exact;
    Ok(ErrorReport { grid: *numeric.grid(), abs_errors, max_error, final_error, diverged })
}

/// Empirical order `log2(err_coarse / err_fine)` for a halved step.
pub fn eoc(err_coarse: f64, err_fine: f64) -> Result<f64> {
    for e in [err_coarse, err_fine] {
        if !(e.is_finite() && e > 0.0) {
            return Err(Error::Domain { what: "error for order estimate", value: e });
        }
    }
    Ok(libm::log2(err_coarse / err_fine))
}

/// One-step defect `|y(t_{n+1}) - step(exact history up to t_n)|`.
///
/// The PI rules see the whole exact history; the two-point scheme only
/// reads `y(t_{n-1})` and `y(t_n)`.
pub fn local_truncation(
    config: &SchemeConfig,
    problem: &LinearTestProblem,
    exact: &Trajectory,
    n: usize,
) -> Result<f64> {
    let grid = exact.grid();
    if n == 0 || n + 1 >= grid.len() {
        return Err(Error::InvalidArgument("local truncation needs 1 <= n < n_steps"));
    }
    let fde = problem.to_problem();
    let stepper = Stepper::new(&fde, *grid, *config)?;
    let ys = &exact.values()[..=n];
    let fs: Vec<f64> = ys.iter().enumerate().map(|(j, &y)| fde.rhs().eval(grid.node(j), y)).collect();
    Ok((exact.values()[n + 1] - stepper.advance(ys, &fs)?).abs())
}

/// `(t_n, tau_n)` for `n = 1..n_steps`.
pub fn truncation_profile(
    config: &SchemeConfig,
    problem: &LinearTestProblem,
    exact: &Trajectory,
) -> Result<Vec<(f64, f64)>> {
    let grid = exact.grid();
    (1..grid.n_steps())
        .map(|n| Ok((grid.node(n), local_truncation(config, problem, exact, n)?)))
        .collect()
}

/// Least-squares slope of `log vals` against `log ts` over `window`.
pub fn fit_growth_exponent(ts: &[f64], vals: &[f64], window: Range<usize>) -> Result<f64> {
    if ts.len() != vals.len() || window.end > ts.len() || window.start > window.end {
        return Err(Error::InvalidArgument("window outside the data"));
    }
    if window.len() < 3 {
        return Err(Error::InvalidArgument("growth fit needs at least three points"));
    }
    let mut xs = Vec::with_capacity(window.len());
    let mut ys = Vec::with_capacity(window.len());
    for i in window {
        let (t, v) = (ts[i], vals[i]);
        if !(t > 0.0 && t.is_finite()) {
            return Err(Error::Domain { what: "growth fit abscissa", value: t });
        }
        if !(v > 0.0 && v.is_finite()) {
            return Err(Error::Domain { what: "growth fit value", value: v });
        }
        xs.push(libm::log(t));
        ys.push(libm::log(v));
    }
    let m = xs.len() as f64;
    let x_mean = xs.iter().sum::<f64>() / m;
    let y_mean = ys.iter().sum::<f64>() / m;
    let (sxy, sxx) = xs.iter().zip(&ys).fold((0.0, 0.0), |(sxy, sxx), (x, y)| {
        let dx = x - x_mean;
        (sxy + dx * (y - y_mean), sxx + dx * dx)
    });
    if sxx == 0.0 {
        return Err(Error::InvalidArgument("growth fit needs distinct abscissae"));
    }
    Ok(sxy / sxx)
}

/// Last half of the longest run of positive finite values ending at the
/// last such value.
pub fn default_growth_window(vals: &[f64]) -> Range<usize> {
    let usable = |v: &f64| v.is_finite() && *v > 0.0;
    let Some(end) = vals.iter().rposition(usable).map(|i| i + 1) else {
        return 0..0;
    };
    let start = vals[..end].iter().rposition(|v| !usable(v)).map_or(0, |i| i + 1);
    (start + (end - start) / 2)..end
}

/// The third-order error bound claimed for the two-point scheme,
/// `h^(3+a) M ((n+1)^a + n^a) / (12 Gamma(a+1))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClaimedBound {
    pub alpha: f64,
    pub h: f64,
    /// Bound on `|f|` along the exact solution.
    pub m: f64,
}

impl ClaimedBound {
    pub fn new(alpha: f64, h: f64, m: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(Error::Domain { what: "fractional order", value: alpha });
        }
        if !(h.is_finite() && h > 0.0) {
            return Err(Error::Domain { what: "step size", value: h });
        }
        if !(m.is_finite() && m >= 0.0) {
            return Err(Error::Domain { what: "bound M", value: m });
        }
        Ok(Self { alpha, h, m })
    }

    /// `M = max_n |f(t_n, y(t_n))|` over the grid.
    pub fn along_exact(problem: &LinearTestProblem, exact: &Trajectory) -> Result<Self> {
        let m = exact
            .values()
            .iter()
            .fold(0.0_f64, |m, y| m.max((problem.lambda() * y).abs()));
        Self::new(problem.alpha(), exact.grid().h(), m)
    }

    pub fn value_at(&self, n: usize) -> Result<f64> {
        claimed_bound_value(self, n)
    }
}

pub fn claimed_bound_value(cb: &ClaimedBound, n: usize) -> Result<f64> {
    let a = cb.alpha;
    let nf = n as f64;
    let growth = libm::pow(nf + 1.0, a) + libm::pow(nf, a);
    Ok(libm::pow(cb.h, 3.0 + a) * cb.m * growth / (12.0 * gamma(a + 1.0)?))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Violation {
    pub n: usize,
    pub t: f64,
    pub error: f64,
    pub bound: f64,
    /// `error / bound`
    pub ratio: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Refutation {
    pub bound: ClaimedBound,
    pub report: ErrorReport,
    /// Smallest `n` with realized error above the claimed bound.
    pub first_violation: Option<Violation>,
    /// Node with the largest error-to-bound ratio.
    pub worst_violation: Option<Violation>,
}

impl Refutation {
    pub fn refuted(&self) -> bool {
        self.first_violation.is_some()
    }
}

/// Runs the two-point scheme (default bootstrap) and compares its realized
/// errors with the claimed bound node by node.
pub fn refute_theorem(problem: &LinearTestProblem, h: f64, t_max: f64) -> Result<Refutation> {
    let grid = make_grid(h, t_max)?;
    let exact = exact_solution(problem, &grid)?;
    let numeric = solve(&problem.to_problem(), &grid, &SchemeConfig::new(SchemeKind::FlawedLocal))?;
    let report = error_report(&numeric, &exact)?;
    let bound = ClaimedBound::along_exact(problem, &exact)?;

    let mut first_violation = None;
    let mut worst_violation: Option<Violation> = None;
    for (n, &error) in report.abs_errors.iter().enumerate() {
        let b = bound.value_at(n)?;
        if error.is_finite() && error > b {
            let v = Violation { n, t: grid.node(n), error, bound: b, ratio: error / b };
            first_violation.get_or_insert(v);
            if worst_violation.is_none_or(|w| v.ratio > w.ratio) {
                worst_violation = Some(v);
            }
        }
    }
    Ok(Refutation { bound, report, first_violation, worst_violation })
}

//! Scalar solver for the corrector equation `y = c + w f(t, y)`.

use crate::problem::{FdeProblem, Rhs};
use crate::Result;

const MIN_DAMPING: f64 = 1.0 / 16.0;
const SLOW_CONTRACTION: f64 = 0.5;

fn converged(step: f64, y: f64, tol: f64) -> bool {
    step.abs() <= tol * y.abs().max(1.0)
}

/// Damped fixed-point iteration, falling back to the secant method on
/// `g(y) = y - c - w f(t, y)` when the iteration contracts slowly or damping
/// stops producing contraction.
/// `Ok(None)` means the iteration budget ran out.
pub(crate) fn solve_corrector<F: Rhs>(
    problem: &FdeProblem<F>,
    t: f64,
    c: f64,
    w: f64,
    guess: f64,
    tol: f64,
    max_iter: usize,
) -> Result<Option<f64>> {
    let residual = |y: f64| -> Result<f64> { Ok(y - c - w * problem.eval(t, y)?) };

    let mut theta = 1.0;
    let mut y = guess;
    let mut g = residual(y)?;
    let mut last_step = f64::INFINITY;
    let mut iter = 0;
    while iter < max_iter {
        iter += 1;
        let step = -theta * g;
        if !step.is_finite() {
            return Ok(None);
        }
        let y_new = y + step;
        let g_new = residual(y_new)?;
        if converged(step, y_new, tol) {
            return Ok(Some(y_new));
        }
        if step.abs() >= last_step {
            theta *= 0.5;
            if theta < MIN_DAMPING {
                return secant(residual, y, g, y_new, g_new, tol, max_iter - iter);
            }
        } else if step.abs() > SLOW_CONTRACTION * last_step {
            return secant(residual, y, g, y_new, g_new, tol, max_iter - iter);
        }
        last_step = step.abs();
        y = y_new;
        g = g_new;
    }
    Ok(None)
}

fn secant(
    residual: impl Fn(f64) -> Result<f64>,
    mut y0: f64,
    mut g0: f64,
    mut y1: f64,
    mut g1: f64,
    tol: f64,
    budget: usize,
) -> Result<Option<f64>> {
    for _ in 0..budget {
        let slope = (g1 - g0) / (y1 - y0);
        if !slope.is_finite() || slope == 0.0 {
            return Ok(None);
        }
        let step = -g1 / slope;
        let y2 = y1 + step;
        if !y2.is_finite() {
            return Ok(None);
        }
        if converged(step, y2, tol) {
            return Ok(Some(y2));
        }
        (y0, g0) = (y1, g1);
        y1 = y2;
        g1 = residual(y2)?;
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problem::Order;

    fn problem(f: impl Fn(f64, f64) -> f64) -> FdeProblem<impl Fn(f64, f64) -> f64> {
        FdeProblem::new(Order::new(0.5).unwrap(), f, 1.0, "test").unwrap()
    }

    #[test]
    fn contracting_linear_equation() {
        let p = problem(|_, y| -2.0 * y);
        // y = 1 + 0.1 (-2 y)  =>  y = 1 / 1.2
        let y = solve_corrector(&p, 0.0, 1.0, 0.1, 0.0, 1e-14, 100).unwrap().unwrap();
        assert!((y - 1.0 / 1.2).abs() < 1e-13);
    }

    #[test]
    fn moderately_stiff_equation_converges_with_damping() {
        let p = problem(|_, y| -50.0 * y);
        let y = solve_corrector(&p, 0.0, 1.0, 0.1, 0.0, 1e-13, 50).unwrap().unwrap();
        assert!((y - 1.0 / 6.0).abs() < 1e-12);
    }

    #[test]
    fn stiff_equation_falls_back_to_secant() {
        // |w lambda| = 50 needs damping below 1/16
        let p = problem(|_, y| -500.0 * y);
        let y = solve_corrector(&p, 0.0, 1.0, 0.1, 0.0, 1e-13, 50).unwrap().unwrap();
        assert!((y - 1.0 / 51.0).abs() < 1e-12);
    }

    #[test]
    fn nonlinear_equation() {
        let p = problem(|_, y: f64| -y * y * y);
        let y = solve_corrector(&p, 0.0, 1.0, 0.5, 1.0, 1e-13, 50).unwrap().unwrap();
        assert!((y + 0.5 * y * y * y - 1.0).abs() < 1e-12);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let p = problem(|_, y| -2.0 * y);
        assert_eq!(solve_corrector(&p, 0.0, 1.0, 0.1, 0.0, 1e-14, 2).unwrap(), None);
    }
}

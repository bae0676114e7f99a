//! Checks against extended-precision reference values (see
//! `fixtures/gen_fixtures.py`) and against independent quadrature.

#[path = "fixtures/oracle.rs"]
mod fixtures;

use fde_core::analysis::{claimed_bound_value, exact_solution, ClaimedBound};
use fde_core::{
    flawed_step, gamma, make_grid, ml, ConvolutionWeights, LinearTestProblem, MlParams, Order,
};

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

#[test]
fn gamma_matches_reference_table() {
    for (x, expect) in fixtures::GAMMA_TABLE {
        let got = gamma(x).unwrap();
        assert!(rel(got, expect) <= 1e-13, "gamma({x}) = {got}, want {expect}");
    }
}

#[test]
fn gamma_relative_accuracy_on_grid() {
    // libm's tgamma is an independent implementation; both should be within
    // a few ulp of the truth, so 1e-13 between them bounds either error.
    for i in 0..=499 {
        let x = 0.1 + i as f64 * 0.1;
        assert!(rel(gamma(x).unwrap(), libm::tgamma(x)) <= 1e-13, "x={x}");
    }
}

#[test]
fn ml_at_minus_two() {
    let got = ml(-2.0, &MlParams::new(0.8).unwrap()).unwrap();
    assert!(rel(got, fixtures::ML_0P8_AT_M2) <= 1e-12, "{got}");
}

#[test]
fn ml_reference_table() {
    for (alpha, z, expect) in fixtures::ML_TABLE {
        let got = ml(z, &MlParams::new(alpha).unwrap()).unwrap();
        // moderate arguments are series territory and nearly exact; around the
        // switch point the accepted regime guarantees 1e-6 by construction
        let tol = if z.abs() < 7.0 { 1e-9 } else { 1e-6 };
        assert!(rel(got, expect) <= tol, "E_{alpha}({z}) = {got}, want {expect}");
    }
}

#[test]
fn exact_solution_at_unit_time() {
    let p = LinearTestProblem::new(0.8, -2.0, 2.0).unwrap();
    let ex = exact_solution(&p, &make_grid(0.25, 1.0).unwrap()).unwrap();
    assert!(rel(ex.values()[4], fixtures::EXACT_Y_AT_T1) <= 1e-12);
}

#[test]
fn flawed_step_from_exact_history() {
    let (lambda, h) = (-2.0, 0.0625);
    let got = flawed_step(
        0.8,
        h,
        1,
        lambda * fixtures::FLAWED_Y0,
        lambda * fixtures::FLAWED_Y1,
        fixtures::FLAWED_Y1,
    )
    .unwrap();
    assert!(rel(got, fixtures::FLAWED_STEP_N1) <= 1e-13, "{got}");
}

#[test]
fn weights_match_reference_values() {
    let w = ConvolutionWeights::new(Order::new(0.8).unwrap(), 4).unwrap();
    for k in 0..5 {
        assert!(rel(w.rect()[k], fixtures::RECT_0P8[k]) <= 1e-14, "b_{k}");
        assert!(rel(w.trap()[k], fixtures::TRAP_0P8[k]) <= 1e-14, "a_{k}");
        assert!(rel(w.trap_start(k), fixtures::TRAP_START_0P8[k]) <= 1e-14, "start_{k}");
    }
}

#[test]
fn claimed_bound_first_node() {
    let cb = ClaimedBound::new(0.8, 0.0625, 4.0).unwrap();
    assert!(rel(claimed_bound_value(&cb, 0).unwrap(), fixtures::CLAIMED_BOUND_N0) <= 1e-14);
}

/// Adaptive Simpson on [a, b].
fn simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    #[allow(clippy::too_many_arguments)]
    fn rec(f: &dyn Fn(f64) -> f64, a: f64, b: f64, fa: f64, fm: f64, fb: f64, whole: f64, tol: f64, depth: u32) -> f64 {
        let m = 0.5 * (a + b);
        let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
        let (flm, frm) = (f(lm), f(rm));
        let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        if depth == 0 || (left + right - whole).abs() <= 15.0 * tol {
            return left + right + (left + right - whole) / 15.0;
        }
        rec(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1)
            + rec(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1)
    }
    let (fa, fm, fb) = (f(a), f(0.5 * (a + b)), f(b));
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    rec(f, a, b, fa, fm, fb, whole, tol, 50)
}

/// `(1/Gamma(a)) int_lo^hi (T - s)^(a-1) phi(s) ds` with unit step, after the
/// substitution `u = (T - s)^a` that removes the endpoint singularity.
fn kernel_integral(alpha: f64, big_t: f64, lo: f64, hi: f64, phi: &dyn Fn(f64) -> f64) -> f64 {
    let u_lo = (big_t - hi).powf(alpha);
    let u_hi = (big_t - lo).powf(alpha);
    let g = |u: f64| phi(big_t - u.powf(1.0 / alpha));
    simpson(&g, u_lo, u_hi, 1e-14) / (alpha * libm::tgamma(alpha))
}

#[test]
fn trap_weights_match_quadrature_of_hat_functions() {
    // With h = 1, the weight of f_j in the trapezoidal rule at t_{n+1} is the
    // kernel integral of the hat function centred at j.
    for alpha in [0.3, 0.5, 0.8] {
        let n = 6usize;
        let big_t = (n + 1) as f64;
        let w = ConvolutionWeights::new(Order::new(alpha).unwrap(), n + 1).unwrap();
        for j in 1..=n {
            let c = j as f64;
            let up = |s: f64| s - (c - 1.0);
            let down = |s: f64| (c + 1.0) - s;
            let q = kernel_integral(alpha, big_t, c - 1.0, c, &up)
                + kernel_integral(alpha, big_t, c, c + 1.0, &down);
            let a = w.trap()[n + 1 - j];
            assert!((q - a).abs() <= 1e-10, "alpha={alpha} j={j}: {q} vs {a}");
        }
        // a_0: rising half-hat on the last subinterval
        let q0 = kernel_integral(alpha, big_t, n as f64, big_t, &|s| s - n as f64);
        assert!((q0 - w.trap()[0]).abs() <= 1e-10);
        // start weight: falling half-hat on the first subinterval
        let qs = kernel_integral(alpha, big_t, 0.0, 1.0, &|s| 1.0 - s);
        assert!((qs - w.trap_start(n)).abs() <= 1e-10);
    }
}

#[test]
fn rect_weights_match_quadrature_of_indicators() {
    for alpha in [0.3, 0.8] {
        let n = 5usize;
        let big_t = (n + 1) as f64;
        let w = ConvolutionWeights::new(Order::new(alpha).unwrap(), n).unwrap();
        for j in 0..=n {
            let q = kernel_integral(alpha, big_t, j as f64, j as f64 + 1.0, &|_| 1.0);
            assert!((q - w.rect()[n - j]).abs() <= 1e-10);
        }
    }
}

use fde_core::analysis::{eoc, fit_growth_exponent};
use fde_core::{
    gamma, make_grid, ml, solve, ConvolutionWeights, LinearTestProblem, MlParams, Order,
    SchemeConfig, SchemeKind,
};
use proptest::prelude::*;

fn any_scheme() -> impl Strategy<Value = SchemeKind> {
    prop_oneof![
        Just(SchemeKind::FlawedLocal),
        Just(SchemeKind::PiRectExplicit),
        Just(SchemeKind::PiTrapImplicit),
        Just(SchemeKind::Abm),
        Just(SchemeKind::ShortMemory),
    ]
}

#[test]
fn decaying_ml_is_positive_and_monotone_on_a_grid() {
    for alpha in [0.2, 0.5, 0.8, 0.9] {
        let p = MlParams::new(alpha).unwrap();
        let mut prev = 1.0;
        for i in 1..=160 {
            let v = ml(-0.25 * i as f64, &p).unwrap();
            assert!(v > 0.0 && v < prev, "alpha={alpha} x={}", 0.25 * i as f64);
            prev = v;
        }
    }
}

proptest! {
    #[test]
    fn gamma_recurrence(x in 0.1f64..30.0) {
        let g1 = gamma(x + 1.0).unwrap();
        prop_assert!((g1 - x * gamma(x).unwrap()).abs() <= 1e-12 * g1);
    }

    #[test]
    fn decaying_ml_is_monotone(alpha in 0.05f64..0.99, x in 0.01f64..40.0, dx in 0.01f64..5.0) {
        let p = MlParams::new(alpha).unwrap();
        let a = ml(-x, &p).unwrap();
        let b = ml(-x - dx, &p).unwrap();
        prop_assert!(b > 0.0 && b < a && a < 1.0);
    }

    #[test]
    fn eoc_is_antisymmetric(a in 1e-12f64..1.0, b in 1e-12f64..1.0) {
        let (p, q) = (eoc(a, b).unwrap(), eoc(b, a).unwrap());
        prop_assert!((p + q).abs() <= 1e-12 * p.abs().max(1.0));
    }

    #[test]
    fn growth_fit_recovers_power_laws(c in 1e-6f64..1e6, p in -3.0f64..5.0, n in 5usize..200) {
        let ts: Vec<f64> = (1..=n).map(|k| k as f64 / n as f64 * 4.0).collect();
        let vs: Vec<f64> = ts.iter().map(|t| c * t.powf(p)).collect();
        let fitted = fit_growth_exponent(&ts, &vs, 0..n).unwrap();
        prop_assert!((fitted - p).abs() <= 1e-9);
    }

    #[test]
    fn weights_are_positive(alpha in 0.01f64..=1.0, n in 1usize..200) {
        let w = ConvolutionWeights::new(Order::new(alpha).unwrap(), n).unwrap();
        prop_assert!(w.rect().iter().chain(w.trap()).all(|&v| v > 0.0 && v.is_finite()));
        prop_assert!((1..=n).all(|k| w.trap_start(k) > 0.0));
    }

    #[test]
    fn zero_rhs_keeps_the_initial_value(
        kind in any_scheme(),
        alpha in 0.05f64..=1.0,
        y0 in -10.0f64..10.0,
        steps in 2usize..60,
    ) {
        let p = LinearTestProblem::new(alpha, 0.0, y0).unwrap();
        let grid = make_grid(0.1, 0.1 * steps as f64).unwrap();
        let y = solve(&p.to_problem(), &grid, &SchemeConfig::new(kind)).unwrap();
        prop_assert!(y.values().iter().all(|&v| v == y0));
    }

    #[test]
    fn runs_are_deterministic(kind in any_scheme(), alpha in 0.1f64..=1.0, lambda in -5.0f64..1.0) {
        let p = LinearTestProblem::new(alpha, lambda, 1.5).unwrap();
        let grid = make_grid(0.05, 2.0).unwrap();
        let a = solve(&p.to_problem(), &grid, &SchemeConfig::new(kind)).unwrap();
        let b = solve(&p.to_problem(), &grid, &SchemeConfig::new(kind)).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn explicit_schemes_are_linear_in_y0(
        kind in prop_oneof![Just(SchemeKind::PiRectExplicit), Just(SchemeKind::Abm), Just(SchemeKind::FlawedLocal)],
        alpha in 0.1f64..=1.0,
        scale in -4.0f64..4.0,
    ) {
        let grid = make_grid(0.1, 2.0).unwrap();
        let run = |y0: f64| {
            let p = LinearTestProblem::new(alpha, -1.0, y0).unwrap();
            solve(&p.to_problem(), &grid, &SchemeConfig::new(kind).with_bootstrap(fde_core::Bootstrap::PiRectOneStep)).unwrap()
        };
        let (one, scaled) = (run(1.0), run(scale));
        for (a, b) in one.values().iter().zip(scaled.values()) {
            prop_assert!((scale * a - b).abs() <= 1e-12 * (1.0 + b.abs()));
        }
    }
}

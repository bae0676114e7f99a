//! At integer order the fractional rules must collapse to their classical
//! counterparts.

use fde_core::{flawed_step, ConvolutionWeights, Order};

#[test]
fn two_point_scheme_is_ab2_at_order_one() {
    for (h, n) in [(0.0625, 1), (0.1, 5), (0.01, 300), (1.0, 2)] {
        for (f_prev, f_cur) in [(0.5, 1.0), (0.1, 7.0), (-3.0, 2.5)] {
            let y = 1.25;
            let got = flawed_step(1.0, h, n, f_prev, f_cur, y).unwrap();
            let ab2 = y + h * (1.5 * f_cur - 0.5 * f_prev);
            assert!((got - ab2).abs() <= 1e-12 * ab2.abs().max(1.0), "h={h} n={n}: {got} vs {ab2}");
        }
    }
}

#[test]
fn trapezoid_weights_at_order_one() {
    let w = ConvolutionWeights::new(Order::new(1.0).unwrap(), 4096).unwrap();
    assert!((w.trap()[0] - 0.5).abs() <= 1e-15);
    for (k, &a) in w.trap().iter().enumerate().skip(1) {
        assert!((a - 1.0).abs() <= 1e-15, "a_{k} = {a}");
    }
    for n in [1, 2, 17, 4095] {
        assert!((w.trap_start(n) - 0.5).abs() <= 1e-15, "start_{n}");
    }
    for &b in w.rect() {
        assert!((b - 1.0).abs() <= 1e-15);
    }
}

#[test]
fn rectangle_weights_telescope() {
    for alpha in [0.1, 0.3, 0.5, 0.8, 0.95, 1.0] {
        let w = ConvolutionWeights::new(Order::new(alpha).unwrap(), 4096).unwrap();
        let g = libm::tgamma(alpha + 1.0);
        let mut sum = 0.0;
        for (k, &b) in w.rect().iter().enumerate() {
            sum += b;
            let expect = ((k + 1) as f64).powf(alpha) / g;
            assert!((sum - expect).abs() <= 1e-12 * expect, "alpha={alpha} n={k}");
        }
    }
}

#[test]
fn weights_positive_and_decreasing() {
    for alpha in [0.2, 0.5, 0.8] {
        let w = ConvolutionWeights::new(Order::new(alpha).unwrap(), 4096).unwrap();
        assert!(w.rect().windows(2).all(|p| p[1] > 0.0 && p[1] < p[0]));
        assert!(w.trap()[1..].windows(2).all(|p| p[1] > 0.0 && p[1] < p[0]));
    }
}

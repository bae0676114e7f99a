//! Product-integration weights for the piecewise constant and piecewise
//! linear rules, scaled so that the history sums are multiplied by `h^alpha`.
//!
//! rectangular:  b_k = ((k+1)^a - k^a) / Gamma(a+1)
//! trapezoidal:  a_0 = 1 / Gamma(a+2)
//!               a_k = ((k+1)^(a+1) - 2 k^(a+1) + (k-1)^(a+1)) / Gamma(a+2),  k >= 1
//! start weight: s_n = (n^(a+1) - (n-a)(n+1)^a) / Gamma(a+2)   (weight of f_0 at t_{n+1})
//!
//! The differences cancel badly for large k, so past `DIRECT_LIMIT` they are
//! rewritten in terms of x = 1/k: `expm1(a log1p(x))` for the first
//! difference and sign-definite binomial series for the other two.

use alloc::vec::Vec;

use crate::mittag_leffler::gamma;
use crate::problem::Order;
use crate::Result;

const DIRECT_LIMIT: usize = 16;

#[derive(Debug, Clone, PartialEq)]
pub struct ConvolutionWeights {
    alpha: f64,
    rect: Vec<f64>,
    trap: Vec<f64>,
    trap_start: Vec<f64>,
}

impl ConvolutionWeights {
    /// Tabulates `b_0..=b_n`, `a_0..=a_n` and `s_0..=s_n`.
    pub fn new(order: Order, n: usize) -> Result<Self> {
        let alpha = order.value();
        let g1 = gamma(alpha + 1.0)?;
        let g2 = gamma(alpha + 2.0)?;
        Ok(Self {
            alpha,
            rect: (0..=n).map(|k| rect_difference(alpha, k) / g1).collect(),
            trap: (0..=n).map(|k| trap_difference(alpha, k) / g2).collect(),
            trap_start: (0..=n).map(|k| start_difference(alpha, k) / g2).collect(),
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Highest tabulated index.
    pub fn n(&self) -> usize {
        self.rect.len() - 1
    }

    /// Rectangular weights `b_k`.
    pub fn rect(&self) -> &[f64] {
        &self.rect
    }

    /// Trapezoidal weights `a_k`.
    pub fn trap(&self) -> &[f64] {
        &self.trap
    }

    /// Weight of `f(t_0, y_0)` in the trapezoidal rule at `t_{n+1}`.
    pub fn trap_start(&self, n: usize) -> f64 {
        self.trap_start[n]
    }
}

fn rect_difference(alpha: f64, k: usize) -> f64 {
    let kf = k as f64;
    if k < DIRECT_LIMIT {
        libm::pow(kf + 1.0, alpha) - libm::pow(kf, alpha)
    } else {
        libm::pow(kf, alpha) * libm::expm1(alpha * libm::log1p(1.0 / kf))
    }
}

fn trap_difference(alpha: f64, k: usize) -> f64 {
    let p = alpha + 1.0;
    let kf = k as f64;
    match k {
        0 => 1.0,
        1 => libm::pow(2.0, p) - 2.0,
        _ if k < DIRECT_LIMIT => {
            libm::pow(kf + 1.0, p) - 2.0 * libm::pow(kf, p) + libm::pow(kf - 1.0, p)
        }
        _ => libm::pow(kf, p) * even_binomial_excess(p, kf),
    }
}

fn start_difference(alpha: f64, n: usize) -> f64 {
    let p = alpha + 1.0;
    let nf = n as f64;
    if n < DIRECT_LIMIT {
        libm::pow(nf, p) - (nf - alpha) * libm::pow(nf + 1.0, alpha)
    } else {
        libm::pow(nf, p) * start_series(alpha, nf)
    }
}

/// `(1+x)^p + (1-x)^p - 2 = 2 sum_{j>=1} C(p, 2j) x^(2j)` with `x = 1/k`.
/// For `1 < p <= 2` every term is non-negative.
fn even_binomial_excess(p: f64, k: f64) -> f64 {
    let x2 = 1.0 / (k * k);
    let mut coeff = 1.0;
    let mut power = 1.0;
    let mut sum = 0.0;
    let mut i = 0.0;
    while i < 400.0 {
        coeff *= (p - i) / (i + 1.0) * (p - i - 1.0) / (i + 2.0);
        i += 2.0;
        power *= x2;
        let term = coeff * power;
        sum += term;
        if term.abs() <= 0.5 * f64::EPSILON * sum.abs() {
            break;
        }
    }
    2.0 * sum
}

/// `1 - (1 - a x)(1 + x)^a = sum_{i>=2} (a C(a, i-1) - C(a, i)) x^i` with `x = 1/n`.
fn start_series(alpha: f64, n: f64) -> f64 {
    let x = 1.0 / n;
    let mut prev = alpha;
    let mut power = 1.0 / (n * n);
    let mut sum = 0.0;
    let mut i = 2.0;
    while i < 400.0 {
        let c = prev * (alpha - (i - 1.0)) / i;
        let term = (alpha * prev - c) * power;
        sum += term;
        if term.abs() <= 0.5 * f64::EPSILON * sum.abs() {
            break;
        }
        prev = c;
        power *= x;
        i += 1.0;
    }
    sum
}

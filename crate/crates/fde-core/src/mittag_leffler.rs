//! Gamma and the one-parameter Mittag-Leffler function on the real line.
//!
//! `E_a(z) = sum_k z^k / Gamma(a k + 1)` is evaluated by its power series
//! for moderate arguments and by the algebraic asymptotic expansion
//! `E_a(z) ~ -sum_{k>=1} z^-k / Gamma(1 - a k)` for large negative ones.
//! Both regimes report an error estimate; a regime is only accepted when
//! that estimate is small relative to the result, and the other regime is
//! tried before giving up with [`Error::NonConvergence`].

use crate::problem::Order;
use crate::sum::CompensatedSum;
use crate::{Error, Result};
use core::f64::consts::PI;

/*
 * Lanczos approximation with g = 6.024680040776729583740234375 and
 * N = 13, in the rational form used by Boost and CPython:
 *
 *                        (x - 0.5)         S(x)
 *   Gamma(x) = (x + g - 0.5)         *  ----------------
 *                                       exp(x + g - 0.5)
 *
 * with S(x) = num(x) / den(x) evaluated in Horner form.
 */
const LANCZOS_N: usize = 13;
// exactly representable; written out in full
#[allow(clippy::excessive_precision)]
const LANCZOS_G: f64 = 6.024680040776729583740234375;
#[allow(clippy::excessive_precision)]
const LANCZOS_G_MINUS_HALF: f64 = 5.524680040776729583740234375;
#[allow(clippy::excessive_precision)]
const LANCZOS_NUM: [f64; LANCZOS_N] = [
    23531376880.410759688572007674451636754734846804940,
    42919803642.649098768957899047001988850926355848959,
    35711959237.355668049440185451547166705960488635843,
    17921034426.037209699919755754458931112671403265390,
    6039542586.352028005064291644307297921069938842070,
    1439720407.311721673663223072794912393948548578677,
    248874557.8620541565114603864132294232163212512780,
    31426415.58540019438061423162831820536287468498764,
    2876370.628935372441225409051620849613599114537877,
    186056.2653952234950402949897160456992822078423633,
    8071.672002365816210638002902272250613821851632502,
    210.8242777515793458725097339207133627116696958029,
    2.506628274631000270164908177133837338626431079341,
];
const LANCZOS_DEN: [f64; LANCZOS_N] = [
    0.0,
    39916800.0,
    120543840.0,
    150917976.0,
    105258076.0,
    45995730.0,
    13339535.0,
    2637558.0,
    357423.0,
    32670.0,
    1925.0,
    66.0,
    1.0,
];

// Gamma(n) for n = 1..=23 is exactly representable.
const FACTORIALS: [f64; 23] = [
    1.0,
    1.0,
    2.0,
    6.0,
    24.0,
    120.0,
    720.0,
    5040.0,
    40320.0,
    362880.0,
    3628800.0,
    39916800.0,
    479001600.0,
    6227020800.0,
    87178291200.0,
    1307674368000.0,
    20922789888000.0,
    355687428096000.0,
    6402373705728000.0,
    121645100408832000.0,
    2432902008176640000.0,
    51090942171709440000.0,
    1124000727777607680000.0,
];

// Above this, Gamma overflows f64.
const GAMMA_OVERFLOW: f64 = 171.624_376_956_302_7;

fn lanczos_sum(x: f64) -> f64 {
    let mut num = 0.0;
    let mut den = 0.0;
    if x < 5.0 {
        for i in (0..LANCZOS_N).rev() {
            num = num * x + LANCZOS_NUM[i];
            den = den * x + LANCZOS_DEN[i];
        }
    } else {
        for i in 0..LANCZOS_N {
            num = num / x + LANCZOS_NUM[i];
            den = den / x + LANCZOS_DEN[i];
        }
    }
    num / den
}

fn check_positive(x: f64) -> Result<()> {
    if x.is_finite() && x > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain { what: "gamma argument", value: x })
    }
}

/// Gamma function for positive finite arguments.
///
/// Returns `+inf` once the result overflows (x > 171.62).
pub fn gamma(x: f64) -> Result<f64> {
    check_positive(x)?;
    if x == libm::floor(x) && x <= FACTORIALS.len() as f64 {
        return Ok(FACTORIALS[x as usize - 1]);
    }
    if x < 1e-20 {
        return Ok(1.0 / x);
    }
    if x > GAMMA_OVERFLOW {
        return Ok(f64::INFINITY);
    }
    let y = x + LANCZOS_G_MINUS_HALF;
    // Correction for the rounding error in y, so that pow(y, ...) is applied
    // to the exact x + g - 0.5.
    let z = if x > LANCZOS_G_MINUS_HALF {
        (y - x) - LANCZOS_G_MINUS_HALF
    } else {
        (y - LANCZOS_G_MINUS_HALF) - x
    };
    let z = z * LANCZOS_G / y;
    let mut r = lanczos_sum(x) / libm::exp(y);
    r += z * r;
    if x < 140.0 {
        r *= libm::pow(y, x - 0.5);
    } else {
        let sqrtpow = libm::pow(y, x / 2.0 - 0.25);
        r *= sqrtpow;
        r *= sqrtpow;
    }
    Ok(r)
}

/// Natural logarithm of [`gamma`], finite for every positive argument.
pub fn ln_gamma(x: f64) -> Result<f64> {
    check_positive(x)?;
    if x == 1.0 || x == 2.0 {
        return Ok(0.0);
    }
    if x < 1e-20 {
        return Ok(-libm::log(x));
    }
    let r = libm::log(lanczos_sum(x)) - LANCZOS_G;
    Ok(r + (x - 0.5) * (libm::log(x + LANCZOS_G - 0.5) - 1.0))
}

/// `sin(pi x)`, exact zero at the integers.
fn sin_pi(x: f64) -> f64 {
    let n = libm::round(x);
    let r = x - n;
    let s = libm::sin(PI * r);
    if (n as i64) % 2 == 0 {
        s
    } else {
        -s
    }
}

/// Below this argument the asymptotic expansion is tried first.
pub const ASYMPTOTIC_SWITCH: f64 = -10.0;

/// Relative error estimate a regime has to meet to be accepted.
pub const REGIME_REL_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MlParams {
    alpha: f64,
    series_tol: f64,
    max_terms: usize,
}

impl MlParams {
    pub const DEFAULT_SERIES_TOL: f64 = 1e-15;
    pub const DEFAULT_MAX_TERMS: usize = 500;

    pub fn new(alpha: f64) -> Result<Self> {
        let order = Order::new(alpha)?;
        Ok(Self::from_order(order))
    }

    pub fn from_order(order: Order) -> Self {
        Self {
            alpha: order.value(),
            series_tol: Self::DEFAULT_SERIES_TOL,
            max_terms: Self::DEFAULT_MAX_TERMS,
        }
    }

    pub fn with_series_tol(mut self, tol: f64) -> Result<Self> {
        if !(tol.is_finite() && tol > 0.0) {
            return Err(Error::Domain { what: "series tolerance", value: tol });
        }
        self.series_tol = tol;
        Ok(self)
    }

    pub fn with_max_terms(mut self, max_terms: usize) -> Result<Self> {
        if max_terms < 10 {
            return Err(Error::InvalidArgument("max_terms must be at least 10"));
        }
        self.max_terms = max_terms;
        Ok(self)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn series_tol(&self) -> f64 {
        self.series_tol
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms
    }
}

#[derive(Debug, Clone, Copy)]
struct Estimate {
    value: f64,
    abs_error: f64,
}

impl Estimate {
    fn rel_error(&self) -> f64 {
        if self.value == 0.0 {
            f64::INFINITY
        } else {
            self.abs_error / self.value.abs()
        }
    }

    fn accepted(&self) -> bool {
        self.value.is_finite() && self.rel_error() <= REGIME_REL_TOL
    }
}

/// `E_alpha(z)` for real `z`.
pub fn ml(z: f64, params: &MlParams) -> Result<f64> {
    if !z.is_finite() {
        return Err(Error::Domain { what: "Mittag-Leffler argument", value: z });
    }
    if z == 0.0 {
        return Ok(1.0);
    }
    if let Some(v) = exponential(z, params.alpha) {
        return Ok(v);
    }
    let prefer_asymptotic = z <= ASYMPTOTIC_SWITCH;
    let first = if prefer_asymptotic { asymptotic(z, params) } else { series(z, params) };
    if let Some(est) = first.filter(Estimate::accepted) {
        return Ok(est.value);
    }
    let second = if prefer_asymptotic { series(z, params) } else { asymptotic(z, params) };
    if let Some(est) = second.filter(Estimate::accepted) {
        return Ok(est.value);
    }
    [first, second, integral(z, params)]
        .into_iter()
        .flatten()
        .filter(Estimate::accepted)
        .min_by(|a, b| a.rel_error().total_cmp(&b.rel_error()))
        .map(|est| est.value)
        .ok_or(Error::NonConvergence { alpha: params.alpha, z })
}

fn series(z: f64, params: &MlParams) -> Option<Estimate> {
    let alpha = params.alpha;
    let ln_abs_z = libm::log(z.abs());
    let mut sum = CompensatedSum::new();
    let mut abs_sum = 0.0;
    let mut below = 0;
    for k in 0..params.max_terms {
        let arg = alpha * k as f64 + 1.0;
        let term = if arg < 170.0 && k as f64 * ln_abs_z < 700.0 {
            libm::pow(z, k as f64) / gamma(arg).ok()?
        } else {
            let mag = libm::exp(k as f64 * ln_abs_z - ln_gamma(arg).ok()?);
            if z < 0.0 && k % 2 == 1 {
                -mag
            } else {
                mag
            }
        };
        if !term.is_finite() {
            return None;
        }
        sum.add(term);
        abs_sum += term.abs();
        if term.abs() < params.series_tol {
            below += 1;
            if below == 3 {
                // pow and gamma are each good to a few ulp per term
                let rounding = 8.0 * f64::EPSILON * abs_sum;
                return Some(Estimate {
                    value: sum.value(),
                    abs_error: rounding + params.series_tol,
                });
            }
        } else {
            below = 0;
        }
    }
    None
}

/// Large positive `z`: `E_a(z) = exp(z^(1/a)) / a + O(1/z)`, and the
/// algebraic part is below 1e-17 relative once `z^(1/a) >= 40`. Overflows to
/// `+inf` where the true value does.
fn exponential(z: f64, alpha: f64) -> Option<f64> {
    if z <= 0.0 {
        return None;
    }
    let r = libm::pow(z, 1.0 / alpha);
    (r >= 40.0).then(|| libm::exp(r) / alpha)
}

/// `1 / Gamma(1 - s)` for `s > 0`, through the reflection formula once
/// `1 - s` leaves the positive axis. Returns (log magnitude, sign); a zero
/// value (the poles of Gamma) is reported as `None`.
fn recip_gamma_one_minus(s: f64) -> Option<(f64, f64)> {
    if s < 1.0 {
        let g = gamma(1.0 - s).ok()?;
        return Some((-libm::log(g), 1.0));
    }
    let sp = sin_pi(s);
    if sp == 0.0 {
        return None;
    }
    let lg = ln_gamma(s).ok()?;
    Some((lg + libm::log(sp.abs() / PI), sp.signum()))
}

fn asymptotic(z: f64, params: &MlParams) -> Option<Estimate> {
    let alpha = params.alpha;
    // On the negative axis the expansion is purely algebraic only for a < 1.
    if z >= 0.0 || alpha >= 1.0 {
        return None;
    }
    let ln_x = libm::log(-z);
    let mut sum = CompensatedSum::new();
    let mut prev_envelope = f64::INFINITY;
    for k in 1..=params.max_terms {
        let s = alpha * k as f64;
        // |z|^-k / |Gamma(1 - s)| without the oscillating sine factor
        let envelope = if s < 1.0 {
            libm::exp(-(k as f64) * ln_x - ln_gamma(1.0 - s).ok()?)
        } else {
            libm::exp(ln_gamma(s).ok()? - k as f64 * ln_x) / PI
        };
        if envelope >= prev_envelope {
            // smallest-term truncation point
            return Some(Estimate { value: sum.value(), abs_error: prev_envelope });
        }
        if envelope < 0.1 * f64::EPSILON * sum.value().abs() {
            return Some(Estimate { value: sum.value(), abs_error: envelope });
        }
        prev_envelope = envelope;
        if let Some((ln_mag, sign)) = recip_gamma_one_minus(s) {
            // term = -z^-k / Gamma(1 - s), and z^-k = (-1)^k |z|^-k
            let parity = if k % 2 == 0 { 1.0 } else { -1.0 };
            sum.add(-parity * sign * libm::exp(ln_mag - k as f64 * ln_x));
        }
    }
    Some(Estimate { value: sum.value(), abs_error: prev_envelope })
}

/// Adaptive Simpson. Returns (value, accumulated error estimate), or `None`
/// when the depth limit is hit.
fn simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> Option<(f64, f64)> {
    struct Panel {
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    }
    let fm = f(0.5 * (a + b));
    let (fa, fb) = (f(a), f(b));
    let mut stack = alloc::vec![Panel {
        a,
        b,
        fa,
        fm,
        fb,
        whole: (b - a) / 6.0 * (fa + 4.0 * fm + fb),
        tol,
        depth: 0,
    }];
    let mut total = CompensatedSum::new();
    let mut err = 0.0;
    while let Some(p) = stack.pop() {
        let m = 0.5 * (p.a + p.b);
        let (flm, frm) = (f(0.5 * (p.a + m)), f(0.5 * (m + p.b)));
        let left = (m - p.a) / 6.0 * (p.fa + 4.0 * flm + p.fm);
        let right = (p.b - m) / 6.0 * (p.fm + 4.0 * frm + p.fb);
        let diff = left + right - p.whole;
        if diff.abs() <= 15.0 * p.tol {
            total.add(left + right + diff / 15.0);
            err += diff.abs() / 15.0;
        } else if p.depth >= 48 {
            return None;
        } else {
            let (tol, depth) = (0.5 * p.tol, p.depth + 1);
            stack.push(Panel { a: p.a, b: m, fa: p.fa, fm: flm, fb: p.fm, whole: left, tol, depth });
            stack.push(Panel { a: m, b: p.b, fa: p.fm, fm: frm, fb: p.fb, whole: right, tol, depth });
        }
    }
    Some((total.value(), err))
}

/// `E_alpha(-x) = sin(a pi)/(a pi) int_0^inf exp(-(x v)^(1/a)) / (v^2 + 2 v cos(a pi) + 1) dv`,
/// evaluated in `w = x v`. Every contribution is positive, so nothing cancels.
fn integral(z: f64, params: &MlParams) -> Option<Estimate> {
    let alpha = params.alpha;
    if z >= 0.0 || alpha >= 1.0 {
        return None;
    }
    let x = -z;
    let c = libm::cos(alpha * PI);
    let g = |w: f64| {
        let v = w / x;
        libm::exp(-libm::pow(w, 1.0 / alpha)) / (x * (v * (v + 2.0 * c) + 1.0))
    };
    // exp(-w^(1/a)) < 1e-20 beyond this point
    let w_max = libm::pow(46.0, alpha);
    let scale = libm::sin(alpha * PI) / (alpha * PI);
    let tol = 1e-14 / x;
    let mut value = 0.0;
    let mut err = 0.0;
    // the denominator peaks at v = 1
    let mut cuts = [0.0, x.min(w_max), w_max];
    if cuts[1] == cuts[2] {
        cuts[1] = 0.5 * w_max;
    }
    for pair in cuts.windows(2) {
        let (v, e) = simpson(&g, pair[0], pair[1], tol)?;
        value += v;
        err += e;
    }
    let tail = 1e-20 * w_max / x;
    Some(Estimate { value: scale * value, abs_error: scale * (err + tail) + 4.0 * f64::EPSILON * scale * value })
}

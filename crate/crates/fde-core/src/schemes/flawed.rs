use crate::mittag_leffler::gamma;
use crate::{Error, Result};

/// One step of the two-point "local" scheme.
///
/// `f` is replaced on the whole of `[0, t_{n+1}]` by the line through
/// `(t_{n-1}, f_{n-1})` and `(t_n, f_n)`, and the two Riemann-Liouville
/// integrals in `y(t_{n+1}) - y(t_n)` are evaluated exactly:
///
/// ```text
/// y_{n+1} = y_n + f_n / (h G(a)) * { 2h t_{n+1}^a / (a(a+1)) - t_{n-1} t_{n+1}^a / (a+1)
///                                    - h t_n^a / a + t_n^(a+1) / (a+1) }
///               + f_{n-1} / (h G(a)) * { t_{n+1}^(a+1) / (a+1) - h t_{n+1}^a / a
///                                        - t_n^(a+1) / (a+1) }
/// ```
///
/// At `a = 1` the braces reduce to `3h^2/2` and `-h^2/2`, i.e. the two-step
/// Adams-Bashforth method.
pub fn flawed_step(alpha: f64, h: f64, n: usize, f_nm1: f64, f_n: f64, y_n: f64) -> Result<f64> {
    if !(alpha.is_finite() && alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::Domain { what: "fractional order", value: alpha });
    }
    if !(h.is_finite() && h > 0.0) {
        return Err(Error::Domain { what: "step size", value: h });
    }
    if n == 0 {
        return Err(Error::InvalidArgument("the two-point step needs n >= 1"));
    }
    let a = alpha;
    let t_prev = (n - 1) as f64 * h;
    let t_n = n as f64 * h;
    let t_next = (n + 1) as f64 * h;
    let next_a = libm::pow(t_next, a);
    let n_a = libm::pow(t_n, a);
    let next_a1 = libm::pow(t_next, a + 1.0);
    let n_a1 = libm::pow(t_n, a + 1.0);

    let current = 2.0 * h * next_a / (a * (a + 1.0)) - t_prev * next_a / (a + 1.0) - h * n_a / a
        + n_a1 / (a + 1.0);
    let previous = next_a1 / (a + 1.0) - h * next_a / a - n_a1 / (a + 1.0);

    let scale = h * gamma(a)?;
    Ok(y_n + f_n / scale * current + f_nm1 / scale * previous)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_rhs_keeps_state() {
        assert_eq!(flawed_step(0.8, 0.0625, 5, 0.0, 0.0, 2.0).unwrap(), 2.0);
    }

    #[test]
    fn rejects_first_step() {
        assert_eq!(
            flawed_step(0.8, 0.1, 0, 1.0, 1.0, 1.0),
            Err(Error::InvalidArgument("the two-point step needs n >= 1"))
        );
        assert!(flawed_step(0.0, 0.1, 1, 1.0, 1.0, 1.0).is_err());
        assert!(flawed_step(0.5, -0.1, 1, 1.0, 1.0, 1.0).is_err());
    }
}

//! Central finite differences with Richardson extrapolation.

use crate::error::{Error, Result};

/// Derivative of `f` at `x` of the given order (1 or 2), combining central
/// differences at steps `h` and `h/2` to cancel the leading error term.
pub fn fd_derivative<F>(f: F, x: f64, order: u32, h: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if !(h.is_finite() && h > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "fd_derivative step must be positive, got {h}"
        )));
    }
    let coarse = central(&f, x, order, h)?;
    let fine = central(&f, x, order, 0.5 * h)?;
    Ok((4.0 * fine - coarse) / 3.0)
}

fn central<F>(f: &F, x: f64, order: u32, h: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    let value = match order {
        1 => (f(x + h) - f(x - h)) / (2.0 * h),
        2 => (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h),
        _ => {
            return Err(Error::InvalidArgument(format!(
                "fd_derivative supports orders 1 and 2, got {order}"
            )))
        }
    };
    if !value.is_finite() {
        return Err(Error::NonFinite {
            context: format!("finite difference of order {order} at x = {x}"),
        });
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sine_first_derivative() {
        let d = fd_derivative(|x| x.sin(), 0.0, 1, 1e-5).unwrap();
        assert!((d - 1.0).abs() < 1e-9);
    }

    #[test]
    fn exp_second_derivative() {
        let d = fd_derivative(|x| x.exp(), 1.0, 2, 1e-2).unwrap();
        assert!((d - 1.0f64.exp()).abs() < 1e-9);
    }

    #[test]
    fn unsupported_order() {
        assert!(fd_derivative(|x| x, 0.0, 3, 1e-5).is_err());
    }

    #[test]
    fn nan_propagation_reported() {
        assert!(fd_derivative(|x| x.ln(), 0.0, 1, 1e-5).is_err());
    }
}

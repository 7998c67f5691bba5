//! Adaptive Simpson quadrature.

use crate::error::{Error, Result};

const MAX_DEPTH: u32 = 60;

/// Integrate `f` over `[lo, hi]` by adaptive interval subdivision with an
/// absolute error target of `tol`. Exact on cubics by construction.
pub fn quad_adaptive<F>(f: F, lo: f64, hi: f64, tol: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if lo == hi {
        return Ok(0.0);
    }
    let (a, b, sign) = if lo < hi {
        (lo, hi, 1.0)
    } else {
        (hi, lo, -1.0)
    };
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    for (x, v) in [(a, fa), (m, fm), (b, fb)] {
        if !v.is_finite() {
            return Err(Error::NonFinite {
                context: format!("integrand at x = {x}"),
            });
        }
    }
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    let value = simpson_recurse(&f, a, b, fa, fm, fb, whole, tol, MAX_DEPTH)?;
    Ok(sign * value)
}

#[allow(clippy::too_many_arguments)]
fn simpson_recurse<F>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    if !flm.is_finite() || !frm.is_finite() {
        return Err(Error::NonFinite {
            context: format!("integrand on [{a}, {b}]"),
        });
    }
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if delta.abs() <= 15.0 * tol {
        return Ok(left + right + delta / 15.0);
    }
    if depth == 0 {
        return Err(Error::SubdivisionLimit { lo: a, hi: b });
    }
    let half_tol = 0.5 * tol;
    Ok(
        simpson_recurse(f, a, m, fa, flm, fm, left, half_tol, depth - 1)?
            + simpson_recurse(f, m, b, fm, frm, fb, right, half_tol, depth - 1)?,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn monomial() {
        let v = quad_adaptive(|x| x * x, 0.0, 1.0, 1e-12).unwrap();
        assert!((v - 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn sine_arch() {
        let v = quad_adaptive(|x| x.sin(), 0.0, std::f64::consts::PI, 1e-12).unwrap();
        assert!((v - 2.0).abs() < 1e-12);
    }

    #[test]
    fn reversed_interval_negates() {
        let v = quad_adaptive(|x| x.exp(), 1.0, 0.0, 1e-12).unwrap();
        assert!((v + (std::f64::consts::E - 1.0)).abs() < 1e-12);
    }

    #[test]
    fn empty_interval() {
        assert_eq!(quad_adaptive(|x| x, 2.0, 2.0, 1e-12).unwrap(), 0.0);
    }

    #[test]
    fn nan_reported() {
        let e = quad_adaptive(|x| (x - 0.25).ln(), 0.0, 1.0, 1e-12);
        assert!(e.is_err());
    }

    proptest! {
        // Simpson is exact on cubics; subdivision must preserve that.
        #[test]
        fn exact_on_cubics(
            c0 in -10.0f64..10.0, c1 in -10.0f64..10.0,
            c2 in -10.0f64..10.0, c3 in -10.0f64..10.0,
            a in -3.0f64..3.0, len in 0.1f64..4.0
        ) {
            let b = a + len;
            let f = |x: f64| c0 + x * (c1 + x * (c2 + x * c3));
            let exact = |x: f64| {
                x * (c0 + x * (c1 / 2.0 + x * (c2 / 3.0 + x * c3 / 4.0)))
            };
            let v = quad_adaptive(f, a, b, 1e-12).unwrap();
            let scale = 1.0 + exact(b).abs() + exact(a).abs();
            prop_assert!((v - (exact(b) - exact(a))).abs() < 1e-11 * scale);
        }
    }
}

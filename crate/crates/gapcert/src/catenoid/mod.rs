//! Closed-form rotational catenoids in the quadric models.
//!
//! The hyperbolic family lives on the hyperboloid `<y, y>_1 = -1`:
//!
//! ```text
//! F_a(s, t) = (x cos t, x sin t, w sinh phi, w cosh phi),
//! x = sqrt(a cosh 2s - 1/2),  w = sqrt(a cosh 2s + 1/2),  a > 1/2,
//! ```
//!
//! and the spherical family on the unit sphere of `R^4`:
//!
//! ```text
//! F_a(s, t) = (x cos t, x sin t, w sin phi, w cos phi),
//! x = sqrt(1/2 + a cos 2s),  w = sqrt(1/2 - a cos 2s),  -1/2 < a < 0,
//! ```
//!
//! where `phi(s)` is a cumulative integral making `s` the arclength of the
//! generating curve. Both surfaces are rotational around the plane of the
//! third and fourth coordinate axes; the geodesic ball center is
//! `(0, 0, 0, 1)` in both models.
//!
//! The free boundary sits at the first `s > 0` where the tangent line of the
//! meridian (at fixed angle) meets the axis spanned by the center, i.e. at
//! the first zero of `h(s) = F1 dF3/ds - F3 dF1/ds`.

pub mod geometry;
pub mod jacobi;
mod lorentz;

pub use lorentz::{euclidean_cross4, lorentz_cross, LorentzVec4};

use crate::error::{Error, Result};
use crate::numerics::{self, NumericsConfig};

/// Which quadric model a catenoid lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CatenoidModel {
    /// Hyperboloid model of hyperbolic space; parameter `a > 1/2`.
    Hyperbolic,
    /// Round unit sphere (hemisphere ball); parameter `-1/2 < a < 0`.
    Spherical,
}

fn check_param(model: CatenoidModel, a: f64) -> Result<()> {
    let ok = match model {
        CatenoidModel::Hyperbolic => a.is_finite() && a > 0.5,
        CatenoidModel::Spherical => a.is_finite() && a > -0.5 && a < 0.0,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "catenoid parameter a = {a} outside the admissible range for {model:?}"
        )))
    }
}

/// Integrand of `phi(s)`.
pub fn phi_integrand(model: CatenoidModel, a: f64, t: f64) -> Result<f64> {
    match model {
        CatenoidModel::Hyperbolic => {
            let u = a * (2.0 * t).cosh();
            let radicand = u - 0.5;
            if radicand <= 0.0 {
                return Err(Error::InvalidArgument(format!(
                    "phi integrand radicand nonpositive at t = {t} (a = {a})"
                )));
            }
            Ok((a * a - 0.25).sqrt() / ((u + 0.5) * radicand.sqrt()))
        }
        CatenoidModel::Spherical => {
            let u = a * (2.0 * t).cos();
            let radicand = 0.5 + u;
            if radicand <= 0.0 {
                return Err(Error::InvalidArgument(format!(
                    "phi integrand radicand nonpositive at t = {t} (a = {a})"
                )));
            }
            Ok((0.25 - a * a).sqrt() / ((0.5 - u) * radicand.sqrt()))
        }
    }
}

/// Meridian angle `phi(s)` by direct adaptive quadrature. Odd in `s`.
pub fn phi_of_s(model: CatenoidModel, a: f64, s: f64, quad_tol: f64) -> Result<f64> {
    check_param(model, a)?;
    let magnitude = numerics::quad_adaptive(
        |t| phi_integrand(model, a, t).unwrap_or(f64::NAN),
        0.0,
        s.abs(),
        quad_tol,
    )?;
    if !magnitude.is_finite() {
        return Err(Error::NonFinite {
            context: format!("phi({s}) for a = {a}"),
        });
    }
    Ok(magnitude.copysign(s))
}

/// Cumulative table of `phi` with derivative data for cubic Hermite
/// interpolation, refined until the interpolant reproduces midpoint values.
#[derive(Clone, Debug)]
struct PhiTable {
    s: Vec<f64>,
    phi: Vec<f64>,
    dphi: Vec<f64>,
}

const PHI_BASE_STEP: f64 = 0.04;
const PHI_HERMITE_TOL: f64 = 1e-13;
const PHI_MAX_DEPTH: u32 = 24;

// Gauss-Legendre 7 on [-1, 1].
const GL7_X: [f64; 7] = [
    -0.9491079123427585,
    -0.7415311855993945,
    -0.4058451513773972,
    0.0,
    0.4058451513773972,
    0.7415311855993945,
    0.9491079123427585,
];
const GL7_W: [f64; 7] = [
    0.1294849661688697,
    0.2797053914892766,
    0.3818300505051189,
    0.4179591836734694,
    0.3818300505051189,
    0.2797053914892766,
    0.1294849661688697,
];

impl PhiTable {
    fn build(model: CatenoidModel, a: f64, s_max: f64) -> Result<PhiTable> {
        let integrand = |t: f64| phi_integrand(model, a, t);
        let gl7 = |lo: f64, hi: f64| -> Result<f64> {
            let half = 0.5 * (hi - lo);
            let mid = 0.5 * (hi + lo);
            let mut acc = 0.0;
            for (x, w) in GL7_X.iter().zip(GL7_W) {
                acc += w * integrand(mid + half * x)?;
            }
            Ok(acc * half)
        };
        let mut table = PhiTable {
            s: vec![0.0],
            phi: vec![0.0],
            dphi: vec![integrand(0.0)?],
        };
        // Depth-first refinement of each base interval; a segment is accepted
        // when the Hermite interpolant reproduces the quadrature midpoint.
        let mut sa = 0.0;
        while sa < s_max {
            let sb = (sa + PHI_BASE_STEP).min(s_max);
            table.fill_segment(sa, sb, &gl7, &integrand, PHI_MAX_DEPTH)?;
            sa = sb;
        }
        Ok(table)
    }

    fn fill_segment(
        &mut self,
        sa: f64,
        sb: f64,
        gl7: &impl Fn(f64, f64) -> Result<f64>,
        integrand: &impl Fn(f64) -> Result<f64>,
        depth: u32,
    ) -> Result<()> {
        let phi_a = *self.phi.last().expect("table seeded");
        let da = *self.dphi.last().expect("table seeded");
        let mid = 0.5 * (sa + sb);
        let left = gl7(sa, mid)?;
        let right = gl7(mid, sb)?;
        let phi_mid = phi_a + left;
        let phi_b = phi_mid + right;
        let db = integrand(sb)?;
        let predicted = hermite(sa, phi_a, da, sb, phi_b, db, mid);
        if (predicted - phi_mid).abs() <= PHI_HERMITE_TOL || depth == 0 {
            self.push(mid, phi_mid, integrand(mid)?);
            self.push(sb, phi_b, db);
            return Ok(());
        }
        self.fill_segment(sa, mid, gl7, integrand, depth - 1)?;
        self.fill_segment(mid, sb, gl7, integrand, depth - 1)
    }

    fn push(&mut self, s: f64, phi: f64, dphi: f64) {
        self.s.push(s);
        self.phi.push(phi);
        self.dphi.push(dphi);
    }

    fn s_max(&self) -> f64 {
        *self.s.last().expect("table nonempty")
    }

    fn eval(&self, s: f64) -> Result<f64> {
        let x = s.abs();
        if x > self.s_max() {
            return Err(Error::InvalidArgument(format!(
                "s = {s} outside the tabulated meridian range [-{0}, {0}]",
                self.s_max()
            )));
        }
        let idx = self.s.partition_point(|&node| node < x).max(1) - 1;
        let idx = idx.min(self.s.len() - 2);
        let value = hermite(
            self.s[idx],
            self.phi[idx],
            self.dphi[idx],
            self.s[idx + 1],
            self.phi[idx + 1],
            self.dphi[idx + 1],
            x,
        );
        Ok(value.copysign(s))
    }
}

#[allow(clippy::too_many_arguments)]
fn hermite(x0: f64, y0: f64, d0: f64, x1: f64, y1: f64, d1: f64, x: f64) -> f64 {
    let h = x1 - x0;
    let u = (x - x0) / h;
    let u2 = u * u;
    let u3 = u2 * u;
    (2.0 * u3 - 3.0 * u2 + 1.0) * y0
        + (u3 - 2.0 * u2 + u) * h * d0
        + (-2.0 * u3 + 3.0 * u2) * y1
        + (u3 - u2) * h * d1
}

/// Meridian data at fixed angle: radial coordinate, axis coordinates and
/// their closed-form s-derivatives.
#[derive(Clone, Copy, Debug)]
struct Meridian {
    x: f64,
    x_s: f64,
    z: f64,
    z_s: f64,
    height: f64,
}

/// A rotational catenoid in a quadric model, cut at its free boundary.
#[derive(Clone, Debug)]
pub struct Catenoid {
    pub model: CatenoidModel,
    pub a: f64,
    /// First positive root of the tangent-line criterion.
    pub s0: f64,
    /// Geodesic radius of the ball the annulus is free-boundary in.
    pub radius: f64,
    phi: PhiTable,
    /// Global normal orientation making the support function nonpositive on
    /// the interior; fixed once at the neck.
    orientation: f64,
}

const HYPERBOLIC_SCAN_MAX: f64 = 8.0;
const SCAN_SAMPLES: usize = 4096;
/// Meridian margin kept beyond `s0` so finite-difference stencils stay in
/// range.
const TABLE_MARGIN: f64 = 0.5;

impl Catenoid {
    pub fn new(model: CatenoidModel, a: f64, cfg: &NumericsConfig) -> Result<Catenoid> {
        check_param(model, a)?;
        cfg.validate()?;
        let scan_max = match model {
            CatenoidModel::Hyperbolic => HYPERBOLIC_SCAN_MAX,
            CatenoidModel::Spherical => std::f64::consts::PI,
        };
        let phi = PhiTable::build(model, a, scan_max + TABLE_MARGIN)?;
        let mut cat = Catenoid {
            model,
            a,
            s0: f64::NAN,
            radius: f64::NAN,
            phi,
            orientation: 1.0,
        };
        let h = |s: f64| cat.meridian(s).map(|m| m.x * m.z_s - m.z * m.x_s);
        let mut bracket = None;
        let mut prev = (0.0, h(0.0)?);
        for i in 1..=SCAN_SAMPLES {
            let s = scan_max * (i as f64) / (SCAN_SAMPLES as f64);
            let value = h(s)?;
            if prev.1 * value <= 0.0 {
                bracket = Some((prev.0, s));
                break;
            }
            prev = (s, value);
        }
        let Some((lo, hi)) = bracket else {
            return Err(Error::NoFreeBoundary(format!(
                "tangent-line criterion has no root for a = {a} in (0, {scan_max}]"
            )));
        };
        let s0 = numerics::find_root_bracketed(|s| h(s).unwrap_or(f64::NAN), lo, hi, cfg.root_tol)?;
        let height = cat.meridian(s0)?.height;
        let radius = match model {
            CatenoidModel::Hyperbolic => height.acosh(),
            CatenoidModel::Spherical => {
                if height <= 1e-12 {
                    return Err(Error::NoFreeBoundary(format!(
                        "spherical boundary for a = {a} reaches the hemisphere equator"
                    )));
                }
                height.acos()
            }
        };
        cat.s0 = s0;
        cat.radius = radius;
        cat.orientation = geometry::neck_orientation(&cat)?;
        Ok(cat)
    }

    fn meridian(&self, s: f64) -> Result<Meridian> {
        let phi = self.phi.eval(s)?;
        let dphi = phi_integrand(self.model, self.a, s)?;
        match self.model {
            CatenoidModel::Hyperbolic => {
                let c2 = (2.0 * s).cosh();
                let s2 = (2.0 * s).sinh();
                let x = (self.a * c2 - 0.5).sqrt();
                let w = (self.a * c2 + 0.5).sqrt();
                let x_s = self.a * s2 / x;
                let w_s = self.a * s2 / w;
                Ok(Meridian {
                    x,
                    x_s,
                    z: w * phi.sinh(),
                    z_s: w_s * phi.sinh() + w * dphi * phi.cosh(),
                    height: w * phi.cosh(),
                })
            }
            CatenoidModel::Spherical => {
                let c2 = (2.0 * s).cos();
                let s2 = (2.0 * s).sin();
                let x = (0.5 + self.a * c2).sqrt();
                let w = (0.5 - self.a * c2).sqrt();
                let x_s = -self.a * s2 / x;
                let w_s = self.a * s2 / w;
                Ok(Meridian {
                    x,
                    x_s,
                    z: w * phi.sin(),
                    z_s: w_s * phi.sin() + w * dphi * phi.cos(),
                    height: w * phi.cos(),
                })
            }
        }
    }

    /// Surface point; the quadric constraint holds by construction.
    pub fn eval(&self, s: f64, theta: f64) -> Result<LorentzVec4> {
        let phi = self.phi.eval(s)?;
        Ok(eval_point(self.model, self.a, s, theta, phi))
    }

    /// Tangent-line criterion `h(s) = F1 dF3 - F3 dF1` along the meridian.
    pub fn tangent_line_criterion(&self, s: f64) -> Result<f64> {
        let m = self.meridian(s)?;
        Ok(m.x * m.z_s - m.z * m.x_s)
    }

    /// Geodesic distance from the center to the neck circle.
    pub fn neck_radius(&self) -> f64 {
        match self.model {
            CatenoidModel::Hyperbolic => (self.a + 0.5).sqrt().acosh(),
            CatenoidModel::Spherical => (0.5 - self.a).sqrt().acos(),
        }
    }

    pub(crate) fn orientation(&self) -> f64 {
        self.orientation
    }

    /// `phi(s)` from the cumulative table (interpolated).
    pub fn phi(&self, s: f64) -> Result<f64> {
        self.phi.eval(s)
    }
}

fn eval_point(model: CatenoidModel, a: f64, s: f64, theta: f64, phi: f64) -> LorentzVec4 {
    match model {
        CatenoidModel::Hyperbolic => {
            let u = a * (2.0 * s).cosh();
            let x = (u - 0.5).sqrt();
            let w = (u + 0.5).sqrt();
            LorentzVec4::new(
                x * theta.cos(),
                x * theta.sin(),
                w * phi.sinh(),
                w * phi.cosh(),
            )
        }
        CatenoidModel::Spherical => {
            let u = a * (2.0 * s).cos();
            let x = (0.5 + u).sqrt();
            let w = (0.5 - u).sqrt();
            LorentzVec4::new(
                x * theta.cos(),
                x * theta.sin(),
                w * phi.sin(),
                w * phi.cos(),
            )
        }
    }
}

/// Standalone point evaluation with `phi` from direct quadrature.
pub fn eval_catenoid(
    model: CatenoidModel,
    a: f64,
    s: f64,
    theta: f64,
    quad_tol: f64,
) -> Result<LorentzVec4> {
    check_param(model, a)?;
    let phi = phi_of_s(model, a, s, quad_tol)?;
    Ok(eval_point(model, a, s, theta, phi))
}

/// Free-boundary location `(s0, R)` for the given family member.
pub fn free_boundary_s0(model: CatenoidModel, a: f64, cfg: &NumericsConfig) -> Result<(f64, f64)> {
    let cat = Catenoid::new(model, a, cfg)?;
    Ok((cat.s0, cat.radius))
}

/// The critical catenoid of the Euclidean unit ball: the rotational minimal
/// surface `scale * (cosh s cos t, cosh s sin t, s)` whose meridian tangent
/// at `s0` passes through the origin, rescaled so the boundary sits on the
/// unit sphere.
#[derive(Clone, Copy, Debug)]
pub struct CriticalCatenoid {
    pub scale: f64,
    pub s0: f64,
    pub radius: f64,
}

impl CriticalCatenoid {
    pub fn new(cfg: &NumericsConfig) -> Result<CriticalCatenoid> {
        cfg.validate()?;
        // cosh s - s sinh s changes sign on [1, 2].
        let s0 =
            numerics::find_root_bracketed(|s| s.cosh() - s * s.sinh(), 1.0, 2.0, cfg.root_tol)?;
        let scale = 1.0 / (s0.cosh().hypot(s0));
        Ok(CriticalCatenoid {
            scale,
            s0,
            radius: 1.0,
        })
    }

    pub fn eval(&self, s: f64, theta: f64) -> [f64; 3] {
        [
            self.scale * s.cosh() * theta.cos(),
            self.scale * s.cosh() * theta.sin(),
            self.scale * s,
        ]
    }

    pub fn neck_radius(&self) -> f64 {
        self.scale
    }
}

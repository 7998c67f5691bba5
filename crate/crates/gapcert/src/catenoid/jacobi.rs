//! The Jacobi function `u(x) = <y ∧ e_i ∧ e_4, N>_1` built from a rotation
//! Killing field, and finite-difference residuals of its Jacobi system
//!
//! ```text
//! Delta u + (|A|^2 - 2) u = 0   on the surface,
//! du/dnu = coth R * u           on the free boundary.
//! ```
//!
//! `u` vanishes identically exactly when the surface is rotational around
//! the plane of the chosen coordinate pair, so the standard axis detects the
//! catenoid's symmetry while the swapped axis gives a nonzero Jacobi
//! function on the same surface.

use super::geometry::{frame_at, SURFACE_FD_STEP};
use super::{lorentz_cross, Catenoid, CatenoidModel, LorentzVec4};
use crate::error::{Error, Result};

/// Coordinate plane the ambient rotation fixes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RotationAxis {
    /// The plane of `e_3` and `e_4`: the catenoid's own rotation axis.
    Axis34,
    /// The plane of `e_2` and `e_4`: a rotation the catenoid does not have.
    Axis24,
}

impl RotationAxis {
    fn vectors(self) -> (LorentzVec4, LorentzVec4) {
        match self {
            RotationAxis::Axis34 => (LorentzVec4::E3, LorentzVec4::E4),
            RotationAxis::Axis24 => (LorentzVec4::E2, LorentzVec4::E4),
        }
    }
}

/// `u = <position ∧ a1 ∧ a2, N>_1` for a surface point of the hyperboloid.
pub fn jacobi_u(position: LorentzVec4, normal: LorentzVec4, axis: RotationAxis) -> f64 {
    let (a1, a2) = axis.vectors();
    lorentz_cross(position, a1, a2).dot(normal)
}

/// Residuals of the Jacobi system on a parametric grid.
#[derive(Clone, Copy, Debug)]
pub struct JacobiResiduals {
    /// Largest `|u|` over the grid.
    pub max_u: f64,
    /// Largest `|Delta u + (|A|^2 - 2) u|` over interior nodes.
    pub interior: f64,
    /// Largest `|du/dnu - coth R * u|` over boundary nodes.
    pub boundary: f64,
}

/// Evaluate the Jacobi residuals of `u` for the given axis on an
/// `n_s x n_theta` grid of the hyperbolic catenoid.
///
/// The Laplace-Beltrami operator uses the rotational structure of the
/// induced metric (`g_ss = 1`, `g_s,theta = 0`, `g_theta,theta = G(s)`), with
/// `G` measured from the tangent frame rather than taken from a formula;
/// all parameter derivatives are fourth-order stencils.
pub fn jacobi_residuals(
    cat: &Catenoid,
    n_s: usize,
    n_theta: usize,
    axis: RotationAxis,
) -> Result<JacobiResiduals> {
    if cat.model != CatenoidModel::Hyperbolic {
        return Err(Error::InvalidArgument(
            "the Jacobi function is defined on the hyperboloid model".into(),
        ));
    }
    if n_s < 9 || n_theta < 8 {
        return Err(Error::GridTooCoarse(format!(
            "need n_s >= 9 and n_theta >= 8 for the fourth-order stencils, got ({n_s}, {n_theta})"
        )));
    }
    let n_s = if n_s.is_multiple_of(2) { n_s + 1 } else { n_s };
    let ds = 2.0 * cat.s0 / (n_s - 1) as f64;
    let dtheta = std::f64::consts::TAU / n_theta as f64;
    let eval = |s: f64, theta: f64| cat.eval(s, theta);
    let orientation = cat.orientation();

    let mut u = vec![vec![0.0f64; n_theta]; n_s];
    let mut shape_norm2 = vec![vec![0.0f64; n_theta]; n_s];
    let mut metric_theta = vec![0.0f64; n_s];
    for i in 0..n_s {
        let s = -cat.s0 + ds * i as f64;
        for j in 0..n_theta {
            let theta = dtheta * j as f64;
            let frame = frame_at(&eval, s, theta, SURFACE_FD_STEP)?;
            let normal_raw = lorentz_cross(frame.position, frame.f_s, frame.f_theta);
            let nn = normal_raw.dot(normal_raw);
            if nn <= 0.0 {
                return Err(Error::DegenerateFrame { s, theta });
            }
            let normal = normal_raw * (orientation / nn.sqrt());
            u[i][j] = jacobi_u(frame.position, normal, axis);
            let g11 = frame.f_s.dot(frame.f_s);
            let g22 = frame.f_theta.dot(frame.f_theta);
            let k_m = frame.f_ss.dot(normal) / g11;
            let k_p = frame.f_thetatheta.dot(normal) / g22;
            shape_norm2[i][j] = k_m * k_m + k_p * k_p;
            if j == 0 {
                metric_theta[i] = g22;
            }
        }
    }

    let max_u = u.iter().flatten().fold(0.0f64, |m, v| m.max(v.abs()));

    // d/ds of G by the same interior stencil.
    let d1 = |v: &dyn Fn(usize) -> f64, i: usize, h: f64| {
        (-v(i + 2) + 8.0 * v(i + 1) - 8.0 * v(i - 1) + v(i - 2)) / (12.0 * h)
    };
    let d2 = |v: &dyn Fn(usize) -> f64, i: usize, h: f64| {
        (-v(i + 2) + 16.0 * v(i + 1) - 30.0 * v(i) + 16.0 * v(i - 1) - v(i - 2)) / (12.0 * h * h)
    };

    let mut interior = 0.0f64;
    for i in 2..n_s - 2 {
        let g = metric_theta[i];
        let g_s = d1(&|k| metric_theta[k], i, ds);
        for (j, &u_ij) in u[i].iter().enumerate() {
            let wrap = |k: isize| -> f64 {
                let m = k.rem_euclid(n_theta as isize) as usize;
                u[i][m]
            };
            let u_s = d1(&|k| u[k][j], i, ds);
            let u_ss = d2(&|k| u[k][j], i, ds);
            let ji = j as isize;
            let u_tt = (-wrap(ji + 2) + 16.0 * wrap(ji + 1) - 30.0 * wrap(ji)
                + 16.0 * wrap(ji - 1)
                - wrap(ji - 2))
                / (12.0 * dtheta * dtheta);
            let laplacian = u_ss + (g_s / (2.0 * g)) * u_s + u_tt / g;
            let residual = laplacian + (shape_norm2[i][j] - 2.0) * u_ij;
            interior = interior.max(residual.abs());
        }
    }

    // One-sided fourth-order conormal derivative at both boundary rows.
    let coth_r = 1.0 / cat.radius.tanh();
    let mut boundary = 0.0f64;
    let one_sided = |values: [f64; 5], h: f64| {
        (25.0 * values[0] - 48.0 * values[1] + 36.0 * values[2] - 16.0 * values[3]
            + 3.0 * values[4])
            / (12.0 * h)
    };
    // `j` walks the angular column across five meridian rows at once.
    #[allow(clippy::needless_range_loop)]
    for j in 0..n_theta {
        // The stencil steps inward from the boundary row, so it returns the
        // derivative along the outward conormal at either end.
        let top = one_sided(
            [
                u[n_s - 1][j],
                u[n_s - 2][j],
                u[n_s - 3][j],
                u[n_s - 4][j],
                u[n_s - 5][j],
            ],
            ds,
        );
        boundary = boundary.max((top - coth_r * u[n_s - 1][j]).abs());
        let bottom = one_sided([u[0][j], u[1][j], u[2][j], u[3][j], u[4][j]], ds);
        boundary = boundary.max((bottom - coth_r * u[0][j]).abs());
    }

    Ok(JacobiResiduals {
        max_u,
        interior,
        boundary,
    })
}

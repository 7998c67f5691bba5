//! Numerical surface geometry of the parametric catenoids.
//!
//! Tangent frames and second derivatives come from Richardson-refined
//! central differences of the closed-form parametrization, so one code path
//! serves the hyperbolic, spherical and Euclidean families. The unit normal
//! is the (metric-appropriate) triple cross product of position and tangents,
//! oriented once per surface so the support function is nonpositive on the
//! interior.

use super::{
    euclidean_cross4, lorentz_cross, Catenoid, CatenoidModel, CriticalCatenoid, LorentzVec4,
};
use crate::error::{Error, Result};
use crate::numerics::NumericsConfig;
use crate::pinch::{pinch_q, Position, SurfaceSample, POTENTIAL_FLOOR};
use crate::spaceform::SpaceForm;

/// Default parameter step for curvature extraction. Second differences with
/// Richardson refinement balance truncation against rounding near this size.
pub const SURFACE_FD_STEP: f64 = 4e-3;

/// One grid node of a sampled surface.
#[derive(Clone, Copy, Debug)]
pub struct GridPoint {
    pub s: f64,
    pub theta: f64,
    pub on_boundary: bool,
    pub sample: SurfaceSample,
}

/// First and second parameter derivatives at a point, from central
/// differences at steps `h` and `h/2` combined to fourth order.
pub(crate) struct Frame {
    pub position: LorentzVec4,
    pub f_s: LorentzVec4,
    pub f_theta: LorentzVec4,
    pub f_ss: LorentzVec4,
    pub f_stheta: LorentzVec4,
    pub f_thetatheta: LorentzVec4,
}

fn richardson(coarse: LorentzVec4, fine: LorentzVec4) -> LorentzVec4 {
    (fine * 4.0 - coarse) * (1.0 / 3.0)
}

pub(crate) fn frame_at<F>(eval: &F, s: f64, theta: f64, h: f64) -> Result<Frame>
where
    F: Fn(f64, f64) -> Result<LorentzVec4>,
{
    if !(h.is_finite() && h > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "surface fd step must be positive, got {h}"
        )));
    }
    let center = eval(s, theta)?;
    let d1_s = |h: f64| -> Result<LorentzVec4> {
        Ok((eval(s + h, theta)? - eval(s - h, theta)?) * (0.5 / h))
    };
    let d1_t = |h: f64| -> Result<LorentzVec4> {
        Ok((eval(s, theta + h)? - eval(s, theta - h)?) * (0.5 / h))
    };
    let d2_s = |h: f64| -> Result<LorentzVec4> {
        Ok((eval(s + h, theta)? + eval(s - h, theta)? - center * 2.0) * (1.0 / (h * h)))
    };
    let d2_t = |h: f64| -> Result<LorentzVec4> {
        Ok((eval(s, theta + h)? + eval(s, theta - h)? - center * 2.0) * (1.0 / (h * h)))
    };
    let cross = |h: f64| -> Result<LorentzVec4> {
        Ok(
            (eval(s + h, theta + h)? - eval(s + h, theta - h)? - eval(s - h, theta + h)?
                + eval(s - h, theta - h)?)
                * (0.25 / (h * h)),
        )
    };
    Ok(Frame {
        position: center,
        f_s: richardson(d1_s(h)?, d1_s(0.5 * h)?),
        f_theta: richardson(d1_t(h)?, d1_t(0.5 * h)?),
        f_ss: richardson(d2_s(h)?, d2_s(0.5 * h)?),
        f_stheta: richardson(cross(h)?, cross(0.5 * h)?),
        f_thetatheta: richardson(d2_t(h)?, d2_t(0.5 * h)?),
    })
}

type MetricDot = fn(LorentzVec4, LorentzVec4) -> f64;
type TripleCross = fn(LorentzVec4, LorentzVec4, LorentzVec4) -> LorentzVec4;

fn quadric_sample(
    cat: &Catenoid,
    s: f64,
    theta: f64,
    fd_step: f64,
    orientation: f64,
) -> Result<SurfaceSample> {
    let eval = |s: f64, theta: f64| cat.eval(s, theta);
    let frame = frame_at(&eval, s, theta, fd_step)?;
    let (dot, cross_product): (MetricDot, TripleCross) = match cat.model {
        CatenoidModel::Hyperbolic => (LorentzVec4::dot, lorentz_cross),
        CatenoidModel::Spherical => (LorentzVec4::dot_euclidean, euclidean_cross4),
    };
    let g11 = dot(frame.f_s, frame.f_s);
    let g12 = dot(frame.f_s, frame.f_theta);
    let g22 = dot(frame.f_theta, frame.f_theta);
    if !(g11 > 0.0 && g22 > 1e-12) {
        return Err(Error::DegenerateFrame { s, theta });
    }
    let normal_raw = cross_product(frame.position, frame.f_s, frame.f_theta);
    let nn = dot(normal_raw, normal_raw);
    if nn <= 0.0 {
        return Err(Error::DegenerateFrame { s, theta });
    }
    let normal = normal_raw * (orientation / nn.sqrt());
    let h11 = dot(frame.f_ss, normal);
    let h12 = dot(frame.f_stheta, normal);
    let h22 = dot(frame.f_thetatheta, normal);
    // Rotational symmetry keeps the frame principal; the cross terms are
    // numerical noise.
    debug_assert!(g12.abs() < 1e-6 * (g11 * g22).sqrt());
    debug_assert!(h12.abs() < 1e-4 * (1.0 + h11.abs() + h22.abs()));
    let kappa_meridian = h11 / g11;
    let kappa_parallel = h22 / g22;

    let height = frame.position.y4;
    let (space, radius, potential, support, lambda, radial_slope) = match cat.model {
        CatenoidModel::Hyperbolic => {
            let radius = height.max(1.0).acosh();
            let lambda = (height * height - 1.0).max(0.0).sqrt();
            (
                SpaceForm::Hyperbolic,
                radius,
                height,
                normal.y4,
                lambda,
                frame.f_s.y4,
            )
        }
        CatenoidModel::Spherical => {
            if height <= POTENTIAL_FLOOR {
                return Err(Error::DegeneratePotential { potential: height });
            }
            let radius = height.min(1.0).acos();
            let lambda = (1.0 - height * height).max(0.0).sqrt();
            (
                SpaceForm::Spherical,
                radius,
                height,
                -normal.y4,
                lambda,
                -frame.f_s.y4,
            )
        }
    };
    if lambda <= 0.0 {
        return Err(Error::DegenerateFrame { s, theta });
    }
    let radial_tangent = radial_slope / (g11.sqrt() * lambda);
    let mut sample = SurfaceSample {
        space,
        position: Position::Quadric(frame.position.to_array()),
        normal: normal.to_array(),
        kappa_meridian,
        kappa_parallel,
        radius,
        support,
        potential,
        radial_tangent,
        q: 0.0,
    };
    sample.q = pinch_q(&sample);
    Ok(sample)
}

/// `|<dF/ds, dF/ds> - 1|` measured by finite differences: `s` is the
/// arclength of the generating curve, so this residual gauges the whole
/// evaluation path (table, interpolation, differencing).
pub fn meridian_speed_residual(cat: &Catenoid, s: f64, theta: f64, fd_step: f64) -> Result<f64> {
    let eval = |s: f64, theta: f64| cat.eval(s, theta);
    let frame = frame_at(&eval, s, theta, fd_step)?;
    let speed = match cat.model {
        CatenoidModel::Hyperbolic => frame.f_s.dot(frame.f_s),
        CatenoidModel::Spherical => frame.f_s.dot_euclidean(frame.f_s),
    };
    Ok((speed - 1.0).abs())
}

/// Normal orientation at the neck making the interior support nonpositive.
pub(crate) fn neck_orientation(cat: &Catenoid) -> Result<f64> {
    let raw = quadric_sample(cat, 0.0, 0.0, SURFACE_FD_STEP, 1.0)?;
    Ok(if raw.support > 0.0 { -1.0 } else { 1.0 })
}

impl Catenoid {
    /// Full geometric sample at `(s, theta)`: unit normal, principal
    /// curvatures from finite differences, geodesic radius, support,
    /// potential, and the pinching value.
    pub fn sample_geometry(&self, s: f64, theta: f64, fd_step: f64) -> Result<SurfaceSample> {
        quadric_sample(self, s, theta, fd_step, self.orientation())
    }
}

/// Standalone geometric sample; builds the family member first.
pub fn surface_geometry(
    model: CatenoidModel,
    a: f64,
    s: f64,
    theta: f64,
    fd_step: f64,
    cfg: &NumericsConfig,
) -> Result<SurfaceSample> {
    let cat = Catenoid::new(model, a, cfg)?;
    cat.sample_geometry(s, theta, fd_step)
}

fn grid_nodes(n_s: usize, n_theta: usize, s0: f64) -> Result<(Vec<f64>, Vec<f64>)> {
    if n_s < 3 || n_theta < 4 {
        return Err(Error::InvalidArgument(format!(
            "surface grids need n_s >= 3 and n_theta >= 4, got ({n_s}, {n_theta})"
        )));
    }
    // Odd count keeps the neck circle on the grid.
    let n_s = if n_s.is_multiple_of(2) { n_s + 1 } else { n_s };
    let s_nodes: Vec<f64> = (0..n_s)
        .map(|i| s0 * (2.0 * i as f64 / (n_s - 1) as f64 - 1.0))
        .collect();
    let theta_nodes: Vec<f64> = (0..n_theta)
        .map(|j| std::f64::consts::TAU * j as f64 / n_theta as f64)
        .collect();
    Ok((s_nodes, theta_nodes))
}

/// Sample the full annulus on an `n_s x n_theta` grid (boundary rows
/// included; `n_s` rounded up to odd so the neck is on the grid).
pub fn surface_grid(
    cat: &Catenoid,
    n_s: usize,
    n_theta: usize,
    fd_step: f64,
) -> Result<Vec<GridPoint>> {
    let (s_nodes, theta_nodes) = grid_nodes(n_s, n_theta, cat.s0)?;
    let last = s_nodes.len() - 1;
    let mut grid = Vec::with_capacity(s_nodes.len() * theta_nodes.len());
    for (i, &s) in s_nodes.iter().enumerate() {
        for &theta in &theta_nodes {
            grid.push(GridPoint {
                s,
                theta,
                on_boundary: i == 0 || i == last,
                sample: cat.sample_geometry(s, theta, fd_step)?,
            });
        }
    }
    Ok(grid)
}

fn cross3(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn dot3(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn critical_sample(
    cat: &CriticalCatenoid,
    s: f64,
    theta: f64,
    fd_step: f64,
    orientation: f64,
) -> Result<SurfaceSample> {
    // Reuse the 4d frame machinery with a zero fourth component.
    let eval = |s: f64, theta: f64| -> Result<LorentzVec4> {
        let p = cat.eval(s, theta);
        Ok(LorentzVec4::new(p[0], p[1], p[2], 0.0))
    };
    let frame = frame_at(&eval, s, theta, fd_step)?;
    let take3 = |v: LorentzVec4| [v.y1, v.y2, v.y3];
    let position = take3(frame.position);
    let f_s = take3(frame.f_s);
    let f_theta = take3(frame.f_theta);
    let g11 = dot3(f_s, f_s);
    let g22 = dot3(f_theta, f_theta);
    if !(g11 > 0.0 && g22 > 1e-12) {
        return Err(Error::DegenerateFrame { s, theta });
    }
    let normal_raw = cross3(f_s, f_theta);
    let nn = dot3(normal_raw, normal_raw);
    if nn <= 0.0 {
        return Err(Error::DegenerateFrame { s, theta });
    }
    let scale = orientation / nn.sqrt();
    let normal = [
        normal_raw[0] * scale,
        normal_raw[1] * scale,
        normal_raw[2] * scale,
    ];
    let kappa_meridian = dot3(take3(frame.f_ss), normal) / g11;
    let kappa_parallel = dot3(take3(frame.f_thetatheta), normal) / g22;
    let radius = dot3(position, position).sqrt();
    if radius <= 0.0 {
        return Err(Error::DegenerateFrame { s, theta });
    }
    let support = dot3(position, normal);
    let radial_tangent = dot3(position, f_s) / (radius * g11.sqrt());
    let mut sample = SurfaceSample {
        space: SpaceForm::Euclidean,
        position: Position::Ball(position),
        normal: [normal[0], normal[1], normal[2], 0.0],
        kappa_meridian,
        kappa_parallel,
        radius,
        support,
        potential: 1.0,
        radial_tangent,
        q: 0.0,
    };
    sample.q = pinch_q(&sample);
    Ok(sample)
}

impl CriticalCatenoid {
    pub fn sample_geometry(&self, s: f64, theta: f64, fd_step: f64) -> Result<SurfaceSample> {
        let raw = critical_sample(self, 0.0, 0.0, fd_step, 1.0)?;
        let orientation = if raw.support > 0.0 { -1.0 } else { 1.0 };
        critical_sample(self, s, theta, fd_step, orientation)
    }
}

/// Grid sampling of the critical catenoid in the Euclidean unit ball.
pub fn critical_surface_grid(
    cat: &CriticalCatenoid,
    n_s: usize,
    n_theta: usize,
    fd_step: f64,
) -> Result<Vec<GridPoint>> {
    let (s_nodes, theta_nodes) = grid_nodes(n_s, n_theta, cat.s0)?;
    let raw = critical_sample(cat, 0.0, 0.0, fd_step, 1.0)?;
    let orientation = if raw.support > 0.0 { -1.0 } else { 1.0 };
    let last = s_nodes.len() - 1;
    let mut grid = Vec::with_capacity(s_nodes.len() * theta_nodes.len());
    for (i, &s) in s_nodes.iter().enumerate() {
        for &theta in &theta_nodes {
            grid.push(GridPoint {
                s,
                theta,
                on_boundary: i == 0 || i == last,
                sample: critical_sample(cat, s, theta, fd_step, orientation)?,
            });
        }
    }
    Ok(grid)
}

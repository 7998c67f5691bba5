//! The pinching functional `Q = |A|^2 <N, X>^2 / (lambda')^2`, its factorized
//! meridian form, the convexity Hessians, and certification reports.

use serde::{Deserialize, Serialize};

use crate::catenoid::{self, Catenoid, CatenoidModel, CriticalCatenoid};
use crate::error::{Error, Result};
use crate::numerics::sym2_eigenvalues;
use crate::profile::ProfileSolution;
use crate::spaceform::SpaceForm;

/// Samples with potential below this floor are rejected (spherical points
/// approaching the hemisphere equator).
pub const POTENTIAL_FLOOR: f64 = 1e-10;

/// Model-tagged coordinates of a surface point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Position {
    /// Poincare ball or Euclidean ball coordinates.
    Ball([f64; 3]),
    /// Hyperboloid or round-sphere coordinates.
    Quadric([f64; 4]),
}

/// One certified point of a surface: normal, principal curvatures in the
/// meridian/parallel principal frame, geodesic radius, support function
/// `<N, X>`, potential `lambda'`, and the pinching value.
#[derive(Clone, Copy, Debug)]
pub struct SurfaceSample {
    pub space: SpaceForm,
    pub position: Position,
    /// Unit normal components (fourth entry zero for ball-model samples).
    pub normal: [f64; 4],
    /// Principal curvature along the meridian direction.
    pub kappa_meridian: f64,
    /// Principal curvature along the rotation direction.
    pub kappa_parallel: f64,
    /// Geodesic distance from the ball center.
    pub radius: f64,
    /// Support function `<N, X>` with `X = lambda d_r`.
    pub support: f64,
    /// Potential `lambda'(r)`.
    pub potential: f64,
    /// Component of the unit radial direction along the meridian principal
    /// direction; the rotation direction carries none.
    pub radial_tangent: f64,
    /// Pinching value `|A|^2 support^2 / potential^2`.
    pub q: f64,
}

impl SurfaceSample {
    /// Larger principal curvature.
    pub fn kappa1(&self) -> f64 {
        self.kappa_meridian.max(self.kappa_parallel)
    }

    /// Smaller principal curvature.
    pub fn kappa2(&self) -> f64 {
        self.kappa_meridian.min(self.kappa_parallel)
    }

    /// `|A|^2 = kappa_1^2 + kappa_2^2`.
    pub fn second_form_norm2(&self) -> f64 {
        self.kappa_meridian * self.kappa_meridian + self.kappa_parallel * self.kappa_parallel
    }

    /// Mean curvature residual `|kappa_1 + kappa_2|`.
    pub fn minimality_residual(&self) -> f64 {
        (self.kappa_meridian + self.kappa_parallel).abs()
    }

    /// Support against the unit radial field, `<N, d_r> = support / lambda`.
    pub fn unit_support(&self) -> Result<f64> {
        let lambda = self.space.lambda(self.radius)?;
        Ok(self.support / lambda)
    }
}

/// The pinching value of a sample.
pub fn pinch_q(sample: &SurfaceSample) -> f64 {
    let s = sample.support;
    sample.second_form_norm2() * s * s / (sample.potential * sample.potential)
}

/// Transport of one principal curvature under the conformal change
/// `g = rho^2 g_0`: `kappa = kappa_bar / rho - Nbar(rho) / rho^2`, where
/// `Nbar(rho)/rho^2` reduces to the Euclidean inner product of the unit
/// normal with the position.
pub fn conformal_curvature_shift(kappa_bar: f64, normal_dot_position: f64, rho: f64) -> f64 {
    kappa_bar / rho - normal_dot_position
}

/// Principal curvatures of the profile surface of revolution in hyperbolic
/// space, via the Euclidean curvatures and the conformal shift. Returns
/// `(kappa_meridian, kappa_parallel)`.
pub fn conformal_curvatures(t: f64, f: f64, fp: f64, fpp: f64) -> Result<(f64, f64)> {
    let gap = 1.0 - t * t - f * f;
    if f <= 0.0 || gap <= 0.0 {
        return Err(Error::RhsDomain {
            t,
            state: vec![f, fp, fpp],
            message: "conformal curvatures need f > 0 and t^2 + f^2 < 1".into(),
        });
    }
    let slope = (1.0 + fp * fp).sqrt();
    let rho = 2.0 / gap;
    let kappa_bar_meridian = -fpp / (slope * slope * slope);
    let kappa_bar_parallel = 1.0 / (f * slope);
    let normal_dot_position = (t * fp - f) / slope;
    Ok((
        conformal_curvature_shift(kappa_bar_meridian, normal_dot_position, rho),
        conformal_curvature_shift(kappa_bar_parallel, normal_dot_position, rho),
    ))
}

/// The factorized meridian form of the pinching bound:
/// `(1 + f^2 - t^2 - 2tff')(f - tf') / (f (1 + f'^2)(1 + t^2 + f^2))`,
/// which equals `kappa_parallel * (-<N, d_r>) * tanh r` on profile samples
/// and decreases from 1 at the neck to 0 at the free boundary.
pub fn eq1_value(t: f64, f: f64, fp: f64) -> Result<f64> {
    if f <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "eq1_value needs f > 0, got f = {f}"
        )));
    }
    let numerator = (1.0 + f * f - t * t - 2.0 * t * f * fp) * (f - t * fp);
    let denominator = f * (1.0 + fp * fp) * (1.0 + t * t + f * f);
    Ok(numerator / denominator)
}

/// Full pinching sample assembled from profile data at `(t, f, f', f'')`.
pub fn profile_surface_sample(t: f64, f: f64, fp: f64, fpp: f64) -> Result<SurfaceSample> {
    let (kappa_meridian, kappa_parallel) = conformal_curvatures(t, f, fp, fpp)?;
    let norm = (t * t + f * f).sqrt();
    if norm == 0.0 {
        return Err(Error::InvalidArgument(
            "profile samples never pass through the center".into(),
        ));
    }
    let radius = ((1.0 + norm) / (1.0 - norm)).ln();
    let lambda = 2.0 * norm / (1.0 - norm * norm);
    let potential = (1.0 + norm * norm) / (1.0 - norm * norm);
    let slope = (1.0 + fp * fp).sqrt();
    let unit_support = (t * fp - f) / (slope * norm);
    let support = lambda * unit_support;
    let radial_tangent = (1.0 - unit_support * unit_support).max(0.0).sqrt();
    let mut sample = SurfaceSample {
        space: SpaceForm::Hyperbolic,
        position: Position::Ball([t, f, 0.0]),
        normal: [fp / slope, -1.0 / slope, 0.0, 0.0],
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

/// Raw Hessian of `lambda(r)^2` restricted to the surface, as a bilinear
/// form on the principal frame:
/// `2 lambda lambda'' <Y, d_r><Z, d_r> + 2 (lambda')^2 <Y + A(Y) <N, X>/lambda', Z>`.
fn hessian_form_raw(
    space: SpaceForm,
    sample: &SurfaceSample,
    y: [f64; 2],
    z: [f64; 2],
) -> Result<f64> {
    let lambda = space.lambda(sample.radius)?;
    let lambda_prime = space.lambda_prime(sample.radius)?;
    let lambda_second = space.lambda_second(sample.radius)?;
    let a1 = sample.radial_tangent;
    let y_r = y[0] * a1;
    let z_r = z[0] * a1;
    let y_dot_z = y[0] * z[0] + y[1] * z[1];
    let shape_y_dot_z = sample.kappa_meridian * y[0] * z[0] + sample.kappa_parallel * y[1] * z[1];
    Ok(2.0 * lambda * lambda_second * y_r * z_r
        + 2.0 * lambda_prime * lambda_prime * y_dot_z
        + 2.0 * lambda_prime * shape_y_dot_z * sample.support)
}

/// Hessian form of `lambda^2` for the Euclidean and hyperbolic cases (where
/// `lambda lambda'' >= 0` makes it the convexity certificate directly).
pub fn hessian_form(
    space: SpaceForm,
    sample: &SurfaceSample,
    y: [f64; 2],
    z: [f64; 2],
) -> Result<f64> {
    if space == SpaceForm::Spherical {
        return Err(Error::InvalidArgument(
            "the raw Hessian of lambda^2 is not the spherical certificate; use hessian_form_spherical".into(),
        ));
    }
    hessian_form_raw(space, sample, y, z)
}

/// Spherical convexity certificate: Hessian of `Phi(lambda^2)` with
/// `Phi(s) = 1 - sqrt(1 - s)`, composed per
/// `Phi'' (grad phi (x) grad phi) + Phi' Hess phi`.
pub fn hessian_form_spherical(sample: &SurfaceSample, y: [f64; 2], z: [f64; 2]) -> Result<f64> {
    let space = SpaceForm::Spherical;
    let lambda = space.lambda(sample.radius)?;
    let lambda_prime = space.lambda_prime(sample.radius)?;
    // At s = sin^2 r the factor 1 - s is cos^2 r; evaluating it through
    // lambda' avoids the cancellation of 1 - sin^2 r near the equator.
    let one_minus_s = lambda_prime * lambda_prime;
    let phi_prime = 0.5 / one_minus_s.sqrt();
    let phi_second = 0.25 / one_minus_s.powf(1.5);
    let a1 = sample.radial_tangent;
    let grad_term = phi_second
        * 4.0
        * lambda
        * lambda
        * lambda_prime
        * lambda_prime
        * (y[0] * a1)
        * (z[0] * a1);
    Ok(grad_term + phi_prime * hessian_form_raw(space, sample, y, z)?)
}

/// Residual of the closed-form cancellation
/// `2 Phi'' lambda^2 (lambda')^2 + Phi' lambda lambda''` at `s = sin^2 r`;
/// identically zero on `(0, pi/2)`.
pub fn spherical_identity_residual(r: f64) -> Result<f64> {
    if !(r.is_finite() && r > 0.0 && r < std::f64::consts::FRAC_PI_2) {
        return Err(Error::RadiusOutOfRange {
            space: SpaceForm::Spherical,
            r,
            r_max: std::f64::consts::FRAC_PI_2,
        });
    }
    let space = SpaceForm::Spherical;
    let lambda = space.lambda(r)?;
    let lambda_prime = space.lambda_prime(r)?;
    let lambda_second = space.lambda_second(r)?;
    let one_minus_s = lambda_prime * lambda_prime; // 1 - sin^2 r = cos^2 r
    let phi_prime = 0.5 / one_minus_s.sqrt();
    let phi_second = 0.25 / one_minus_s.powf(1.5);
    Ok(
        2.0 * phi_second * lambda * lambda * lambda_prime * lambda_prime
            + phi_prime * lambda * lambda_second,
    )
}

/// Minimum eigenvalue of the convexity Hessian over the samples, using the
/// composed spherical form where required.
pub fn hessian_psd_min_eigenvalue(space: SpaceForm, samples: &[SurfaceSample]) -> Result<f64> {
    let mut min_eig = f64::INFINITY;
    let e1 = [1.0, 0.0];
    let e2 = [0.0, 1.0];
    for sample in samples {
        let (h11, h12, h22) = match space {
            SpaceForm::Spherical => (
                hessian_form_spherical(sample, e1, e1)?,
                hessian_form_spherical(sample, e1, e2)?,
                hessian_form_spherical(sample, e2, e2)?,
            ),
            _ => (
                hessian_form_raw(space, sample, e1, e1)?,
                hessian_form_raw(space, sample, e1, e2)?,
                hessian_form_raw(space, sample, e2, e2)?,
            ),
        };
        let (lo, _) = sym2_eigenvalues(h11, h12, h22);
        min_eig = min_eig.min(lo);
    }
    Ok(min_eig)
}

/// Pass/fail thresholds of a certification run.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct Gates {
    /// Slack over the exact bound `Q <= 2`.
    pub q_slack: f64,
    /// Floor for the minimum Hessian eigenvalue.
    pub min_eig_floor: f64,
    /// Gate on `|kappa_1 + kappa_2|`.
    pub minimality_gate: f64,
    /// Gate on the boundary support residual `|<N, d_r>|`.
    pub support_gate: f64,
    /// Required strict decrease between meridian samples.
    pub monotone_margin: f64,
    /// Meridian band excluded at both endpoints of the monotonicity check.
    pub endpoint_band: f64,
}

impl Gates {
    /// Gates for profile solutions (exact conformal curvature formulas).
    pub fn profile() -> Gates {
        Gates {
            q_slack: 1e-8,
            min_eig_floor: -1e-9,
            minimality_gate: 1e-8,
            support_gate: 1e-8,
            monotone_margin: 1e-10,
            endpoint_band: 1e-6,
        }
    }

    /// Gates for parametric catenoids (finite-difference curvature
    /// extraction).
    pub fn parametric() -> Gates {
        Gates {
            minimality_gate: 1e-5,
            ..Gates::profile()
        }
    }
}

/// Aggregate certification verdict.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct CertificationReport {
    /// Largest pinching value over all samples.
    pub sup_q: f64,
    /// Meridian parameter at which the supremum is attained.
    pub argmax_t: f64,
    /// Largest pinching value over the boundary samples.
    pub boundary_q: f64,
    /// Strict decrease of the meridian profile outside the endpoint bands.
    pub monotone: bool,
    /// Minimum convexity-Hessian eigenvalue over all samples.
    pub min_hess_eig: f64,
    /// Largest mean-curvature residual over all samples.
    pub max_mean_curv_residual: f64,
    /// Largest `|<N, d_r>|` over the boundary samples.
    pub max_boundary_support_residual: f64,
}

impl CertificationReport {
    /// True when every gate passes.
    pub fn passes(&self, gates: &Gates) -> bool {
        self.sup_q <= 2.0 + gates.q_slack
            && self.monotone
            && self.min_hess_eig >= gates.min_eig_floor
            && self.max_mean_curv_residual <= gates.minimality_gate
            && self.max_boundary_support_residual <= gates.support_gate
    }
}

/// Everything `build_report` needs, independent of how the surface was
/// constructed.
struct CertifyInput<'a> {
    space: SpaceForm,
    /// (meridian parameter, sample) over the whole surface.
    samples: &'a [(f64, SurfaceSample)],
    /// Samples on the free boundary.
    boundary: &'a [SurfaceSample],
    /// Meridian decay series from neck to boundary, parameter ascending.
    meridian: &'a [(f64, f64)],
    gates: Gates,
}

fn build_report(input: CertifyInput<'_>) -> Result<CertificationReport> {
    let max_residual = input
        .samples
        .iter()
        .map(|(_, s)| s.minimality_residual())
        .fold(0.0f64, f64::max);
    if max_residual > input.gates.minimality_gate {
        return Err(Error::CertificationRefused {
            residual: max_residual,
            gate: input.gates.minimality_gate,
        });
    }
    let (mut sup_q, mut argmax_t) = (f64::NEG_INFINITY, f64::NAN);
    for (param, sample) in input.samples {
        if sample.q > sup_q {
            sup_q = sample.q;
            argmax_t = *param;
        }
    }
    let boundary_q = input.boundary.iter().map(|s| s.q).fold(0.0f64, f64::max);
    let mut support_residual = 0.0f64;
    for sample in input.boundary {
        support_residual = support_residual.max(sample.unit_support()?.abs());
    }
    let monotone = meridian_is_decreasing(input.meridian, &input.gates);
    let all_samples: Vec<SurfaceSample> = input.samples.iter().map(|(_, s)| *s).collect();
    let min_hess_eig = hessian_psd_min_eigenvalue(input.space, &all_samples)?;
    Ok(CertificationReport {
        sup_q,
        argmax_t,
        boundary_q,
        monotone,
        min_hess_eig,
        max_mean_curv_residual: max_residual,
        max_boundary_support_residual: support_residual,
    })
}

fn meridian_is_decreasing(series: &[(f64, f64)], gates: &Gates) -> bool {
    if series.len() < 2 {
        return false;
    }
    let end = series.last().expect("nonempty").0;
    series.windows(2).all(|w| {
        let inside = w[0].0 >= gates.endpoint_band && w[1].0 <= end - gates.endpoint_band;
        !inside || w[1].1 - w[0].1 < -gates.monotone_margin
    })
}

/// Certify a profile solution: `Q = 2 eq1^2` with the supremum 2 on the
/// neck, zero on the boundary, strict decay between, PSD Hessian, and
/// minimality/support residual gates.
pub fn certify_profile(solution: &ProfileSolution) -> Result<CertificationReport> {
    let gates = Gates::profile();
    let mut samples = Vec::with_capacity(solution.samples.len());
    let mut meridian = Vec::with_capacity(solution.samples.len());
    for p in &solution.samples {
        samples.push((p.t, profile_surface_sample(p.t, p.f, p.fp, p.fpp)?));
        meridian.push((p.t, eq1_value(p.t, p.f, p.fp)?));
    }
    let boundary = [samples.last().expect("samples nonempty").1];
    build_report(CertifyInput {
        space: SpaceForm::Hyperbolic,
        samples: &samples,
        boundary: &boundary,
        meridian: &meridian,
        gates,
    })
}

/// Certify a quadric-model catenoid on an `n_s x n_theta` grid spanning the
/// full annulus; the meridian decay series is `sqrt(Q/2)` on the positive
/// half-meridian.
pub fn certify_catenoid(cat: &Catenoid, n_s: usize, n_theta: usize) -> Result<CertificationReport> {
    let space = match cat.model {
        CatenoidModel::Hyperbolic => SpaceForm::Hyperbolic,
        CatenoidModel::Spherical => SpaceForm::Spherical,
    };
    let grid =
        catenoid::geometry::surface_grid(cat, n_s, n_theta, catenoid::geometry::SURFACE_FD_STEP)?;
    let mut samples = Vec::with_capacity(grid.len());
    let mut boundary = Vec::new();
    for point in &grid {
        samples.push((point.s, point.sample));
        if point.on_boundary {
            boundary.push(point.sample);
        }
    }
    let mut meridian: Vec<(f64, f64)> = grid
        .iter()
        .filter(|p| p.theta == 0.0 && p.s >= 0.0)
        .map(|p| (p.s, (p.sample.q / 2.0).max(0.0).sqrt()))
        .collect();
    meridian.sort_by(|a, b| a.0.total_cmp(&b.0));
    build_report(CertifyInput {
        space,
        samples: &samples,
        boundary: &boundary,
        meridian: &meridian,
        gates: Gates::parametric(),
    })
}

/// Certify the Euclidean critical catenoid against `|A|^2 <x, N>^2 <= 2`
/// through the same pipeline (`lambda = r`, `lambda' = 1`).
pub fn certify_critical_catenoid(
    cat: &CriticalCatenoid,
    n_s: usize,
    n_theta: usize,
) -> Result<CertificationReport> {
    let grid = catenoid::geometry::critical_surface_grid(
        cat,
        n_s,
        n_theta,
        catenoid::geometry::SURFACE_FD_STEP,
    )?;
    let mut samples = Vec::with_capacity(grid.len());
    let mut boundary = Vec::new();
    for point in &grid {
        samples.push((point.s, point.sample));
        if point.on_boundary {
            boundary.push(point.sample);
        }
    }
    let mut meridian: Vec<(f64, f64)> = grid
        .iter()
        .filter(|p| p.theta == 0.0 && p.s >= 0.0)
        .map(|p| (p.s, (p.sample.q / 2.0).max(0.0).sqrt()))
        .collect();
    meridian.sort_by(|a, b| a.0.total_cmp(&b.0));
    build_report(CertifyInput {
        space: SpaceForm::Euclidean,
        samples: &samples,
        boundary: &boundary,
        meridian: &meridian,
        gates: Gates::parametric(),
    })
}

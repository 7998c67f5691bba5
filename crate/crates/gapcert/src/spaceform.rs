//! The three warped-product ambient geometries.
//!
//! Each space form is the warped product `[0, r_max) x S^2` with metric
//! `dr^2 + lambda(r)^2 g_{S^2}`. The warping function determines the
//! curvature: `lambda = r` (Euclidean), `sinh r` (hyperbolic), `sin r`
//! (spherical hemisphere). The conformal position field is `X = lambda d_r`
//! and the potential function is `lambda'`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Ambient constant-curvature geometry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpaceForm {
    Euclidean,
    Hyperbolic,
    Spherical,
}

impl SpaceForm {
    /// Sign of the sectional curvature: 0, -1 or +1.
    pub fn curvature_sign(self) -> i32 {
        match self {
            SpaceForm::Euclidean => 0,
            SpaceForm::Hyperbolic => -1,
            SpaceForm::Spherical => 1,
        }
    }

    /// Upper bound of the admissible radius range (`pi/2` on the hemisphere).
    pub fn r_max(self) -> f64 {
        match self {
            SpaceForm::Euclidean | SpaceForm::Hyperbolic => f64::INFINITY,
            SpaceForm::Spherical => std::f64::consts::FRAC_PI_2,
        }
    }

    fn check_radius(self, r: f64) -> Result<()> {
        if !r.is_finite() || r < 0.0 || r >= self.r_max() {
            return Err(Error::RadiusOutOfRange {
                space: self,
                r,
                r_max: self.r_max(),
            });
        }
        Ok(())
    }

    /// Warping function `lambda(r)`.
    pub fn lambda(self, r: f64) -> Result<f64> {
        self.check_radius(r)?;
        Ok(match self {
            SpaceForm::Euclidean => r,
            SpaceForm::Hyperbolic => r.sinh(),
            SpaceForm::Spherical => r.sin(),
        })
    }

    /// Potential function `lambda'(r)`.
    pub fn lambda_prime(self, r: f64) -> Result<f64> {
        self.check_radius(r)?;
        Ok(match self {
            SpaceForm::Euclidean => 1.0,
            SpaceForm::Hyperbolic => r.cosh(),
            SpaceForm::Spherical => r.cos(),
        })
    }

    /// Second derivative `lambda''(r)`; satisfies `lambda'' = -k lambda`
    /// with `k` the curvature sign.
    pub fn lambda_second(self, r: f64) -> Result<f64> {
        self.check_radius(r)?;
        Ok(match self {
            SpaceForm::Euclidean => 0.0,
            SpaceForm::Hyperbolic => r.sinh(),
            SpaceForm::Spherical => -r.sin(),
        })
    }
}

/// Geodesic distance from `z` to the origin of the Poincare ball,
/// `r = ln((1 + |z|)/(1 - |z|))`.
pub fn poincare_geodesic_radius(z: [f64; 3]) -> Result<f64> {
    let norm = euclidean_norm(z);
    check_in_ball(norm)?;
    Ok(((1.0 + norm) / (1.0 - norm)).ln())
}

/// `tanh` of the geodesic radius in closed form, `2|z|/(1 + |z|^2)`.
pub fn poincare_tanh_radius(z: [f64; 3]) -> Result<f64> {
    let norm = euclidean_norm(z);
    check_in_ball(norm)?;
    Ok(2.0 * norm / (1.0 + norm * norm))
}

/// Conformal factor `rho(z) = 2/(1 - |z|^2)` of the Poincare ball metric
/// together with its Euclidean gradient `rho^2 z`.
pub fn conformal_factor(z: [f64; 3]) -> Result<(f64, [f64; 3])> {
    let norm = euclidean_norm(z);
    check_in_ball(norm)?;
    let rho = 2.0 / (1.0 - norm * norm);
    let grad = [rho * rho * z[0], rho * rho * z[1], rho * rho * z[2]];
    Ok((rho, grad))
}

fn euclidean_norm(z: [f64; 3]) -> f64 {
    (z[0] * z[0] + z[1] * z[1] + z[2] * z[2]).sqrt()
}

fn check_in_ball(norm: f64) -> Result<()> {
    if !norm.is_finite() || norm >= 1.0 {
        return Err(Error::OutsideUnitBall { norm });
    }
    Ok(())
}

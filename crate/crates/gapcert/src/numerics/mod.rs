//! Shared numerical kernel: adaptive ODE integration with dense output and
//! event location, adaptive quadrature, bracketed root finding, finite
//! differences with Richardson refinement, and 2x2 symmetric eigenvalues.

mod diff;
mod ode;
mod quad;
mod root;

pub use diff::fd_derivative;
pub use ode::{integrate_ode, integrate_to_grid, EventHit, StepRecord, Trajectory};
pub use quad::quad_adaptive;
pub use root::find_root_bracketed;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerances and limits shared by every numerical routine.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct NumericsConfig {
    pub ode_rel_tol: f64,
    pub ode_abs_tol: f64,
    pub quad_tol: f64,
    pub root_tol: f64,
    pub fd_step: f64,
    pub max_steps: usize,
}

impl Default for NumericsConfig {
    fn default() -> Self {
        NumericsConfig {
            ode_rel_tol: 1e-10,
            ode_abs_tol: 1e-12,
            quad_tol: 1e-12,
            root_tol: 1e-12,
            fd_step: 1e-5,
            max_steps: 1_000_000,
        }
    }
}

impl NumericsConfig {
    pub fn validate(&self) -> Result<()> {
        let tols = [
            ("ode_rel_tol", self.ode_rel_tol),
            ("ode_abs_tol", self.ode_abs_tol),
            ("quad_tol", self.quad_tol),
            ("root_tol", self.root_tol),
            ("fd_step", self.fd_step),
        ];
        for (name, v) in tols {
            if !v.is_finite() || v <= 0.0 {
                return Err(Error::InvalidConfig(format!(
                    "{name} must be strictly positive, got {v}"
                )));
            }
        }
        if self.max_steps == 0 {
            return Err(Error::InvalidConfig("max_steps must be >= 1".into()));
        }
        Ok(())
    }
}

/// Eigenvalues of the symmetric matrix `[[m11, m12], [m12, m22]]`,
/// returned in ascending order.
pub fn sym2_eigenvalues(m11: f64, m12: f64, m22: f64) -> (f64, f64) {
    let mean = 0.5 * (m11 + m22);
    let half_diff = 0.5 * (m11 - m22);
    let disc = half_diff.hypot(m12);
    (mean - disc, mean + disc)
}

//! Numerical construction and certification of free-boundary rotational
//! minimal annuli in geodesic balls of the three space forms.
//!
//! The library builds the annuli two independent ways — by shooting the
//! meridian profile ODE in the Poincare ball and from closed-form quadric
//! parametrizations — and certifies the curvature pinching bound
//! `|A|^2 <N, X>^2 / (lambda')^2 <= 2` on them: equality holds exactly on the
//! neck circle, the value decays monotonically along the meridian, and it
//! vanishes on the free boundary.

pub mod catenoid;
pub mod cli;
pub mod error;
pub mod numerics;
pub mod pinch;
pub mod profile;
pub mod spaceform;

pub use error::{Error, Result};
pub use numerics::NumericsConfig;
pub use spaceform::SpaceForm;

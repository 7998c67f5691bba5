//! Crate-wide error type.

use crate::spaceform::SpaceForm;

/// Errors produced by construction and certification routines.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("radius {r} outside the admissible range [0, {r_max}) for {space:?}")]
    RadiusOutOfRange {
        space: SpaceForm,
        r: f64,
        r_max: f64,
    },

    #[error("point lies outside the open unit ball (|z| = {norm})")]
    OutsideUnitBall { norm: f64 },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("ode step limit {max_steps} reached at t = {t}")]
    StepLimit { t: f64, max_steps: usize },

    #[error("rhs domain violation at t = {t}, state {state:?}: {message}")]
    RhsDomain {
        t: f64,
        state: Vec<f64>,
        message: String,
    },

    #[error("quadrature subdivision limit reached on [{lo}, {hi}]")]
    SubdivisionLimit { lo: f64, hi: f64 },

    #[error("invalid bracket [{lo}, {hi}]: f(lo) = {flo}, f(hi) = {fhi}")]
    InvalidBracket {
        lo: f64,
        hi: f64,
        flo: f64,
        fhi: f64,
    },

    #[error("non-finite value encountered in {context}")]
    NonFinite { context: String },

    #[error("no free boundary for this c: {0}")]
    NoFreeBoundary(String),

    #[error("target radius {target} outside the attainable range [{r_min}, {r_max}] of the scan")]
    RadiusUnattainable { target: f64, r_min: f64, r_max: f64 },

    #[error("degenerate tangent frame at (s, theta) = ({s}, {theta})")]
    DegenerateFrame { s: f64, theta: f64 },

    #[error("potential lambda' = {potential} below the degeneracy floor; sample rejected")]
    DegeneratePotential { potential: f64 },

    #[error("certification refused: max |H| residual {residual} exceeds gate {gate}")]
    CertificationRefused { residual: f64, gate: f64 },

    #[error("grid too coarse for the Laplacian stencil: {0}")]
    GridTooCoarse(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

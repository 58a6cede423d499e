//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("profile undefined on requested range [0, {t_max}] (defined up to {defined})")]
    ProfileDomain { t_max: f64, defined: f64 },

    #[error("profile discontinuity at t={t}: jump {jump} exceeds modulus bound {bound}")]
    ProfileDiscontinuity { t: f64, jump: f64, bound: f64 },

    #[error("integrator step underflow at t={t} (h={h})")]
    StepUnderflow { t: f64, h: f64 },

    #[error("{func} undefined at t={t}: denominator vanishes")]
    DivisionAtZero { func: &'static str, t: f64 },

    #[error("negative density: s changes sign inside (0, {r})")]
    NegativeDensity { r: f64 },

    #[error("point leaves chart domain (margin {margin}) at {what}")]
    NearBoundary { what: String, margin: f64 },

    #[error("metric not positive definite at {at} (min eigenvalue {min_eig})")]
    MetricNotSpd { at: String, min_eig: f64 },

    #[error("degenerate plane: |w ∧ v|² = {norm} below threshold")]
    DegeneratePlane { norm: f64 },

    #[error("subspace is not J-invariant (defect {defect})")]
    NotJInvariant { defect: f64 },

    #[error("manifold carries no Kähler structure")]
    NotKahler,

    #[error("geodesic left chart domain at arclength {t}")]
    LeftDomain { t: f64 },

    #[error("conjugate or focal point at or before r={r} (det J = {det})")]
    PastConjugate { r: f64, det: f64 },

    #[error("frame degenerate: {0}")]
    FrameDegenerate(String),

    #[error("eigenvalue search range exhausted (last λ = {last})")]
    NonBracketing { last: f64 },

    #[error("c_k + λ s_k vanishes before r={r} (first zero near {at})")]
    LambdaZeroCrossing { r: f64, at: f64 },

    #[error("radial function not monotone: {0}")]
    NotMonotone(String),

    #[error("NaN at quadrature node {index}")]
    NanAtNode { index: usize },

    #[error("fit residual {residual} above threshold {threshold}: grid too coarse")]
    GridTooCoarse { residual: f64, threshold: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;

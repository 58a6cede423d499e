//! Numerical verification of quantitative comparison estimates in Riemannian
//! and Kähler geometry.
//!
//! The crate is organised around five layers:
//!
//! * [`scalar`] — the 1-D comparison ODE `x'' = -k(t) x` and everything
//!   derived from its sine-like/cosine-like solution pair (model densities,
//!   model volumes, zeros).
//! * [`quadrature`] — deterministic integration over direction spheres and
//!   radial intervals, with error estimates.
//! * [`geometry`] — chart-defined manifolds, finite-difference curvature,
//!   Kähler structures, built-in model spaces and submanifold embeddings.
//! * [`transport`] — geodesics with parallel frames, matrix Jacobi equations,
//!   volume densities, distance Laplacians, index forms, conjugate radii.
//! * [`engine`] — the comparison checkers themselves: each evaluates one
//!   estimate as LHS vs RHS on a radius grid and emits a [`engine::report::ComparisonReport`].

pub mod engine;
pub mod error;
pub mod geometry;
pub mod ode;
pub mod quadrature;
pub mod scalar;
pub mod transport;
pub mod util;

pub use error::{Error, Result};

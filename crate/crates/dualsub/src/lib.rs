//! Dual interpolating subdivision schemes of arbitrary arity `m >= 3`,
//! constructed from prescribed half-integer samples of the basic limit
//! function in exact rational arithmetic.
//!
//! The construction reduces a bi-infinite Toeplitz-like interpolation system
//! to Laurent-polynomial algebra: a Taylor-data solve at `z = 1`, extraction
//! of a quotient `theta_hat`, a Bezout equation over the sample sub-symbols,
//! and an assembly/symmetrization/support-minimization stage. Everything is
//! done over arbitrary-precision rationals; no floating point enters the
//! construction path.
//!
//! Entry points:
//! - [`samples::PhiSamples`] / [`samples::SchemeSpec`] describe the input data;
//! - [`construct::construct`] dispatches to the odd- or even-arity pipeline;
//! - [`engine`] applies and verifies schemes (subdivision operator, cascade,
//!   interpolation-system verification, reproduction degree, contractivity,
//!   truncated-system oracle);
//! - [`formats`] defines the JSON/CSV file formats used by the CLI;
//! - [`render`] emits SVG for control polygons and refined curves.
//!
//! See the crate examples for one runnable program per capability.

pub mod construct;
pub mod engine;
pub mod formats;
pub mod laurent;
pub mod linalg;
pub mod mask;
pub mod rational;
pub mod render;
pub mod samples;

pub use laurent::LaurentPoly;
pub use mask::MaskResult;
pub use rational::Rational;
pub use samples::{PhiSamples, SchemeSpec};

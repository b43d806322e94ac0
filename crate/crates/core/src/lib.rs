//! Exact construction and verification of integer frames.
//!
//! An integer frame is held as an integer matrix whose columns are the frame
//! vectors expressed against the eigenbasis of the frame operator. All
//! structural checks (row orthogonality, tightness, equal norm,
//! equiangularity, spark) are decided in exact arbitrary-precision
//! arithmetic; the one deliberate exception is
//! [`analysis::frame_bounds_numeric`], which estimates extreme eigenvalues in
//! floating point for frames that are only nearly tight.

pub mod analysis;
pub mod constructors;
pub mod error;
pub mod feasibility;
pub mod matrix;
pub mod numtheory;
pub mod scalar;

pub use error::{FrameError, Result};
pub use matrix::{Matrix, ScaledFrame};
pub use scalar::Scalar;

/// Arbitrary-precision signed integer.
pub type Int = num_bigint::BigInt;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// Integer frame matrix; columns are the frame vectors.
pub type FrameMatrix = Matrix<Int>;

/// Exact rational matrix used mid-construction, before denominators are
/// cleared.
pub type RationalMatrix = Matrix<Rational>;

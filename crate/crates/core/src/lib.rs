//! Exact-arithmetic kernels for tilt-stability computations on intersection
//! ring models of four threefolds: three products of a toric surface or curve
//! with an abelian variety, and a Calabi-Yau threefold containing a plane.
//!
//! Everything here is exact: scalars live in the rationals or in a single
//! real quadratic extension, divisor classes carry rational coordinates in a
//! fixed basis, and every verdict (ampleness, sign of a twisted character,
//! wall membership) is decided by integer arithmetic. Floating point is used
//! nowhere in this crate.

pub mod chern;
pub mod contfrac;
pub mod frobenius;
pub mod geometry;
pub mod json;
pub mod poly;
pub mod scalar;
pub mod tilt;
pub mod walls;

use thiserror::Error as ThisError;

#[derive(Debug, ThisError)]
pub enum Error {
    #[error("square root of a negative value")]
    NegativeSqrt,
    #[error("mixed quadratic radicals sqrt({0}) and sqrt({1}) cannot be combined")]
    MixedRadicals(u64, u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("square root of an irrational value does not stay in one quadratic extension")]
    IrrationalRadicand,
    #[error("invalid exact scalar literal: {0}")]
    ParseScalar(String),
    #[error("expected {expected} coefficients, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("ampleness undecidable in this model for the given class")]
    AmplenessUndecidable,
    #[error("unsupported for this model: {0}")]
    UnsupportedModel(&'static str),
    #[error("Todd data unavailable for this model")]
    ToddUnavailable,
    #[error("polarization is not ample")]
    NotAmple,
    #[error("discriminant is negative")]
    NegativeDiscriminant,
    #[error("beta-bar is undefined for a character with vanishing rank and degree")]
    BetaBarUndefined,
    #[error("divisor class is not integral")]
    NonIntegralDivisor,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;

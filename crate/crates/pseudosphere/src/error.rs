//! Error type for domain failures.
//!
//! Structural misuse (mixing signatures or coefficient modes in one product)
//! panics instead: those are programming errors the type system mostly rules
//! out already. The variants here are genuine runtime conditions.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension {0} exceeds the 16-vector bitmask bound")]
    DimensionTooLarge(usize),

    #[error("invalid signature: {0}")]
    BadSignature(&'static str),

    #[error("grade {grade} out of range for dimension {dim}")]
    InvalidGrade { grade: usize, dim: usize },

    #[error("exponential input is not a bivector")]
    NotABivector,

    #[error("exact-mode exponential requires a simple bivector (B^2 scalar)")]
    NonSimpleBivector,

    #[error("not a unit versor: |u~u - 1| = {0:e}")]
    NotAVersor(f64),

    #[error("generator parameter matrix is not antisymmetric")]
    NotAntisymmetric,

    #[error("point lies on the Cayley-Klein absolute (sigma^2 = 4*l^2)")]
    OnAbsolute,

    #[error("chart inversion undefined at the north pole (X^4 = +l)")]
    NorthPole,

    #[error("singular even element: psi * rev(psi) = 0")]
    SingularSpinor,

    #[error("negative-branch constant requires m >= 4*sqrt(3)/l (lambda^2 = {0})")]
    InvalidBranch(f64),

    #[error("plane bivector must square to +1 (got {0})")]
    NotAUnitPlane(f64),

    #[error("radius list must be strictly increasing with at least 3 entries")]
    BadRadiusLadder,

    #[error("invalid run configuration: {0}")]
    BadConfig(String),

    #[error("i/o failure: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization failure: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

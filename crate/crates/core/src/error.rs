use thiserror::Error;

/// Errors from polynomial arithmetic, parsing and the Gröbner engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("incompatible rings: {0}")]
    IncompatibleRing(String),
    #[error("incompatible monomial orders: {0:?} vs {1:?}")]
    IncompatibleOrder(crate::poly::MonomialOrder, crate::poly::MonomialOrder),
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("{0} is not prime or is not below 2^31")]
    InvalidModulus(u32),
    #[error("{0} is not invertible modulo {1}")]
    NotInvertible(String, u32),
    #[error("cannot eliminate {eliminate} of {nvars} variables")]
    InvalidElimination { eliminate: usize, nvars: usize },
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
}

/// Errors from presented rings and their ideals.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("invalid ring declaration: {0}")]
    InvalidRing(String),
}

/// Errors from the closure, standardized-radical and semistar layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("unsupported computation: {0}")]
    Unsupported(String),
    #[error("capability mismatch: {0}")]
    Capability(String),
    #[error("element {0} is not regular")]
    NonRegular(String),
    #[error("decomposition rejected at component {component}: {reason}")]
    DecompositionRejected { component: usize, reason: String },
    #[error("decomposition rejected: components intersect to {found}, expected {expected}")]
    IntersectionMismatch { expected: String, found: String },
    #[error("decomposition is not verified: {0}")]
    Unverified(String),
}

impl From<PolyError> for Error {
    fn from(e: PolyError) -> Self {
        Error::Ring(RingError::Poly(e))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

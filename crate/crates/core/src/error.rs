use thiserror::Error;

use crate::exterior::SpaceKind;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension {n} is not supported (expected 1..={max})")]
    UnsupportedDimension { n: usize, max: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("expected an element of {expected:?}, found {found:?}")]
    SpaceMismatch { expected: SpaceKind, found: SpaceKind },
    #[error("grade {grade} out of range 0..={max}")]
    GradeOutOfRange { grade: usize, max: usize },
    #[error("coefficient vector has length {found}, expected {expected}")]
    BadLength { expected: usize, found: usize },
    #[error("a duality product pairs a multiform with a multivector, got {left:?} and {right:?}")]
    PairingType { left: SpaceKind, right: SpaceKind },
    #[error("element does not lie in {0}")]
    NotInSubspace(String),
    #[error("{0} is singular")]
    Singular(&'static str),
    #[error("argument {slot} lies outside its slot signature")]
    OutsideSignature { slot: usize },
    #[error("expected {expected} arguments, got {found}")]
    Arity { expected: usize, found: usize },
    #[error("invalid signature: {0}")]
    Signature(String),
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("point {0:?} lies outside the chart domain")]
    OutsideDomain(Vec<f64>),
}

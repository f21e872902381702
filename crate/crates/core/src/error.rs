use thiserror::Error;

use crate::complex::Face;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex index {index} outside ground set of size {n}")]
    VertexOutOfRange { index: usize, n: usize },

    #[error("ground set of size {0} exceeds the supported maximum of 63")]
    GroundSetTooLarge(usize),

    #[error("{face:?} is not a face of the complex")]
    NotAFace { face: Face },

    #[error("operation undefined on the void complex")]
    VoidComplex,

    #[error("{0} is not a prime in [2, 2^31)")]
    NotPrime(u64),

    #[error("ideal is not squarefree: {0}")]
    NotSquarefree(String),

    #[error("ideal is not proper (unit ideal)")]
    UnitIdeal,

    #[error("ideal is zero")]
    ZeroIdeal,

    #[error("exponent vector of length {got} in ring with {expected} variables")]
    ArityMismatch { expected: usize, got: usize },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("corpus cap exceeded: {0}")]
    CapExceeded(String),

    #[error("vacuous suite: {0}")]
    VacuousSuite(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

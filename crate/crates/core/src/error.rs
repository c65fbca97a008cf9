use thiserror::Error;

use crate::field::Field;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("malformed field element {0:?}")]
    Malformed(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is singular")]
    Singular,
    #[error("repeated eigenvalue {0}")]
    RepeatedEigenvalue(String),
    #[error("matrix is not diagonalizable with the given eigenvalues")]
    NotDiagonalizable,
    #[error("expected {expected} distinct eigenvalues, found {found}")]
    EigenvalueCount { expected: usize, found: usize },
    #[error("components do not form a decomposition of the space")]
    NotADecomposition,
    #[error("split decompositions disagree on the shape")]
    ShapeMismatch,
    #[error("parameter array is not admissible: fails {0:?}")]
    Inadmissible(Vec<String>),
    #[error("vanishing denominator: {0}")]
    VanishingDenominator(&'static str),
    #[error("{0} does not act as a scalar on E*_0 V")]
    NotScalar(&'static str),
    #[error("seed vector is zero or outside E*_0 V")]
    InvalidSeed,
    #[error("an eta vector vanishes; the system is not of shape (1,2,1)")]
    ZeroEta,
    #[error("eigenspace of dimension {0} is not supported by the invariant-subspace search")]
    UnsupportedEigenspace(usize),
    #[error("enumeration grid of {0} arrays exceeds the limit {1}")]
    GridTooLarge(u128, u128),
    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

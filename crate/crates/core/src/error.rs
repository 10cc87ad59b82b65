use thiserror::Error;

use crate::simplex::{Simplex, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("filtration is not monotone: face {face} has a larger value than {coface}")]
    MonotonicityViolation { face: Simplex, coface: Simplex },

    #[error("face {0} of a supported simplex is missing")]
    MissingFace(Simplex),

    #[error("unknown vertex {0}")]
    UnknownVertex(Vertex),

    #[error("subset filtration is below the total filtration at {0}")]
    SubBelowTotal(Simplex),

    #[error("interval [{lo}, {hi}] is invalid")]
    InvalidInterval { lo: String, hi: String },

    #[error("map is not filtration preserving at {0}")]
    NotFiltrationPreserving(Simplex),

    #[error("map sends the subset outside the target subset")]
    SubNotMappedIntoSub,

    #[error("vertex {0} has no image under the map")]
    IncompleteMap(Vertex),

    #[error("{0} is not a prime")]
    NotPrime(u32),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("subspace is not contained in the ambient subspace")]
    SubspaceNotContained,

    #[error("class is not in the target group")]
    ClassNotInTarget,

    #[error("boundary class has no representative at the lower endpoint")]
    NotRepresentableAtLowerEndpoint,

    #[error("filtered set is empty")]
    EmptySet,

    #[error("vertex {0} is not present at the lower endpoint")]
    VertexNotPresent(Vertex),

    #[error("triad is not proper")]
    NotProperTriad,

    #[error("map is not a retraction: {0}")]
    NotARetraction(String),

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("malformed instance: {0}")]
    MalformedInstance(String),

    #[error("skeletal and direct theories disagree: {0}")]
    OracleMismatch(String),

    #[error("linear map is not invertible")]
    NotInvertible,

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

use crate::face::Face;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} is too large (at most 2^32 - 1)")]
    FieldTooLarge(u64),
    #[error("unknown field `{0}` (expected a prime or `q`)")]
    BadField(String),
    #[error("cannot parse scalar `{0}`")]
    BadScalar(String),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("vertex {vertex} is outside [1, {n}]")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("repeated vertex {0}")]
    RepeatedVertex(usize),
    #[error("empty face")]
    EmptyFace,
    #[error("ground size {0} is not supported (1..=64)")]
    GroundTooLarge(usize),
    #[error("need 2 <= k <= n, got n = {n}, k = {k}")]
    BadDimension { n: usize, k: usize },
    #[error("face {face} has {got} vertices, expected {expected}")]
    WrongCardinality { face: Face, expected: usize, got: usize },
    #[error("duplicate face {0}")]
    DuplicateFace(Face),
    #[error("{0} is not a face of the complex")]
    NotAFace(Face),
    #[error("{0} is not in the ground set")]
    NotInGround(Face),
    #[error("ground set of {0} elements exceeds the supported 128")]
    MatroidTooLarge(usize),

    #[error("{what}: size {size} exceeds guard {guard}")]
    GuardExceeded { what: &'static str, size: usize, guard: usize },
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
    #[error("vector is not in the circuit space")]
    NotACycle,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

/// Errors raised by the core library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime modulus in [2, 2^31)")]
    NotPrime(u64),

    #[error("invalid degree type: {0}")]
    InvalidDegreeType(String),

    #[error("no inclusion bound exists (n = {n} < d + 1 = {})", d + 1)]
    NoInclusionBound { n: usize, d: u32 },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("series cutoff mismatch: {left} vs {right}")]
    CutoffMismatch { left: usize, right: usize },

    #[error("{q} is not a power of the characteristic {p}")]
    NotFrobeniusPower { q: u64, p: u32 },

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: u32, found: u32 },

    #[error("ideal not primary up to degree {0}")]
    NotPrimary(u64),

    #[error("forms live over different fields or variable sets")]
    FieldMismatch,

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("elements belong to different algebras ({left} vs {right})")]
    AlgebraMismatch { left: String, right: String },
    #[error("orientation mismatch: {0}")]
    OrientationMismatch(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("unknown algebra `{0}`")]
    UnknownAlgebra(String),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("algebra `{0}` is not associative")]
    NonAssociative(String),
    #[error("algebra `{0}` has no unit")]
    NonUnital(String),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("negative exponent at position {pos}")]
    NegativeExponent { pos: usize },
    #[error("malformed input: {0}")]
    Format(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("trials must be at least 1")]
    NoTrials,
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Format(e.to_string())
    }
}

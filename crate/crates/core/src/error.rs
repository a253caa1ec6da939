use thiserror::Error;

use crate::presented::ValidationFailure;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("vertex {index} out of range for a tree with {size} vertices")]
    VertexOutOfRange { index: usize, size: usize },

    #[error("degree must be positive")]
    ZeroDegree,

    #[error("alphabet must not be empty")]
    EmptyAlphabet,

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("tensor rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("invalid labeled tree: {0}")]
    InvalidLabeledTree(String),

    #[error("arity {0} is too large for an exhaustive check")]
    ArityTooLarge(usize),

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("element is not homogeneous of degree {expected} (found a term of degree {found})")]
    Inhomogeneous { expected: usize, found: usize },

    #[error("the zero element has no filtration degree")]
    ZeroElement,

    #[error("unknown basis element `{0}`")]
    UnknownBasis(String),

    #[error("not an isomorphism in degree {degree}: {detail}")]
    NotIsomorphic { degree: usize, detail: String },

    #[error("malformed algebra document: {0}")]
    Format(String),

    #[error("validation failed: {0}")]
    Validation(#[from] ValidationFailure),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

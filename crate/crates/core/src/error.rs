use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {v} out of range for {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("expected two distinct vertices, got {0} twice")]
    SameVertex(usize),
    #[error("ordering has length {got}, digraph has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },
    #[error("not a permutation of 0..{0}")]
    NotPermutation(usize),
    #[error("size {got} exceeds the search bound {bound}")]
    BoundExceeded { got: usize, bound: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown name {0}")]
    UnknownName(String),
}

pub type Result<T> = std::result::Result<T, Error>;

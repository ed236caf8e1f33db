use thiserror::Error;

/// Errors raised by constructors, group algorithms and the checkers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("permutation is not an automorphism: {0}")]
    NotAutomorphism(String),
    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("set is not invariant under the stabilizer (image {0} escapes)")]
    NotInvariant(usize),
    #[error("element cap {cap} exceeded (group order {order})")]
    CapExceeded { cap: u64, order: String },
    #[error("expected G/G' elementary abelian of order 4, found index {0}")]
    BadQuotient(String),
    #[error("tuple length {k} exceeds domain size {n}")]
    TupleTooLong { k: usize, n: usize },
    #[error("unsupported field order {0}")]
    UnsupportedField(usize),
    #[error("unsupported parameter: {0}")]
    Unsupported(String),
    #[error("vertex limit {limit} exceeded ({n} vertices)")]
    LimitExceeded { n: usize, limit: usize },
    #[error("group does not preserve the bipartition")]
    BipartitionNotPreserved,
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field order {q} exceeds the configured bound {bound}")]
    FieldTooLarge { q: u64, bound: u64 },
    #[error("{what}: size {size} exceeds the configured bound {bound}")]
    BoundExceeded {
        what: &'static str,
        size: String,
        bound: u64,
    },
    #[error("census budget of {budget} nodes exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("polynomial is not monic of positive degree")]
    NotMonic,
    #[error("the loop graph T is not allowed here: {0}")]
    LoopGraph(&'static str),
    #[error("vertex set is not a clique")]
    NotAClique,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("map is not a bijection: {0}")]
    NotABijection(String),
    #[error("invalid ring spec: {0}")]
    InvalidSpec(String),
    #[error("ring spec is not commutative: {0}")]
    NonCommutative(String),
    #[error("no closed form: {0}")]
    NoFormula(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("fixture error: {0}")]
    Fixture(String),
    #[error("internal verification failed: {0}")]
    Internal(String),
}

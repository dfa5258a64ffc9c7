use thiserror::Error;

/// Errors raised by graph construction and the module algorithms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("vertex set over a universe of {found} vertices used with a graph on {expected} vertices")]
    UniverseMismatch { expected: usize, found: usize },

    #[error("the input set must not be empty")]
    EmptySet,

    #[error("u and v must be distinct (got {0} twice)")]
    SameVertex(usize),

    #[error("set of size {size} is below the closure threshold alpha+beta+2 = {required}")]
    BelowThreshold { size: usize, required: usize },

    #[error("graph on {n} vertices is too small: at least {required} vertices needed")]
    GraphTooSmall { n: usize, required: usize },

    #[error("graph on {n} vertices exceeds the exhaustive-search cap of {cap}")]
    OracleCapExceeded { n: usize, cap: usize },

    #[error("parameters alpha={alpha}, beta={beta} need max(alpha, beta) < n - 1 (n = {n})")]
    ParamsTooLarge { alpha: usize, beta: usize, n: usize },

    #[error("sets must be disjoint")]
    Overlapping,

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("partition with {parts} parts exceeds the limit of {limit} for union checks")]
    TooManyParts { parts: usize, limit: usize },

    #[error("edge {{{0}, {1}}} does not cross the bipartition")]
    NonCrossingEdge(usize, usize),

    #[error("set is not contained in the X side")]
    NotOneSided,

    #[error("X side has {size} vertices, at least {required} needed")]
    SideTooSmall { size: usize, required: usize },

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("graph is not connected; an explicit side assignment is required")]
    Disconnected,

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("tuples must both have alpha+beta+1 = {expected} vertices and differ")]
    BadTupleSize { expected: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors reported by graph construction, codecs and the exponential searches.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid graph6 input: {0}")]
    Graph6(String),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("vertex set belongs to a graph on {found} vertices, expected {expected}")]
    HostMismatch { expected: usize, found: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("vertex set is not independent")]
    NotIndependent,

    #[error("vertex set is not a maximal independent set")]
    NotMaximalIndependent,

    #[error("independent set of size {size} is not maximum (alpha = {alpha})")]
    NotMaximum { size: usize, alpha: usize },

    #[error("vertex {0} is not a member of the given set")]
    NotMember(usize),

    #[error("remainder has order {order}; vertex {vertex} is isolatable")]
    RemainderTooSmall { vertex: usize, order: usize },

    #[error("({vertex}, {set:?}) does not certify an isolatable vertex")]
    InvalidIsolatable { vertex: usize, set: Vec<usize> },

    #[error("need |A| > |B|, got {larger} and {smaller}")]
    SizesNotOrdered { larger: usize, smaller: usize },

    #[error("not a permutation of 0..{0}")]
    InvalidPermutation(usize),

    #[error("invalid greedy decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("factor graphs must have at least one vertex")]
    EmptyFactor,

    #[error("{what} of size {size} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("order {0} out of range")]
    OrderOutOfRange(usize),
}

pub type Result<T> = std::result::Result<T, Error>;

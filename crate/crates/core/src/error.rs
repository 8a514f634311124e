use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("parallel edge {0}-{1}")]
    ParallelEdge(usize, usize),

    #[error("edge {0}-{1} is not in the graph")]
    MissingEdge(usize, usize),

    #[error("graph is not a tree")]
    NotATree,

    #[error("graph is not connected")]
    Disconnected,

    #[error("edge set must be nonempty")]
    EmptyEdgeSet,

    #[error("invalid matching: {0}")]
    InvalidMatching(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid family spec: {0}")]
    InvalidFamily(String),

    #[error("tolerance {0:e} is below the supported precision 1e-13")]
    ToleranceTooSmall(f64),

    #[error("{0} is outside the supported range")]
    OutOfRange(String),

    #[error("no tree on {n} vertices has matching number {beta}")]
    EmptyClass { n: usize, beta: usize },

    #[error("invalid transformation site: {0}")]
    InvalidSite(String),

    #[error("proof step failed: {0}")]
    ProofStep(String),

    #[error("numerical routine did not converge: {0}")]
    NoConvergence(String),
}

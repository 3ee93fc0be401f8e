use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("invalid composition: {0}")]
    Semantic(String),

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph has {n} vertices; the limit is {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("operation needs path/cycle component structure, but the graph is derived")]
    DerivedGraph,

    #[error("family is not uniform")]
    NotUniform,

    #[error("{u}-{v} is not an edge")]
    NotAnEdge { u: usize, v: usize },

    #[error("set {0} is not independent")]
    NotIndependent(String),

    #[error("r = {r} out of range 1..={max}")]
    RankOutOfRange { r: usize, max: usize },

    #[error("hypothesis not met: {0}")]
    Hypothesis(String),

    #[error("malformed family line {line}: {message}")]
    FamilyFormat { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

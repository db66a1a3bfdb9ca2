use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: &'static str },
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {0} listed twice")]
    DuplicateVertex(usize),
    #[error("({0}, {1}) is not an edge of the host graph")]
    NotAnEdge(usize, usize),
    #[error("eigenvalue index {index} out of range 1..={order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("order {n} exceeds the limit {limit} for {what}")]
    SizeLimit { what: &'static str, n: usize, limit: usize },
    #[error("invalid generator spec: {0}")]
    GenSpec(String),
    #[error("reduction trace does not replay: {0}")]
    Replay(String),
}

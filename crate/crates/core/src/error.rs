use thiserror::Error;

/// Errors raised by graph construction and the CIS machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge ({0}, {1}) is a self-loop")]
    SelfLoop(usize, usize),
    #[error("edge ({u}, {v}) references a vertex outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("vertex {v} does not exist in a graph of order {n}")]
    NoSuchVertex { v: usize, n: usize },
    #[error("graphs of order {0} are not supported (limit is {max})", max = crate::graph::MAX_ORDER)]
    TooLarge(usize),
    #[error("order {n} exceeds the cap of {cap}")]
    OverCap { n: usize, cap: usize },
    #[error("graph is disconnected: vertices {0} and {1} lie in different components")]
    Disconnected(usize, usize),
    #[error("graph is not a block graph: block {0:?} is not complete")]
    NotBlockGraph(Vec<usize>),
    #[error("graph is a path; {0}")]
    IsPath(&'static str),
    #[error("empty graph")]
    Empty,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid certificate: {0}")]
    BadCertificate(String),
    #[error("attachment {0:?} is not a k-clique of the current graph")]
    BadAttachment(Vec<usize>),
    #[error("strict decrease failed: {0}")]
    NoImprovement(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

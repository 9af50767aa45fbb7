use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("{0}-{1} is not an edge of the graph")]
    NotAnEdge(usize, usize),

    #[error("vertex {vertex} selects {count} edges but the cap is {cap}")]
    SelectionCap {
        vertex: usize,
        count: usize,
        cap: usize,
    },

    #[error("{what} is limited to {limit} vertices, got {n}")]
    SizeLimit {
        what: &'static str,
        limit: usize,
        n: usize,
    },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    /// The input graph is outside the class an operation requires.
    #[error("graph is not {0}")]
    WrongClass(&'static str),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn params(msg: impl Into<String>) -> Self {
        Error::InvalidParameters(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}

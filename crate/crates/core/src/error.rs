use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("{0} vertices exceeds the cap of {cap}", cap = crate::MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("{0} is not an edge")]
    NotAnEdge(String),
    #[error("invalid orientation: {0}")]
    InvalidOrientation(String),
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("missing fixture {0}")]
    MissingFixture(String),
    #[error("io error: {0}")]
    Io(String),
    /// A computed value contradicts a theorem the code relies on.
    #[error("internal invariant violation: {0}")]
    InvariantViolation(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

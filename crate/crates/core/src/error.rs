use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    #[error("edge list parse error at line {line}: {message}")]
    EdgeList { line: usize, message: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Input exceeds the size an exact routine is configured for.
    #[error("{solver}: {what} = {size} exceeds the limit of {limit}; {hint}")]
    Capacity {
        solver: &'static str,
        what: &'static str,
        size: usize,
        limit: usize,
        hint: &'static str,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

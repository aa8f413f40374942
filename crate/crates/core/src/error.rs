use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// A line of a graph or seed file could not be understood.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph is disconnected: vertex {unreached} is not reachable from vertex 0")]
    Disconnected { unreached: usize },

    #[error("invalid seeds: {0}")]
    InvalidSeeds(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Contraction ran out of positive-weight (or positive-score) edges
    /// before reaching the target number of clusters.
    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("score function `{name}` returned invalid score {value}")]
    InvalidScore { name: String, value: f64 },

    #[error("linear solver failed: {0}")]
    Solver(String),

    /// An exhaustive enumeration would exceed its size guard.
    #[error("enumeration guard exceeded: {what} is {actual}, limit {limit}")]
    TooLarge {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("metric undefined: {0}")]
    Metric(String),
}

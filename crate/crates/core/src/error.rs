use thiserror::Error;

/// Errors produced by the solvers, the function registry and the harness.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid search space: {0}")]
    InvalidSpace(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("unknown function id {id}; valid ids are {valid}")]
    UnknownFunction { id: u32, valid: String },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("objective returned a non-finite value ({value}) at {position:?}")]
    NonFiniteObjective { value: f64, position: Vec<f64> },

    #[error("population has {have} members but {need} survivors were requested")]
    InsufficientPopulation { have: usize, need: usize },

    #[error("cannot summarize an empty sample")]
    EmptySample,

    #[error("trace contains no records")]
    EmptyTrace,

    #[error("unknown format `{0}`")]
    UnknownFormat(String),

    #[error("malformed trace record on line {line}: {reason}")]
    MalformedTrace { line: usize, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

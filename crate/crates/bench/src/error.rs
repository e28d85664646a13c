use adaptive_search::{ConfigError, DatasetError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("invalid distribution spec: {0}")]
    InvalidSpec(String),
    #[error("invalid query spec: {0}")]
    InvalidQuerySpec(String),
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Dataset(#[from] DatasetError),
    #[error("unknown report format {0:?} (expected table, csv or jsonl)")]
    UnknownFormat(String),
    #[error("malformed report: {0}")]
    Report(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("cell {cell}: {source}")]
    Cell {
        cell: String,
        #[source]
        source: Box<BenchError>,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl BenchError {
    /// Process exit code: 2 for data errors, 3 for invariant violations,
    /// 1 for anything the user asked for incorrectly.
    pub fn exit_code(&self) -> i32 {
        match self {
            BenchError::Dataset(_) | BenchError::Report(_) | BenchError::Io(_) => 2,
            BenchError::Invariant(_) => 3,
            BenchError::Cell { source, .. } => source.exit_code(),
            BenchError::InvalidSpec(_)
            | BenchError::InvalidQuerySpec(_)
            | BenchError::Config(_)
            | BenchError::UnknownFormat(_) => 1,
        }
    }
}

pub type Result<T, E = BenchError> = std::result::Result<T, E>;

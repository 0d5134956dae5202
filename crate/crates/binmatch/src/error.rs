use std::path::PathBuf;

use thiserror::Error;

/// Errors from file IO, benchmarking and the command line.
#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Core(#[from] binmatch_core::Error),

    #[error("invalid benchmark problem: {0}")]
    Problem(String),

    #[error("{algorithm} disagrees with the oracle: got {got:?}, expected {expected:?}")]
    Mismatch {
        algorithm: binmatch_core::Algorithm,
        got: Vec<usize>,
        expected: Vec<usize>,
    },

    #[error("invalid argument: {0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("column is not in canonical Z2 form: {0}")]
    NonCanonical(String),
    #[error("index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid point cloud: {0}")]
    InvalidPoints(String),
    #[error("invalid complex: {0}")]
    InvalidComplex(String),
    #[error("invalid filtration: {0}")]
    InvalidFiltration(String),
    #[error("homology dimension {p} out of range (complex dimension {max})")]
    DimensionOutOfRange { p: usize, max: usize },
    #[error("chain is not a cycle (non-zero boundary)")]
    NotACycle,
    #[error("chain is empty")]
    EmptyChain,
    #[error("chain support is not contained in the subcomplex")]
    OutsideSubcomplex,
    #[error("interval is not in the barcode: {0}")]
    InvalidInterval(String),
    #[error("operation requires {0}")]
    Unsupported(String),
    #[error("oracle budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error("{path}:{line}: {message}")]
    Parse { path: PathBuf, line: usize, message: String },
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn parse(path: &std::path::Path, line: usize, message: impl Into<String>) -> Self {
        Error::Parse { path: path.to_path_buf(), line, message: message.into() }
    }
}

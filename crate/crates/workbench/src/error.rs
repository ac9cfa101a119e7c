use clifford_morph::{CliffordError, FieldError, MorphError};
use thiserror::Error;

use crate::expr::ParseError;

#[derive(Debug, Error)]
pub enum WorkbenchError {
    /// Bad flags or input text; maps to exit status 2.
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("table document: {0}")]
    Document(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Clifford(#[from] CliffordError),
    #[error(transparent)]
    Morph(#[from] MorphError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

impl WorkbenchError {
    pub fn exit_code(&self) -> u8 {
        match self {
            WorkbenchError::Usage(_) | WorkbenchError::Parse(_) => 2,
            _ => 1,
        }
    }
}

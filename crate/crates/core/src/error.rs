use thiserror::Error;

/// Errors raised while building, reading or measuring networks.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An identifier or value failed validation.
    #[error("invalid input: {0}")]
    Validation(String),

    /// Malformed input text. `line` is 1-based.
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },

    /// A two-mode file joined two vertices of the same mode.
    #[error("line {line}: edge {source_index}-{target_index} does not join an event to an actor")]
    NotBipartite {
        line: usize,
        source_index: usize,
        target_index: usize,
    },

    /// A measure was requested outside the domain where it is defined.
    #[error("domain error: {0}")]
    Domain(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn format(line: usize, message: impl Into<String>) -> Self {
        Error::Format {
            line,
            message: message.into(),
        }
    }

    /// Line number carried by parse errors, if any.
    pub fn line(&self) -> Option<usize> {
        match self {
            Error::Format { line, .. } | Error::NotBipartite { line, .. } => Some(*line),
            _ => None,
        }
    }
}

use thiserror::Error;

pub type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Error)]
pub enum CliError {
    /// `column` is 1-based, counted in characters of the input text.
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error(transparent)]
    Core(#[from] qubit_mobius::Error),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("CSV error: {0}")]
    Csv(#[from] csv::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("malformed trajectory file: {0}")]
    Format(String),
}

impl CliError {
    pub fn parse(column: usize, message: impl Into<String>) -> Self {
        CliError::Parse {
            column,
            message: message.into(),
        }
    }
}

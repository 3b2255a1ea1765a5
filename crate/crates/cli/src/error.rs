use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}:{line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },
    #[error("{path}: {message}")]
    Invalid { path: String, message: String },
    #[error("{}", caret_message(.message, .input, *.position))]
    Expression {
        message: String,
        input: String,
        position: usize,
    },
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] subshift_core::Error),
}

fn caret_message(message: &str, input: &str, position: usize) -> String {
    format!(
        "parse error at column {}: {message}\n  {input}\n  {}^",
        position + 1,
        " ".repeat(position)
    )
}

impl CliError {
    /// Every error is an input error.
    pub fn exit_code(&self) -> u8 {
        2
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

use thiserror::Error;

use crate::formats::{object, to_json};
use serde_json::Value;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] fockcanon::Error),
    #[error("malformed input: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl CliError {
    /// Typed name reported in the error JSON.
    pub fn name(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "UsageError",
            CliError::Core(e) => e.name(),
            CliError::Parse(_) => "ParseError",
            CliError::Io(_) => "IoError",
            CliError::Csv(_) => "CsvError",
        }
    }

    /// 2 for anything the caller can fix by changing the input, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) | CliError::Csv(_) => 1,
            _ => 2,
        }
    }

    pub fn to_json(&self) -> String {
        to_json(&object([
            ("error", Value::String(self.name().into())),
            ("message", Value::String(self.to_string())),
        ]))
    }
}

use ipm_core::io::InputError;
use ipm_core::RankError;

pub const VALIDATION: u8 = 1;
pub const PARSE: u8 = 2;
pub const NUMERICAL: u8 = 3;
pub const USAGE: u8 = 64;

#[derive(Debug, thiserror::Error)]
#[error("{message}")]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn new(code: u8, message: impl Into<String>) -> Self {
        CliError {
            code,
            message: message.into(),
        }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        CliError::new(USAGE, message)
    }

    pub fn in_file(self, file: &str) -> Self {
        CliError::new(self.code, format!("{file}: {}", self.message))
    }
}

impl From<InputError> for CliError {
    fn from(e: InputError) -> Self {
        CliError::new(PARSE, e.to_string())
    }
}

impl From<RankError> for CliError {
    fn from(e: RankError) -> Self {
        match e {
            RankError::Invalid(violations) => {
                let lines: Vec<String> = violations.iter().map(ToString::to_string).collect();
                CliError::new(
                    VALIDATION,
                    format!("{} violation(s)\n  {}", violations.len(), lines.join("\n  ")),
                )
            }
            RankError::Graph(e) => CliError::new(VALIDATION, e.to_string()),
            e @ (RankError::Solve(_) | RankError::Metrics(_) | RankError::SolverDisagreement(_)) => {
                CliError::new(NUMERICAL, e.to_string())
            }
        }
    }
}

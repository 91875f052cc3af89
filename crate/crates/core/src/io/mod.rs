//! Input formats (JSON game logs, playscript) and output renderers.

mod json;
mod playscript;
mod render;

use thiserror::Error;

pub use json::{parse_gamelog, parse_report, render_gamelog, SchemaError, REPORT_KIND, SCHEMA_VERSION};
pub use playscript::{parse_playscript, ParseError, ParseErrorKind};
pub use render::{
    render_batch_summary, render_comparison, render_matrix, render_report, render_report_for,
    MatrixForm, ReportFormat,
};

use crate::model::GameLog;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum InputFormat {
    /// JSON when the first non-blank character is `{`, playscript otherwise.
    #[default]
    Auto,
    Json,
    Playscript,
}

impl std::str::FromStr for InputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "auto" => Ok(InputFormat::Auto),
            "json" => Ok(InputFormat::Json),
            "playscript" => Ok(InputFormat::Playscript),
            other => Err(format!("unknown input format `{other}` (expected auto, json or playscript)")),
        }
    }
}

impl InputFormat {
    pub fn detect(text: &str) -> InputFormat {
        if text.trim_start().starts_with('{') {
            InputFormat::Json
        } else {
            InputFormat::Playscript
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InputError {
    #[error(transparent)]
    Json(#[from] SchemaError),
    #[error(transparent)]
    Playscript(#[from] ParseError),
}

/// Parses a game in either format. No semantic validation is done here.
pub fn parse_game(text: &str, format: InputFormat) -> Result<GameLog, InputError> {
    let format = match format {
        InputFormat::Auto => InputFormat::detect(text),
        f => f,
    };
    match format {
        InputFormat::Json => Ok(parse_gamelog(text)?),
        _ => Ok(parse_playscript(text)?),
    }
}

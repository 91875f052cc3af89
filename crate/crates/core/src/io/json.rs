//! JSON game logs (`schema_version` "1") and JSON IPM reports.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::metrics::{IpmReport, TeamAggregates};
use crate::model::{Event, GameLog, Metadata, Roster, Sport};

pub const SCHEMA_VERSION: &str = "1";
pub const REPORT_KIND: &str = "ipm_report";

/// Structural problem in a JSON document, with a path such as `events[3].to`.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{path} (line {line}, column {column}): {reason}")]
pub struct SchemaError {
    pub path: String,
    pub reason: String,
    pub line: usize,
    pub column: usize,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GameLogDocument {
    schema_version: String,
    sport: Sport,
    teams: Vec<Roster>,
    #[serde(default, skip_serializing_if = "Metadata::is_empty")]
    metadata: Metadata,
    #[serde(default)]
    events: Vec<Event>,
}

fn schema_error(err: serde_path_to_error::Error<serde_json::Error>) -> SchemaError {
    let path = err.path().to_string();
    let inner = err.into_inner();
    let reason = inner.to_string();
    // serde_json appends " at line L column C"; we report those separately.
    let reason = match reason.rfind(" at line ") {
        Some(i) => reason[..i].to_string(),
        None => reason,
    };
    SchemaError {
        path,
        reason,
        line: inner.line(),
        column: inner.column(),
    }
}

fn decode<'de, T: Deserialize<'de>>(text: &'de str) -> Result<T, SchemaError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(schema_error)
}

/// Structural parse only. Team/event consistency is left to
/// [`validate_game`](crate::model::validate_game).
pub fn parse_gamelog(text: &str) -> Result<GameLog, SchemaError> {
    let doc: GameLogDocument = decode(text)?;
    let top = |path: &str, reason: String| SchemaError {
        path: path.into(),
        reason,
        line: 1,
        column: 1,
    };
    if doc.schema_version != SCHEMA_VERSION {
        return Err(top(
            "schema_version",
            format!("unsupported schema version `{}`, expected `{SCHEMA_VERSION}`", doc.schema_version),
        ));
    }
    let teams: [Roster; 2] = doc
        .teams
        .try_into()
        .map_err(|t: Vec<Roster>| top("teams", format!("expected exactly 2 teams, found {}", t.len())))?;
    let [home, away] = teams;
    let mut log = GameLog::new(doc.sport, home, away, doc.events);
    log.metadata = doc.metadata;
    Ok(log)
}

/// Pretty-printed JSON game log that [`parse_gamelog`] reads back unchanged.
pub fn render_gamelog(log: &GameLog) -> String {
    let doc = GameLogDocument {
        schema_version: SCHEMA_VERSION.into(),
        sport: log.sport,
        teams: log.teams.to_vec(),
        metadata: log.metadata.clone(),
        events: log.events.clone(),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("game logs always serialize");
    out.push('\n');
    out
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct ReportDocument {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub game: Option<String>,
    /// Player ids by IPM descending.
    pub standings: Vec<String>,
    pub report: IpmReport,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub aggregates: Option<TeamAggregates>,
}

/// Reads a report written by `render_report` in JSON form.
pub fn parse_report(text: &str) -> Result<IpmReport, SchemaError> {
    let doc: ReportDocument = decode(text)?;
    if doc.kind != REPORT_KIND {
        return Err(SchemaError {
            path: "kind".into(),
            reason: format!("expected `{REPORT_KIND}`, found `{}`", doc.kind),
            line: 1,
            column: 1,
        });
    }
    Ok(doc.report)
}

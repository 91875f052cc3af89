//! Text, CSV and JSON renderings of reports, matrices and comparisons.

use std::fmt::Write as _;
use std::str::FromStr;

use num_rational::Ratio;

use super::json::{ReportDocument, REPORT_KIND};
use crate::metrics::{ComparisonTable, IpmReport, TeamAggregate, TeamAggregates};
use crate::ranking::{to_transition, GraphError, PlayDigraph, SolveMethod};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReportFormat {
    #[default]
    Table,
    Csv,
    Json,
}

impl FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "table" => Ok(ReportFormat::Table),
            "csv" => Ok(ReportFormat::Csv),
            "json" => Ok(ReportFormat::Json),
            other => Err(format!("unknown format `{other}` (expected table, csv or json)")),
        }
    }
}

impl ReportFormat {
    pub fn extension(self) -> &'static str {
        match self {
            ReportFormat::Table => "txt",
            ReportFormat::Csv => "csv",
            ReportFormat::Json => "json",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixForm {
    Adjacency,
    RowStochastic,
    ColumnStochastic,
}

impl FromStr for MatrixForm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "adjacency" => Ok(MatrixForm::Adjacency),
            "row-stochastic" => Ok(MatrixForm::RowStochastic),
            "column-stochastic" => Ok(MatrixForm::ColumnStochastic),
            other => Err(format!(
                "unknown matrix form `{other}` (expected adjacency, row-stochastic or column-stochastic)"
            )),
        }
    }
}

fn hundredths(x: f64) -> String {
    format!("{x:.2}")
}

fn method_name(m: SolveMethod) -> &'static str {
    match m {
        SolveMethod::PowerIteration => "power iteration",
        SolveMethod::DirectSolve => "direct solve",
    }
}

fn csv_string(rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.write_record(&row).expect("writing to memory cannot fail");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is UTF-8")
}

pub fn render_report(
    report: &IpmReport,
    aggregates: Option<&TeamAggregates>,
    format: ReportFormat,
) -> String {
    render_report_for(report, aggregates, format, None)
}

/// Like [`render_report`], labelling JSON output with a game name.
pub fn render_report_for(
    report: &IpmReport,
    aggregates: Option<&TeamAggregates>,
    format: ReportFormat,
    game: Option<&str>,
) -> String {
    match format {
        ReportFormat::Table => render_table(report, aggregates),
        ReportFormat::Csv => {
            let header = ["Player", "Team", "IPM", "IPM_full", "rank"].map(String::from).to_vec();
            let rows = report.standings().into_iter().map(|p| {
                vec![
                    p.id.to_string(),
                    p.team.clone(),
                    hundredths(p.ipm),
                    p.ipm.to_string(),
                    p.rank.to_string(),
                ]
            });
            csv_string(std::iter::once(header).chain(rows))
        }
        ReportFormat::Json => {
            let doc = ReportDocument {
                kind: REPORT_KIND.into(),
                game: game.map(String::from),
                standings: report.standings().iter().map(|p| p.id.to_string()).collect(),
                report: report.clone(),
                aggregates: aggregates.cloned(),
            };
            let mut s = serde_json::to_string_pretty(&doc).expect("reports always serialize");
            s.push('\n');
            s
        }
    }
}

fn render_table(report: &IpmReport, aggregates: Option<&TeamAggregates>) -> String {
    let mut out = String::from("Player | Team | IPM\n");
    for p in report.standings() {
        let _ = writeln!(out, "{} | {} | {}", p.id, p.team, hundredths(p.ipm));
    }
    if let Some(agg) = aggregates {
        out.push_str("\nTeam | AIPM | Starter AIPM | Result\n");
        for (t, team) in agg.teams.iter().enumerate() {
            let result = match agg.winner {
                Some(w) if w == t => "W",
                Some(_) => "L",
                None => "-",
            };
            let starter = team.starter_aipm.map_or_else(|| "-".into(), hundredths);
            let _ = writeln!(out, "{} | {} | {} | {}", team.name, hundredths(team.aipm), starter, result);
        }
    }
    let _ = write!(
        out,
        "\nsolver: {}, residual {:.3e}, goal rank {:.6}",
        method_name(report.method),
        report.residual,
        report.goal_rank
    );
    if let Some(d) = report.solver_discrepancy {
        let _ = write!(out, ", max solver discrepancy {d:.3e}");
    }
    out.push('\n');
    out
}

fn ratio_string(r: &Ratio<u64>) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Matrix dump: a `# nodes:` header, then one whitespace-aligned row per line.
/// Stochastic forms print exact fractions as `p/q`.
pub fn render_matrix(g: &PlayDigraph, form: MatrixForm) -> Result<String, GraphError> {
    let cells: Vec<Vec<String>> = match form {
        MatrixForm::Adjacency => g
            .adjacency()
            .into_iter()
            .map(|row| row.into_iter().map(|c| c.to_string()).collect())
            .collect(),
        MatrixForm::RowStochastic => to_transition(g)?
            .rows()
            .iter()
            .map(|row| row.iter().map(ratio_string).collect())
            .collect(),
        MatrixForm::ColumnStochastic => to_transition(g)?
            .column_stochastic()
            .iter()
            .map(|row| row.iter().map(ratio_string).collect())
            .collect(),
    };
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    let mut out = String::from("# nodes:");
    for node in g.node_order() {
        let _ = write!(out, " {node}");
    }
    out.push('\n');
    for row in cells {
        let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    Ok(out)
}

pub fn render_comparison(table: &ComparisonTable, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(table).expect("tables always serialize");
            s.push('\n');
            s
        }
        ReportFormat::Csv => {
            let mut header = vec!["Player".to_string(), "Team".to_string()];
            header.extend(table.games.iter().cloned());
            header.push("Mean".into());
            let rows = table.rows.iter().map(|r| {
                let mut row = vec![r.id.to_string(), r.team.clone()];
                row.extend(r.ipms.iter().map(|c| c.map_or_else(String::new, hundredths)));
                row.push(hundredths(r.mean));
                row
            });
            csv_string(std::iter::once(header).chain(rows))
        }
        ReportFormat::Table => {
            let mut out = format!("Player | Team | {} | Mean\n", table.games.join(" | "));
            for r in &table.rows {
                let cells: Vec<String> =
                    r.ipms.iter().map(|c| c.map_or_else(|| "-".into(), hundredths)).collect();
                let _ = writeln!(out, "{} | {} | {} | {}", r.id, r.team, cells.join(" | "), hundredths(r.mean));
            }
            out
        }
    }
}

/// Per-game team averages, winning/losing team first where a score is known.
pub fn render_batch_summary(games: &[(String, TeamAggregates)]) -> String {
    let header = [
        "game",
        "team_1",
        "team_2",
        "winner",
        "team_1_aipm",
        "team_2_aipm",
        "team_1_starter_aipm",
        "team_2_starter_aipm",
        "wt_aipm",
        "lt_aipm",
        "wt_starter_aipm",
        "lt_starter_aipm",
    ]
    .map(String::from)
    .to_vec();
    let opt = |x: Option<f64>| x.map_or_else(String::new, hundredths);
    let aipm = |t: Option<&TeamAggregate>| opt(t.map(|t| t.aipm));
    let starter = |t: Option<&TeamAggregate>| opt(t.and_then(|t| t.starter_aipm));
    let rows = games.iter().map(|(game, agg)| {
        vec![
            game.clone(),
            agg.teams[0].name.clone(),
            agg.teams[1].name.clone(),
            agg.winner().map_or_else(String::new, |t| t.name.clone()),
            hundredths(agg.teams[0].aipm),
            hundredths(agg.teams[1].aipm),
            opt(agg.teams[0].starter_aipm),
            opt(agg.teams[1].starter_aipm),
            aipm(agg.winner()),
            aipm(agg.loser()),
            starter(agg.winner()),
            starter(agg.loser()),
        ]
    });
    csv_string(std::iter::once(header).chain(rows))
}

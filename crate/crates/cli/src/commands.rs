use std::collections::HashSet;
use std::fs;
use std::path::{Path, PathBuf};

use ipm_core::io::{
    parse_game, parse_report, render_batch_summary, render_comparison, render_gamelog,
    render_matrix, render_report_for, InputFormat, MatrixForm, ReportFormat,
};
use ipm_core::metrics::{compare_games, TeamAggregates};
use ipm_core::ranking::build_digraph;
use ipm_core::{generate_random_game, rank_game, validate_game, GameLog, IpmReport, RankOptions, Sport};
use rayon::prelude::*;

use crate::error::{CliError, VALIDATION};
use crate::files::{emit, read_input, write_atomic};

fn label(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn load_game(path: &Path, format: InputFormat) -> Result<GameLog, CliError> {
    let text = read_input(path)?;
    Ok(parse_game(&text, format)?)
}

fn rank_file(
    path: &Path,
    format: InputFormat,
    opts: &RankOptions,
) -> Result<(IpmReport, TeamAggregates), CliError> {
    let ranked = rank_game(&load_game(path, format)?, opts)?;
    Ok((ranked.report, ranked.aggregates))
}

fn render_ranked(path: &Path, report: &IpmReport, agg: &TeamAggregates, format: ReportFormat) -> String {
    render_report_for(report, Some(agg), format, Some(&label(path)))
}

pub fn rank(
    input: &Path,
    input_format: InputFormat,
    opts: &RankOptions,
    format: ReportFormat,
    output: Option<&Path>,
) -> Result<(), CliError> {
    let (report, agg) = rank_file(input, input_format, opts).map_err(|e| e.in_file(&input.display().to_string()))?;
    emit(output, &render_ranked(input, &report, &agg, format))
}

pub fn matrix(input: &Path, input_format: InputFormat, form: MatrixForm) -> Result<(), CliError> {
    let log = load_game(input, input_format).map_err(|e| e.in_file(&input.display().to_string()))?;
    let violations = validate_game(&log);
    if !violations.is_empty() {
        return Err(CliError::from(ipm_core::RankError::Invalid(violations)).in_file(&input.display().to_string()));
    }
    let g = build_digraph(&log).map_err(|e| CliError::new(VALIDATION, e.to_string()))?;
    let text = render_matrix(&g, form).map_err(|e| CliError::new(VALIDATION, e.to_string()))?;
    emit(None, &text)
}

pub fn validate(input: &Path, input_format: InputFormat) -> Result<(), CliError> {
    let log = load_game(input, input_format).map_err(|e| e.in_file(&input.display().to_string()))?;
    let violations = validate_game(&log);
    if violations.is_empty() {
        println!(
            "{}: valid ({} players, {} events)",
            input.display(),
            log.n_players(),
            log.events.len()
        );
        return Ok(());
    }
    for v in &violations {
        println!("{}: {v}", input.display());
    }
    Err(CliError::new(
        VALIDATION,
        format!("{}: {} violation(s)", input.display(), violations.len()),
    ))
}

pub fn batch(
    inputs: &[PathBuf],
    out_dir: &Path,
    input_format: InputFormat,
    opts: &RankOptions,
    format: ReportFormat,
) -> Result<(), CliError> {
    let mut seen = HashSet::new();
    for path in inputs {
        if !seen.insert(label(path)) {
            return Err(CliError::usage(format!(
                "two inputs would both write `{}.{}`",
                label(path),
                format.extension()
            )));
        }
    }
    fs::create_dir_all(out_dir).map_err(|e| CliError::usage(format!("{}: {e}", out_dir.display())))?;

    let results: Vec<Result<TeamAggregates, CliError>> = inputs
        .par_iter()
        .map(|path| {
            let (report, agg) = rank_file(path, input_format, opts)?;
            let target = out_dir.join(format!("{}.{}", label(path), format.extension()));
            write_atomic(&target, &render_ranked(path, &report, &agg, format))?;
            Ok(agg)
        })
        .collect();

    let mut summary = Vec::new();
    let mut worst: Option<u8> = None;
    for (path, result) in inputs.iter().zip(results) {
        match result {
            Ok(agg) => summary.push((label(path), agg)),
            Err(e) => {
                eprintln!("ipm: {}: {}", path.display(), e.message);
                worst = Some(worst.map_or(e.code, |w| w.max(e.code)));
            }
        }
    }
    write_atomic(&out_dir.join("summary.csv"), &render_batch_summary(&summary))?;
    eprintln!(
        "ipm: {} of {} games ranked, reports in {}",
        summary.len(),
        inputs.len(),
        out_dir.display()
    );
    match worst {
        None => Ok(()),
        Some(code) => Err(CliError::new(code, String::new())),
    }
}

fn is_report(text: &str) -> bool {
    match serde_json::from_str::<serde_json::Value>(text) {
        Ok(serde_json::Value::Object(map)) => map.contains_key("kind"),
        _ => false,
    }
}

pub fn compare(
    inputs: &[PathBuf],
    input_format: InputFormat,
    opts: &RankOptions,
    format: ReportFormat,
) -> Result<(), CliError> {
    let stems: HashSet<String> = inputs.iter().map(|p| label(p)).collect();
    let unique = stems.len() == inputs.len();
    let mut reports = Vec::new();
    for path in inputs {
        let text = read_input(path).map_err(|e| e.in_file(&path.display().to_string()))?;
        let report = if input_format != InputFormat::Playscript && is_report(&text) {
            parse_report(&text).map_err(|e| CliError::from(ipm_core::io::InputError::from(e)))
        } else {
            parse_game(&text, input_format)
                .map_err(CliError::from)
                .and_then(|log| Ok(rank_game(&log, opts)?.report))
        }
        .map_err(|e| e.in_file(&path.display().to_string()))?;
        let name = if unique { label(path) } else { path.display().to_string() };
        reports.push((name, report));
    }
    emit(None, &render_comparison(&compare_games(&reports), format))
}

pub fn synth(
    sport: Sport,
    players: usize,
    events: usize,
    seed: u64,
    output: Option<&Path>,
) -> Result<(), CliError> {
    let log = generate_random_game(sport, players, events, seed).map_err(|e| CliError::usage(e.to_string()))?;
    emit(output, &render_gamelog(&log))
}

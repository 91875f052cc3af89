use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use ipm_core::io::{InputFormat, MatrixForm, ReportFormat};
use ipm_core::ranking::PowerOptions;
use ipm_core::{RankOptions, SolverChoice, Sport};

mod commands;
mod error;
mod files;

use error::{CliError, USAGE};

/// Integrated playmaking metrics from play-by-play game logs.
#[derive(Debug, Parser)]
#[command(name = "ipm", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Rank the players of one game.
    Rank {
        input: PathBuf,
        #[command(flatten)]
        input_format: InputArgs,
        #[command(flatten)]
        solver: SolverArgs,
        #[arg(long, default_value = "table")]
        format: ReportFormat,
        /// Write the report here instead of standard output.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Print the adjacency or transition matrix of one game.
    Matrix {
        input: PathBuf,
        #[command(flatten)]
        input_format: InputArgs,
        /// adjacency, row-stochastic or column-stochastic
        #[arg(long, default_value = "adjacency")]
        form: MatrixForm,
    },
    /// Check a game log and list every violation.
    Validate {
        input: PathBuf,
        #[command(flatten)]
        input_format: InputArgs,
    },
    /// Rank many games, writing one report each plus summary.csv.
    Batch {
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        #[arg(long)]
        out_dir: PathBuf,
        #[command(flatten)]
        input_format: InputArgs,
        #[command(flatten)]
        solver: SolverArgs,
        #[arg(long, default_value = "table")]
        format: ReportFormat,
    },
    /// Side-by-side IPMs across games, from game logs or JSON reports.
    Compare {
        #[arg(num_args = 2.., required = true)]
        inputs: Vec<PathBuf>,
        #[command(flatten)]
        input_format: InputArgs,
        #[command(flatten)]
        solver: SolverArgs,
        #[arg(long, default_value = "table")]
        format: ReportFormat,
    },
    /// Generate a seeded random game log in JSON.
    Synth {
        #[arg(long)]
        sport: Sport,
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        players: u32,
        #[arg(long, default_value_t = 200)]
        events: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct InputArgs {
    /// auto, json or playscript
    #[arg(long = "input-format", default_value = "auto")]
    input_format: InputFormat,
}

#[derive(Debug, Args)]
struct SolverArgs {
    /// power, direct or both
    #[arg(long, default_value = "power")]
    solver: SolverChoice,
    #[arg(long, default_value_t = 1e-12, value_parser = positive_f64)]
    tol: f64,
    #[arg(long, default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    max_iters: u64,
}

impl SolverArgs {
    fn options(&self) -> RankOptions {
        RankOptions {
            solver: self.solver,
            power: PowerOptions {
                tol: self.tol,
                max_iters: self.max_iters as usize,
            },
        }
    }
}

fn positive_f64(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x > 0.0 && x.is_finite() => Ok(x),
        Ok(_) => Err("must be a positive number".into()),
        Err(e) => Err(e.to_string()),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Rank {
            input,
            input_format,
            solver,
            format,
            output,
        } => commands::rank(&input, input_format.input_format, &solver.options(), format, output.as_deref()),
        Command::Matrix {
            input,
            input_format,
            form,
        } => commands::matrix(&input, input_format.input_format, form),
        Command::Validate { input, input_format } => commands::validate(&input, input_format.input_format),
        Command::Batch {
            inputs,
            out_dir,
            input_format,
            solver,
            format,
        } => commands::batch(&inputs, &out_dir, input_format.input_format, &solver.options(), format),
        Command::Compare {
            inputs,
            input_format,
            solver,
            format,
        } => commands::compare(&inputs, input_format.input_format, &solver.options(), format),
        Command::Synth {
            sport,
            players,
            events,
            seed,
            output,
        } => commands::synth(sport, players as usize, events, seed, output.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(USAGE),
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if !e.message.is_empty() {
                eprintln!("ipm: {}", e.message);
            }
            ExitCode::from(e.code)
        }
    }
}

//! End-to-end: validate, build the digraph, solve, and score one game.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::metrics::{aggregates, compute_ipm, IpmReport, MetricsError, TeamAggregates};
use crate::model::{validate_game, GameLog, Violation};
use crate::ranking::{
    build_digraph, check_primitive, stationary_direct, stationary_power, to_transition,
    GraphError, PlayDigraph, PowerOptions, Primitivity, RankVector, SolveError, TransitionMatrix,
};

/// Largest L∞ difference tolerated between the two solvers.
pub const CROSS_CHECK_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SolverChoice {
    #[default]
    Power,
    Direct,
    /// Run both, report the power-iteration result, fail if they disagree.
    Both,
}

impl FromStr for SolverChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "power" => Ok(SolverChoice::Power),
            "direct" => Ok(SolverChoice::Direct),
            "both" => Ok(SolverChoice::Both),
            other => Err(format!("unknown solver `{other}` (expected power, direct or both)")),
        }
    }
}

impl fmt::Display for SolverChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SolverChoice::Power => "power",
            SolverChoice::Direct => "direct",
            SolverChoice::Both => "both",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct RankOptions {
    pub solver: SolverChoice,
    pub power: PowerOptions,
}

#[derive(Debug, Error)]
pub enum RankError {
    #[error("game log has {} violation(s); first: {}", .0.len(), .0[0])]
    Invalid(Vec<Violation>),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Metrics(#[from] MetricsError),
    #[error("power and direct solutions differ by {0:e} (limit {CROSS_CHECK_TOL:e})")]
    SolverDisagreement(f64),
}

#[derive(Debug, Clone)]
pub struct RankedGame {
    pub digraph: PlayDigraph,
    pub transition: TransitionMatrix,
    pub primitivity: Primitivity,
    pub ranks: RankVector,
    /// L∞ distance between the solvers when both ran.
    pub solver_discrepancy: Option<f64>,
    pub report: IpmReport,
    pub aggregates: TeamAggregates,
}

pub fn rank_game(log: &GameLog, opts: &RankOptions) -> Result<RankedGame, RankError> {
    let violations = validate_game(log);
    if !violations.is_empty() {
        return Err(RankError::Invalid(violations));
    }
    let digraph = build_digraph(log)?;
    let transition = to_transition(&digraph)?;
    let primitivity = check_primitive(&transition);
    if !primitivity.primitive {
        return Err(SolveError::NotPrimitive.into());
    }

    let (ranks, solver_discrepancy) = match opts.solver {
        SolverChoice::Power => (stationary_power(&transition, opts.power)?, None),
        SolverChoice::Direct => (stationary_direct(&transition)?, None),
        SolverChoice::Both => {
            let power = stationary_power(&transition, opts.power)?;
            let direct = stationary_direct(&transition)?;
            let diff = power.max_diff(&direct);
            if diff > CROSS_CHECK_TOL {
                return Err(RankError::SolverDisagreement(diff));
            }
            (power, Some(diff))
        }
    };
    let mut report = compute_ipm(&ranks, &log.teams)?;
    report.solver_discrepancy = solver_discrepancy;
    let aggregates = aggregates(&report, &log.metadata);
    Ok(RankedGame {
        digraph,
        transition,
        primitivity,
        ranks,
        solver_discrepancy,
        report,
        aggregates,
    })
}

//! Integrated playmaking metric (IPM) reports and their aggregates.
//!
//! `IPM_i = 50 n · r_i / Σ_j r_j` where the sum runs over players only, so the
//! player average is 50 in every game regardless of the goal node's rank.

use std::cmp::Ordering;
use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::model::{Metadata, PlayerId, Roster};
use crate::ranking::{RankVector, SolveMethod};

/// Slack allowed when comparing a gap against a spacing bound.
pub const BOUND_SLACK: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MetricsError {
    #[error("goal rank {0} leaves no rank for the players")]
    DegenerateGoalRank(f64),
    #[error("rank vector has {ranks} player entries but rosters list {players} players")]
    SizeMismatch { ranks: usize, players: usize },
    #[error("not applicable: {0}")]
    NotApplicable(String),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlayerIpm {
    pub id: PlayerId,
    pub name: String,
    pub team: String,
    pub team_index: usize,
    pub starter: bool,
    /// Stationary rank `r_i`.
    pub rank: f64,
    pub ipm: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IpmReport {
    pub n: usize,
    pub goal_rank: f64,
    pub residual: f64,
    pub method: SolveMethod,
    /// L∞ distance between power and direct solutions, when both were run.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solver_discrepancy: Option<f64>,
    /// Node order: team 1, then team 2, each in roster order.
    pub players: Vec<PlayerIpm>,
}

impl IpmReport {
    /// Players by IPM descending; ties keep node order.
    pub fn standings(&self) -> Vec<&PlayerIpm> {
        let mut rows: Vec<&PlayerIpm> = self.players.iter().collect();
        rows.sort_by(|a, b| b.ipm.total_cmp(&a.ipm));
        rows
    }

    pub fn total_ipm(&self) -> f64 {
        self.players.iter().map(|p| p.ipm).sum()
    }

    pub fn mean_ipm(&self) -> f64 {
        self.total_ipm() / self.players.len() as f64
    }

    pub fn min_ipm(&self) -> f64 {
        self.players.iter().map(|p| p.ipm).fold(f64::INFINITY, f64::min)
    }

    pub fn get(&self, id: &PlayerId) -> Option<&PlayerIpm> {
        self.players.iter().find(|p| &p.id == id)
    }

    pub fn team_names(&self) -> [String; 2] {
        let mut names = [String::new(), String::new()];
        for p in &self.players {
            if names[p.team_index].is_empty() {
                names[p.team_index] = p.team.clone();
            }
        }
        names
    }
}

pub fn compute_ipm(r: &RankVector, rosters: &[Roster; 2]) -> Result<IpmReport, MetricsError> {
    let ranks = r.player_ranks();
    let n = rosters[0].len() + rosters[1].len();
    if ranks.len() != n {
        return Err(MetricsError::SizeMismatch {
            ranks: ranks.len(),
            players: n,
        });
    }
    let player_mass: f64 = ranks.iter().sum();
    let total = player_mass + r.goal_rank();
    if player_mass.is_nan() || player_mass <= 1e-15 * total {
        return Err(MetricsError::DegenerateGoalRank(r.goal_rank() / total));
    }

    let scale = 50.0 * n as f64 / player_mass;
    let players = rosters
        .iter()
        .enumerate()
        .flat_map(|(t, roster)| roster.players.iter().map(move |p| (t, &roster.team_name, p)))
        .zip(ranks)
        .map(|((t, team, p), &rank)| PlayerIpm {
            id: p.id.clone(),
            name: p.name.clone(),
            team: team.clone(),
            team_index: t,
            starter: p.starter,
            rank: rank / total,
            ipm: rank * scale,
        })
        .collect();

    Ok(IpmReport {
        n,
        goal_rank: r.goal_rank() / total,
        residual: r.residual,
        method: r.method,
        solver_discrepancy: None,
        players,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TeamAggregate {
    pub name: String,
    pub size: usize,
    pub aipm: f64,
    pub starters: usize,
    /// Absent when the team has no designated starters.
    pub starter_aipm: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TeamAggregates {
    pub teams: [TeamAggregate; 2],
    pub final_score: Option<(u32, u32)>,
    /// Index of the winning team; `None` without a score or on a tie.
    pub winner: Option<usize>,
}

impl TeamAggregates {
    pub fn winner(&self) -> Option<&TeamAggregate> {
        self.winner.map(|w| &self.teams[w])
    }

    pub fn loser(&self) -> Option<&TeamAggregate> {
        self.winner.map(|w| &self.teams[1 - w])
    }
}

fn mean(xs: impl Iterator<Item = f64>) -> Option<f64> {
    let (sum, count) = xs.fold((0.0, 0usize), |(s, c), x| (s + x, c + 1));
    (count > 0).then(|| sum / count as f64)
}

/// Per-team average IPMs, with winner labels taken from `metadata` only.
pub fn aggregates(report: &IpmReport, metadata: &Metadata) -> TeamAggregates {
    let names = report.team_names();
    let team = |t: usize| {
        let members = || report.players.iter().filter(move |p| p.team_index == t);
        TeamAggregate {
            name: names[t].clone(),
            size: members().count(),
            aipm: mean(members().map(|p| p.ipm)).unwrap_or(0.0),
            starters: members().filter(|p| p.starter).count(),
            starter_aipm: mean(members().filter(|p| p.starter).map(|p| p.ipm)),
        }
    };
    let final_score = metadata.parsed_score().and_then(Result::ok);
    let winner = final_score.and_then(|(a, b)| match a.cmp(&b) {
        Ordering::Greater => Some(0),
        Ordering::Less => Some(1),
        Ordering::Equal => None,
    });
    TeamAggregates {
        teams: [team(0), team(1)],
        final_score,
        winner,
    }
}

/// Starter/bench spacing: some starter sits within `n(R − 50k)/(k(n − k))`
/// of some bench player, measured as the signed gap `IPM_s − IPM_b`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StarterGapCheck {
    pub k: usize,
    /// Cumulative starter IPM `R`.
    pub cumulative: f64,
    pub bound: f64,
    pub min_signed_gap: f64,
    pub margin: f64,
    pub holds: bool,
}

/// Pairwise spacing: two players lie within `25n/(n − 2)` of each other.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairGapCheck {
    pub bound: f64,
    pub min_gap: f64,
    pub margin: f64,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundsCheck {
    pub starter_gap: StarterGapCheck,
    pub pair_gap: PairGapCheck,
}

impl BoundsCheck {
    pub fn holds(&self) -> bool {
        self.starter_gap.holds && self.pair_gap.holds
    }
}

/// Starter-gap check for an arbitrary subset of player indices (node order).
pub fn starter_gap_check(
    report: &IpmReport,
    starters: &[usize],
) -> Result<StarterGapCheck, MetricsError> {
    let n = report.players.len();
    let mut is_starter = vec![false; n];
    for &s in starters {
        if s >= n {
            return Err(MetricsError::NotApplicable(format!("player index {s} out of range")));
        }
        is_starter[s] = true;
    }
    let k = is_starter.iter().filter(|&&s| s).count();
    if k == 0 || k == n {
        return Err(MetricsError::NotApplicable(format!(
            "need between 1 and {} starters, got {k}",
            n.saturating_sub(1)
        )));
    }

    let ipm = |i: usize| report.players[i].ipm;
    let cumulative: f64 = (0..n).filter(|&i| is_starter[i]).map(ipm).sum();
    let (nf, kf) = (n as f64, k as f64);
    let bound = nf * (cumulative - 50.0 * kf) / (kf * (nf - kf));
    let min_starter = (0..n).filter(|&i| is_starter[i]).map(ipm).fold(f64::INFINITY, f64::min);
    let max_bench = (0..n).filter(|&i| !is_starter[i]).map(ipm).fold(f64::NEG_INFINITY, f64::max);
    let min_signed_gap = min_starter - max_bench;
    Ok(StarterGapCheck {
        k,
        cumulative,
        bound,
        min_signed_gap,
        margin: bound - min_signed_gap,
        holds: min_signed_gap <= bound + BOUND_SLACK,
    })
}

pub fn pair_gap_check(report: &IpmReport) -> Result<PairGapCheck, MetricsError> {
    let n = report.players.len();
    if n < 3 {
        return Err(MetricsError::NotApplicable(format!("need at least 3 players, got {n}")));
    }
    let mut ipms: Vec<f64> = report.players.iter().map(|p| p.ipm).collect();
    ipms.sort_by(f64::total_cmp);
    let min_gap = ipms.windows(2).map(|w| w[1] - w[0]).fold(f64::INFINITY, f64::min);
    let bound = 25.0 * n as f64 / (n as f64 - 2.0);
    Ok(PairGapCheck {
        bound,
        min_gap,
        margin: bound - min_gap,
        holds: min_gap <= bound + BOUND_SLACK,
    })
}

/// Both spacing checks, using the roster's designated starters.
pub fn check_gap_bounds(report: &IpmReport) -> Result<BoundsCheck, MetricsError> {
    let starters: Vec<usize> = report
        .players
        .iter()
        .enumerate()
        .filter(|(_, p)| p.starter)
        .map(|(i, _)| i)
        .collect();
    Ok(BoundsCheck {
        starter_gap: starter_gap_check(report, &starters)?,
        pair_gap: pair_gap_check(report)?,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonRow {
    pub id: PlayerId,
    pub name: String,
    /// Team in the first game the player appears in.
    pub team: String,
    /// One cell per game; `None` where the player did not appear.
    pub ipms: Vec<Option<f64>>,
    pub mean: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonTable {
    pub games: Vec<String>,
    pub rows: Vec<ComparisonRow>,
}

/// Joins reports on player id. Rows are ordered by mean IPM descending, ties
/// by first appearance (walking each game's standings in turn).
pub fn compare_games(reports: &[(String, IpmReport)]) -> ComparisonTable {
    let games = reports.iter().map(|(g, _)| g.clone()).collect();
    let mut rows: Vec<ComparisonRow> = Vec::new();
    let mut seen: HashMap<PlayerId, usize> = HashMap::new();
    for (g, (_, report)) in reports.iter().enumerate() {
        for p in report.standings() {
            let row = *seen.entry(p.id.clone()).or_insert_with(|| {
                rows.push(ComparisonRow {
                    id: p.id.clone(),
                    name: p.name.clone(),
                    team: p.team.clone(),
                    ipms: vec![None; reports.len()],
                    mean: 0.0,
                });
                rows.len() - 1
            });
            rows[row].ipms[g] = Some(p.ipm);
        }
    }
    for row in &mut rows {
        row.mean = mean(row.ipms.iter().flatten().copied()).unwrap_or(0.0);
    }
    rows.sort_by(|a, b| b.mean.total_cmp(&a.mean));
    ComparisonTable { games, rows }
}

//! Integrated playmaking metrics for basketball, soccer and hockey.
//!
//! A game's play-by-play log becomes a directed multigraph over its players
//! and a single goal node, with arcs pointing back toward the players who set
//! up play. The stationary vector of the induced Markov chain ranks the
//! players, and [`metrics::compute_ipm`] rescales those ranks so the player
//! average is exactly 50.
//!
//! ```
//! use ipm_core::io::parse_playscript;
//! use ipm_core::{rank_game, RankOptions};
//!
//! let log = parse_playscript("#team Reds A B\n#team Blues C D\nA -> B -> G\nC -> D -> A -> G\n").unwrap();
//! let ranked = rank_game(&log, &RankOptions::default()).unwrap();
//! let total: f64 = ranked.report.players.iter().map(|p| p.ipm).sum();
//! assert!((total - 200.0).abs() < 1e-9);
//! ```

pub mod io;
pub mod metrics;
pub mod model;
pub mod pipeline;
pub mod ranking;
pub mod rulebook;
pub mod synth;

pub use metrics::{compute_ipm, IpmReport, PlayerIpm, TeamAggregates};
pub use model::{validate_game, Event, GameLog, PlayerId, Roster, Sport, Violation};
pub use pipeline::{rank_game, RankError, RankOptions, RankedGame, SolverChoice};
pub use synth::generate_random_game;

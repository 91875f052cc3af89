mod common;

use common::*;
use ipm_core::ranking::build_digraph;
use ipm_core::{generate_random_game, rank_game, GameLog, RankOptions, Roster, Sport, SolverChoice};

fn empty_game(a: usize, b: usize) -> GameLog {
    let home = Roster::from_ids("Home", (0..a).map(|i| format!("h{i}")));
    let away = Roster::from_ids("Away", (0..b).map(|i| format!("a{i}")));
    GameLog::new(Sport::Hockey, home, away, vec![])
}

#[test]
fn two_player_empty_game() {
    let log = empty_game(1, 1);
    let adj = build_digraph(&log).unwrap().adjacency();
    let pi = exact_stationary(&adj);
    assert_eq!(pi, [Q::new(1, 5), Q::new(1, 5), Q::new(3, 5)]);
    let ranked = rank_game(&log, &RankOptions::default()).unwrap();
    assert!((ranked.ranks.values[2] - 0.6).abs() < 1e-12);
}

#[test]
fn empty_games_give_everyone_fifty() {
    for (a, b) in [(1, 1), (2, 3), (5, 5), (11, 11)] {
        let log = empty_game(a, b);
        let exact = exact_ipm(&exact_stationary(&build_digraph(&log).unwrap().adjacency()));
        assert!(exact.iter().all(|&q| q == Q::from(50)));
        let report = rank_game(&log, &RankOptions::default()).unwrap().report;
        assert!(report.players.iter().all(|p| (p.ipm - 50.0).abs() < 1e-9));
    }
}

#[test]
fn two_scorers_two_and_one() {
    let log = two_scorer_game(2, 1);
    let pi = exact_stationary(&build_digraph(&log).unwrap().adjacency());
    assert_eq!(pi, [Q::new(3, 11), Q::new(2, 11), Q::new(6, 11)]);
    assert_eq!(exact_ipm(&pi), [Q::from(60), Q::from(40)]);
    let report = rank_game(&log, &RankOptions::default()).unwrap().report;
    assert!((report.players[0].ipm - 60.0).abs() < 1e-9);
    assert!((report.players[1].ipm - 40.0).abs() < 1e-9);
}

#[test]
fn more_goals_means_higher_ipm() {
    for g1 in 1..=10 {
        for g2 in 0..g1 {
            let report = rank_game(&two_scorer_game(g1, g2), &RankOptions::default())
                .unwrap()
                .report;
            assert!(report.players[0].ipm > report.players[1].ipm, "{g1} vs {g2}");
        }
    }
}

#[test]
fn solvers_match_exact_oracle_on_random_games() {
    let opts = RankOptions {
        solver: SolverChoice::Both,
        ..Default::default()
    };
    for seed in 0..30u64 {
        let sport = Sport::ALL[seed as usize % 3];
        let log = generate_random_game(sport, 4 + seed as usize % 7, 10 + 3 * seed as usize, seed).unwrap();
        let exact = exact_ipm(&exact_stationary(&build_digraph(&log).unwrap().adjacency()));
        let report = rank_game(&log, &opts).unwrap().report;
        for (p, q) in report.players.iter().zip(&exact) {
            assert!((p.ipm - to_f64(*q)).abs() < 1e-9, "seed {seed}: {} {}", p.id, p.ipm);
        }
    }
}


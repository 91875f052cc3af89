#![allow(dead_code)]

use num_rational::Ratio;

pub type Q = Ratio<i128>;

pub const WORKED_PLAY: &str = include_str!("../fixtures/worked_example.play");
pub const WORKED_JSON: &str = include_str!("../fixtures/worked_example.json");

/// Adjacency of the worked example, node order A B C D E F GOAL.
pub const WORKED_ADJACENCY: [[u64; 7]; 7] = [
    [0, 3, 3, 0, 0, 1, 1],
    [2, 0, 3, 0, 0, 1, 1],
    [2, 2, 0, 0, 0, 0, 1],
    [0, 0, 2, 0, 0, 2, 1],
    [0, 0, 0, 0, 0, 2, 1],
    [0, 0, 0, 3, 2, 0, 1],
    [4, 1, 1, 2, 1, 3, 1],
];

/// Column-stochastic transition matrix of the worked example as (numer, denom).
pub const WORKED_TRANSITION: [[(i128, i128); 7]; 7] = [
    [(0, 1), (2, 7), (2, 5), (0, 1), (0, 1), (0, 1), (4, 13)],
    [(3, 8), (0, 1), (2, 5), (0, 1), (0, 1), (0, 1), (1, 13)],
    [(3, 8), (3, 7), (0, 1), (2, 5), (0, 1), (0, 1), (1, 13)],
    [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (1, 2), (2, 13)],
    [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (1, 3), (1, 13)],
    [(1, 8), (1, 7), (0, 1), (2, 5), (2, 3), (0, 1), (3, 13)],
    [(1, 8), (1, 7), (1, 5), (1, 5), (1, 3), (1, 6), (1, 13)],
];

pub const WORKED_IPM: [(&str, f64); 6] = [
    ("C", 64.66),
    ("F", 60.38),
    ("A", 58.79),
    ("B", 52.39),
    ("D", 39.17),
    ("E", 24.61),
];

/// Stationary vector of the chain induced by an arc-count matrix, solved
/// exactly: `pi (T - I) = 0` with one equation swapped for `sum(pi) = 1`.
pub fn exact_stationary(adj: &[Vec<u64>]) -> Vec<Q> {
    let s = adj.len();
    // a[eq][unknown]; equation j is column j of T - I.
    let mut a = vec![vec![Q::from(0); s + 1]; s];
    for (i, row) in adj.iter().enumerate() {
        let out: u64 = row.iter().sum();
        assert!(out > 0, "row {i} has no arcs");
        for (j, &c) in row.iter().enumerate() {
            a[j][i] = Q::new(c as i128, out as i128);
        }
    }
    for (j, eq) in a.iter_mut().enumerate() {
        eq[j] -= Q::from(1);
    }
    for x in a[s - 1].iter_mut().take(s) {
        *x = Q::from(1);
    }
    a[s - 1][s] = Q::from(1);

    for col in 0..s {
        let p = (col..s)
            .find(|&r| a[r][col] != Q::from(0))
            .expect("singular system");
        a.swap(col, p);
        let pivot = a[col][col];
        for x in a[col].iter_mut() {
            *x /= pivot;
        }
        let pivot_row = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != col && row[col] != Q::from(0) {
                let f = row[col];
                for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                    *x -= f * p;
                }
            }
        }
    }
    a.into_iter().map(|row| row[s]).collect()
}

/// `50 n r_i / (1 - r_goal)` for each player, exactly.
pub fn exact_ipm(pi: &[Q]) -> Vec<Q> {
    let n = pi.len() - 1;
    let goal = pi[n];
    pi[..n]
        .iter()
        .map(|r| Q::from(50 * n as i128) * r / (Q::from(1) - goal))
        .collect()
}

pub fn to_f64(q: Q) -> f64 {
    *q.numer() as f64 / *q.denom() as f64
}

/// Two players on opposite teams, scoring `g1` and `g2` single points.
pub fn two_scorer_game(g1: usize, g2: usize) -> ipm_core::GameLog {
    use ipm_core::{Event, GameLog, Roster, Sport};
    let score = |p: &str| Event::Score {
        scorer: p.into(),
        points: None,
    };
    let mut events = vec![score("p"); g1];
    events.extend(vec![score("q"); g2]);
    GameLog::new(
        Sport::Soccer,
        Roster::from_ids("One", ["p"]),
        Roster::from_ids("Two", ["q"]),
        events,
    )
}

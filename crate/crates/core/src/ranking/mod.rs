//! Play digraph construction and the stationary rank of its Markov chain.
//!
//! Orientation: internally every matrix is row-stochastic (`T[i][j]` is the
//! probability of stepping from node `i` to node `j`) and the stationary
//! vector satisfies `Tᵗ v = v`. Printed matrices in the literature are often
//! the column-stochastic transpose; use
//! [`TransitionMatrix::column_stochastic`] when comparing against those.
//!
//! Node order is team-1 players, team-2 players, then the goal node last.

mod digraph;
mod primitivity;
mod stationary;
mod transition;

pub use digraph::{apply_events, build_digraph, init_digraph, GraphError, PlayDigraph};
pub use primitivity::{check_primitive, check_primitive_pattern, wielandt_bound, Primitivity};
pub use stationary::{
    stationary_direct, stationary_power, stationary_residual, PowerOptions, RankVector,
    SolveError, SolveMethod,
};
pub use transition::{to_transition, TransitionMatrix};

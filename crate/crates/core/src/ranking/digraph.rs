use std::collections::HashMap;

use thiserror::Error;

use crate::model::{GameLog, PlayerId, Roster};
use crate::rulebook::{arcs_for_event, ArcDelta, NodeRef, RuleError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("team `{0}` has no players")]
    EmptyRoster(String),
    #[error("player `{0}` is rostered more than once")]
    DuplicatePlayer(PlayerId),
    #[error("player `{0}` is not in the digraph")]
    UnknownPlayer(PlayerId),
    #[error("event {index}: {source}")]
    Rule {
        index: usize,
        #[source]
        source: RuleError,
    },
    #[error("node {0} has no outgoing arcs")]
    ZeroRow(NodeRef),
}

/// Dense directed multigraph over the players of a game plus the goal node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlayDigraph {
    nodes: Vec<NodeRef>,
    index: HashMap<PlayerId, usize>,
    team_sizes: [usize; 2],
    counts: Vec<u64>,
}

impl PlayDigraph {
    /// Number of nodes, players plus goal.
    pub fn size(&self) -> usize {
        self.nodes.len()
    }

    pub fn n_players(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn team_sizes(&self) -> [usize; 2] {
        self.team_sizes
    }

    pub fn goal_index(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn node_order(&self) -> &[NodeRef] {
        &self.nodes
    }

    pub fn index_of(&self, node: &NodeRef) -> Option<usize> {
        match node {
            NodeRef::Goal => Some(self.goal_index()),
            NodeRef::Player(id) => self.index.get(id).copied(),
        }
    }

    /// Number of arcs `from -> to`.
    pub fn arc_count(&self, from: usize, to: usize) -> u64 {
        self.counts[from * self.size() + to]
    }

    pub fn out_degree(&self, node: usize) -> u64 {
        self.row(node).iter().sum()
    }

    pub fn row(&self, node: usize) -> &[u64] {
        let s = self.size();
        &self.counts[node * s..(node + 1) * s]
    }

    /// Adjacency matrix as nested rows.
    pub fn adjacency(&self) -> Vec<Vec<u64>> {
        (0..self.size()).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn total_arcs(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn add_arcs(&mut self, from: usize, to: usize, count: u64) {
        let s = self.size();
        self.counts[from * s + to] += count;
    }

    pub fn apply_delta(&mut self, delta: &ArcDelta) -> Result<(), GraphError> {
        // Resolve everything first so a bad delta leaves the graph untouched.
        let resolved = delta
            .arcs
            .iter()
            .map(|arc| Ok((self.resolve(&arc.from)?, self.resolve(&arc.to)?, arc.count)))
            .collect::<Result<Vec<_>, GraphError>>()?;
        for (from, to, count) in resolved {
            self.add_arcs(from, to, u64::from(count));
        }
        Ok(())
    }

    fn resolve(&self, node: &NodeRef) -> Result<usize, GraphError> {
        self.index_of(node).ok_or_else(|| match node {
            NodeRef::Player(id) => GraphError::UnknownPlayer(id.clone()),
            NodeRef::Goal => unreachable!(),
        })
    }
}

/// Initial digraph: one arc each way between every player and the goal, plus
/// a goal self-loop.
pub fn init_digraph(rosters: &[Roster; 2]) -> Result<PlayDigraph, GraphError> {
    let mut nodes = Vec::new();
    let mut index = HashMap::new();
    for roster in rosters {
        if roster.is_empty() {
            return Err(GraphError::EmptyRoster(roster.team_name.clone()));
        }
        for p in &roster.players {
            if index.insert(p.id.clone(), nodes.len()).is_some() {
                return Err(GraphError::DuplicatePlayer(p.id.clone()));
            }
            nodes.push(NodeRef::Player(p.id.clone()));
        }
    }
    nodes.push(NodeRef::Goal);

    let size = nodes.len();
    let mut g = PlayDigraph {
        nodes,
        index,
        team_sizes: [rosters[0].len(), rosters[1].len()],
        counts: vec![0; size * size],
    };
    let goal = g.goal_index();
    for p in 0..goal {
        g.add_arcs(p, goal, 1);
        g.add_arcs(goal, p, 1);
    }
    g.add_arcs(goal, goal, 1);
    Ok(g)
}

/// Adds the arcs of every event in `log`, in order.
pub fn apply_events(mut g: PlayDigraph, log: &GameLog) -> Result<PlayDigraph, GraphError> {
    for (index, event) in log.events.iter().enumerate() {
        let delta =
            arcs_for_event(log.sport, event).map_err(|source| GraphError::Rule { index, source })?;
        g.apply_delta(&delta)?;
    }
    Ok(g)
}

/// `init_digraph` followed by `apply_events`.
pub fn build_digraph(log: &GameLog) -> Result<PlayDigraph, GraphError> {
    apply_events(init_digraph(&log.teams)?, log)
}

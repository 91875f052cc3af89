use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};

use super::digraph::{GraphError, PlayDigraph};

/// Row-stochastic transition matrix held as exact fractions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionMatrix {
    size: usize,
    entries: Vec<Ratio<u64>>,
}

impl TransitionMatrix {
    /// Builds a matrix from exact rows. Every row must sum to one.
    pub fn from_rows(rows: Vec<Vec<Ratio<u64>>>) -> Option<Self> {
        let size = rows.len();
        if rows.iter().any(|r| r.len() != size) {
            return None;
        }
        let one = Ratio::from_integer(1);
        if rows
            .iter()
            .any(|r| r.iter().fold(Ratio::zero(), |acc, x| acc + x) != one)
        {
            return None;
        }
        Some(TransitionMatrix {
            size,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn entry(&self, i: usize, j: usize) -> Ratio<u64> {
        self.entries[i * self.size + j]
    }

    pub fn row(&self, i: usize) -> &[Ratio<u64>] {
        &self.entries[i * self.size..(i + 1) * self.size]
    }

    pub fn row_sum(&self, i: usize) -> Ratio<u64> {
        self.row(i).iter().fold(Ratio::zero(), |acc, x| acc + x)
    }

    pub fn rows(&self) -> Vec<Vec<Ratio<u64>>> {
        (0..self.size).map(|i| self.row(i).to_vec()).collect()
    }

    /// Transpose: entry `(i, j)` is the probability of stepping `j -> i`.
    pub fn column_stochastic(&self) -> Vec<Vec<Ratio<u64>>> {
        (0..self.size)
            .map(|i| (0..self.size).map(|j| self.entry(j, i)).collect())
            .collect()
    }

    /// Row-major binary64 projection.
    pub fn to_f64(&self) -> Vec<f64> {
        self.entries
            .iter()
            .map(|r| r.to_f64().expect("ratio of u64 always converts"))
            .collect()
    }

    /// Row-major nonzero pattern.
    pub fn pattern(&self) -> Vec<bool> {
        self.entries.iter().map(|r| !r.is_zero()).collect()
    }
}

/// Normalizes every row of the digraph by its out-degree.
pub fn to_transition(g: &PlayDigraph) -> Result<TransitionMatrix, GraphError> {
    let size = g.size();
    let mut entries = Vec::with_capacity(size * size);
    for i in 0..size {
        let out = g.out_degree(i);
        if out == 0 {
            return Err(GraphError::ZeroRow(g.node_order()[i].clone()));
        }
        entries.extend(g.row(i).iter().map(|&c| Ratio::new(c, out)));
    }
    Ok(TransitionMatrix { size, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Roster;
    use crate::ranking::init_digraph;

    #[test]
    fn initial_graph_rows() {
        let rosters = [
            Roster::from_ids("Reds", ["A", "B", "C"]),
            Roster::from_ids("Blues", ["D", "E", "F"]),
        ];
        let t = to_transition(&init_digraph(&rosters).unwrap()).unwrap();
        for p in 0..6 {
            let mut unit = vec![Ratio::zero(); 7];
            unit[6] = Ratio::from_integer(1);
            assert_eq!(t.row(p), unit.as_slice());
        }
        assert!(t.row(6).iter().all(|&x| x == Ratio::new(1, 7)));
        for i in 0..7 {
            assert_eq!(t.row_sum(i), Ratio::from_integer(1));
        }
    }

    #[test]
    fn from_rows_rejects_non_stochastic() {
        let half = Ratio::new(1, 2);
        assert!(TransitionMatrix::from_rows(vec![vec![half, half], vec![half, half]]).is_some());
        assert!(TransitionMatrix::from_rows(vec![vec![half, half], vec![half, Ratio::zero()]])
            .is_none());
        assert!(TransitionMatrix::from_rows(vec![vec![half, half]]).is_none());
    }
}

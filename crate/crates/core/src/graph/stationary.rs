use crate::error::{Error, Result};

use super::{GradedGraph, GraphPath, LocalRule};

/// Every level above the root is a copy of a fixed alphabet, with the same
/// allowed transitions between consecutive levels. Vertices are
/// `(level, letter)`; the root is `(0, 0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StationaryGraph {
    letters: usize,
    depth: usize,
    allowed: Vec<Vec<bool>>,
}

impl StationaryGraph {
    pub fn new(allowed: Vec<Vec<bool>>, depth: usize) -> Result<Self> {
        let letters = allowed.len();
        if letters == 0 || allowed.iter().any(|row| row.len() != letters) {
            return Err(Error::InvalidGraph(
                "transition matrix must be square and non-empty".into(),
            ));
        }
        if (0..letters).any(|b| !(0..letters).any(|a| allowed[a][b])) {
            return Err(Error::InvalidGraph(
                "every letter needs an incoming transition".into(),
            ));
        }
        Ok(StationaryGraph {
            letters,
            depth,
            allowed,
        })
    }

    /// All transitions allowed: the full shift on `letters` symbols.
    pub fn complete(letters: usize, depth: usize) -> Self {
        StationaryGraph::new(vec![vec![true; letters]; letters], depth).expect("non-empty alphabet")
    }

    pub fn path_of_word(&self, word: &[usize]) -> Result<GraphPath<(usize, usize)>> {
        let mut vertices = vec![self.root()];
        vertices.extend(word.iter().enumerate().map(|(i, &a)| (i + 1, a)));
        GraphPath::new(self, vertices)
    }

    pub fn word_of_path(&self, p: &GraphPath<(usize, usize)>) -> Vec<usize> {
        p.vertices()[1..].iter().map(|&(_, a)| a).collect()
    }
}

impl GradedGraph for StationaryGraph {
    type Vertex = (usize, usize);

    fn root(&self) -> (usize, usize) {
        (0, 0)
    }

    fn depth(&self) -> usize {
        self.depth
    }

    fn level(&self, &(l, a): &(usize, usize)) -> Option<usize> {
        let valid = if l == 0 {
            a == 0
        } else {
            l <= self.depth && a < self.letters
        };
        valid.then_some(l)
    }

    fn up(&self, v: &(usize, usize)) -> Vec<(usize, usize)> {
        let (l, a) = *v;
        if self.level(v).is_none() || l >= self.depth {
            return Vec::new();
        }
        (0..self.letters)
            .filter(|&b| l == 0 || self.allowed[a][b])
            .map(|b| (l + 1, b))
            .collect()
    }

    fn down(&self, v: &(usize, usize)) -> Vec<(usize, usize)> {
        let (l, b) = *v;
        match l {
            0 => Vec::new(),
            _ if self.level(v).is_none() => Vec::new(),
            1 => vec![(0, 0)],
            _ => (0..self.letters)
                .filter(|&a| self.allowed[a][b])
                .map(|a| (l - 1, a))
                .collect(),
        }
    }

    fn vertices_at(&self, level: usize) -> Vec<(usize, usize)> {
        match level {
            0 => vec![(0, 0)],
            l if l <= self.depth => (0..self.letters).map(|a| (l, a)).collect(),
            _ => Vec::new(),
        }
    }
}

/// Identify level `k + 1` with level `k`: `u_k` is `v_{k+1}` moved down one
/// level, which makes the transfer the ordinary one-sided shift.
#[derive(Debug, Clone, Copy, Default)]
pub struct ShiftRule;

impl LocalRule<StationaryGraph> for ShiftRule {
    fn step(
        &self,
        _graph: &StationaryGraph,
        k: usize,
        window: &[(usize, usize)],
        _previous: &(usize, usize),
    ) -> Result<(usize, usize)> {
        Ok((k, window[k + 1].1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::general_transfer;

    #[test]
    fn golden_mean_shift() {
        // no two consecutive 1s
        let g = StationaryGraph::new(vec![vec![true, true], vec![true, false]], 8).unwrap();
        assert!(g.path_of_word(&[0, 1, 1]).is_err());
        let p = g.path_of_word(&[1, 0, 1, 0, 0, 1]).unwrap();
        let out = general_transfer(&g, &p, &ShiftRule).unwrap();
        assert_eq!(g.word_of_path(&out), vec![0, 1, 0, 0, 1]);
    }

    #[test]
    fn rejects_bad_matrix() {
        assert!(StationaryGraph::new(vec![], 3).is_err());
        assert!(StationaryGraph::new(vec![vec![true, false], vec![true, false]], 3).is_err());
    }
}

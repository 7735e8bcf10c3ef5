use crate::error::{Error, Result};
use crate::rsk::{StandardTableau, Tableau};
use crate::shape::{partitions, Shape};

use super::{ExplicitGraph, GradedGraph, GraphPath};

/// Young's lattice of diagrams up to `depth` cells, generated on demand
/// from the covering relation on shapes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct YoungGraph {
    depth: usize,
}

impl YoungGraph {
    pub fn new(depth: usize) -> Self {
        YoungGraph { depth }
    }

    /// Materialize the truncation as an explicit graph.
    pub fn to_explicit(&self) -> ExplicitGraph<Shape> {
        let levels: Vec<Vec<Shape>> = (0..=self.depth).map(|l| self.vertices_at(l)).collect();
        let covers = levels[..self.depth]
            .iter()
            .map(|level| {
                level
                    .iter()
                    .flat_map(|v| self.up(v).into_iter().map(move |u| (v.clone(), u)))
                    .collect()
            })
            .collect();
        ExplicitGraph::new(levels, covers).expect("Young lattice truncation is a valid graph")
    }
}

impl GradedGraph for YoungGraph {
    type Vertex = Shape;

    fn root(&self) -> Shape {
        Shape::empty()
    }

    fn depth(&self) -> usize {
        self.depth
    }

    fn level(&self, v: &Shape) -> Option<usize> {
        let n = v.size();
        (n <= self.depth).then_some(n)
    }

    fn up(&self, v: &Shape) -> Vec<Shape> {
        if v.size() >= self.depth {
            return Vec::new();
        }
        v.successors()
    }

    fn down(&self, v: &Shape) -> Vec<Shape> {
        if v.size() > self.depth {
            return Vec::new();
        }
        v.predecessors()
    }

    fn vertices_at(&self, level: usize) -> Vec<Shape> {
        if level > self.depth {
            return Vec::new();
        }
        partitions(level)
    }

    fn covers(&self, lower: &Shape, upper: &Shape) -> bool {
        upper.size() <= self.depth && lower.is_covered_by(upper)
    }
}

/// The chain of diagrams `λ_k` = cells holding entries `<= k`.
pub fn tableau_to_path(t: &StandardTableau) -> Result<GraphPath<Shape>> {
    t.check_standard()?;
    let n = t.size();
    let mut rows_of = vec![0usize; n + 1];
    for (r, row) in t.rows().iter().enumerate() {
        for &e in row {
            rows_of[e] = r;
        }
    }
    let mut shapes = Vec::with_capacity(n + 1);
    let mut current = Shape::empty();
    shapes.push(current.clone());
    for &r in &rows_of[1..] {
        current = current.with_cell_added(r);
        shapes.push(current.clone());
    }
    Ok(GraphPath::from_trusted(shapes))
}

/// Inverse of [`tableau_to_path`]: write `k` in the cell added at level `k`.
pub fn path_to_tableau(p: &GraphPath<Shape>) -> Result<StandardTableau> {
    let shapes = p.vertices();
    if shapes[0] != Shape::empty() {
        return Err(Error::InvalidPath(
            "path must start at the empty diagram".into(),
        ));
    }
    let mut rows: Vec<Vec<usize>> = Vec::new();
    for (k, pair) in shapes.windows(2).enumerate() {
        let (lower, upper) = (&pair[0], &pair[1]);
        if !lower.is_covered_by(upper) {
            return Err(Error::InvalidPath(format!(
                "{upper} does not cover {lower} at level {}",
                k + 1
            )));
        }
        let r = (0..upper.num_rows())
            .find(|&r| lower.rows().get(r).copied().unwrap_or(0) < upper.rows()[r])
            .expect("one row grew");
        if r == rows.len() {
            rows.push(Vec::new());
        }
        rows[r].push(k + 1);
    }
    Tableau::standard(rows)
}

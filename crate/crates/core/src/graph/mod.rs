//! Finite truncations of graded graphs, their path spaces, and transfers
//! built from local rules on 2-intervals.

mod explicit;
mod stationary;
mod young;

use std::collections::BTreeMap;
use std::fmt::Debug;
use std::hash::Hash;

use crate::error::{Error, Result};

pub use explicit::{ExplicitGraph, GraphRecord};
pub use stationary::{ShiftRule, StationaryGraph};
pub use young::{path_to_tableau, tableau_to_path, YoungGraph};

/// A locally finite graded graph truncated at `depth`. Level 0 holds the
/// single root and edges only join consecutive levels.
pub trait GradedGraph {
    type Vertex: Clone + Eq + Ord + Hash + Debug;

    fn root(&self) -> Self::Vertex;

    /// Highest level present in the truncation.
    fn depth(&self) -> usize;

    /// Level of `v`, or `None` if `v` is not a vertex of the truncation.
    fn level(&self, v: &Self::Vertex) -> Option<usize>;

    /// Vertices covering `v`.
    fn up(&self, v: &Self::Vertex) -> Vec<Self::Vertex>;

    /// Vertices covered by `v`.
    fn down(&self, v: &Self::Vertex) -> Vec<Self::Vertex>;

    fn vertices_at(&self, level: usize) -> Vec<Self::Vertex>;

    fn covers(&self, lower: &Self::Vertex, upper: &Self::Vertex) -> bool {
        self.up(lower).contains(upper)
    }
}

/// A path `v_0, v_1, ..., v_n` from the root with `v_i` at level `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GraphPath<V> {
    vertices: Vec<V>,
}

impl<V: Clone + Eq + Ord + Hash + Debug> GraphPath<V> {
    pub fn new<G: GradedGraph<Vertex = V>>(graph: &G, vertices: Vec<V>) -> Result<Self> {
        match vertices.first() {
            Some(v) if *v == graph.root() => {}
            _ => return Err(Error::InvalidPath("path must start at the root".into())),
        }
        for (i, pair) in vertices.windows(2).enumerate() {
            if !graph.covers(&pair[0], &pair[1]) {
                return Err(Error::InvalidPath(format!(
                    "no covering edge from level {i} to level {}",
                    i + 1
                )));
            }
        }
        Ok(GraphPath { vertices })
    }

    pub(crate) fn from_trusted(vertices: Vec<V>) -> Self {
        GraphPath { vertices }
    }

    pub fn vertices(&self) -> &[V] {
        &self.vertices
    }

    /// Level of the last vertex.
    pub fn top_level(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn into_vertices(self) -> Vec<V> {
        self.vertices
    }

    /// The first `level + 1` vertices.
    pub fn truncate(&self, level: usize) -> GraphPath<V> {
        GraphPath {
            vertices: self.vertices[..=level.min(self.top_level())].to_vec(),
        }
    }
}

/// `{u : v ⋖ u ⋖ w}`.
pub fn intermediates<G: GradedGraph>(
    graph: &G,
    v: &G::Vertex,
    w: &G::Vertex,
) -> Result<Vec<G::Vertex>> {
    let (bottom, top) = match (graph.level(v), graph.level(w)) {
        (Some(b), Some(t)) => (b, t),
        _ => return Err(Error::BadLevels { bottom: 0, top: 0 }),
    };
    if top != bottom + 2 {
        return Err(Error::BadLevels { bottom, top });
    }
    let mut mids: Vec<G::Vertex> = graph
        .up(v)
        .into_iter()
        .filter(|u| graph.covers(u, w))
        .collect();
    mids.sort();
    Ok(mids)
}

/// The involution on the intermediates of `[v, w]`: swaps the two
/// intermediates when there are two, fixes a unique one.
pub fn interval_involution<G: GradedGraph>(
    graph: &G,
    v: &G::Vertex,
    w: &G::Vertex,
    m: &G::Vertex,
) -> Result<G::Vertex> {
    let mids = intermediates(graph, v, w)?;
    if mids.len() > 2 {
        return Err(Error::TooManyIntermediates { count: mids.len() });
    }
    if !mids.contains(m) {
        return Err(Error::NotIntermediate);
    }
    Ok(mids
        .into_iter()
        .find(|u| u != m)
        .unwrap_or_else(|| m.clone()))
}

/// One step of a transfer of general type: produce `u_k` from the
/// argument window `v_0..=v_{k+1}` and the previous output vertex.
pub trait LocalRule<G: GradedGraph> {
    fn step(
        &self,
        graph: &G,
        k: usize,
        window: &[G::Vertex],
        previous: &G::Vertex,
    ) -> Result<G::Vertex>;
}

impl<G, F> LocalRule<G> for F
where
    G: GradedGraph,
    F: Fn(&G, usize, &[G::Vertex], &G::Vertex) -> Result<G::Vertex>,
{
    fn step(
        &self,
        graph: &G,
        k: usize,
        window: &[G::Vertex],
        previous: &G::Vertex,
    ) -> Result<G::Vertex> {
        self(graph, k, window, previous)
    }
}

/// The Markov rule `u_1 = v_1`, `u_k = φ[u_{k-1}, v_{k+1}](v_k)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct InvolutionRule;

impl<G: GradedGraph> LocalRule<G> for InvolutionRule {
    fn step(
        &self,
        graph: &G,
        k: usize,
        window: &[G::Vertex],
        previous: &G::Vertex,
    ) -> Result<G::Vertex> {
        if k == 1 {
            return Ok(window[1].clone());
        }
        if !graph.covers(previous, &window[k]) {
            return Err(Error::InconsistentPath { level: k });
        }
        interval_involution(graph, previous, &window[k + 1], &window[k])
    }
}

/// Apply a local rule at levels `1..n` of a path of top level `n`,
/// producing a path of top level `n - 1`.
pub fn general_transfer<G, R>(
    graph: &G,
    path: &GraphPath<G::Vertex>,
    rule: &R,
) -> Result<GraphPath<G::Vertex>>
where
    G: GradedGraph,
    R: LocalRule<G> + ?Sized,
{
    let n = path.top_level();
    if n < 2 {
        return Err(Error::TooShort { len: n, min: 2 });
    }
    let v = path.vertices();
    let mut out = Vec::with_capacity(n);
    out.push(graph.root());
    for k in 1..n {
        let previous = out.last().expect("root pushed");
        let next = rule.step(graph, k, &v[..=k + 1], previous)?;
        if graph.level(&next) != Some(k) || !graph.covers(previous, &next) {
            return Err(Error::RuleViolation { level: k });
        }
        out.push(next);
    }
    Ok(GraphPath::from_trusted(out))
}

/// The transfer defined by 2-interval involutions.
pub fn graph_transfer<G: GradedGraph>(
    graph: &G,
    path: &GraphPath<G::Vertex>,
) -> Result<GraphPath<G::Vertex>> {
    general_transfer(graph, path, &InvolutionRule)
}

/// Paths agree at every level above `n`.
pub fn tail_equivalent<V: Eq>(p: &GraphPath<V>, q: &GraphPath<V>, n: usize) -> Result<bool> {
    if p.vertices.len() != q.vertices.len() {
        return Err(Error::LengthMismatch {
            left: p.vertices.len(),
            right: q.vertices.len(),
        });
    }
    if p.vertices.len() < n + 1 {
        return Err(Error::LengthMismatch {
            left: p.vertices.len(),
            right: n + 1,
        });
    }
    Ok(p.vertices[n + 1..] == q.vertices[n + 1..])
}

/// How many 2-intervals of the truncation have each number of
/// intermediate vertices.
pub fn two_interval_census<G: GradedGraph>(graph: &G) -> BTreeMap<usize, usize> {
    let mut census = BTreeMap::new();
    for level in 0..=graph.depth().saturating_sub(2) {
        if level + 2 > graph.depth() {
            break;
        }
        for v in graph.vertices_at(level) {
            let mut tops: Vec<G::Vertex> = graph.up(&v).iter().flat_map(|u| graph.up(u)).collect();
            tops.sort();
            tops.dedup();
            for w in tops {
                let count = intermediates(graph, &v, &w)
                    .expect("levels differ by two")
                    .len();
                *census.entry(count).or_insert(0) += 1;
            }
        }
    }
    census
}

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Debug;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::GradedGraph;

/// A user-supplied graded graph given level by level.
///
/// `covers[i]` lists the edges from level `i` to level `i + 1`. Vertex
/// identifiers are unique across all levels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExplicitGraph<V: Ord> {
    levels: Vec<Vec<V>>,
    level_of: BTreeMap<V, usize>,
    up: BTreeMap<V, Vec<V>>,
    down: BTreeMap<V, Vec<V>>,
    edges: Vec<Vec<(V, V)>>,
}

impl<V: Clone + Ord + Debug> ExplicitGraph<V> {
    pub fn new(levels: Vec<Vec<V>>, covers: Vec<Vec<(V, V)>>) -> Result<Self> {
        if levels.first().map(Vec::len) != Some(1) {
            return Err(Error::InvalidGraph(
                "level 0 must hold exactly one root".into(),
            ));
        }
        if covers.len() + 1 != levels.len() {
            return Err(Error::InvalidGraph(format!(
                "{} levels need {} cover lists, got {}",
                levels.len(),
                levels.len() - 1,
                covers.len()
            )));
        }
        let mut level_of = BTreeMap::new();
        for (l, vs) in levels.iter().enumerate() {
            for v in vs {
                if level_of.insert(v.clone(), l).is_some() {
                    return Err(Error::InvalidGraph(format!("vertex {v:?} listed twice")));
                }
            }
        }
        let mut up: BTreeMap<V, Vec<V>> = BTreeMap::new();
        let mut down: BTreeMap<V, Vec<V>> = BTreeMap::new();
        let mut seen = BTreeSet::new();
        for (l, edges) in covers.iter().enumerate() {
            for (a, b) in edges {
                if level_of.get(a) != Some(&l) || level_of.get(b) != Some(&(l + 1)) {
                    return Err(Error::InvalidGraph(format!(
                        "edge {a:?} -> {b:?} does not join levels {l} and {}",
                        l + 1
                    )));
                }
                if !seen.insert((a.clone(), b.clone())) {
                    return Err(Error::InvalidGraph(format!("parallel edge {a:?} -> {b:?}")));
                }
                up.entry(a.clone()).or_default().push(b.clone());
                down.entry(b.clone()).or_default().push(a.clone());
            }
        }
        for vs in &levels[1..] {
            for v in vs {
                if !down.contains_key(v) {
                    return Err(Error::InvalidGraph(format!(
                        "vertex {v:?} has no downward neighbour"
                    )));
                }
            }
        }
        Ok(ExplicitGraph {
            levels,
            level_of,
            up,
            down,
            edges: covers,
        })
    }

    pub fn levels(&self) -> &[Vec<V>] {
        &self.levels
    }

    pub fn edges(&self) -> &[Vec<(V, V)>] {
        &self.edges
    }
}

impl<V: Clone + Ord + Hash + Debug> GradedGraph for ExplicitGraph<V> {
    type Vertex = V;

    fn root(&self) -> V {
        self.levels[0][0].clone()
    }

    fn depth(&self) -> usize {
        self.levels.len() - 1
    }

    fn level(&self, v: &V) -> Option<usize> {
        self.level_of.get(v).copied()
    }

    fn up(&self, v: &V) -> Vec<V> {
        self.up.get(v).cloned().unwrap_or_default()
    }

    fn down(&self, v: &V) -> Vec<V> {
        self.down.get(v).cloned().unwrap_or_default()
    }

    fn vertices_at(&self, level: usize) -> Vec<V> {
        self.levels.get(level).cloned().unwrap_or_default()
    }
}

/// JSON form: `{"levels": [[ids...], ...], "covers": [[[from, to], ...], ...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphRecord<V> {
    pub levels: Vec<Vec<V>>,
    pub covers: Vec<Vec<(V, V)>>,
}

impl<V: Clone + Ord> From<&ExplicitGraph<V>> for GraphRecord<V> {
    fn from(g: &ExplicitGraph<V>) -> Self {
        GraphRecord {
            levels: g.levels.clone(),
            covers: g.edges.clone(),
        }
    }
}

impl<V: Clone + Ord + Debug> TryFrom<GraphRecord<V>> for ExplicitGraph<V> {
    type Error = Error;

    fn try_from(rec: GraphRecord<V>) -> Result<Self> {
        ExplicitGraph::new(rec.levels, rec.covers)
    }
}

impl<V: Clone + Ord + Serialize> Serialize for ExplicitGraph<V> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphRecord::from(self).serialize(s)
    }
}

impl<'de, V: Clone + Ord + Debug + Deserialize<'de>> Deserialize<'de> for ExplicitGraph<V> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rec = GraphRecord::<V>::deserialize(d)?;
        ExplicitGraph::try_from(rec).map_err(serde::de::Error::custom)
    }
}

//! The permutation tree: vertices are 0-based rank vectors, ordinary
//! edges remove the last object and translations remove the first.

use std::collections::HashSet;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::prefix::RealPrefix;

/// Largest `n` for which the orbit of a point is enumerated.
pub const MAX_ORBIT_N: usize = 9;

/// A permutation of `0..n` read as ranks: `k_i = #{s : x_s < x_i}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(into = "RankRecord")]
pub struct RankVector(Vec<usize>);

impl RankVector {
    pub fn new(k: Vec<usize>) -> Result<Self> {
        let n = k.len();
        let mut seen = vec![false; n];
        for &v in &k {
            if v >= n {
                return Err(Error::NotAPermutation {
                    len: n,
                    reason: format!("entry {v} out of range"),
                });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotAPermutation {
                    len: n,
                    reason: format!("entry {v} repeated"),
                });
            }
        }
        Ok(RankVector(k))
    }

    pub(crate) fn from_trusted(k: Vec<usize>) -> Self {
        debug_assert!(RankVector::new(k.clone()).is_ok());
        RankVector(k)
    }

    pub fn identity(n: usize) -> Self {
        RankVector((0..n).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_inner(self) -> Vec<usize> {
        self.0
    }

    /// Every rank vector of length `n`, in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = RankVector> {
        (0..n).permutations(n).map(RankVector)
    }
}

/// JSONL form of a rank vector: `{"n": 4, "k": [1, 0, 3, 2]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankRecord {
    pub n: usize,
    pub k: Vec<usize>,
}

impl From<RankVector> for RankRecord {
    fn from(k: RankVector) -> Self {
        RankRecord {
            n: k.0.len(),
            k: k.0,
        }
    }
}

impl TryFrom<RankRecord> for RankVector {
    type Error = Error;

    fn try_from(rec: RankRecord) -> Result<Self> {
        if rec.n != rec.k.len() {
            return Err(Error::LengthMismatch {
                left: rec.n,
                right: rec.k.len(),
            });
        }
        RankVector::new(rec.k)
    }
}

impl<'de> Deserialize<'de> for RankVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rec = RankRecord::deserialize(d)?;
        RankVector::try_from(rec).map_err(serde::de::Error::custom)
    }
}

/// Which Weyl simplex of `I^n` contains `x`.
pub fn weyl_index(x: &RealPrefix) -> RankVector {
    RankVector(x.ranks())
}

/// Ordinary tree edge: forget the last object.
pub fn tree_parent(k: &RankVector) -> Result<RankVector> {
    let (&last, rest) = k.0.split_last().ok_or(Error::TooShort { len: 0, min: 2 })?;
    if rest.is_empty() {
        return Err(Error::TooShort { len: 1, min: 2 });
    }
    Ok(RankVector(
        rest.iter()
            .map(|&v| if v > last { v - 1 } else { v })
            .collect(),
    ))
}

/// Translation edge: forget the first object.
pub fn translation(k: &RankVector) -> Result<RankVector> {
    let (&first, rest) =
        k.0.split_first()
            .ok_or(Error::TooShort { len: 0, min: 2 })?;
    if rest.is_empty() {
        return Err(Error::TooShort { len: 1, min: 2 });
    }
    Ok(RankVector(
        rest.iter()
            .map(|&v| if v < first { v } else { v - 1 })
            .collect(),
    ))
}

/// A path `g_1, g_2, ..., g_n` from the root of the permutation tree,
/// with `g_i` of length `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreePath {
    vertices: Vec<RankVector>,
}

impl TreePath {
    pub fn new(vertices: Vec<RankVector>) -> Result<Self> {
        for (i, g) in vertices.iter().enumerate() {
            if g.len() != i + 1 {
                return Err(Error::InconsistentPath { level: i + 1 });
            }
            if i > 0 && tree_parent(g)? != vertices[i - 1] {
                return Err(Error::InconsistentPath { level: i + 1 });
            }
        }
        Ok(TreePath { vertices })
    }

    /// The unique path ending at `k`.
    pub fn ending_at(k: &RankVector) -> TreePath {
        let mut vertices = vec![k.clone()];
        while vertices.last().map_or(0, RankVector::len) > 1 {
            let parent = tree_parent(vertices.last().unwrap()).expect("length at least 2");
            vertices.push(parent);
        }
        vertices.reverse();
        TreePath { vertices }
    }

    pub fn vertices(&self) -> &[RankVector] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// The tree transfer: `g_1, g_2, g_3, ...` goes to translations of
/// `g_2, g_3, ...`.
pub fn tree_transfer(p: &TreePath) -> Result<TreePath> {
    if p.len() < 2 {
        return Err(Error::TooShort {
            len: p.len(),
            min: 2,
        });
    }
    let vertices = p.vertices[1..]
        .iter()
        .map(translation)
        .collect::<Result<Vec<_>>>()?;
    TreePath::new(vertices)
}

/// The `n!` coordinate permutations of `x` land in pairwise distinct Weyl
/// simplices, one in each.
pub fn orbit_complement_check(n: usize, x: &RealPrefix) -> Result<bool> {
    if x.len() != n {
        return Err(Error::LengthMismatch {
            left: n,
            right: x.len(),
        });
    }
    if n > MAX_ORBIT_N {
        return Err(Error::TooLarge {
            n,
            max: MAX_ORBIT_N,
        });
    }
    let values = x.values();
    let mut hit = HashSet::new();
    let mut total = 0usize;
    for perm in (0..n).permutations(n) {
        let permuted = RealPrefix::new(perm.iter().map(|&i| values[i]).collect())?;
        hit.insert(weyl_index(&permuted));
        total += 1;
    }
    let factorial: usize = (1..=n).product();
    Ok(total == factorial && hit.len() == factorial)
}

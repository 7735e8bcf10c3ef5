//! Robinson–Schensted–Knuth correspondence on words with distinct
//! letters, its inverse, promotion, Plancherel sampling and the
//! Knuth-class partitions of the symmetric group.

mod tableau;

use std::collections::BTreeMap;

use rand::Rng;

use crate::error::{Error, Result};
use crate::prefix::RealPrefix;
use crate::rng::{substream, uniform_prefix};
use crate::shape::Shape;
use crate::skeleton::RankVector;

pub use tableau::{RealTableau, StandardTableau, Tableau, TableauRecord};

/// Largest `n` accepted by [`knuth_classes`].
pub const MAX_KNUTH_N: usize = 8;

/// Row-insert `value`, bumping the leftmost strictly greater entry.
/// Returns the row where the tableau grew.
fn row_insert<T: PartialOrd + Copy>(rows: &mut Vec<Vec<T>>, mut value: T) -> usize {
    for (r, row) in rows.iter_mut().enumerate() {
        let j = row.partition_point(|e| *e < value);
        if j == row.len() {
            row.push(value);
            return r;
        }
        value = std::mem::replace(&mut row[j], value);
    }
    rows.push(vec![value]);
    rows.len() - 1
}

/// Insertion and recording tableaux of a word with distinct letters.
pub fn rsk_insert<T: PartialOrd + Copy>(word: &[T]) -> (Tableau<T>, StandardTableau) {
    let mut p: Vec<Vec<T>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (i, &letter) in word.iter().enumerate() {
        let r = row_insert(&mut p, letter);
        if r == q.len() {
            q.push(Vec::new());
        }
        q[r].push(i + 1);
    }
    (Tableau::from_trusted(p), Tableau::from_trusted(q))
}

/// Sequence of rows in which the insertion tableau grows; the recording
/// tableau in compact form.
pub fn growth_rows<T: PartialOrd + Copy>(word: &[T]) -> Vec<usize> {
    let mut p: Vec<Vec<T>> = Vec::new();
    word.iter()
        .map(|&letter| row_insert(&mut p, letter))
        .collect()
}

/// Shape of the insertion tableau, without building the recording one.
pub fn insertion_shape<T: PartialOrd + Copy>(word: &[T]) -> Shape {
    let mut p: Vec<Vec<T>> = Vec::new();
    for &letter in word {
        row_insert(&mut p, letter);
    }
    Shape::from_trusted(p.iter().map(Vec::len).collect())
}

pub fn rsk_word(x: &RealPrefix) -> (RealTableau, StandardTableau) {
    rsk_insert(x.values())
}

/// RSK of a permutation given as 0-based ranks, with letters `k_i + 1` so
/// that both tableaux are standard.
pub fn rsk_permutation(k: &RankVector) -> (StandardTableau, StandardTableau) {
    let word: Vec<usize> = k.as_slice().iter().map(|&v| v + 1).collect();
    rsk_insert(&word)
}

/// Inverse RSK: reverse-bump the cells of `q` in the order `n, n-1, ..., 1`.
pub fn rsk_inverse_word<T: PartialOrd + Copy>(
    p: &Tableau<T>,
    q: &StandardTableau,
) -> Result<Vec<T>> {
    if p.shape() != q.shape() {
        return Err(Error::ShapeMismatch {
            left: p.shape().rows().to_vec(),
            right: q.shape().rows().to_vec(),
        });
    }
    q.check_standard()?;
    let mut p_rows = p.rows().to_vec();
    let mut q_rows = q.rows().to_vec();
    let n = q.size();
    let mut word = Vec::with_capacity(n);
    for m in (1..=n).rev() {
        let r = q_rows
            .iter()
            .position(|row| row.last() == Some(&m))
            .ok_or_else(|| Error::InvalidTableau(format!("entry {m} is not at a corner")))?;
        q_rows[r].pop();
        let mut value = p_rows[r].pop().expect("shapes agree");
        if p_rows[r].is_empty() {
            p_rows.pop();
            q_rows.pop();
        }
        for above in (0..r).rev() {
            let row = &mut p_rows[above];
            let j = row.partition_point(|e| *e < value);
            if j == 0 {
                return Err(Error::InvalidTableau(
                    "reverse bump found no smaller entry".into(),
                ));
            }
            value = std::mem::replace(&mut row[j - 1], value);
        }
        word.push(value);
    }
    word.reverse();
    Ok(word)
}

pub fn rsk_inverse(p: &RealTableau, q: &StandardTableau) -> Result<RealPrefix> {
    RealPrefix::new(rsk_inverse_word(p, q)?)
}

/// Schützenberger promotion: delete 1, slide the hole out through the
/// smaller of its right and lower neighbours, decrement every entry.
pub fn promotion(q: &StandardTableau) -> Result<StandardTableau> {
    q.check_standard()?;
    let n = q.size();
    if n < 2 {
        return Err(Error::TooShort { len: n, min: 2 });
    }
    let mut rows = q.rows().to_vec();
    let (mut r, mut c) = (0usize, 0usize);
    loop {
        let right = rows[r].get(c + 1).copied();
        let below = rows.get(r + 1).and_then(|row| row.get(c)).copied();
        let next = match (right, below) {
            (None, None) => break,
            (Some(_), None) => (r, c + 1),
            (None, Some(_)) => (r + 1, c),
            (Some(a), Some(b)) => {
                if a < b {
                    (r, c + 1)
                } else {
                    (r + 1, c)
                }
            }
        };
        rows[r][c] = rows[next.0][next.1];
        (r, c) = next;
    }
    rows[r].pop();
    if rows[r].is_empty() {
        rows.pop();
    }
    for e in rows.iter_mut().flatten() {
        *e -= 1;
    }
    Ok(Tableau::from_trusted(rows))
}

/// Shape of RSK applied to `n` i.i.d. uniforms from the given seed.
pub fn plancherel_sample(n: usize, seed: u64) -> Shape {
    plancherel_sample_with(n, &mut substream(seed, 0))
}

pub fn plancherel_sample_with<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Shape {
    insertion_shape(uniform_prefix(n, rng).values())
}

/// Plancherel probability `f_λ² / n!`.
pub fn plancherel_probability(shape: &Shape) -> f64 {
    let n = shape.size();
    let f = shape
        .standard_count()
        .expect("shape small enough for exact counts") as f64;
    let log_fact: f64 = (1..=n).map(|k| (k as f64).ln()).sum();
    (2.0 * f.ln() - log_fact).exp()
}

/// Each value replaced by its 1-based rank over `n`, i.e. the normalized
/// point `g(i)/n`; then the insertion tableau of that word.
pub fn normalized_p(x: &RealPrefix) -> RealTableau {
    let n = x.len() as f64;
    let normalized: Vec<f64> = x.ranks().iter().map(|&k| (k + 1) as f64 / n).collect();
    rsk_insert(&normalized).0
}

/// Same block of the recording-tableau partition.
pub fn q_equivalent(x: &RealPrefix, y: &RealPrefix) -> Result<bool> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    Ok(growth_rows(x.values()) == growth_rows(y.values()))
}

/// Least `n` at which the recording tableaux of `x[..n]` and `y[..n]`
/// differ. Recording tableaux grow online, so once separated a pair
/// stays separated.
pub fn first_q_separation(x: &RealPrefix, y: &RealPrefix) -> Result<Option<usize>> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    let (a, b) = (growth_rows(x.values()), growth_rows(y.values()));
    Ok(a.iter().zip(&b).position(|(u, v)| u != v).map(|i| i + 1))
}

/// Permutations of size `n` grouped by insertion tableau (Knuth classes)
/// and by recording tableau (dual Knuth classes).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnuthClasses {
    pub n: usize,
    pub by_insertion: BTreeMap<StandardTableau, Vec<RankVector>>,
    pub by_recording: BTreeMap<StandardTableau, Vec<RankVector>>,
}

impl KnuthClasses {
    /// Class sizes grouped by shape, for each of the two partitions.
    pub fn sizes_by_shape(
        map: &BTreeMap<StandardTableau, Vec<RankVector>>,
    ) -> BTreeMap<Shape, Vec<usize>> {
        let mut out: BTreeMap<Shape, Vec<usize>> = BTreeMap::new();
        for (t, members) in map {
            out.entry(t.shape()).or_default().push(members.len());
        }
        out
    }
}

pub fn knuth_classes(n: usize) -> Result<KnuthClasses> {
    if n > MAX_KNUTH_N {
        return Err(Error::TooLarge {
            n,
            max: MAX_KNUTH_N,
        });
    }
    let mut by_insertion: BTreeMap<StandardTableau, Vec<RankVector>> = BTreeMap::new();
    let mut by_recording: BTreeMap<StandardTableau, Vec<RankVector>> = BTreeMap::new();
    for k in RankVector::all(n) {
        let (p, q) = rsk_permutation(&k);
        by_insertion.entry(p).or_default().push(k.clone());
        by_recording.entry(q).or_default().push(k);
    }
    Ok(KnuthClasses {
        n,
        by_insertion,
        by_recording,
    })
}

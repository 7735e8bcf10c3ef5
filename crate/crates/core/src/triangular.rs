//! Sequential-rank codes: the encoding of a real prefix into the
//! triangular compact `∏ {1..i}`, the shift transfer acting on codes,
//! special positions, and recovery of the underlying reals.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fenwick::Fenwick;
use crate::prefix::RealPrefix;
use crate::rng::substream;
use crate::skeleton::RankVector;

/// A finite prefix `(t_1, ..., t_n)` of the triangular compact, with
/// `1 <= t_i <= i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(into = "CodeRecord")]
pub struct TriCode(Vec<usize>);

impl TriCode {
    pub fn new(t: Vec<usize>) -> Result<Self> {
        for (i, &value) in t.iter().enumerate() {
            if value < 1 || value > i + 1 {
                return Err(Error::MalformedCode {
                    position: i + 1,
                    value,
                });
            }
        }
        Ok(TriCode(t))
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

    /// The first `n` coordinates. A prefix of a code is the code of the
    /// corresponding prefix of the reals.
    pub fn prefix(&self, n: usize) -> TriCode {
        TriCode(self.0[..n.min(self.0.len())].to_vec())
    }

    pub fn into_inner(self) -> Vec<usize> {
        self.0
    }
}

/// JSONL form of a code: `{"n": 4, "t": [1, 1, 3, 3]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeRecord {
    pub n: usize,
    pub t: Vec<usize>,
}

impl From<TriCode> for CodeRecord {
    fn from(code: TriCode) -> Self {
        CodeRecord {
            n: code.0.len(),
            t: code.0,
        }
    }
}

impl TryFrom<CodeRecord> for TriCode {
    type Error = Error;

    fn try_from(rec: CodeRecord) -> Result<Self> {
        if rec.n != rec.t.len() {
            return Err(Error::LengthMismatch {
                left: rec.n,
                right: rec.t.len(),
            });
        }
        TriCode::new(rec.t)
    }
}

impl<'de> Deserialize<'de> for TriCode {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rec = CodeRecord::deserialize(d)?;
        TriCode::try_from(rec).map_err(serde::de::Error::custom)
    }
}

/// Which positions of a code are special (`x_i < x_1`, or `i = 1`),
/// together with the running count `d_i` of special positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialProfile {
    pub mask: Vec<bool>,
    pub d: Vec<usize>,
}

impl SpecialProfile {
    pub fn last_count(&self) -> usize {
        self.d.last().copied().unwrap_or(0)
    }
}

/// `t_i = 1 + #{k < i : x_k < x_i}`, the 1-based rank of `x_i` among
/// `x_1..x_i`.
pub fn encode_prefix(x: &RealPrefix) -> TriCode {
    encode_ranks(&x.ranks())
}

fn encode_ranks(ranks: &[usize]) -> TriCode {
    let mut seen = Fenwick::new(ranks.len());
    let t = ranks
        .iter()
        .map(|&k| {
            let below = seen.prefix(k) as usize;
            seen.add(k, 1);
            below + 1
        })
        .collect();
    TriCode(t)
}

/// The full 0-based ranks of any real prefix whose code is `t`.
///
/// The last value has rank `t_n - 1` among all `n`; removing it and
/// repeating gives every rank as an order statistic of the unused slots.
pub fn tricode_to_ranks(t: &TriCode) -> RankVector {
    let n = t.len();
    let mut free = Fenwick::full(n);
    let mut k = vec![0usize; n];
    for i in (0..n).rev() {
        let slot = free.select(t.0[i] as i64);
        free.add(slot, -1);
        k[i] = slot;
    }
    RankVector::from_trusted(k)
}

pub fn ranks_to_tricode(k: &RankVector) -> TriCode {
    encode_ranks(k.as_slice())
}

/// Mark special positions: position 1 always, and position `i + 1`
/// whenever `t_{i+1} <= d_i`.
pub fn special_positions(t: &TriCode) -> SpecialProfile {
    let mut mask = Vec::with_capacity(t.len());
    let mut d = Vec::with_capacity(t.len());
    let mut count = 0usize;
    for (i, &ti) in t.0.iter().enumerate() {
        let special = i == 0 || ti <= count;
        if special {
            count += 1;
        }
        mask.push(special);
        d.push(count);
    }
    SpecialProfile { mask, d }
}

/// The shift image on codes: `t'_i = t_{i+1}` if position `i + 1` is
/// special and `t_{i+1} - 1` otherwise.
pub fn transfer(t: &TriCode) -> Result<TriCode> {
    if t.len() < 2 {
        return Err(Error::TooShort {
            len: t.len(),
            min: 2,
        });
    }
    let profile = special_positions(t);
    let shifted = t.0[1..]
        .iter()
        .zip(&profile.mask[1..])
        .map(|(&ti, &special)| if special { ti } else { ti - 1 })
        .collect();
    Ok(TriCode(shifted))
}

/// `d_n / n`, which tends to `x_1` for almost every uniform sequence.
pub fn estimate_first_coord(t: &TriCode) -> Result<f64> {
    if t.is_empty() {
        return Err(Error::Empty);
    }
    let profile = special_positions(t);
    Ok(profile.last_count() as f64 / t.len() as f64)
}

/// Plotting-position estimates `(k_i + 1) / (n + 1)` of the first `m`
/// reals behind a code of length `n`.
pub fn reconstruct_prefix(t: &TriCode, m: usize) -> Result<Vec<f64>> {
    let n = t.len();
    if m > n {
        return Err(Error::BadRange { m, n });
    }
    let k = tricode_to_ranks(t);
    let denom = (n + 1) as f64;
    Ok(k.as_slice()[..m]
        .iter()
        .map(|&ki| (ki + 1) as f64 / denom)
        .collect())
}

/// Least `n` at which the length-`n` prefixes of two codes differ.
pub fn first_code_separation(a: &TriCode, b: &TriCode) -> Option<usize> {
    a.0.iter()
        .zip(&b.0)
        .position(|(u, v)| u != v)
        .map(|i| i + 1)
}

/// Draw a code directly from the product of uniform measures on `{1..i}`.
pub fn sample_uniform_tricode(n: usize, seed: u64) -> TriCode {
    let mut rng = substream(seed, 0);
    sample_tricode_with(n, &mut rng)
}

pub fn sample_tricode_with<R: Rng + ?Sized>(n: usize, rng: &mut R) -> TriCode {
    TriCode((1..=n).map(|i| rng.random_range(1..=i)).collect())
}

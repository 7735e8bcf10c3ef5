use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite prefix `x_1..x_n` of a point of the unit-interval product space.
///
/// Values are finite, lie in `[0, 1]` and are pairwise distinct.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(into = "PrefixRecord")]
pub struct RealPrefix {
    values: Vec<f64>,
}

impl RealPrefix {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Empty);
        }
        for (position, &value) in values.iter().enumerate() {
            if !value.is_finite() || !(0.0..=1.0).contains(&value) {
                return Err(Error::OutOfRange { value, position });
            }
        }
        check_distinct(&values)?;
        Ok(RealPrefix { values })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    /// The one-sided shift: drop the first value.
    pub fn shift(&self) -> Result<RealPrefix> {
        if self.values.len() < 2 {
            return Err(Error::TooShort {
                len: self.values.len(),
                min: 2,
            });
        }
        Ok(RealPrefix {
            values: self.values[1..].to_vec(),
        })
    }

    /// The first `n` values.
    pub fn truncate(&self, n: usize) -> Result<RealPrefix> {
        if n == 0 {
            return Err(Error::Empty);
        }
        if n > self.values.len() {
            return Err(Error::BadRange {
                m: n,
                n: self.values.len(),
            });
        }
        Ok(RealPrefix {
            values: self.values[..n].to_vec(),
        })
    }

    /// 0-based ranks: `k_i = #{s : x_s < x_i}`.
    pub fn ranks(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.values.len()).collect();
        order.sort_by(|&a, &b| self.values[a].total_cmp(&self.values[b]));
        let mut ranks = vec![0; self.values.len()];
        for (rank, &i) in order.iter().enumerate() {
            ranks[i] = rank;
        }
        ranks
    }
}

fn check_distinct(values: &[f64]) -> Result<()> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    for pair in order.windows(2) {
        // -0.0 and 0.0 compare equal even though total_cmp separates them
        if values[pair[0]] == values[pair[1]] {
            let (first, second) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            return Err(Error::DuplicateValue {
                value: values[first],
                first,
                second,
            });
        }
    }
    Ok(())
}

/// JSONL form of a real prefix: `{"n": 4, "x": [0.5, 0.2, 0.7, 0.6]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PrefixRecord {
    pub n: usize,
    pub x: Vec<f64>,
}

impl From<RealPrefix> for PrefixRecord {
    fn from(p: RealPrefix) -> Self {
        PrefixRecord {
            n: p.values.len(),
            x: p.values,
        }
    }
}

impl TryFrom<PrefixRecord> for RealPrefix {
    type Error = Error;

    fn try_from(rec: PrefixRecord) -> Result<Self> {
        if rec.n != rec.x.len() {
            return Err(Error::LengthMismatch {
                left: rec.n,
                right: rec.x.len(),
            });
        }
        RealPrefix::new(rec.x)
    }
}

impl<'de> Deserialize<'de> for RealPrefix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rec = PrefixRecord::deserialize(d)?;
        RealPrefix::try_from(rec).map_err(serde::de::Error::custom)
    }
}

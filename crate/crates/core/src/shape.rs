//! Young diagrams and the covering relation of Young's lattice.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A Young diagram stored as weakly decreasing positive row lengths.
/// The empty diagram is the root of the Young graph.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Shape(Vec<usize>);

impl Shape {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.contains(&0) {
            return Err(Error::InvalidTableau(format!(
                "shape {rows:?} has an empty row"
            )));
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidTableau(format!(
                "shape {rows:?} is not weakly decreasing"
            )));
        }
        Ok(Shape(rows))
    }

    pub fn empty() -> Self {
        Shape(Vec::new())
    }

    pub(crate) fn from_trusted(rows: Vec<usize>) -> Self {
        debug_assert!(Shape::new(rows.clone()).is_ok());
        Shape(rows)
    }

    pub fn rows(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, other: &Shape) -> bool {
        other.0.len() <= self.0.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Rows where a cell can be added (outer corners), top to bottom.
    pub fn addable_rows(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for r in 0..=self.0.len() {
            let len = self.0.get(r).copied().unwrap_or(0);
            if r == 0 || self.0[r - 1] > len {
                out.push(r);
            }
        }
        out
    }

    /// Rows whose last cell can be removed (inner corners), top to bottom.
    pub fn removable_rows(&self) -> Vec<usize> {
        (0..self.0.len())
            .filter(|&r| self.0.get(r + 1).copied().unwrap_or(0) < self.0[r])
            .collect()
    }

    pub fn with_cell_added(&self, row: usize) -> Shape {
        let mut rows = self.0.clone();
        if row == rows.len() {
            rows.push(1);
        } else {
            rows[row] += 1;
        }
        Shape::from_trusted(rows)
    }

    pub fn with_cell_removed(&self, row: usize) -> Shape {
        let mut rows = self.0.clone();
        rows[row] -= 1;
        if rows[row] == 0 {
            rows.pop();
        }
        Shape::from_trusted(rows)
    }

    /// Diagrams covering this one in Young's lattice.
    pub fn successors(&self) -> Vec<Shape> {
        self.addable_rows()
            .into_iter()
            .map(|r| self.with_cell_added(r))
            .collect()
    }

    /// Diagrams covered by this one.
    pub fn predecessors(&self) -> Vec<Shape> {
        self.removable_rows()
            .into_iter()
            .map(|r| self.with_cell_removed(r))
            .collect()
    }

    /// `other` covers `self`: one extra cell.
    pub fn is_covered_by(&self, other: &Shape) -> bool {
        other.size() == self.size() + 1 && other.contains(self)
    }

    /// Number of standard tableaux of this shape, by the hook length
    /// formula. `None` if the intermediate factorial overflows `u128`.
    pub fn standard_count(&self) -> Option<u128> {
        let n = self.size();
        let mut numerator: u128 = 1;
        for k in 1..=n as u128 {
            numerator = numerator.checked_mul(k)?;
        }
        let mut hooks: u128 = 1;
        for (r, &len) in self.0.iter().enumerate() {
            for c in 0..len {
                let arm = len - c - 1;
                let leg = self.0[r + 1..].iter().take_while(|&&l| l > c).count();
                hooks = hooks.checked_mul((arm + leg + 1) as u128)?;
            }
        }
        Some(numerator / hooks)
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (i, r) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

impl<'de> Deserialize<'de> for Shape {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<usize>::deserialize(d)?;
        Shape::new(rows).map_err(serde::de::Error::custom)
    }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Shape> {
    fn go(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Shape>) {
        if remaining == 0 {
            out.push(Shape::from_trusted(current.clone()));
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            current.push(part);
            go(remaining - part, part, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

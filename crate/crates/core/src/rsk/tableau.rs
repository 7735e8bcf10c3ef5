use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shape::Shape;

/// A Young tableau of distinct entries, stored row-major as ragged rows.
/// Rows increase left to right and columns increase top to bottom.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau<T> {
    rows: Vec<Vec<T>>,
}

/// Tableau with entries `1..=n`.
pub type StandardTableau = Tableau<usize>;
/// Tableau with distinct real entries, e.g. the insertion tableau of a
/// real word.
pub type RealTableau = Tableau<f64>;

fn less<T: PartialOrd>(a: &T, b: &T) -> bool {
    a.partial_cmp(b) == Some(std::cmp::Ordering::Less)
}

impl<T: PartialOrd + Copy> Tableau<T> {
    pub fn new(rows: Vec<Vec<T>>) -> Result<Self> {
        let lengths: Vec<usize> = rows.iter().map(Vec::len).collect();
        Shape::new(lengths)?;
        for (r, row) in rows.iter().enumerate() {
            if row.windows(2).any(|w| !less(&w[0], &w[1])) {
                return Err(Error::InvalidTableau(format!("row {r} is not increasing")));
            }
            if r > 0 {
                let above = &rows[r - 1];
                if row.iter().zip(above).any(|(b, a)| !less(a, b)) {
                    return Err(Error::InvalidTableau(format!(
                        "a column is not increasing at row {r}"
                    )));
                }
            }
        }
        let mut entries: Vec<T> = rows.iter().flatten().copied().collect();
        entries.sort_by(|a, b| a.partial_cmp(b).expect("comparable entries"));
        if entries.windows(2).any(|w| !less(&w[0], &w[1])) {
            return Err(Error::InvalidTableau("entries are not distinct".into()));
        }
        Ok(Tableau { rows })
    }

    pub(crate) fn from_trusted(rows: Vec<Vec<T>>) -> Self {
        Tableau { rows }
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<T>> {
        self.rows
    }

    pub fn shape(&self) -> Shape {
        Shape::from_trusted(self.rows.iter().map(Vec::len).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn get(&self, row: usize, col: usize) -> Option<T> {
        self.rows.get(row).and_then(|r| r.get(col)).copied()
    }
}

impl Tableau<usize> {
    /// A tableau whose entries are exactly `1..=n`.
    pub fn standard(rows: Vec<Vec<usize>>) -> Result<Self> {
        let t = Tableau::new(rows)?;
        t.check_standard()?;
        Ok(t)
    }

    pub fn check_standard(&self) -> Result<()> {
        let n = self.size();
        let mut seen = vec![false; n + 1];
        for &e in self.rows.iter().flatten() {
            if e == 0 || e > n || std::mem::replace(&mut seen[e], true) {
                return Err(Error::InvalidTableau(format!(
                    "entries are not exactly 1..={n}"
                )));
            }
        }
        Ok(())
    }

    /// Every standard tableau of shape `shape`, generated by placing the
    /// largest entry in each inner corner in turn.
    pub fn all_of_shape(shape: &Shape) -> Vec<StandardTableau> {
        fn go(shape: &Shape, out: &mut Vec<Vec<Vec<usize>>>) {
            let n = shape.size();
            if n == 0 {
                out.push(Vec::new());
                return;
            }
            for r in shape.removable_rows() {
                let mut smaller = Vec::new();
                go(&shape.with_cell_removed(r), &mut smaller);
                for mut rows in smaller {
                    if r == rows.len() {
                        rows.push(Vec::new());
                    }
                    rows[r].push(n);
                    out.push(rows);
                }
            }
        }
        let mut raw = Vec::new();
        go(shape, &mut raw);
        raw.into_iter().map(Tableau::from_trusted).collect()
    }

    /// The row and column of entry `value`.
    pub fn position(&self, value: usize) -> Option<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .find_map(|(r, row)| row.iter().position(|&e| e == value).map(|c| (r, c)))
    }
}

/// JSONL form: `{"shape": [2, 2], "rows": [[1, 3], [2, 4]]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableauRecord<T> {
    pub shape: Vec<usize>,
    pub rows: Vec<Vec<T>>,
}

impl<T: PartialOrd + Copy> From<&Tableau<T>> for TableauRecord<T> {
    fn from(t: &Tableau<T>) -> Self {
        TableauRecord {
            shape: t.rows.iter().map(Vec::len).collect(),
            rows: t.rows.clone(),
        }
    }
}

impl<T: PartialOrd + Copy> TryFrom<TableauRecord<T>> for Tableau<T> {
    type Error = Error;

    fn try_from(rec: TableauRecord<T>) -> Result<Self> {
        let lengths: Vec<usize> = rec.rows.iter().map(Vec::len).collect();
        if lengths != rec.shape {
            return Err(Error::ShapeMismatch {
                left: rec.shape,
                right: lengths,
            });
        }
        Tableau::new(rec.rows)
    }
}

impl<T: PartialOrd + Copy + Serialize> Serialize for Tableau<T> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TableauRecord::from(self).serialize(s)
    }
}

impl<'de, T: PartialOrd + Copy + Deserialize<'de>> Deserialize<'de> for Tableau<T> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rec = TableauRecord::<T>::deserialize(d)?;
        Tableau::try_from(rec).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shape::partitions;

    #[test]
    fn validation() {
        assert!(Tableau::standard(vec![vec![1, 3], vec![2, 4]]).is_ok());
        assert!(Tableau::standard(vec![vec![1, 2], vec![2, 4]]).is_err());
        assert!(Tableau::standard(vec![vec![2, 1]]).is_err());
        assert!(Tableau::standard(vec![vec![1, 5]]).is_err());
        assert!(Tableau::standard(vec![vec![1], vec![2, 3]]).is_err());
        assert!(Tableau::new(vec![vec![0.2, 0.6], vec![0.5, 0.7]]).is_ok());
        assert!(Tableau::new(vec![vec![0.2, 0.6], vec![0.1, 0.7]]).is_err());
    }

    #[test]
    fn json_records() {
        let t = Tableau::standard(vec![vec![1, 3], vec![2, 4]]).unwrap();
        assert_eq!(
            serde_json::to_string(&t).unwrap(),
            r#"{"shape":[2,2],"rows":[[1,3],[2,4]]}"#
        );
        let p = Tableau::new(vec![vec![0.2, 0.6], vec![0.5, 0.7]]).unwrap();
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"{"shape":[2,2],"rows":[[0.2,0.6],[0.5,0.7]]}"#
        );
        let bad = r#"{"shape":[2,1],"rows":[[1,3],[2,4]]}"#;
        assert!(serde_json::from_str::<StandardTableau>(bad).is_err());
    }

    #[test]
    fn enumeration_counts_match_hook_formula() {
        for n in 0..=7 {
            for shape in partitions(n) {
                let all = StandardTableau::all_of_shape(&shape);
                assert_eq!(all.len() as u128, shape.standard_count().unwrap());
                for t in &all {
                    t.check_standard().unwrap();
                    Tableau::new(t.rows().to_vec()).unwrap();
                }
            }
        }
    }
}

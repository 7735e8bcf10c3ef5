use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// One measured value. `trial` is empty for rows aggregated over trials.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub trial: Option<u64>,
    pub n: u64,
    pub statistic: String,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Metadata {
    pub code_version: String,
}

/// The output of one seeded experiment run.
///
/// Identical name, seed and parameters reproduce identical rows, so the
/// report carries no wall-clock data.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub name: String,
    pub seed: u64,
    pub params: BTreeMap<String, u64>,
    pub notes: Vec<String>,
    pub rows: Vec<ReportRow>,
    pub metadata: Metadata,
}

#[derive(Serialize)]
struct CsvRow<'a> {
    experiment: &'a str,
    seed: u64,
    trial: Option<u64>,
    n: u64,
    statistic: &'a str,
    value: f64,
}

impl ExperimentReport {
    pub(crate) fn new(name: &str, seed: u64, params: &[(&str, u64)]) -> Self {
        ExperimentReport {
            name: name.to_string(),
            seed,
            params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            notes: Vec::new(),
            rows: Vec::new(),
            metadata: Metadata {
                code_version: env!("CARGO_PKG_VERSION").to_string(),
            },
        }
    }

    pub(crate) fn push(&mut self, trial: Option<u64>, n: u64, statistic: &str, value: f64) {
        self.rows.push(ReportRow {
            trial,
            n,
            statistic: statistic.to_string(),
            value,
        });
    }

    pub(crate) fn note(&mut self, text: &str) {
        self.notes.push(text.to_string());
    }

    /// Rows with the given statistic name.
    pub fn rows_named<'a>(
        &'a self,
        statistic: &'a str,
    ) -> impl Iterator<Item = &'a ReportRow> + 'a {
        self.rows.iter().filter(move |r| r.statistic == statistic)
    }

    /// Value of the aggregate row with this statistic at `n`.
    pub fn summary(&self, statistic: &str, n: u64) -> Option<f64> {
        self.rows
            .iter()
            .find(|r| r.trial.is_none() && r.n == n && r.statistic == statistic)
            .map(|r| r.value)
    }

    /// `<name>-<seed>.csv`
    pub fn file_stem(&self) -> String {
        format!("{}-{}", self.name, self.seed)
    }

    /// CSV with header `experiment,seed,trial,n,statistic,value`.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        if self.rows.is_empty() {
            w.write_record(["experiment", "seed", "trial", "n", "statistic", "value"])
                .expect("in-memory write");
        }
        for r in &self.rows {
            w.serialize(CsvRow {
                experiment: &self.name,
                seed: self.seed,
                trial: r.trial,
                n: r.n,
                statistic: &r.statistic,
                value: r.value,
            })
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 csv")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

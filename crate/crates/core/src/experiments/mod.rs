//! Seeded Monte Carlo experiments with reproducible CSV/JSON reports.
//!
//! Every trial draws from its own stream keyed by `(seed, tag, trial)`, so
//! the rows of a report do not depend on evaluation order.

mod report;
pub mod stats;

use rand::seq::index::sample as sample_indices;

use crate::error::{Error, Result};
use crate::prefix::RealPrefix;
use crate::rng::{tagged_substream, uniform_prefix};
use crate::rsk::{
    first_q_separation, normalized_p, plancherel_probability, plancherel_sample_with, rsk_word,
    RealTableau,
};
use crate::shape::partitions;
use crate::triangular::{
    encode_prefix, estimate_first_coord, first_code_separation, reconstruct_prefix, TriCode,
};

pub use report::{ExperimentReport, Metadata, ReportRow};
pub use stats::ChiSquare;

const TAG_POINT: u16 = 1;
const TAG_PARTNER: u16 = 2;
const TAG_PAIRS: u16 = 3;

/// Chi-square significance floor shared by the statistical checks.
pub const SIGNIFICANCE_FLOOR: f64 = 0.001;

/// Coordinates recovered in the reconstruction experiment.
pub const RECONSTRUCTED_COORDS: usize = 10;

/// Distinct prefix lengths `N/10, N/2, N`.
fn checkpoints(n: usize) -> Vec<usize> {
    let mut v = vec![(n / 10).max(1), (n / 2).max(1), n];
    v.dedup();
    v
}

/// Reconstruction error of the first coordinates from prefix codes, and
/// the first level at which codes of independent points differ.
pub fn run_distinguishability(n: usize, trials: usize, seed: u64) -> Result<ExperimentReport> {
    if n < 10 || trials < 1 {
        return Err(Error::BadParams(format!(
            "distinguishability needs N >= 10 and trials >= 1, got N = {n}, trials = {trials}"
        )));
    }
    let mut report = ExperimentReport::new(
        "distinguishability",
        seed,
        &[("N", n as u64), ("trials", trials as u64)],
    );
    report.note("reconstruction_error: max over the first 10 coordinates of |(k_i+1)/(n+1) - x_i|");
    report.note("first_code_separation: least n at which the codes of x and an independent y differ, 0 if none up to N");

    let levels = checkpoints(n);
    let mut errors: Vec<Vec<f64>> = vec![Vec::with_capacity(trials); levels.len()];
    let mut separated = 0usize;
    for trial in 0..trials as u64 {
        let x = uniform_prefix(n, &mut tagged_substream(seed, TAG_POINT, trial));
        let code = encode_prefix(&x);
        for (slot, &level) in levels.iter().enumerate() {
            let m = RECONSTRUCTED_COORDS.min(level);
            let estimate = reconstruct_prefix(&code.prefix(level), m)?;
            let err = estimate
                .iter()
                .zip(x.values())
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max);
            errors[slot].push(err);
            report.push(Some(trial), level as u64, "reconstruction_error", err);
        }
        let y = uniform_prefix(n, &mut tagged_substream(seed, TAG_PARTNER, trial));
        let level = first_code_separation(&code, &encode_prefix(&y));
        if level.is_some() {
            separated += 1;
        }
        report.push(
            Some(trial),
            n as u64,
            "first_code_separation",
            level.unwrap_or(0) as f64,
        );
    }
    for (slot, &level) in levels.iter().enumerate() {
        let med = stats::median(&mut errors[slot]);
        report.push(None, level as u64, "median_reconstruction_error", med);
    }
    report.push(
        None,
        n as u64,
        "separated_fraction",
        separated as f64 / trials as f64,
    );
    Ok(report)
}

/// Accumulates per-coordinate and pairwise counts of codes, for testing
/// that coordinates are independent and uniform on `{1..i}`.
#[derive(Debug, Clone)]
pub struct UniformityTally {
    n: usize,
    counts: Vec<Vec<u64>>,
    pairs: Vec<(usize, usize)>,
    tables: Vec<Vec<Vec<u64>>>,
    samples: u64,
}

impl UniformityTally {
    /// `pairs` are 1-based coordinate indices `(i, j)` with `i < j <= n`.
    pub fn new(n: usize, pairs: Vec<(usize, usize)>) -> Result<Self> {
        if pairs.iter().any(|&(i, j)| i == 0 || i >= j || j > n) {
            return Err(Error::BadParams(
                "pair indices must satisfy 1 <= i < j <= n".into(),
            ));
        }
        Ok(UniformityTally {
            n,
            counts: (1..=n).map(|i| vec![0; i]).collect(),
            tables: pairs.iter().map(|&(i, j)| vec![vec![0; j]; i]).collect(),
            pairs,
            samples: 0,
        })
    }

    pub fn add(&mut self, code: &TriCode) -> Result<()> {
        if code.len() != self.n {
            return Err(Error::LengthMismatch {
                left: code.len(),
                right: self.n,
            });
        }
        let t = code.as_slice();
        for (i, &ti) in t.iter().enumerate() {
            self.counts[i][ti - 1] += 1;
        }
        for (table, &(i, j)) in self.tables.iter_mut().zip(&self.pairs) {
            table[t[i - 1] - 1][t[j - 1] - 1] += 1;
        }
        self.samples += 1;
        Ok(())
    }

    /// Goodness of fit of coordinate `i` (1-based) to the uniform law.
    pub fn coordinate_test(&self, i: usize) -> ChiSquare {
        stats::chi_square_gof(&self.counts[i - 1], &vec![1.0 / i as f64; i])
    }

    pub fn pair_tests(&self) -> Vec<((usize, usize), ChiSquare)> {
        self.pairs
            .iter()
            .zip(&self.tables)
            .map(|(&p, table)| (p, stats::chi_square_independence(table)))
            .collect()
    }

    fn write_rows(&self, report: &mut ExperimentReport) {
        for i in 1..=self.n {
            let test = self.coordinate_test(i);
            report.push(None, i as u64, "coordinate_chi_square", test.statistic);
            report.push(None, i as u64, "coordinate_p_value", test.p_value);
        }
        for ((i, j), test) in self.pair_tests() {
            let name = format!("pair_p_value[{i},{j}]");
            report.push(None, self.n as u64, &name, test.p_value);
        }
    }
}

/// Up to ten distinct coordinate pairs among positions `2..=n`, chosen
/// from the seed. Position 1 is constant and carries no information.
fn choose_pairs(n: usize, seed: u64) -> Vec<(usize, usize)> {
    let all: Vec<(usize, usize)> = (2..=n)
        .flat_map(|i| ((i + 1)..=n).map(move |j| (i, j)))
        .collect();
    let k = all.len().min(10);
    let mut rng = tagged_substream(seed, TAG_PAIRS, 0);
    let mut chosen: Vec<(usize, usize)> = sample_indices(&mut rng, all.len(), k)
        .into_iter()
        .map(|idx| all[idx])
        .collect();
    chosen.sort();
    chosen
}

/// Chi-square tests that the code coordinates of uniform points are
/// uniform on `{1..i}` and pairwise independent.
pub fn run_uniformity(n: usize, samples: usize, seed: u64) -> Result<ExperimentReport> {
    if n < 2 || samples < 1 {
        return Err(Error::BadParams(format!(
            "uniformity needs n >= 2 and samples >= 1, got n = {n}, samples = {samples}"
        )));
    }
    let mut tally = UniformityTally::new(n, choose_pairs(n, seed))?;
    for s in 0..samples as u64 {
        let x = uniform_prefix(n, &mut tagged_substream(seed, TAG_POINT, s));
        tally.add(&encode_prefix(&x))?;
    }
    let mut report = ExperimentReport::new(
        "uniformity",
        seed,
        &[("n", n as u64), ("samples", samples as u64)],
    );
    report.note("significance floor 0.001 per test, chosen so a correct implementation fails the whole suite spuriously with probability below 5%");
    report.push(None, n as u64, "significance_floor", SIGNIFICANCE_FLOOR);
    tally.write_rows(&mut report);
    Ok(report)
}

/// Same tests on an arbitrary stream of codes, e.g. a degenerate one.
pub fn uniformity_of_codes<'a, I>(
    n: usize,
    codes: I,
    pairs: Vec<(usize, usize)>,
) -> Result<ExperimentReport>
where
    I: IntoIterator<Item = &'a TriCode>,
{
    let mut tally = UniformityTally::new(n, pairs)?;
    for c in codes {
        tally.add(c)?;
    }
    let mut report = ExperimentReport::new(
        "uniformity",
        0,
        &[("n", n as u64), ("samples", tally.samples)],
    );
    report.push(None, n as u64, "significance_floor", SIGNIFICANCE_FLOOR);
    tally.write_rows(&mut report);
    Ok(report)
}

/// Entropy per coordinate `H(η_n)/n = ln(n!)/n` of the partition into
/// `n!` equiprobable simplices.
pub fn run_entropy_curve(n_max: usize) -> Result<ExperimentReport> {
    if n_max < 2 {
        return Err(Error::BadParams(format!(
            "entropy curve needs n_max >= 2, got {n_max}"
        )));
    }
    let mut report = ExperimentReport::new("entropy", 0, &[("n_max", n_max as u64)]);
    let mut sum = 0.0f64;
    let mut compensation = 0.0f64;
    for n in 1..=n_max {
        if n >= 2 {
            let v = (n as f64).ln();
            let t = sum + v;
            if sum.abs() >= v.abs() {
                compensation += (sum - t) + v;
            } else {
                compensation += (v - t) + sum;
            }
            sum = t;
        }
        report.push(
            None,
            n as u64,
            "entropy_per_coordinate",
            (sum + compensation) / n as f64,
        );
    }
    Ok(report)
}

/// Q-tableau separation of independent pairs as `n` grows, plus the
/// error of the first-coordinate estimate `d_n/n`.
pub fn run_rsk_separation(n: usize, pairs: usize, seed: u64) -> Result<ExperimentReport> {
    if n < 2 || pairs < 1 {
        return Err(Error::BadParams(format!(
            "rsk separation needs N >= 2 and pairs >= 1, got N = {n}, pairs = {pairs}"
        )));
    }
    let mut report = ExperimentReport::new(
        "rsk-separation",
        seed,
        &[("N", n as u64), ("pairs", pairs as u64)],
    );
    report.note("first_q_separation: least n with different recording tableaux, 0 if none up to N");
    report.note("x1_estimate_error: |d_n/n - x_1| from the sequential-rank code");
    let mut separated_by = vec![0u64; n + 1];
    let levels = checkpoints(n);
    for trial in 0..pairs as u64 {
        let x = uniform_prefix(n, &mut tagged_substream(seed, TAG_POINT, trial));
        let y = uniform_prefix(n, &mut tagged_substream(seed, TAG_PARTNER, trial));
        let level = first_q_separation(&x, &y)?;
        if let Some(l) = level {
            separated_by[l] += 1;
        }
        report.push(
            Some(trial),
            n as u64,
            "first_q_separation",
            level.unwrap_or(0) as f64,
        );
        let code = encode_prefix(&x);
        for &m in &levels {
            let est = estimate_first_coord(&code.prefix(m))?;
            report.push(
                Some(trial),
                m as u64,
                "x1_estimate_error",
                (est - x.values()[0]).abs(),
            );
        }
    }
    let mut cumulative = 0u64;
    for (m, &count) in separated_by.iter().enumerate().skip(1) {
        cumulative += count;
        report.push(
            None,
            m as u64,
            "q_separated_fraction",
            cumulative as f64 / pairs as f64,
        );
    }
    Ok(report)
}

/// Largest difference between entries on the common cells of the top-left
/// 3×3 corners of two tableaux.
fn corner_drift(a: &RealTableau, b: &RealTableau) -> f64 {
    let mut drift = 0.0f64;
    for r in 0..3 {
        for c in 0..3 {
            if let (Some(u), Some(v)) = (a.get(r, c), b.get(r, c)) {
                drift = drift.max((u - v).abs());
            }
        }
    }
    drift
}

/// Corner drift between the insertion tableaux of `x[..n]` and `x[..2n]`,
/// as `(normalized, raw)`.
pub fn p_corner_drift(x: &RealPrefix, n: usize) -> Result<(f64, f64)> {
    let short = x.truncate(n)?;
    let long = x.truncate(2 * n)?;
    let normalized = corner_drift(&normalized_p(&short), &normalized_p(&long));
    let raw = corner_drift(&rsk_word(&short).0, &rsk_word(&long).0);
    Ok((normalized, raw))
}

/// Stabilization of normalized insertion tableaux along one stream.
pub fn run_p_stabilization(n: usize, trials: usize, seed: u64) -> Result<ExperimentReport> {
    if n < 20 || trials < 1 {
        return Err(Error::BadParams(format!(
            "p stabilization needs N >= 20 and trials >= 1, got N = {n}, trials = {trials}"
        )));
    }
    let mut report = ExperimentReport::new(
        "p-stabilization",
        seed,
        &[("N", n as u64), ("trials", trials as u64)],
    );
    report.note(
        "drift between P(x[..n]) and P(x[..2n]) on the common 3x3 corner cells, n in {N/4, N/2}",
    );
    let steps = [n / 4, n / 2];
    let (mut norm_total, mut raw_total) = (0.0, 0.0);
    for trial in 0..trials as u64 {
        let x = uniform_prefix(n, &mut tagged_substream(seed, TAG_POINT, trial));
        for &m in &steps {
            let (normalized, raw) = p_corner_drift(&x, m)?;
            norm_total += normalized;
            raw_total += raw;
            report.push(Some(trial), m as u64, "normalized_corner_drift", normalized);
            report.push(Some(trial), m as u64, "raw_corner_drift", raw);
        }
    }
    let count = (trials * steps.len()) as f64;
    report.push(
        None,
        n as u64,
        "mean_normalized_corner_drift",
        norm_total / count,
    );
    report.push(None, n as u64, "mean_raw_corner_drift", raw_total / count);
    Ok(report)
}

/// Shapes of RSK on uniform words against the Plancherel law.
pub fn run_plancherel_fit(n: usize, samples: usize, seed: u64) -> Result<ExperimentReport> {
    const MAX_N: usize = 20;
    if !(1..=MAX_N).contains(&n) || samples < 1 {
        return Err(Error::BadParams(format!(
            "plancherel fit needs 1 <= n <= {MAX_N} and samples >= 1, got n = {n}, samples = {samples}"
        )));
    }
    let shapes = partitions(n);
    let mut counts = vec![0u64; shapes.len()];
    for s in 0..samples as u64 {
        let shape = plancherel_sample_with(n, &mut tagged_substream(seed, TAG_POINT, s));
        let idx = shapes
            .iter()
            .position(|l| *l == shape)
            .expect("shape of size n");
        counts[idx] += 1;
    }
    let probs: Vec<f64> = shapes.iter().map(plancherel_probability).collect();
    let test = stats::chi_square_gof(&counts, &probs);
    let mut report = ExperimentReport::new(
        "plancherel",
        seed,
        &[("n", n as u64), ("samples", samples as u64)],
    );
    report.note("shape_frequency[...] rows list shapes in reverse lexicographic order");
    for (shape, (&c, &p)) in shapes.iter().zip(counts.iter().zip(&probs)) {
        report.push(
            None,
            n as u64,
            &format!("shape_frequency{:?}", shape.rows()),
            c as f64 / samples as f64,
        );
        report.push(
            None,
            n as u64,
            &format!("shape_probability{:?}", shape.rows()),
            p,
        );
    }
    report.push(None, n as u64, "chi_square", test.statistic);
    report.push(None, n as u64, "p_value", test.p_value);
    Ok(report)
}

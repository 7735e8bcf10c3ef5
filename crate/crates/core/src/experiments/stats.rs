use statrs::distribution::{ChiSquared, ContinuousCDF};

/// Result of a chi-square test.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChiSquare {
    pub statistic: f64,
    pub df: usize,
    pub p_value: f64,
}

fn upper_tail(statistic: f64, df: usize) -> f64 {
    if df == 0 {
        return 1.0;
    }
    ChiSquared::new(df as f64)
        .expect("positive degrees of freedom")
        .sf(statistic)
}

/// Goodness of fit of `observed` counts against category probabilities.
pub fn chi_square_gof(observed: &[u64], probs: &[f64]) -> ChiSquare {
    assert_eq!(observed.len(), probs.len(), "one probability per category");
    let total: u64 = observed.iter().sum();
    let total = total as f64;
    let statistic = observed
        .iter()
        .zip(probs)
        .map(|(&o, &p)| {
            let e = total * p;
            let d = o as f64 - e;
            d * d / e
        })
        .sum();
    let df = observed.len().saturating_sub(1);
    ChiSquare {
        statistic,
        df,
        p_value: upper_tail(statistic, df),
    }
}

/// Pearson test of independence on a contingency table. Rows or columns
/// that were never observed are dropped before counting degrees of
/// freedom.
pub fn chi_square_independence(table: &[Vec<u64>]) -> ChiSquare {
    let cols = table.first().map_or(0, Vec::len);
    let row_sums: Vec<u64> = table.iter().map(|r| r.iter().sum()).collect();
    let col_sums: Vec<u64> = (0..cols)
        .map(|c| table.iter().map(|r| r[c]).sum())
        .collect();
    let total: u64 = row_sums.iter().sum();
    let live_rows: Vec<usize> = (0..table.len()).filter(|&r| row_sums[r] > 0).collect();
    let live_cols: Vec<usize> = (0..cols).filter(|&c| col_sums[c] > 0).collect();
    let mut statistic = 0.0;
    for &r in &live_rows {
        for &c in &live_cols {
            let e = row_sums[r] as f64 * col_sums[c] as f64 / total as f64;
            let d = table[r][c] as f64 - e;
            statistic += d * d / e;
        }
    }
    let df = live_rows.len().saturating_sub(1) * live_cols.len().saturating_sub(1);
    ChiSquare {
        statistic,
        df,
        p_value: upper_tail(statistic, df),
    }
}

/// Compensated (Neumaier) summation.
pub fn neumaier_sum<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    let mut sum = 0.0f64;
    let mut compensation = 0.0f64;
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            compensation += (sum - t) + v;
        } else {
            compensation += (v - t) + sum;
        }
        sum = t;
    }
    sum + compensation
}

pub fn median(values: &mut [f64]) -> f64 {
    assert!(!values.is_empty(), "median of nothing");
    values.sort_by(f64::total_cmp);
    let mid = values.len() / 2;
    if values.len() % 2 == 1 {
        values[mid]
    } else {
        0.5 * (values[mid - 1] + values[mid])
    }
}

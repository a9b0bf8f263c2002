use super::RunBatchResult;
use crate::engineering::Variant;
use crate::error::{GeaError, Result};

/// Best, worst, mean and sample standard deviation of final costs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StatsRow {
    pub best: f64,
    pub worst: f64,
    pub mean: f64,
    pub std: f64,
}

pub fn compute_stats(costs: &[f64]) -> Result<StatsRow> {
    if costs.is_empty() {
        return Err(GeaError::EmptyCosts);
    }
    let best = costs.iter().copied().fold(f64::INFINITY, f64::min);
    let worst = costs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let (mean, std) = mean_and_sample_std(costs);
    // summation error can push the mean a hair outside [best, worst]
    Ok(StatsRow { best, worst, mean: mean.clamp(best, worst), std })
}

/// Sample std uses divisor `n - 1`; a single value has std 0.
fn mean_and_sample_std(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    if xs.len() < 2 {
        return (mean, 0.0);
    }
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, var.sqrt())
}

/// 95% interval of one algorithm's normalized spread across instances.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntervalRow {
    pub algorithm: Variant,
    pub center: f64,
    pub half_width: f64,
}

const Z_95: f64 = 1.96;

impl IntervalRow {
    /// Center is the mean of `values`; half-width is
    /// `1.96 * sample_std / sqrt(count)`, or 0 for a single value.
    pub fn from_values(algorithm: Variant, values: &[f64]) -> Result<Self> {
        if values.is_empty() {
            return Err(GeaError::EmptyCosts);
        }
        let (center, std) = mean_and_sample_std(values);
        let half_width = Z_95 * std / (values.len() as f64).sqrt();
        Ok(IntervalRow { algorithm, center, half_width })
    }
}

/// Coefficient of variation `std / |mean|` (0 when the mean is 0).
fn normalized_spread(row: &StatsRow) -> f64 {
    if row.mean == 0.0 {
        0.0
    } else {
        row.std / row.mean.abs()
    }
}

/// One interval per algorithm (in order of first appearance), pooling the
/// per-instance normalized standard deviations.
pub fn interval_data(results: &[RunBatchResult]) -> Result<Vec<IntervalRow>> {
    let Some(first) = results.first() else {
        return Ok(Vec::new());
    };
    let runs = first.run_costs.len();
    if let Some(bad) = results.iter().find(|r| r.run_costs.len() != runs) {
        return Err(GeaError::MismatchedRunCounts(runs, bad.run_costs.len()));
    }
    let mut groups: Vec<(Variant, Vec<f64>)> = Vec::new();
    for batch in results {
        let value = normalized_spread(&compute_stats(&batch.run_costs)?);
        match groups.iter_mut().find(|(v, _)| *v == batch.algorithm) {
            Some((_, values)) => values.push(value),
            None => groups.push((batch.algorithm, vec![value])),
        }
    }
    groups.iter().map(|(v, values)| IntervalRow::from_values(*v, values)).collect()
}

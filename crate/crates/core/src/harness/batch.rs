use rayon::prelude::*;

use super::{compute_stats, interval_data, IntervalRow, StatsRow};
use crate::engineering::{run, ConvergenceTrace, GeaConfig, Variant};
use crate::error::{GeaError, Result};
use crate::ga::derive_seed;
use crate::problems::Problem;

/// Final costs and traces of the independent runs of one
/// (algorithm, instance) cell, in run-index order.
#[derive(Debug, Clone, PartialEq)]
pub struct RunBatchResult {
    pub algorithm: Variant,
    pub instance: String,
    pub run_costs: Vec<f64>,
    pub traces: Vec<ConvergenceTrace>,
}

impl RunBatchResult {
    pub fn stats(&self) -> Result<StatsRow> {
        compute_stats(&self.run_costs)
    }
}

/// Runs `runs` independent replicas of `variant` on `problem`.
///
/// Run `r` uses seed `derive_seed(cfg.seed, r, variant.id())`. Runs execute
/// in parallel; results are ordered by run index.
pub fn run_batch<P: Problem + ?Sized>(
    variant: Variant,
    problem: &P,
    cfg: &GeaConfig,
    runs: usize,
) -> Result<RunBatchResult> {
    if runs == 0 {
        return Err(GeaError::InvalidConfig("run count must be >= 1".into()));
    }
    let outcomes = (0..runs)
        .into_par_iter()
        .map(|r| {
            let cfg = GeaConfig {
                variant,
                seed: derive_seed(cfg.seed, r as u64, variant.id()),
                ..cfg.clone()
            };
            run(problem, &cfg)
        })
        .collect::<Result<Vec<_>>>()?;
    let (run_costs, traces) = outcomes.into_iter().map(|o| (o.best.cost, o.trace)).unzip();
    Ok(RunBatchResult { algorithm: variant, instance: problem.name().to_string(), run_costs, traces })
}

/// Everything produced by [`full_benchmark`].
#[derive(Debug, Clone, PartialEq)]
pub struct BenchmarkReport {
    pub variants: Vec<Variant>,
    pub instances: Vec<String>,
    /// Variant-major: `batches[v * instances.len() + i]`.
    pub batches: Vec<RunBatchResult>,
    pub stats: Vec<StatsRow>,
    pub intervals: Vec<IntervalRow>,
}

impl BenchmarkReport {
    pub fn cell(&self, variant: Variant, instance: &str) -> Option<(&RunBatchResult, &StatsRow)> {
        let v = self.variants.iter().position(|&x| x == variant)?;
        let i = self.instances.iter().position(|x| x == instance)?;
        let k = v * self.instances.len() + i;
        Some((&self.batches[k], &self.stats[k]))
    }
}

/// Every variant on every instance.
pub fn full_benchmark<P: Problem>(
    base: &GeaConfig,
    suite: &[P],
    variants: &[Variant],
    runs: usize,
) -> Result<BenchmarkReport> {
    if suite.is_empty() || variants.is_empty() {
        return Err(GeaError::InvalidConfig("benchmark needs instances and variants".into()));
    }
    let cells: Vec<(Variant, &P)> =
        variants.iter().flat_map(|&v| suite.iter().map(move |p| (v, p))).collect();
    let batches = cells
        .par_iter()
        .map(|&(v, p)| run_batch(v, p, base, runs))
        .collect::<Result<Vec<_>>>()?;
    let stats = batches.iter().map(RunBatchResult::stats).collect::<Result<Vec<_>>>()?;
    let intervals = interval_data(&batches)?;
    Ok(BenchmarkReport {
        variants: variants.to_vec(),
        instances: suite.iter().map(|p| p.name().to_string()).collect(),
        batches,
        stats,
        intervals,
    })
}

//! Multi-run experiment protocol: independent seeded runs per
//! (variant, instance) cell, summary statistics, confidence-interval data and
//! report emission.

mod batch;
mod report;
mod stats;

pub use batch::{full_benchmark, run_batch, BenchmarkReport, RunBatchResult};
pub use report::{
    render_convergence_svg, render_table, write_convergence_csv, write_intervals_csv,
    write_results_csv,
};
pub use stats::{compute_stats, interval_data, IntervalRow, StatsRow};

//! The genetic-engineering operators and the GEA main loop.
//!
//! Every iteration the elite (top `p` share of the population) is scanned
//! locus by locus to build a [`RepetitionMatrix`]. Its per-locus majority is
//! the [`DominantChromosome`], and loci whose majority count exceeds the user
//! threshold form the [`PatternMask`] of "desired" genes. Three scenarios use
//! them:
//!
//! 1. submit the dominant chromosome itself as a candidate,
//! 2. replace random mutation with [`directed_mutation`] on unmasked loci,
//! 3. [`gene_injection`] of the dominant genes into non-elite individuals.

mod algorithm;
mod config;
mod dominant;
mod scenarios;

pub use algorithm::{gea_iteration, run, ConvergenceTrace, RunOutcome};
pub use config::{GeaConfig, Variant};
pub use dominant::{
    build_mask, dominant_chromosome, repetition_matrix, DominantChromosome, PatternMask,
    RepetitionMatrix,
};
pub use scenarios::{
    apply_scenario1, directed_mutation, dominant_genome, gene_injection, repair_permutation,
    select_scenario, Scenario,
};

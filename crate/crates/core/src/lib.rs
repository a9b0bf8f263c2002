//! Genetic Engineering Algorithm (GEA).
//!
//! A genetic algorithm extended with three operators driven by the elite part
//! of the population:
//!
//! * dominant chromosome extraction (most repeated gene per locus),
//! * directed mutation restricted to loci the elite does not agree on,
//! * gene injection of the dominant genes into non-elite individuals.
//!
//! The crate is split into:
//!
//! * [`ga`] - genome representation, deterministic randomness and the classical
//!   GA operators shared by every variant,
//! * [`engineering`] - the engineering operators and the main loop for the
//!   GA/GEA1/GEA2/GEA3/GEA variants,
//! * [`problems`] - the [`Problem`](problems::Problem) contract with OneMax,
//!   0/1 knapsack and fixed-fleet vehicle routing, plus exact oracles,
//! * [`harness`] - multi-run batches, statistics and report emission.

pub mod engineering;
pub mod error;
pub mod ga;
pub mod harness;
pub mod problems;

pub use error::{GeaError, Result};

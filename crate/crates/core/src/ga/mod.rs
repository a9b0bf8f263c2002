//! Genome representation, deterministic randomness and the classical GA
//! operators shared by every algorithm variant.

mod genome;
mod operators;
mod population;
mod rng;

pub use genome::{Gene, GeneDomain, Genome, Individual};
pub use operators::{
    bit_flip_at, crossover, init_population, mutate, order_crossover, roulette_select,
    single_point_crossover, survivor_select, swap_at,
};
pub use population::Population;
pub use rng::{derive_seed, RngStream};

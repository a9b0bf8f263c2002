//! Problem contract and the concrete problems used by the benchmark.

mod knapsack;
mod onemax;
mod vrp;

pub use knapsack::KnapsackInstance;
pub use onemax::{onemax_evaluate, OneMax};
pub use vrp::{Point, VrpInstance, STANDARD_SUITE};

use crate::ga::{GeneDomain, Genome};

/// A minimization problem over a discrete genome domain.
///
/// `evaluate` must be pure, deterministic and return a finite cost for every
/// valid genome of `domain()`.
pub trait Problem: Send + Sync {
    fn name(&self) -> &str;
    fn domain(&self) -> GeneDomain;
    fn evaluate(&self, genome: &Genome) -> f64;
}

impl<P: Problem + ?Sized> Problem for &P {
    fn name(&self) -> &str {
        (**self).name()
    }
    fn domain(&self) -> GeneDomain {
        (**self).domain()
    }
    fn evaluate(&self, genome: &Genome) -> f64 {
        (**self).evaluate(genome)
    }
}

impl<P: Problem + ?Sized> Problem for Box<P> {
    fn name(&self) -> &str {
        (**self).name()
    }
    fn domain(&self) -> GeneDomain {
        (**self).domain()
    }
    fn evaluate(&self, genome: &Genome) -> f64 {
        (**self).evaluate(genome)
    }
}

use super::Problem;
use crate::error::{GeaError, Result};
use crate::ga::{Gene, GeneDomain, Genome};

/// Number of zero genes; the all-ones genome scores 0.
pub fn onemax_evaluate(genes: &[Gene]) -> Result<f64> {
    if let Some(&bad) = genes.iter().find(|&&g| g > 1) {
        return Err(GeaError::InvalidGenome(format!("OneMax needs binary genes, found {bad}")));
    }
    Ok(genes.iter().filter(|&&g| g == 0).count() as f64)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneMax {
    length: usize,
    name: String,
}

impl OneMax {
    pub fn new(length: usize) -> Result<Self> {
        GeneDomain::binary(length)?;
        Ok(OneMax { length, name: format!("onemax-{length}") })
    }
}

impl Problem for OneMax {
    fn name(&self) -> &str {
        &self.name
    }

    fn domain(&self) -> GeneDomain {
        GeneDomain::Binary { length: self.length }
    }

    fn evaluate(&self, genome: &Genome) -> f64 {
        genome.iter().filter(|&&g| g == 0).count() as f64
    }
}

use std::fmt;
use std::ops::Deref;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{GeaError, Result};
use crate::problems::Problem;

/// A single gene symbol.
pub type Gene = u32;

/// The set of valid genomes for a problem.
///
/// Permutation domains encode `customers` visit symbols `1..=customers`
/// followed by `vehicles - 1` route separators
/// `customers + 1..=customers + vehicles - 1`; every symbol appears exactly
/// once.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GeneDomain {
    Binary { length: usize },
    PermutationWithSeparators { customers: usize, vehicles: usize },
}

impl GeneDomain {
    pub fn binary(length: usize) -> Result<Self> {
        if length == 0 {
            return Err(GeaError::InvalidConfig("binary domain needs length >= 1".into()));
        }
        Ok(GeneDomain::Binary { length })
    }

    pub fn permutation(customers: usize, vehicles: usize) -> Result<Self> {
        if customers == 0 || vehicles == 0 {
            return Err(GeaError::InvalidConfig(
                "permutation domain needs at least one customer and one vehicle".into(),
            ));
        }
        Ok(GeneDomain::PermutationWithSeparators { customers, vehicles })
    }

    /// Genome length `L`.
    pub fn len(&self) -> usize {
        match *self {
            GeneDomain::Binary { length } => length,
            GeneDomain::PermutationWithSeparators { customers, vehicles } => {
                customers + vehicles - 1
            }
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_binary(&self) -> bool {
        matches!(self, GeneDomain::Binary { .. })
    }

    pub fn is_permutation(&self) -> bool {
        !self.is_binary()
    }

    /// Largest symbol of the alphabet.
    pub fn max_symbol(&self) -> Gene {
        match self {
            GeneDomain::Binary { .. } => 1,
            GeneDomain::PermutationWithSeparators { .. } => self.len() as Gene,
        }
    }

    pub fn contains_symbol(&self, symbol: Gene) -> bool {
        match self {
            GeneDomain::Binary { .. } => symbol <= 1,
            GeneDomain::PermutationWithSeparators { .. } => {
                symbol >= 1 && symbol <= self.max_symbol()
            }
        }
    }

    /// The symbols of the alphabet in ascending order.
    pub fn alphabet(&self) -> Vec<Gene> {
        match self {
            GeneDomain::Binary { .. } => vec![0, 1],
            GeneDomain::PermutationWithSeparators { .. } => (1..=self.max_symbol()).collect(),
        }
    }

    /// Checks length, alphabet membership and (for permutations) distinctness.
    pub fn validate(&self, genes: &[Gene]) -> Result<()> {
        if genes.len() != self.len() {
            return Err(GeaError::InvalidGenome(format!(
                "expected length {}, got {}",
                self.len(),
                genes.len()
            )));
        }
        if let Some(&bad) = genes.iter().find(|&&g| !self.contains_symbol(g)) {
            return Err(GeaError::InvalidGenome(format!("symbol {bad} outside the alphabet")));
        }
        if self.is_permutation() {
            let mut seen = vec![false; self.len() + 1];
            for &g in genes {
                if std::mem::replace(&mut seen[g as usize], true) {
                    return Err(GeaError::InvalidGenome(format!("symbol {g} repeated")));
                }
            }
        }
        Ok(())
    }

    /// Draws a uniformly random genome: fair independent bits, or a
    /// Fisher-Yates shuffle of the alphabet.
    pub fn random_genome<R: Rng + ?Sized>(&self, rng: &mut R) -> Genome {
        match self {
            GeneDomain::Binary { length } => {
                Genome((0..*length).map(|_| rng.gen::<bool>() as Gene).collect())
            }
            GeneDomain::PermutationWithSeparators { .. } => {
                let mut genes = self.alphabet();
                genes.shuffle(rng);
                Genome(genes)
            }
        }
    }
}

/// A candidate solution: a fixed-length vector of gene symbols.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Genome(Vec<Gene>);

impl Genome {
    pub fn new(genes: Vec<Gene>) -> Self {
        Genome(genes)
    }

    /// Builds a genome and checks it against `domain`.
    pub fn checked(domain: &GeneDomain, genes: Vec<Gene>) -> Result<Self> {
        domain.validate(&genes)?;
        Ok(Genome(genes))
    }

    pub fn genes(&self) -> &[Gene] {
        &self.0
    }

    pub fn genes_mut(&mut self) -> &mut [Gene] {
        &mut self.0
    }

    pub fn into_genes(self) -> Vec<Gene> {
        self.0
    }
}

impl Deref for Genome {
    type Target = [Gene];

    fn deref(&self) -> &[Gene] {
        &self.0
    }
}

impl AsRef<[Gene]> for Genome {
    fn as_ref(&self) -> &[Gene] {
        &self.0
    }
}

impl From<Vec<Gene>> for Genome {
    fn from(genes: Vec<Gene>) -> Self {
        Genome(genes)
    }
}

impl fmt::Display for Genome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// A genome together with its (minimized) cost.
#[derive(Debug, Clone, PartialEq)]
pub struct Individual {
    pub genome: Genome,
    pub cost: f64,
}

impl Individual {
    pub fn evaluate<P: Problem + ?Sized>(problem: &P, genome: Genome) -> Self {
        let cost = problem.evaluate(&genome);
        debug_assert!(cost.is_finite(), "problem {} produced a non-finite cost", problem.name());
        Individual { genome, cost }
    }
}

use crate::error::{GeaError, Result};
use crate::ga::Gene;

/// Per-locus symbol counts over an elite set.
///
/// Symbols at each locus are kept in order of first appearance in the elite
/// scan, which is what breaks ties in [`dominant_chromosome`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepetitionMatrix {
    loci: Vec<Vec<(Gene, usize)>>,
    elite_size: usize,
}

impl RepetitionMatrix {
    pub fn elite_size(&self) -> usize {
        self.elite_size
    }

    pub fn len(&self) -> usize {
        self.loci.len()
    }

    pub fn is_empty(&self) -> bool {
        self.loci.is_empty()
    }

    /// `(symbol, count)` pairs at `locus`, in first-appearance order.
    pub fn locus(&self, locus: usize) -> &[(Gene, usize)] {
        &self.loci[locus]
    }

    pub fn count(&self, locus: usize, symbol: Gene) -> usize {
        self.loci[locus].iter().find(|(s, _)| *s == symbol).map_or(0, |&(_, c)| c)
    }
}

/// Most repeated symbol per locus, with its count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominantChromosome {
    pub genes: Vec<Gene>,
    pub repeat_counts: Vec<usize>,
}

/// Desired-gene mask: `true` marks a locus fixed by the elite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternMask {
    pub bits: Vec<bool>,
    pub threshold: usize,
}

impl PatternMask {
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn inverted(&self) -> Vec<bool> {
        self.bits.iter().map(|b| !b).collect()
    }

    /// Loci open to mutation, ascending.
    pub fn free_loci(&self) -> Vec<usize> {
        self.bits.iter().enumerate().filter(|(_, &b)| !b).map(|(i, _)| i).collect()
    }

    pub fn fixed_count(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }
}

pub fn repetition_matrix<G: AsRef<[Gene]>>(elite: &[G]) -> Result<RepetitionMatrix> {
    let first = elite.first().ok_or(GeaError::EmptyElite)?.as_ref();
    let len = first.len();
    if let Some(other) = elite.iter().map(AsRef::as_ref).find(|g| g.len() != len) {
        return Err(GeaError::DomainMismatch(len, other.len()));
    }
    let mut loci: Vec<Vec<(Gene, usize)>> = vec![Vec::new(); len];
    for genome in elite {
        for (counts, &symbol) in loci.iter_mut().zip(genome.as_ref()) {
            match counts.iter_mut().find(|(s, _)| *s == symbol) {
                Some((_, c)) => *c += 1,
                None => counts.push((symbol, 1)),
            }
        }
    }
    Ok(RepetitionMatrix { loci, elite_size: elite.len() })
}

/// Per-locus maximum count; a later symbol replaces the incumbent only with
/// a strictly greater count.
pub fn dominant_chromosome(rm: &RepetitionMatrix) -> DominantChromosome {
    let (genes, repeat_counts) = rm
        .loci
        .iter()
        .map(|counts| {
            counts.iter().skip(1).fold(counts[0], |best, &cand| {
                if cand.1 > best.1 {
                    cand
                } else {
                    best
                }
            })
        })
        .unzip();
    DominantChromosome { genes, repeat_counts }
}

/// `bits[i] = repeat_counts[i] > threshold`, and all zero when the threshold
/// is 0.
pub fn build_mask(dc: &DominantChromosome, threshold: usize) -> PatternMask {
    let bits = dc.repeat_counts.iter().map(|&c| threshold != 0 && c > threshold).collect();
    PatternMask { bits, threshold }
}

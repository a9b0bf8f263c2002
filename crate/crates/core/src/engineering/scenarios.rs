use rand::Rng;

use super::{DominantChromosome, PatternMask};
use crate::error::{GeaError, Result};
use crate::ga::{survivor_select, Gene, GeneDomain, Genome, Individual, Population, RngStream};
use crate::problems::Problem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scenario {
    /// Submit the dominant chromosome as a candidate.
    DominantChromosome,
    /// Mutate only loci the elite does not agree on.
    DirectedMutation,
    /// Copy the elite's desired genes into non-elite members.
    GeneInjection,
}

impl Scenario {
    pub fn number(self) -> usize {
        match self {
            Scenario::DominantChromosome => 1,
            Scenario::DirectedMutation => 2,
            Scenario::GeneInjection => 3,
        }
    }

    fn from_index(i: usize) -> Self {
        [Scenario::DominantChromosome, Scenario::DirectedMutation, Scenario::GeneInjection][i]
    }
}

/// Categorical draw over the three scenarios with probabilities proportional
/// to `weights`.
///
/// When only one weight is positive the outcome is forced and no random
/// number is consumed, so a single-scenario configuration replays exactly
/// like the matching single-scenario variant.
pub fn select_scenario(weights: [f64; 3], rng: &mut RngStream) -> Result<Scenario> {
    if weights.iter().any(|w| !(w.is_finite() && *w >= 0.0)) {
        return Err(GeaError::InvalidWeights);
    }
    let total: f64 = weights.iter().sum();
    if total <= 0.0 {
        return Err(GeaError::InvalidWeights);
    }
    let mut positive = weights.iter().enumerate().filter(|(_, &w)| w > 0.0);
    let first = positive.next().map(|(i, _)| i).unwrap();
    if positive.next().is_none() {
        return Ok(Scenario::from_index(first));
    }
    let mut ticket = rng.gen::<f64>() * total;
    for (i, &w) in weights.iter().enumerate() {
        if w > 0.0 && ticket < w {
            return Ok(Scenario::from_index(i));
        }
        ticket -= w;
    }
    // rounding left the ticket past the last bucket
    let last = weights.iter().rposition(|&w| w > 0.0).unwrap();
    Ok(Scenario::from_index(last))
}

/// Fills the unfixed loci with the symbols missing from the fixed ones, in
/// the order they appear in `source`.
pub fn repair_permutation(fixed: &[Option<Gene>], source: &Genome) -> Result<Genome> {
    if fixed.len() != source.len() {
        return Err(GeaError::DomainMismatch(fixed.len(), source.len()));
    }
    let max = fixed.iter().flatten().chain(source.iter()).copied().max().unwrap_or(0) as usize;
    let mut taken = vec![false; max + 1];
    for &s in fixed.iter().flatten() {
        if std::mem::replace(&mut taken[s as usize], true) {
            return Err(GeaError::DuplicateFixedSymbol(s));
        }
    }
    let mut fill = source.iter().copied().filter(|&s| !taken[s as usize]);
    let genes = fixed
        .iter()
        .map(|slot| match slot {
            Some(s) => Ok(*s),
            None => fill.next().ok_or_else(|| {
                GeaError::InvalidGenome("source lacks symbols to fill the free loci".into())
            }),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Genome::new(genes))
}

/// Fixes `values[i]` at every locus where `keep(i)` holds, skipping symbols
/// already fixed at an earlier locus.
fn first_come_fixed(values: &[Gene], keep: impl Fn(usize) -> bool) -> Vec<Option<Gene>> {
    let max = values.iter().copied().max().unwrap_or(0) as usize;
    let mut seen = vec![false; max + 1];
    values
        .iter()
        .enumerate()
        .map(|(i, &s)| {
            if keep(i) && !std::mem::replace(&mut seen[s as usize], true) {
                Some(s)
            } else {
                None
            }
        })
        .collect()
}

/// The dominant chromosome as a valid genome of `domain`.
///
/// Binary domains use it as is. For permutations each locus keeps its
/// dominant symbol unless that symbol was already placed at an earlier locus;
/// the remaining loci are repaired from `source`.
pub fn dominant_genome(
    domain: &GeneDomain,
    dc: &DominantChromosome,
    source: &Genome,
) -> Result<Genome> {
    if domain.is_binary() {
        return Ok(Genome::new(dc.genes.clone()));
    }
    let fixed = first_come_fixed(&dc.genes, |_| true);
    repair_permutation(&fixed, source)
}

/// Submits the dominant chromosome to survivor selection as one extra
/// offspring; it survives only if it beats the current worst member.
pub fn apply_scenario1<P: Problem + ?Sized>(
    pop: Population,
    dc: &DominantChromosome,
    problem: &P,
) -> Result<Population> {
    let best = pop.best().ok_or(GeaError::EmptyPopulation)?;
    let genome = dominant_genome(&problem.domain(), dc, &best.genome)?;
    let candidate = Individual::evaluate(problem, genome);
    Ok(survivor_select(pop, vec![candidate]))
}

/// Mutation restricted to unmasked loci: one flip (binary) or one swap of two
/// distinct unmasked loci (permutations). Returns `g` unchanged when too few
/// loci are free.
pub fn directed_mutation(
    domain: &GeneDomain,
    g: &Genome,
    mask: &PatternMask,
    rng: &mut RngStream,
) -> Genome {
    assert_eq!(mask.len(), g.len(), "mask length must match genome length");
    let free = mask.free_loci();
    let mut out = g.clone();
    if domain.is_binary() {
        if !free.is_empty() {
            out.genes_mut()[free[rng.gen_range(0..free.len())]] ^= 1;
        }
    } else if free.len() >= 2 {
        let a = rng.gen_range(0..free.len());
        let mut b = rng.gen_range(0..free.len() - 1);
        if b >= a {
            b += 1;
        }
        out.genes_mut().swap(free[a], free[b]);
    }
    out
}

/// Copies the dominant genes into `g` at masked loci.
///
/// Binary: pointwise overwrite. Permutations: masked loci take the dominant
/// symbol (first locus wins if the dominant chromosome repeats a symbol) and
/// the free loci are repaired from `g`.
pub fn gene_injection(
    domain: &GeneDomain,
    g: &Genome,
    mask: &PatternMask,
    dc: &DominantChromosome,
) -> Genome {
    assert_eq!(mask.len(), g.len(), "mask length must match genome length");
    assert_eq!(dc.genes.len(), g.len(), "dominant chromosome length must match genome length");
    if domain.is_binary() {
        let genes = g
            .iter()
            .zip(&mask.bits)
            .zip(&dc.genes)
            .map(|((&own, &fixed), &dom)| if fixed { dom } else { own })
            .collect();
        return Genome::new(genes);
    }
    let fixed = first_come_fixed(&dc.genes, |i| mask.bits[i]);
    repair_permutation(&fixed, g).expect("first-come fixing yields distinct symbols")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ga::Population;
    use crate::problems::OneMax;

    fn mask(bits: &[u8]) -> PatternMask {
        PatternMask { bits: bits.iter().map(|&b| b == 1).collect(), threshold: 1 }
    }

    fn dc(genes: &[Gene]) -> DominantChromosome {
        DominantChromosome { genes: genes.to_vec(), repeat_counts: vec![1; genes.len()] }
    }

    #[test]
    fn directed_binary_flips_only_free_loci() {
        let d = GeneDomain::binary(4).unwrap();
        let g = Genome::new(vec![1, 0, 1, 1]);
        let m = mask(&[1, 0, 0, 1]);
        let mut rng = RngStream::new(0);
        let mut seen = [false; 4];
        for _ in 0..200 {
            let out = directed_mutation(&d, &g, &m, &mut rng);
            assert_eq!(out[0], 1);
            assert_eq!(out[3], 1);
            for i in 0..4 {
                if out[i] != g[i] {
                    seen[i] = true;
                }
            }
        }
        assert_eq!(seen, [false, true, true, false]);
    }

    #[test]
    fn directed_binary_example() {
        // with loci 1 and 2 free, flipping locus 1 is the documented outcome
        let g = Genome::new(vec![1, 0, 1, 1]);
        let d = GeneDomain::binary(4).unwrap();
        let m = mask(&[1, 0, 1, 1]);
        let out = directed_mutation(&d, &g, &m, &mut RngStream::new(3));
        assert_eq!(out.genes(), &[1, 1, 1, 1]);
    }

    #[test]
    fn directed_identity_fallbacks() {
        let mut rng = RngStream::new(1);
        let b = GeneDomain::binary(3).unwrap();
        let g = Genome::new(vec![0, 1, 0]);
        assert_eq!(directed_mutation(&b, &g, &mask(&[1, 1, 1]), &mut rng), g);
        let p = GeneDomain::permutation(3, 1).unwrap();
        let h = Genome::new(vec![2, 3, 1]);
        assert_eq!(directed_mutation(&p, &h, &mask(&[1, 0, 1]), &mut rng), h);
    }

    #[test]
    fn directed_permutation_forced_swap() {
        let p = GeneDomain::permutation(4, 1).unwrap();
        let g = Genome::new(vec![3, 1, 2, 4]);
        let out = directed_mutation(&p, &g, &mask(&[0, 1, 1, 0]), &mut RngStream::new(5));
        assert_eq!(out.genes(), &[4, 1, 2, 3]);
    }

    #[test]
    fn injection_examples() {
        let b = GeneDomain::binary(4).unwrap();
        let g = Genome::new(vec![0, 0, 0, 0]);
        let out = gene_injection(&b, &g, &mask(&[1, 0, 0, 1]), &dc(&[1, 1, 0, 1]));
        assert_eq!(out.genes(), &[1, 0, 0, 1]);
        assert_eq!(gene_injection(&b, &g, &mask(&[0, 0, 0, 0]), &dc(&[1, 1, 0, 1])), g);

        let p = GeneDomain::permutation(4, 1).unwrap();
        let g = Genome::new(vec![2, 3, 1, 4]);
        let out = gene_injection(&p, &g, &mask(&[1, 0, 0, 0]), &dc(&[1, 3, 2, 4]));
        assert_eq!(out.genes(), &[1, 2, 3, 4]);
        assert_eq!(gene_injection(&p, &g, &mask(&[0, 0, 0, 0]), &dc(&[1, 3, 2, 4])), g);
    }

    #[test]
    fn injection_with_repeated_dominant_symbols_stays_valid() {
        let p = GeneDomain::permutation(4, 1).unwrap();
        let g = Genome::new(vec![4, 3, 2, 1]);
        let out = gene_injection(&p, &g, &mask(&[1, 1, 0, 0]), &dc(&[2, 2, 1, 1]));
        p.validate(&out).unwrap();
        assert_eq!(out[0], 2);
    }

    #[test]
    fn repair_examples() {
        let src = Genome::new(vec![2, 3, 1, 4]);
        let out = repair_permutation(&[Some(1), None, None, None], &src).unwrap();
        assert_eq!(out.genes(), &[1, 2, 3, 4]);
        assert_eq!(repair_permutation(&[None; 4], &src).unwrap(), src);
        let all = [Some(4), Some(1), Some(3), Some(2)];
        assert_eq!(repair_permutation(&all, &src).unwrap().genes(), &[4, 1, 3, 2]);
        assert!(matches!(
            repair_permutation(&[Some(1), Some(1), None, None], &src),
            Err(GeaError::DuplicateFixedSymbol(1))
        ));
    }

    #[test]
    fn scenario_weights() {
        let mut rng = RngStream::new(0);
        for _ in 0..100 {
            assert_eq!(
                select_scenario([1.0, 0.0, 0.0], &mut rng).unwrap(),
                Scenario::DominantChromosome
            );
            assert_eq!(
                select_scenario([0.0, 0.0, 0.3], &mut rng).unwrap(),
                Scenario::GeneInjection
            );
        }
        assert!(matches!(select_scenario([0.0; 3], &mut rng), Err(GeaError::InvalidWeights)));
        assert!(matches!(
            select_scenario([1.0, -1.0, 0.0], &mut rng),
            Err(GeaError::InvalidWeights)
        ));
    }

    #[test]
    fn forced_scenario_consumes_no_randomness() {
        let mut a = RngStream::new(4);
        let b = a.clone();
        select_scenario([0.0, 2.0, 0.0], &mut a).unwrap();
        let (x, y): (u64, u64) = (a.gen(), b.clone().gen());
        assert_eq!(x, y);
    }

    fn onemax_pop(genomes: &[&[Gene]]) -> (OneMax, Population) {
        let problem = OneMax::new(genomes[0].len()).unwrap();
        let members = genomes
            .iter()
            .map(|g| Individual::evaluate(&problem, Genome::new(g.to_vec())))
            .collect();
        (problem, Population::new(members, genomes.len()))
    }

    #[test]
    fn scenario1_replaces_worst_when_better() {
        let (problem, pop) = onemax_pop(&[&[1, 1, 0], &[1, 0, 0], &[0, 0, 0]]);
        let out = apply_scenario1(pop, &dc(&[1, 1, 1]), &problem).unwrap();
        assert_eq!(out.costs().collect::<Vec<_>>(), vec![0.0, 1.0, 2.0]);
    }

    #[test]
    fn scenario1_rejects_uncompetitive_or_equal_candidates() {
        let (problem, pop) = onemax_pop(&[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        let out = apply_scenario1(pop.clone(), &dc(&[0, 0, 0]), &problem).unwrap();
        assert_eq!(out, pop);
        let (problem, pop) = onemax_pop(&[&[1, 1, 1], &[1, 1, 1]]);
        let out = apply_scenario1(pop.clone(), &dc(&[1, 1, 1]), &problem).unwrap();
        assert_eq!(out, pop);
    }

    #[test]
    fn dominant_genome_repairs_permutations() {
        let p = GeneDomain::permutation(3, 2).unwrap();
        let src = Genome::new(vec![4, 3, 2, 1]);
        let g = dominant_genome(&p, &dc(&[1, 1, 2, 2]), &src).unwrap();
        assert_eq!(g.genes(), &[1, 4, 2, 3]);
        p.validate(&g).unwrap();
    }
}

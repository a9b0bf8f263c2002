use rand::seq::index;

use super::{
    build_mask, directed_mutation, dominant_chromosome, dominant_genome, gene_injection,
    repetition_matrix, select_scenario, DominantChromosome, GeaConfig, PatternMask, Scenario,
    Variant,
};
use crate::error::{GeaError, Result};
use crate::ga::{
    crossover, init_population, mutate, roulette_select, survivor_select, Genome, Individual,
    Population, RngStream,
};
use crate::problems::Problem;

/// Best cost after each iteration.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ConvergenceTrace(Vec<f64>);

impl ConvergenceTrace {
    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> Option<f64> {
        self.0.last().copied()
    }

    pub fn is_non_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[1] <= w[0])
    }
}

impl From<Vec<f64>> for ConvergenceTrace {
    fn from(v: Vec<f64>) -> Self {
        ConvergenceTrace(v)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunOutcome {
    pub best: Individual,
    pub trace: ConvergenceTrace,
}

fn engineer(pop: &Population, cfg: &GeaConfig) -> Result<(DominantChromosome, PatternMask)> {
    let elite: Vec<&Genome> = pop.elite(cfg.elite_size()).iter().map(|m| &m.genome).collect();
    let dc = dominant_chromosome(&repetition_matrix(&elite)?);
    let mask = build_mask(&dc, cfg.threshold(elite.len()));
    Ok((dc, mask))
}

/// One generation.
///
/// Offspring are produced in a fixed order (crossover children, mutants,
/// then scenario products) and merged into the parents by elitist
/// truncation. Which scenario runs depends on the variant: none for GA, a
/// fixed one for GEA1..GEA3, and a weighted draw for GEA. Directed mutation
/// replaces classical mutation in the iterations where it runs.
pub fn gea_iteration<P: Problem + ?Sized>(
    pop: Population,
    cfg: &GeaConfig,
    problem: &P,
    rng: &mut RngStream,
) -> Result<(Population, f64)> {
    if pop.is_empty() {
        return Err(GeaError::EmptyPopulation);
    }
    let domain = problem.domain();
    let n_cross = cfg.crossover_count();
    let n_mut = cfg.mutation_count();
    let mut offspring: Vec<Individual> = Vec::with_capacity(n_cross + 2 * n_mut + 1);

    let scenario = match cfg.variant {
        Variant::Ga => None,
        Variant::Gea1 => Some(Scenario::DominantChromosome),
        Variant::Gea2 => Some(Scenario::DirectedMutation),
        Variant::Gea3 => Some(Scenario::GeneInjection),
        Variant::Gea => Some(select_scenario(cfg.scenario_weights, rng)?),
    };

    while offspring.len() < n_cross {
        let i = roulette_select(&pop, rng)?;
        let mut j = roulette_select(&pop, rng)?;
        while j == i && pop.len() > 1 {
            j = roulette_select(&pop, rng)?;
        }
        let (c1, c2) = crossover(&domain, &pop.members()[i].genome, &pop.members()[j].genome, rng)?;
        offspring.push(Individual::evaluate(problem, c1));
        if offspring.len() < n_cross {
            offspring.push(Individual::evaluate(problem, c2));
        }
    }

    let engineered = match scenario {
        Some(_) => Some(engineer(&pop, cfg)?),
        None => None,
    };

    for _ in 0..n_mut {
        let source = &pop.members()[roulette_select(&pop, rng)?].genome;
        let mutant = match (&scenario, &engineered) {
            (Some(Scenario::DirectedMutation), Some((_, mask))) => {
                directed_mutation(&domain, source, mask, rng)
            }
            _ => mutate(&domain, source, rng),
        };
        offspring.push(Individual::evaluate(problem, mutant));
    }

    match (scenario, &engineered) {
        (Some(Scenario::DominantChromosome), Some((dc, _))) => {
            let best = &pop.members()[0].genome;
            offspring.push(Individual::evaluate(problem, dominant_genome(&domain, dc, best)?));
        }
        (Some(Scenario::GeneInjection), Some((dc, mask))) => {
            let elite = cfg.elite_size().min(pop.len());
            let non_elite = pop.len() - elite;
            let picks = n_mut.min(non_elite);
            for k in index::sample(rng, non_elite, picks) {
                let recipient = &pop.members()[elite + k].genome;
                offspring.push(Individual::evaluate(problem, gene_injection(&domain, recipient, mask, dc)));
            }
        }
        _ => {}
    }

    let next = survivor_select(pop, offspring);
    let best = next.members()[0].cost;
    Ok((next, best))
}

/// Initial population followed by `max_iters` iterations, all driven by one
/// stream seeded with `cfg.seed`.
pub fn run<P: Problem + ?Sized>(problem: &P, cfg: &GeaConfig) -> Result<RunOutcome> {
    cfg.validate()?;
    let mut rng = RngStream::new(cfg.seed);
    let mut pop = init_population(problem, cfg.pop_size, &mut rng)?;
    let mut trace = Vec::with_capacity(cfg.max_iters);
    for _ in 0..cfg.max_iters {
        let (next, best) = gea_iteration(pop, cfg, problem, &mut rng)?;
        trace.push(best);
        pop = next;
    }
    let best = pop.into_members().swap_remove(0);
    Ok(RunOutcome { best, trace: ConvergenceTrace(trace) })
}

use std::collections::HashSet;

use rand::Rng;

use super::{Gene, GeneDomain, Genome, Individual, Population, RngStream};
use crate::error::{GeaError, Result};
use crate::problems::Problem;

/// Draws `size` uniform random genomes from the problem's domain, evaluates
/// and sorts them.
pub fn init_population<P: Problem + ?Sized>(
    problem: &P,
    size: usize,
    rng: &mut RngStream,
) -> Result<Population> {
    if size < 2 {
        return Err(GeaError::PopulationTooSmall(size));
    }
    let domain = problem.domain();
    let members = (0..size)
        .map(|_| Individual::evaluate(problem, domain.random_genome(rng)))
        .collect();
    Ok(Population::new(members, size))
}

/// Rank-based roulette wheel: member at rank `r` (0 = best) of `n` is picked
/// with probability `(n - r) / (n (n + 1) / 2)`.
pub fn roulette_select(pop: &Population, rng: &mut RngStream) -> Result<usize> {
    let n = pop.len() as u64;
    if n == 0 {
        return Err(GeaError::EmptyPopulation);
    }
    let total = n * (n + 1) / 2;
    let mut ticket = rng.gen_range(0..total);
    for rank in 0..n {
        let weight = n - rank;
        if ticket < weight {
            return Ok(rank as usize);
        }
        ticket -= weight;
    }
    unreachable!("ticket below total weight")
}

/// Single-point crossover (binary) or order crossover (permutations).
pub fn crossover(
    domain: &GeneDomain,
    p1: &Genome,
    p2: &Genome,
    rng: &mut RngStream,
) -> Result<(Genome, Genome)> {
    check_pair(domain, p1, p2)?;
    let len = p1.len();
    if domain.is_binary() {
        if len < 2 {
            return Ok((p1.clone(), p2.clone()));
        }
        let cut = rng.gen_range(1..len);
        single_point_crossover(p1, p2, cut)
    } else {
        let a = rng.gen_range(0..len);
        let b = rng.gen_range(0..len);
        order_crossover(p1, p2, a.min(b), a.max(b))
    }
}

fn check_pair(domain: &GeneDomain, p1: &Genome, p2: &Genome) -> Result<()> {
    if p1.len() != p2.len() {
        return Err(GeaError::DomainMismatch(p1.len(), p2.len()));
    }
    if p1.len() != domain.len() {
        return Err(GeaError::DomainMismatch(p1.len(), domain.len()));
    }
    Ok(())
}

/// Children swap suffixes starting at `cut` (`1 <= cut < L`).
pub fn single_point_crossover(p1: &Genome, p2: &Genome, cut: usize) -> Result<(Genome, Genome)> {
    if p1.len() != p2.len() {
        return Err(GeaError::DomainMismatch(p1.len(), p2.len()));
    }
    if cut == 0 || cut >= p1.len() {
        return Err(GeaError::InvalidConfig(format!(
            "crossover cut {cut} outside 1..{}",
            p1.len()
        )));
    }
    let mut c1 = p1.genes()[..cut].to_vec();
    c1.extend_from_slice(&p2.genes()[cut..]);
    let mut c2 = p2.genes()[..cut].to_vec();
    c2.extend_from_slice(&p1.genes()[cut..]);
    Ok((Genome::new(c1), Genome::new(c2)))
}

/// Order crossover over the inclusive segment `start..=end`.
///
/// The first child keeps `p1`'s segment in place and fills the remaining
/// positions, left to right, with `p2`'s other symbols in their `p2` order.
/// The second child is the mirror image.
pub fn order_crossover(
    p1: &Genome,
    p2: &Genome,
    start: usize,
    end: usize,
) -> Result<(Genome, Genome)> {
    if p1.len() != p2.len() {
        return Err(GeaError::DomainMismatch(p1.len(), p2.len()));
    }
    if start > end || end >= p1.len() {
        return Err(GeaError::InvalidConfig(format!(
            "segment {start}..={end} outside genome of length {}",
            p1.len()
        )));
    }
    Ok((ox_child(p1, p2, start, end), ox_child(p2, p1, start, end)))
}

fn ox_child(keep: &Genome, fill: &Genome, start: usize, end: usize) -> Genome {
    let len = keep.len();
    let max = keep.iter().chain(fill.iter()).copied().max().unwrap_or(0) as usize;
    let mut used = vec![false; max + 1];
    let mut child: Vec<Gene> = vec![0; len];
    for i in start..=end {
        child[i] = keep[i];
        used[keep[i] as usize] = true;
    }
    let mut donors = fill.iter().copied().filter(|&s| !used[s as usize]);
    for (i, slot) in child.iter_mut().enumerate() {
        if i < start || i > end {
            *slot = donors.next().expect("parents are permutations of the same alphabet");
        }
    }
    Genome::new(child)
}

/// Classical undirected mutation: one bit flip (binary) or one swap of two
/// distinct positions (permutations). Genomes too short to mutate are
/// returned unchanged.
pub fn mutate(domain: &GeneDomain, g: &Genome, rng: &mut RngStream) -> Genome {
    let len = g.len();
    if domain.is_binary() {
        if len == 0 {
            return g.clone();
        }
        bit_flip_at(g, rng.gen_range(0..len))
    } else {
        if len < 2 {
            return g.clone();
        }
        let i = rng.gen_range(0..len);
        let mut j = rng.gen_range(0..len - 1);
        if j >= i {
            j += 1;
        }
        swap_at(g, i, j)
    }
}

pub fn bit_flip_at(g: &Genome, locus: usize) -> Genome {
    let mut out = g.clone();
    out.genes_mut()[locus] ^= 1;
    out
}

pub fn swap_at(g: &Genome, i: usize, j: usize) -> Genome {
    let mut out = g.clone();
    out.genes_mut().swap(i, j);
    out
}

/// Elitist (mu + lambda) truncation back to the parents' capacity.
///
/// Offspring whose genome already occurs among the parents or earlier
/// offspring are discarded before the merge. Parents precede offspring and
/// the sort is stable, so on equal cost an incumbent beats a newcomer, and
/// earlier offspring beat later ones.
pub fn survivor_select(parents: Population, offspring: Vec<Individual>) -> Population {
    let capacity = parents.capacity();
    if offspring.is_empty() {
        return parents;
    }
    let mut seen: HashSet<Genome> = parents.members().iter().map(|m| m.genome.clone()).collect();
    let mut merged = parents.into_members();
    merged.extend(offspring.into_iter().filter(|o| seen.insert(o.genome.clone())));
    let mut pop = Population::new(merged, capacity);
    pop.truncate_to_capacity();
    pop
}

use gea_core::engineering::{
    build_mask, directed_mutation, dominant_chromosome, gene_injection, repetition_matrix, run,
    select_scenario, GeaConfig, PatternMask, Scenario, Variant,
};
use gea_core::ga::{Gene, GeneDomain, Genome, RngStream};
use gea_core::problems::{KnapsackInstance, OneMax, Problem, VrpInstance};
use rand::Rng;

/// Independent per-locus majority over a binary elite: ones vs zeros, with a
/// tie going to the symbol of the first elite member.
fn majority_oracle(elite: &[Vec<Gene>]) -> (Vec<Gene>, Vec<usize>) {
    let len = elite[0].len();
    (0..len)
        .map(|i| {
            let ones = elite.iter().filter(|g| g[i] == 1).count();
            let zeros = elite.len() - ones;
            match ones.cmp(&zeros) {
                std::cmp::Ordering::Greater => (1, ones),
                std::cmp::Ordering::Less => (0, zeros),
                std::cmp::Ordering::Equal => (elite[0][i], ones),
            }
        })
        .unzip()
}

#[test]
fn mask_matches_definition_exhaustively() {
    let mut checked = 0u64;
    for len in 1..=6usize {
        for m in 1..=4usize {
            let bits = len * m;
            let mut elite = vec![vec![0 as Gene; len]; m];
            for code in 0u32..(1 << bits) {
                for (j, genome) in elite.iter_mut().enumerate() {
                    for (i, g) in genome.iter_mut().enumerate() {
                        *g = (code >> (j * len + i)) & 1;
                    }
                }
                let dc = dominant_chromosome(&repetition_matrix(&elite).unwrap());
                let (_, counts) = majority_oracle(&elite);
                for t in 0..=m + 1 {
                    let mask = build_mask(&dc, t);
                    for (bit, &count) in mask.bits.iter().zip(&counts) {
                        assert_eq!(*bit, t != 0 && count > t);
                    }
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn dominant_chromosome_matches_majority_oracle() {
    let mut rng = RngStream::new(31);
    for _ in 0..1000 {
        let m = rng.gen_range(1..=6);
        let len = rng.gen_range(1..=8);
        let elite: Vec<Vec<Gene>> =
            (0..m).map(|_| (0..len).map(|_| rng.gen_range(0..=1)).collect()).collect();
        let dc = dominant_chromosome(&repetition_matrix(&elite).unwrap());
        let (genes, counts) = majority_oracle(&elite);
        assert_eq!(dc.genes, genes);
        assert_eq!(dc.repeat_counts, counts);
        assert!(dc.repeat_counts.iter().all(|&c| c >= 1 && c <= m));
    }
}

fn random_mask(len: usize, rng: &mut RngStream) -> PatternMask {
    PatternMask { bits: (0..len).map(|_| rng.gen_bool(0.5)).collect(), threshold: 1 }
}

#[test]
fn directed_mutation_never_touches_masked_loci() {
    let mut rng = RngStream::new(5);
    for d in [GeneDomain::binary(12).unwrap(), GeneDomain::permutation(9, 3).unwrap()] {
        for _ in 0..10_000 {
            let g = d.random_genome(&mut rng);
            let mask = random_mask(d.len(), &mut rng);
            let out = directed_mutation(&d, &g, &mask, &mut rng);
            d.validate(&out).unwrap();
            for i in 0..d.len() {
                if mask.bits[i] {
                    assert_eq!(out[i], g[i]);
                }
            }
            let changed = (0..d.len()).filter(|&i| out[i] != g[i]).count();
            let free = mask.free_loci().len();
            let expected = match (d.is_binary(), free) {
                (true, 0) => 0,
                (true, _) => 1,
                (false, f) if f < 2 => 0,
                (false, _) => 2,
            };
            assert_eq!(changed, expected);
        }
    }
}

#[test]
fn gene_injection_postconditions() {
    let mut rng = RngStream::new(6);
    let b = GeneDomain::binary(10).unwrap();
    let p = GeneDomain::permutation(8, 3).unwrap();
    for _ in 0..10_000 {
        // binary: masked loci take the dominant value, others keep their own
        let elite: Vec<Genome> = (0..5).map(|_| b.random_genome(&mut rng)).collect();
        let dc = dominant_chromosome(&repetition_matrix(&elite).unwrap());
        let mask = build_mask(&dc, rng.gen_range(0..=5));
        let g = b.random_genome(&mut rng);
        let out = gene_injection(&b, &g, &mask, &dc);
        for i in 0..b.len() {
            assert_eq!(out[i], if mask.bits[i] { dc.genes[i] } else { g[i] });
        }

        // permutations: always valid, and masked loci carry the dominant
        // symbols whenever those are pairwise distinct
        let elite: Vec<Genome> = (0..5).map(|_| p.random_genome(&mut rng)).collect();
        let dc = dominant_chromosome(&repetition_matrix(&elite).unwrap());
        let mask = random_mask(p.len(), &mut rng);
        let g = p.random_genome(&mut rng);
        let out = gene_injection(&p, &g, &mask, &dc);
        p.validate(&out).unwrap();
        let masked: Vec<Gene> = (0..p.len()).filter(|&i| mask.bits[i]).map(|i| dc.genes[i]).collect();
        let mut distinct = masked.clone();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() == masked.len() {
            for i in (0..p.len()).filter(|&i| mask.bits[i]) {
                assert_eq!(out[i], dc.genes[i]);
            }
        }
    }
}

#[test]
fn scenario_frequencies_follow_normalized_weights() {
    let draws = 100_000u64;
    let mut rng = RngStream::new(12);
    let mut counts = [0u64; 3];
    for _ in 0..draws {
        counts[select_scenario([0.5, 0.5, 0.2], &mut rng).unwrap().number() - 1] += 1;
    }
    for (c, p) in counts.iter().zip([5.0 / 12.0, 5.0 / 12.0, 2.0 / 12.0]) {
        let sigma = (draws as f64 * p * (1.0 - p)).sqrt();
        assert!((*c as f64 - p * draws as f64).abs() <= 3.0 * sigma, "{counts:?}");
    }
    assert_eq!(select_scenario([1.0, 0.0, 0.0], &mut rng).unwrap(), Scenario::DominantChromosome);
}

#[test]
fn single_scenario_variants_match_forced_full_variant() {
    let problems: Vec<Box<dyn Problem>> = vec![
        Box::new(VrpInstance::generate(10, 3, 2).unwrap()),
        Box::new(KnapsackInstance::generate(15, 4).unwrap()),
    ];
    let cases = [
        (Variant::Gea1, [1.0, 0.0, 0.0]),
        (Variant::Gea2, [0.0, 1.0, 0.0]),
        (Variant::Gea3, [0.0, 0.0, 1.0]),
    ];
    for problem in &problems {
        for (variant, weights) in cases {
            let base = GeaConfig { pop_size: 30, max_iters: 80, seed: 17, ..GeaConfig::default() };
            let single = run(problem, &GeaConfig { variant, ..base.clone() }).unwrap();
            let forced = run(
                problem,
                &GeaConfig { variant: Variant::Gea, scenario_weights: weights, ..base },
            )
            .unwrap();
            assert_eq!(single.trace, forced.trace, "{variant} on {}", problem.name());
            assert_eq!(single.best, forced.best);
        }
    }
}

#[test]
fn traces_are_monotone_for_every_variant() {
    let knap = KnapsackInstance::generate(20, 8).unwrap();
    let vrp = VrpInstance::generate(12, 3, 8).unwrap();
    let onemax = OneMax::new(25).unwrap();
    let problems: [&dyn Problem; 3] = [&knap, &vrp, &onemax];
    for problem in problems {
        for variant in Variant::ALL {
            let cfg = GeaConfig { pop_size: 24, max_iters: 100, variant, seed: 3, ..GeaConfig::default() };
            let out = run(problem, &cfg).unwrap();
            assert!(out.trace.is_non_increasing(), "{variant} on {}", problem.name());
            problem.domain().validate(&out.best.genome).unwrap();
            assert_eq!(out.best.cost, problem.evaluate(&out.best.genome));
        }
    }
}

#[test]
fn onemax_reaches_optimum_within_200_iterations() {
    let problem = OneMax::new(20).unwrap();
    let cfg = GeaConfig { pop_size: 30, max_iters: 200, seed: 42, ..GeaConfig::default() };
    let out = run(&problem, &cfg).unwrap();
    assert_eq!(out.best.cost, 0.0);
    let first_zero = out.trace.as_slice().iter().position(|&c| c == 0.0).unwrap();
    assert!(first_zero < 200);
    // the optimum is the all-ones genome: no genome of length 20 scores below 0
    assert!((0u32..1 << 20).all(|code| {
        let g: Vec<Gene> = (0..20).map(|i| (code >> i) & 1).collect();
        problem.evaluate(&Genome::new(g)) >= 0.0
    }));
}

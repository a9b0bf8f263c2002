use gea_core::ga::{Gene, GeneDomain, RngStream};
use gea_core::problems::{KnapsackInstance, Point, Problem, VrpInstance};
use rand::Rng;

fn knapsack_enumeration(inst: &KnapsackInstance) -> f64 {
    let n = inst.len();
    (0u32..1 << n)
        .filter_map(|mask| {
            let (w, v) = (0..n).filter(|i| mask >> i & 1 == 1).fold((0.0, 0.0), |(w, v), i| {
                (w + inst.weights()[i], v + inst.values()[i])
            });
            (w <= inst.capacity()).then_some(v)
        })
        .fold(0.0, f64::max)
}

#[test]
fn knapsack_dp_agrees_with_enumeration() {
    let mut rng = RngStream::new(100);
    for seed in 0..120u64 {
        let n = rng.gen_range(1..=15);
        let inst = KnapsackInstance::generate(n, seed).unwrap();
        assert_eq!(inst.dp_optimum().unwrap(), knapsack_enumeration(&inst), "seed {seed}");
    }
}

#[test]
fn knapsack_feasible_always_beats_infeasible() {
    let inst = KnapsackInstance::generate(12, 5).unwrap();
    let n = inst.len();
    let (mut worst_feasible, mut best_infeasible) = (f64::NEG_INFINITY, f64::INFINITY);
    for mask in 0u32..1 << n {
        let genes: Vec<Gene> = (0..n).map(|i| mask >> i & 1).collect();
        let weight: f64 = (0..n).filter(|&i| genes[i] == 1).map(|i| inst.weights()[i]).sum();
        let cost = inst.cost_of(&genes);
        if weight <= inst.capacity() {
            worst_feasible = worst_feasible.max(cost);
            assert!(cost >= 0.0);
        } else {
            best_infeasible = best_infeasible.min(cost);
        }
    }
    assert!(worst_feasible < best_infeasible);
}

/// Every genome of the domain, by recursive enumeration of all permutations.
fn all_genomes(d: &GeneDomain) -> Vec<Vec<Gene>> {
    fn rec(rest: &mut Vec<Gene>, cur: &mut Vec<Gene>, out: &mut Vec<Vec<Gene>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..rest.len() {
            let s = rest.remove(i);
            cur.push(s);
            rec(rest, cur, out);
            cur.pop();
            rest.insert(i, s);
        }
    }
    let mut out = Vec::new();
    rec(&mut d.alphabet(), &mut Vec::new(), &mut out);
    out
}

#[test]
fn brute_force_matches_full_genome_enumeration() {
    for (n, k, seed) in [(3, 1, 1), (4, 2, 2), (5, 2, 3), (5, 3, 4), (6, 2, 5), (4, 4, 6)] {
        let inst = VrpInstance::generate(n, k, seed).unwrap();
        let enumerated = all_genomes(&inst.gene_domain())
            .iter()
            .map(|g| inst.cost_of(g))
            .fold(f64::INFINITY, f64::min);
        let (cost, genome) = inst.brute_force().unwrap();
        assert!((cost - enumerated).abs() <= 1e-9 * enumerated, "{n}x{k}: {cost} vs {enumerated}");
        assert!((inst.evaluate(&genome) - cost).abs() <= 1e-9 * cost);
    }
}

#[test]
fn brute_force_bounds_random_genomes() {
    let mut rng = RngStream::new(8);
    for seed in 1..=5 {
        let inst = VrpInstance::generate(8, 1 + seed as usize % 3, seed).unwrap();
        let (opt, _) = inst.brute_force().unwrap();
        for _ in 0..1000 {
            let g = inst.gene_domain().random_genome(&mut rng);
            assert!(opt <= inst.evaluate(&g) + 1e-9);
        }
    }
}

#[test]
fn brute_force_on_unit_square_is_its_perimeter() {
    let corners = vec![
        Point::new(0.0, 0.0),
        Point::new(1.0, 0.0),
        Point::new(1.0, 1.0),
        Point::new(0.0, 1.0),
    ];
    let inst = VrpInstance::new("square", 1, Point::new(0.0, 0.0), corners).unwrap();
    // all 4! tours of the corners from the depot at a corner
    let tours = all_genomes(&inst.gene_domain());
    assert_eq!(tours.len(), 24);
    let best = tours.iter().map(|g| inst.cost_of(g)).fold(f64::INFINITY, f64::min);
    assert!((best - 4.0).abs() < 1e-12);
    assert!((inst.brute_force().unwrap().0 - 4.0).abs() < 1e-12);
}

#[test]
fn brute_force_two_customer_line() {
    let inst = VrpInstance::new(
        "line",
        1,
        Point::new(0.0, 0.0),
        vec![Point::new(1.0, 0.0), Point::new(2.0, 0.0)],
    )
    .unwrap();
    let (cost, g) = inst.brute_force().unwrap();
    assert_eq!(cost, 4.0);
    assert!(g.genes() == [1, 2] || g.genes() == [2, 1]);
}

#[test]
fn route_cost_symmetries() {
    let inst = VrpInstance::generate(10, 3, 12).unwrap();
    let mut rng = RngStream::new(4);
    for _ in 0..500 {
        let g = inst.gene_domain().random_genome(&mut rng);
        let cost = inst.evaluate(&g);
        let routes = inst.decode(&g).unwrap();

        // reversing one route
        let mut reversed = routes.clone();
        let r = rng.gen_range(0..reversed.len());
        reversed[r].reverse();
        let g2 = inst.encode(&reversed).unwrap();
        assert!((inst.evaluate(&g2) - cost).abs() < 1e-9);

        // relabeling separators (route order exchange)
        let n = inst.num_customers() as Gene;
        let relabeled: Vec<Gene> =
            g.iter().map(|&s| if s > n { if s == n + 1 { n + 2 } else { n + 1 } } else { s }).collect();
        assert!((inst.cost_of(&relabeled) - cost).abs() < 1e-9);

        let mut swapped = routes.clone();
        swapped.swap(0, 2);
        assert!((inst.evaluate(&inst.encode(&swapped).unwrap()) - cost).abs() < 1e-9);
    }
}

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Problem;
use crate::error::{GeaError, Result};
use crate::ga::{Gene, GeneDomain, Genome};

/// Largest customer count accepted by [`VrpInstance::brute_force`].
pub const BRUTE_FORCE_MAX_CUSTOMERS: usize = 8;

/// `(name, customers, vehicles, seed)` of the synthetic benchmark suite.
pub const STANDARD_SUITE: [(&str, usize, usize, u64); 6] = [
    ("F1", 8, 3, 1),
    ("F2", 10, 3, 2),
    ("F3", 14, 4, 3),
    ("F4", 20, 4, 4),
    ("F5", 25, 5, 5),
    ("F6", 30, 5, 6),
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn distance(&self, other: &Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

/// Uncapacitated vehicle routing with exactly `vehicles` routes (some may be
/// empty), minimizing total Euclidean distance.
///
/// Node 0 is the depot, node `i` is customer `i`. Genomes are permutations of
/// `1..=n` plus separators `n+1..=n+K-1`.
#[derive(Debug, Clone, PartialEq)]
pub struct VrpInstance {
    name: String,
    vehicles: usize,
    depot: Point,
    customers: Vec<Point>,
    distances: Vec<f64>,
}

impl VrpInstance {
    pub fn new(
        name: impl Into<String>,
        vehicles: usize,
        depot: Point,
        customers: Vec<Point>,
    ) -> Result<Self> {
        let n = customers.len();
        if n == 0 {
            return Err(GeaError::InvalidInstance("at least one customer is required".into()));
        }
        if vehicles == 0 {
            return Err(GeaError::InvalidInstance("at least one vehicle is required".into()));
        }
        if vehicles > n {
            return Err(GeaError::InvalidInstance(format!(
                "{vehicles} vehicles exceed {n} customers"
            )));
        }
        if std::iter::once(&depot).chain(&customers).any(|p| !(p.x.is_finite() && p.y.is_finite()))
        {
            return Err(GeaError::InvalidInstance("coordinates must be finite".into()));
        }
        let nodes: Vec<Point> = std::iter::once(depot).chain(customers.iter().copied()).collect();
        let distances = nodes
            .iter()
            .flat_map(|a| nodes.iter().map(move |b| a.distance(b)))
            .collect();
        Ok(VrpInstance { name: name.into(), vehicles, depot, customers, distances })
    }

    /// Depot at (50, 50), customers uniform on `[0, 100]^2`.
    pub fn generate(customers: usize, vehicles: usize, seed: u64) -> Result<Self> {
        Self::generate_named(format!("gen-{customers}x{vehicles}-s{seed}"), customers, vehicles, seed)
    }

    pub fn generate_named(
        name: impl Into<String>,
        customers: usize,
        vehicles: usize,
        seed: u64,
    ) -> Result<Self> {
        if vehicles > customers {
            return Err(GeaError::InvalidInstance(format!(
                "{vehicles} vehicles exceed {customers} customers"
            )));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let points = (0..customers)
            .map(|_| Point::new(rng.gen_range(0.0..=100.0), rng.gen_range(0.0..=100.0)))
            .collect();
        Self::new(name, vehicles, Point::new(50.0, 50.0), points)
    }

    /// The F1..F6 instances.
    pub fn standard_suite() -> Vec<VrpInstance> {
        STANDARD_SUITE
            .iter()
            .map(|&(name, n, k, seed)| {
                Self::generate_named(name, n, k, seed).expect("suite dimensions are valid")
            })
            .collect()
    }

    /// Looks up a suite instance by name, case-insensitively.
    pub fn suite_instance(name: &str) -> Option<VrpInstance> {
        STANDARD_SUITE.iter().find(|(n, ..)| n.eq_ignore_ascii_case(name)).map(|&(n, c, k, s)| {
            Self::generate_named(n, c, k, s).expect("suite dimensions are valid")
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn vehicles(&self) -> usize {
        self.vehicles
    }

    pub fn depot(&self) -> Point {
        self.depot
    }

    pub fn customers(&self) -> &[Point] {
        &self.customers
    }

    pub fn num_customers(&self) -> usize {
        self.customers.len()
    }

    /// Distance between nodes (0 = depot).
    #[inline]
    pub fn distance(&self, a: usize, b: usize) -> f64 {
        self.distances[a * (self.customers.len() + 1) + b]
    }

    pub fn gene_domain(&self) -> GeneDomain {
        GeneDomain::PermutationWithSeparators {
            customers: self.customers.len(),
            vehicles: self.vehicles,
        }
    }

    /// Splits a genome into its `K` routes (customer ids, depot implicit).
    pub fn decode(&self, genes: &[Gene]) -> Result<Vec<Vec<usize>>> {
        self.gene_domain().validate(genes)?;
        let n = self.customers.len() as Gene;
        let mut routes = vec![Vec::new()];
        for &g in genes {
            if g > n {
                routes.push(Vec::new());
            } else {
                routes.last_mut().unwrap().push(g as usize);
            }
        }
        Ok(routes)
    }

    /// Length of depot -> route -> depot; an empty route has length 0.
    pub fn route_cost(&self, route: &[usize]) -> f64 {
        let (Some(&first), Some(&last)) = (route.first(), route.last()) else {
            return 0.0;
        };
        let inner: f64 = route.windows(2).map(|w| self.distance(w[0], w[1])).sum();
        self.distance(0, first) + inner + self.distance(last, 0)
    }

    /// Total distance of the routes encoded by `genes` (assumed valid).
    pub fn cost_of(&self, genes: &[Gene]) -> f64 {
        let n = self.customers.len() as Gene;
        let mut total = 0.0;
        let mut prev = 0usize;
        for &g in genes {
            if g > n {
                if prev != 0 {
                    total += self.distance(prev, 0);
                }
                prev = 0;
            } else {
                total += self.distance(prev, g as usize);
                prev = g as usize;
            }
        }
        if prev != 0 {
            total += self.distance(prev, 0);
        }
        total
    }

    /// Builds the genome for a list of routes, padding unused separators at
    /// the end (extra empty routes).
    pub fn encode(&self, routes: &[Vec<usize>]) -> Result<Genome> {
        if routes.len() > self.vehicles {
            return Err(GeaError::InvalidGenome(format!(
                "{} routes for {} vehicles",
                routes.len(),
                self.vehicles
            )));
        }
        let n = self.customers.len();
        let mut genes = Vec::with_capacity(n + self.vehicles - 1);
        let mut separator = n as Gene;
        for (i, route) in routes.iter().enumerate() {
            if i > 0 {
                separator += 1;
                genes.push(separator);
            }
            genes.extend(route.iter().map(|&c| c as Gene));
        }
        while separator < (n + self.vehicles - 1) as Gene {
            separator += 1;
            genes.push(separator);
        }
        Genome::checked(&self.gene_domain(), genes)
    }

    /// Exact optimum for small instances.
    ///
    /// Enumerates every customer order; for each order the best placement of
    /// up to `K - 1` route breaks is found exactly by a split recurrence over
    /// prefix lengths. Route-label and empty-route placements do not change
    /// the cost, so this covers every distinct genome.
    pub fn brute_force(&self) -> Result<(f64, Genome)> {
        let n = self.customers.len();
        if n > BRUTE_FORCE_MAX_CUSTOMERS {
            return Err(GeaError::InstanceTooLarge(format!(
                "{n} customers exceeds the brute-force limit of {BRUTE_FORCE_MAX_CUSTOMERS}"
            )));
        }
        let k = self.vehicles;
        let mut order: Vec<usize> = (1..=n).collect();
        let mut best_cost = f64::INFINITY;
        let mut best_routes: Vec<Vec<usize>> = Vec::new();

        // path[j] = length of order[0] -> ... -> order[j]
        let mut path = vec![0.0; n];
        // split[r][j]: cheapest cover of the first j customers with r routes
        let mut split = vec![vec![f64::INFINITY; n + 1]; k + 1];
        let mut from = vec![vec![0usize; n + 1]; k + 1];

        loop {
            for j in 1..n {
                path[j] = path[j - 1] + self.distance(order[j - 1], order[j]);
            }
            let segment = |i: usize, j: usize| {
                self.distance(0, order[i]) + (path[j - 1] - path[i]) + self.distance(order[j - 1], 0)
            };
            for row in split.iter_mut() {
                row.fill(f64::INFINITY);
            }
            split[0][0] = 0.0;
            for r in 1..=k {
                for j in 1..=n {
                    for i in (r - 1)..j {
                        let c = split[r - 1][i] + segment(i, j);
                        if c < split[r][j] {
                            split[r][j] = c;
                            from[r][j] = i;
                        }
                    }
                }
            }
            let (routes_used, cost) = (1..=k)
                .map(|r| (r, split[r][n]))
                .fold((0, f64::INFINITY), |acc, x| if x.1 < acc.1 { x } else { acc });
            if cost < best_cost {
                best_cost = cost;
                best_routes.clear();
                let mut j = n;
                for r in (1..=routes_used).rev() {
                    let i = from[r][j];
                    best_routes.push(order[i..j].to_vec());
                    j = i;
                }
                best_routes.reverse();
            }
            if !next_permutation(&mut order) {
                break;
            }
        }
        let genome = self.encode(&best_routes)?;
        Ok((best_cost, genome))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "NAME {}", self.name).unwrap();
        writeln!(out, "VEHICLES {}", self.vehicles).unwrap();
        writeln!(out, "DEPOT {} {}", self.depot.x, self.depot.y).unwrap();
        for (i, c) in self.customers.iter().enumerate() {
            writeln!(out, "CUSTOMER {} {} {}", i + 1, c.x, c.y).unwrap();
        }
        out
    }

    /// Parses the line-oriented instance format:
    ///
    /// ```text
    /// NAME <string>
    /// VEHICLES <K>
    /// DEPOT <x> <y>
    /// CUSTOMER <id> <x> <y>     (ids 1..n, each exactly once)
    /// ```
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let perr = |line: usize, message: String| GeaError::Parse { line: line + 1, message };

        let (ln, first) = lines.next().ok_or_else(|| perr(0, "empty file".into()))?;
        let name = match first.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["NAME", name] => name.to_string(),
            _ => return Err(perr(ln, "expected `NAME <string>`".into())),
        };

        let (ln, line) = lines.next().ok_or_else(|| perr(ln + 1, "missing VEHICLES".into()))?;
        let vehicles: usize = match line.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["VEHICLES", k] => k.parse().map_err(|e| perr(ln, format!("vehicles: {e}")))?,
            _ => return Err(perr(ln, "expected `VEHICLES <K>`".into())),
        };

        let (ln, line) = lines.next().ok_or_else(|| perr(ln + 1, "missing DEPOT".into()))?;
        let depot = match line.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["DEPOT", x, y] => Point::new(
                x.parse().map_err(|e| perr(ln, format!("depot x: {e}")))?,
                y.parse().map_err(|e| perr(ln, format!("depot y: {e}")))?,
            ),
            _ => return Err(perr(ln, "expected `DEPOT <x> <y>`".into())),
        };

        let mut customers: Vec<Option<Point>> = Vec::new();
        for (ln, line) in lines {
            let fields: Vec<&str> = line.split_whitespace().collect();
            let ["CUSTOMER", id, x, y] = fields.as_slice() else {
                return Err(perr(ln, "expected `CUSTOMER <id> <x> <y>`".into()));
            };
            let id: usize = id.parse().map_err(|e| perr(ln, format!("customer id: {e}")))?;
            if id == 0 {
                return Err(perr(ln, "customer ids start at 1".into()));
            }
            let p = Point::new(
                x.parse().map_err(|e| perr(ln, format!("customer x: {e}")))?,
                y.parse().map_err(|e| perr(ln, format!("customer y: {e}")))?,
            );
            if customers.len() < id {
                customers.resize(id, None);
            }
            if customers[id - 1].replace(p).is_some() {
                return Err(perr(ln, format!("duplicate customer id {id}")));
            }
        }
        let customers = customers
            .into_iter()
            .enumerate()
            .map(|(i, c)| {
                c.ok_or_else(|| GeaError::InvalidInstance(format!("customer id {} missing", i + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(name, vehicles, depot, customers)
    }
}

impl Problem for VrpInstance {
    fn name(&self) -> &str {
        &self.name
    }

    fn domain(&self) -> GeneDomain {
        self.gene_domain()
    }

    fn evaluate(&self, genome: &Genome) -> f64 {
        self.cost_of(genome)
    }
}

/// Advances `xs` to its next lexicographic permutation; false after the last.
fn next_permutation<T: Ord>(xs: &mut [T]) -> bool {
    if xs.len() < 2 {
        return false;
    }
    let Some(i) = (0..xs.len() - 1).rev().find(|&i| xs[i] < xs[i + 1]) else {
        return false;
    };
    let j = (i + 1..xs.len()).rev().find(|&j| xs[j] > xs[i]).unwrap();
    xs.swap(i, j);
    xs[i + 1..].reverse();
    true
}

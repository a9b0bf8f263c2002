use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Problem;
use crate::error::{GeaError, Result};
use crate::ga::{Gene, GeneDomain, Genome};

const DP_MAX_ITEMS: usize = 30;
const DP_MAX_CAPACITY: f64 = 1e4;

/// A 0/1 knapsack instance, minimized as "value left behind".
#[derive(Debug, Clone, PartialEq)]
pub struct KnapsackInstance {
    name: String,
    weights: Vec<f64>,
    values: Vec<f64>,
    capacity: f64,
    total_value: f64,
}

impl KnapsackInstance {
    pub fn new(
        name: impl Into<String>,
        weights: Vec<f64>,
        values: Vec<f64>,
        capacity: f64,
    ) -> Result<Self> {
        if weights.is_empty() {
            return Err(GeaError::InvalidInstance("knapsack needs at least one item".into()));
        }
        if weights.len() != values.len() {
            return Err(GeaError::InvalidInstance(format!(
                "{} weights but {} values",
                weights.len(),
                values.len()
            )));
        }
        if !(capacity.is_finite() && capacity > 0.0) {
            return Err(GeaError::InvalidInstance(format!("capacity {capacity} must be > 0")));
        }
        if weights.iter().chain(&values).any(|x| !(x.is_finite() && *x > 0.0)) {
            return Err(GeaError::InvalidInstance("weights and values must be positive".into()));
        }
        let total_value = values.iter().sum();
        Ok(KnapsackInstance { name: name.into(), weights, values, capacity, total_value })
    }

    /// Random instance with integer weights in `1..=30`, integer values in
    /// `1..=50` and capacity half the total weight (rounded down).
    pub fn generate(items: usize, seed: u64) -> Result<Self> {
        if items == 0 {
            return Err(GeaError::InvalidInstance("knapsack needs at least one item".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let weights: Vec<f64> = (0..items).map(|_| rng.gen_range(1..=30) as f64).collect();
        let values: Vec<f64> = (0..items).map(|_| rng.gen_range(1..=50) as f64).collect();
        let capacity = (weights.iter().sum::<f64>() / 2.0).floor().max(1.0);
        Self::new(format!("knap-{items}-s{seed}"), weights, values, capacity)
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn capacity(&self) -> f64 {
        self.capacity
    }

    pub fn total_value(&self) -> f64 {
        self.total_value
    }

    /// Feasible selections cost `total - selected`; overweight ones cost
    /// `total + excess`, which is worse than any feasible selection.
    pub fn cost_of(&self, genes: &[Gene]) -> f64 {
        let (weight, value) = genes
            .iter()
            .zip(self.weights.iter().zip(&self.values))
            .filter(|(&g, _)| g == 1)
            .fold((0.0, 0.0), |(w, v), (_, (wi, vi))| (w + wi, v + vi));
        if weight <= self.capacity {
            self.total_value - value
        } else {
            self.total_value + (weight - self.capacity)
        }
    }

    /// Selected value encoded by a cost, if that cost is feasible.
    pub fn value_of_cost(&self, cost: f64) -> Option<f64> {
        (cost <= self.total_value).then_some(self.total_value - cost)
    }

    /// Exact optimum by dynamic programming over integer capacities.
    pub fn dp_optimum(&self) -> Result<f64> {
        if self.len() > DP_MAX_ITEMS {
            return Err(GeaError::InstanceTooLarge(format!(
                "{} items exceeds the DP limit of {DP_MAX_ITEMS}",
                self.len()
            )));
        }
        if self.capacity > DP_MAX_CAPACITY {
            return Err(GeaError::InstanceTooLarge(format!(
                "capacity {} exceeds the DP limit of {DP_MAX_CAPACITY}",
                self.capacity
            )));
        }
        if let Some(w) = self.weights.iter().find(|w| w.fract() != 0.0) {
            return Err(GeaError::InvalidInstance(format!("DP oracle needs integer weights, got {w}")));
        }
        let cap = self.capacity.floor() as usize;
        let mut best = vec![0.0f64; cap + 1];
        for (&w, &v) in self.weights.iter().zip(&self.values) {
            let w = w as usize;
            for c in (w..=cap).rev() {
                best[c] = best[c].max(best[c - w] + v);
            }
        }
        Ok(best[cap])
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "NAME {}", self.name).unwrap();
        writeln!(out, "CAPACITY {}", self.capacity).unwrap();
        for (i, (w, v)) in self.weights.iter().zip(&self.values).enumerate() {
            writeln!(out, "ITEM {} {} {}", i + 1, w, v).unwrap();
        }
        out
    }

    /// Parses `NAME`, `CAPACITY` and `ITEM <id> <weight> <value>` lines.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let perr = |line: usize, message: String| GeaError::Parse { line: line + 1, message };

        let (ln, first) = lines.next().ok_or_else(|| perr(0, "empty file".into()))?;
        let name = first
            .trim()
            .strip_prefix("NAME")
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .ok_or_else(|| perr(ln, "expected `NAME <string>`".into()))?
            .to_string();

        let (ln, second) = lines.next().ok_or_else(|| perr(ln + 1, "missing CAPACITY".into()))?;
        let fields: Vec<&str> = second.split_whitespace().collect();
        let capacity = match fields.as_slice() {
            ["CAPACITY", c] => c.parse::<f64>().map_err(|e| perr(ln, format!("capacity: {e}")))?,
            _ => return Err(perr(ln, "expected `CAPACITY <c>`".into())),
        };

        let mut items: Vec<Option<(f64, f64)>> = Vec::new();
        for (ln, line) in lines {
            let fields: Vec<&str> = line.split_whitespace().collect();
            let ["ITEM", id, w, v] = fields.as_slice() else {
                return Err(perr(ln, "expected `ITEM <id> <weight> <value>`".into()));
            };
            let id: usize = id.parse().map_err(|e| perr(ln, format!("item id: {e}")))?;
            let w: f64 = w.parse().map_err(|e| perr(ln, format!("weight: {e}")))?;
            let v: f64 = v.parse().map_err(|e| perr(ln, format!("value: {e}")))?;
            if id == 0 {
                return Err(perr(ln, "item ids start at 1".into()));
            }
            if items.len() < id {
                items.resize(id, None);
            }
            if items[id - 1].replace((w, v)).is_some() {
                return Err(perr(ln, format!("duplicate item id {id}")));
            }
        }
        let items = items
            .into_iter()
            .enumerate()
            .map(|(i, it)| {
                it.ok_or_else(|| GeaError::InvalidInstance(format!("item id {} missing", i + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        let (weights, values) = items.into_iter().unzip();
        Self::new(name, weights, values, capacity)
    }
}

impl Problem for KnapsackInstance {
    fn name(&self) -> &str {
        &self.name
    }

    fn domain(&self) -> GeneDomain {
        GeneDomain::Binary { length: self.len() }
    }

    fn evaluate(&self, genome: &Genome) -> f64 {
        self.cost_of(genome)
    }
}

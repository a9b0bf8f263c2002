use std::fmt;
use std::str::FromStr;

use crate::error::{GeaError, Result};

/// Algorithm variant: plain GA, one scenario only, or the full GEA that picks
/// a scenario at random every iteration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    Ga,
    Gea1,
    Gea2,
    Gea3,
    Gea,
}

impl Variant {
    pub const ALL: [Variant; 5] =
        [Variant::Ga, Variant::Gea1, Variant::Gea2, Variant::Gea3, Variant::Gea];

    /// Stable id mixed into per-run seeds.
    pub fn id(self) -> u64 {
        match self {
            Variant::Ga => 0,
            Variant::Gea1 => 1,
            Variant::Gea2 => 2,
            Variant::Gea3 => 3,
            Variant::Gea => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Variant::Ga => "GA",
            Variant::Gea1 => "GEA1",
            Variant::Gea2 => "GEA2",
            Variant::Gea3 => "GEA3",
            Variant::Gea => "GEA",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = GeaError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace(['_', '-'], "").as_str() {
            "ga" => Ok(Variant::Ga),
            "gea1" => Ok(Variant::Gea1),
            "gea2" => Ok(Variant::Gea2),
            "gea3" => Ok(Variant::Gea3),
            "gea" => Ok(Variant::Gea),
            _ => Err(GeaError::InvalidConfig(format!(
                "unknown variant `{s}` (expected ga, gea1, gea2, gea3 or gea)"
            ))),
        }
    }
}

/// Run parameters. Defaults are the benchmark protocol settings.
#[derive(Debug, Clone, PartialEq)]
pub struct GeaConfig {
    pub pop_size: usize,
    pub max_iters: usize,
    pub crossover_rate: f64,
    pub mutation_rate: f64,
    /// Share `p` of the population treated as elite.
    pub elite_fraction: f64,
    /// Mask threshold as a share of the elite size: `t = ceil(tau * M)`.
    pub threshold_fraction: f64,
    /// Relative weights of scenarios 1, 2 and 3 for [`Variant::Gea`].
    pub scenario_weights: [f64; 3],
    pub variant: Variant,
    pub seed: u64,
}

impl Default for GeaConfig {
    fn default() -> Self {
        GeaConfig {
            pop_size: 100,
            max_iters: 1000,
            crossover_rate: 0.8,
            mutation_rate: 0.1,
            elite_fraction: 0.2,
            threshold_fraction: 0.5,
            scenario_weights: [0.5, 0.5, 0.2],
            variant: Variant::Gea,
            seed: 1,
        }
    }
}

// Guards ceil/round against representation error such as 0.2 * 100.
const EPS: f64 = 1e-9;

impl GeaConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(GeaError::InvalidConfig(msg));
        if self.pop_size < 2 {
            return bad(format!("population size must be >= 2, got {}", self.pop_size));
        }
        for (name, rate) in [
            ("crossover rate", self.crossover_rate),
            ("mutation rate", self.mutation_rate),
            ("threshold fraction", self.threshold_fraction),
        ] {
            if !(0.0..=1.0).contains(&rate) {
                return bad(format!("{name} must lie in [0, 1], got {rate}"));
            }
        }
        if !(self.elite_fraction > 0.0 && self.elite_fraction <= 1.0) {
            return bad(format!("elite fraction must lie in (0, 1], got {}", self.elite_fraction));
        }
        if self.elite_fraction * (self.pop_size as f64) < 1.0 - EPS {
            return bad(format!(
                "elite fraction {} selects no member of a population of {}",
                self.elite_fraction, self.pop_size
            ));
        }
        if self.scenario_weights.iter().any(|w| !(w.is_finite() && *w >= 0.0)) {
            return bad("scenario weights must be finite and non-negative".into());
        }
        if self.variant == Variant::Gea && self.scenario_weights.iter().all(|&w| w == 0.0) {
            return bad("at least one scenario weight must be positive".into());
        }
        Ok(())
    }

    /// `M = ceil(p * popSize)`, at least 1.
    pub fn elite_size(&self) -> usize {
        ((self.elite_fraction * self.pop_size as f64 - EPS).ceil() as usize).clamp(1, self.pop_size)
    }

    /// `t = ceil(tau * M)`.
    pub fn threshold(&self, elite_size: usize) -> usize {
        (self.threshold_fraction * elite_size as f64 - EPS).ceil().max(0.0) as usize
    }

    pub fn crossover_count(&self) -> usize {
        (self.crossover_rate * self.pop_size as f64).round() as usize
    }

    pub fn mutation_count(&self) -> usize {
        (self.mutation_rate * self.pop_size as f64).round() as usize
    }
}

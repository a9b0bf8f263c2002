use std::path::Path;

use gea_core::ga::{GeneDomain, Genome};
use gea_core::problems::{KnapsackInstance, Problem, VrpInstance};

use crate::error::CliError;

/// An instance loaded from the built-in suite or from a file.
#[derive(Debug, Clone)]
pub enum LoadedInstance {
    Vrp(VrpInstance),
    Knapsack(KnapsackInstance),
}

impl LoadedInstance {
    /// Resolves `F1`..`F6` (any case) to the synthetic suite, anything else
    /// to a file path.
    pub fn resolve(name: &str) -> Result<Self, CliError> {
        if let Some(inst) = VrpInstance::suite_instance(name) {
            return Ok(LoadedInstance::Vrp(inst));
        }
        let path = Path::new(name);
        if !path.exists() {
            return Err(CliError::Usage(format!(
                "instance `{name}` is neither a suite name (F1..F6) nor an existing file"
            )));
        }
        Self::load(path)
    }

    /// Reads a routing or knapsack instance file, telling them apart by the
    /// second record (`VEHICLES` or `CAPACITY`).
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
        let second = text.lines().filter(|l| !l.trim().is_empty()).nth(1).unwrap_or("");
        let context = |e: gea_core::GeaError| CliError::Usage(format!("{}: {e}", path.display()));
        match second.split_whitespace().next() {
            Some("CAPACITY") => Ok(LoadedInstance::Knapsack(
                KnapsackInstance::parse(&text).map_err(context)?,
            )),
            _ => Ok(LoadedInstance::Vrp(VrpInstance::parse(&text).map_err(context)?)),
        }
    }
}

impl Problem for LoadedInstance {
    fn name(&self) -> &str {
        match self {
            LoadedInstance::Vrp(i) => i.name(),
            LoadedInstance::Knapsack(i) => Problem::name(i),
        }
    }

    fn domain(&self) -> GeneDomain {
        match self {
            LoadedInstance::Vrp(i) => i.domain(),
            LoadedInstance::Knapsack(i) => i.domain(),
        }
    }

    fn evaluate(&self, genome: &Genome) -> f64 {
        match self {
            LoadedInstance::Vrp(i) => i.evaluate(genome),
            LoadedInstance::Knapsack(i) => i.evaluate(genome),
        }
    }
}

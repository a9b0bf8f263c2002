//! Flat `key = value` run configuration.
//!
//! Precedence, lowest to highest: built-in defaults, config file, command
//! line flags. The output directory additionally falls back to the
//! `GEA_OUT_DIR` environment variable when neither file nor flag sets it.

use std::path::{Path, PathBuf};

use gea_core::engineering::{GeaConfig, Variant};

use crate::error::CliError;

pub const OUT_DIR_ENV: &str = "GEA_OUT_DIR";
pub const DEFAULT_OUT_DIR: &str = "results";

/// Recognized configuration keys, in documentation order.
pub const KEYS: &[&str] = &[
    "popSize",
    "maxIters",
    "crossoverRate",
    "mutationRate",
    "eliteFraction",
    "thresholdFraction",
    "scenarioWeights",
    "seed",
    "runs",
    "variant",
    "variants",
    "instance",
    "instances",
    "outDir",
    "formats",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Formats {
    pub csv: bool,
    pub txt: bool,
    pub svg: bool,
}

impl Default for Formats {
    fn default() -> Self {
        Formats { csv: true, txt: true, svg: true }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CliConfig {
    pub gea: GeaConfig,
    pub runs: usize,
    pub variants: Option<Vec<Variant>>,
    pub instances: Option<Vec<String>>,
    pub out_dir: Option<PathBuf>,
    pub formats: Formats,
}

impl Default for CliConfig {
    fn default() -> Self {
        CliConfig {
            gea: GeaConfig::default(),
            runs: 10,
            variants: None,
            instances: None,
            out_dir: None,
            formats: Formats::default(),
        }
    }
}

fn parse_num<T: std::str::FromStr>(key: &str, value: &str) -> Result<T, CliError>
where
    T::Err: std::fmt::Display,
{
    value
        .trim()
        .parse()
        .map_err(|e| CliError::Usage(format!("invalid value `{value}` for `{key}`: {e}")))
}

fn parse_list(value: &str) -> Vec<String> {
    value.split(',').map(str::trim).filter(|s| !s.is_empty()).map(String::from).collect()
}

fn parse_variants(key: &str, value: &str) -> Result<Vec<Variant>, CliError> {
    let list = parse_list(value);
    if list.is_empty() {
        return Err(CliError::Usage(format!("`{key}` needs at least one variant")));
    }
    list.iter()
        .map(|s| s.parse::<Variant>().map_err(|e| CliError::Usage(e.to_string())))
        .collect()
}

impl CliConfig {
    /// Applies one `key = value` setting. Keys are case-sensitive.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), CliError> {
        let value = value.trim();
        match key {
            "popSize" => self.gea.pop_size = parse_num(key, value)?,
            "maxIters" => self.gea.max_iters = parse_num(key, value)?,
            "crossoverRate" => self.gea.crossover_rate = parse_num(key, value)?,
            "mutationRate" => self.gea.mutation_rate = parse_num(key, value)?,
            "eliteFraction" => self.gea.elite_fraction = parse_num(key, value)?,
            "thresholdFraction" => self.gea.threshold_fraction = parse_num(key, value)?,
            "scenarioWeights" => {
                let parts = parse_list(value);
                let weights = parts
                    .iter()
                    .map(|p| parse_num::<f64>(key, p))
                    .collect::<Result<Vec<_>, _>>()?;
                self.gea.scenario_weights = weights.try_into().map_err(|_| {
                    CliError::Usage(format!("`{key}` needs exactly three weights, got `{value}`"))
                })?;
            }
            "seed" => self.gea.seed = parse_num(key, value)?,
            "runs" => self.runs = parse_num(key, value)?,
            "variant" | "variants" => self.variants = Some(parse_variants(key, value)?),
            "instance" | "instances" => {
                let list = parse_list(value);
                if list.is_empty() {
                    return Err(CliError::Usage(format!("`{key}` needs at least one instance")));
                }
                self.instances = Some(list);
            }
            "outDir" => self.out_dir = Some(PathBuf::from(value)),
            "formats" => {
                let mut formats = Formats { csv: false, txt: false, svg: false };
                for f in parse_list(value) {
                    match f.to_ascii_lowercase().as_str() {
                        "csv" => formats.csv = true,
                        "txt" => formats.txt = true,
                        "svg" => formats.svg = true,
                        other => {
                            return Err(CliError::Usage(format!(
                                "unknown report format `{other}` (expected csv, txt, svg)"
                            )))
                        }
                    }
                }
                self.formats = formats;
            }
            _ => {
                return Err(CliError::Usage(format!(
                    "unknown config key `{key}` (expected one of: {})",
                    KEYS.join(", ")
                )))
            }
        }
        Ok(())
    }

    /// Applies every `key = value` line of `text`. Blank lines and lines
    /// starting with `#` are ignored.
    pub fn apply_text(&mut self, text: &str) -> Result<(), CliError> {
        for (n, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                CliError::Usage(format!("config line {}: expected `key = value`", n + 1))
            })?;
            self.set(key.trim(), value)?;
        }
        Ok(())
    }

    pub fn apply_file(&mut self, path: &Path) -> Result<(), CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| {
            CliError::Usage(format!("cannot read config {}: {e}", path.display()))
        })?;
        self.apply_text(&text)
    }

    /// Flag value, else config value, else `GEA_OUT_DIR`, else `results`.
    pub fn resolve_out_dir(&self) -> PathBuf {
        self.out_dir
            .clone()
            .or_else(|| std::env::var_os(OUT_DIR_ENV).map(PathBuf::from))
            .unwrap_or_else(|| PathBuf::from(DEFAULT_OUT_DIR))
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.runs == 0 {
            return Err(CliError::Usage("`runs` must be at least 1".into()));
        }
        self.gea.validate().map_err(|e| CliError::Usage(e.to_string()))
    }
}

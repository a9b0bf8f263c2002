//! `gea` command-line front end.

mod commands;
mod config;
mod error;
mod instances;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use gea_core::engineering::Variant;

use crate::commands::BenchPlan;
use crate::config::CliConfig;
use crate::error::CliError;

#[derive(Parser, Debug)]
#[command(name = "gea", version, about = "Genetic engineering algorithm benchmark runner")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run one or more variants on one or more instances.
    Run(RunArgs),
    /// Run the full F1..F6 x {GA, GEA1, GEA2, GEA3, GEA} protocol.
    Bench(RunArgs),
    /// Write a synthetic routing instance.
    GenInstance(GenArgs),
    /// Print the exact optimum of a small instance file.
    Oracle(OracleArgs),
}

/// Flags shared by `run` and `bench`; each overrides the config-file key
/// named in its help text.
#[derive(Args, Debug, Default)]
struct RunArgs {
    /// `key = value` configuration file.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Single variant (variant).
    #[arg(long)]
    variant: Option<String>,
    /// Comma-separated variants (variants).
    #[arg(long)]
    variants: Option<String>,
    /// Suite name (F1..F6) or instance file (instance).
    #[arg(long)]
    instance: Option<String>,
    /// Comma-separated suite names or files (instances).
    #[arg(long)]
    instances: Option<String>,
    /// Independent runs per cell (runs).
    #[arg(long)]
    runs: Option<String>,
    /// Base seed (seed).
    #[arg(long)]
    seed: Option<String>,
    /// Iterations per run (maxIters).
    #[arg(long)]
    iters: Option<String>,
    /// Population size (popSize).
    #[arg(long)]
    pop: Option<String>,
    /// Crossover rate (crossoverRate).
    #[arg(long)]
    pc: Option<String>,
    /// Mutation rate (mutationRate).
    #[arg(long)]
    pm: Option<String>,
    /// Elite share of the population (eliteFraction).
    #[arg(long = "elite-fraction")]
    elite_fraction: Option<String>,
    /// Mask threshold as a share of the elite (thresholdFraction).
    #[arg(long = "threshold-fraction")]
    threshold_fraction: Option<String>,
    /// Scenario weights `w1,w2,w3` (scenarioWeights).
    #[arg(long)]
    weights: Option<String>,
    /// Output directory (outDir; falls back to $GEA_OUT_DIR, then ./results).
    #[arg(long)]
    out: Option<String>,
    /// Report formats, any of csv,txt,svg (formats).
    #[arg(long)]
    formats: Option<String>,
}

impl RunArgs {
    fn into_config(self) -> Result<CliConfig, CliError> {
        let mut cfg = CliConfig::default();
        if let Some(path) = &self.config {
            cfg.apply_file(path)?;
        }
        let overrides = [
            ("variant", self.variant),
            ("variants", self.variants),
            ("instance", self.instance),
            ("instances", self.instances),
            ("runs", self.runs),
            ("seed", self.seed),
            ("maxIters", self.iters),
            ("popSize", self.pop),
            ("crossoverRate", self.pc),
            ("mutationRate", self.pm),
            ("eliteFraction", self.elite_fraction),
            ("thresholdFraction", self.threshold_fraction),
            ("scenarioWeights", self.weights),
            ("outDir", self.out),
            ("formats", self.formats),
        ];
        for (key, value) in overrides {
            if let Some(v) = value {
                cfg.set(key, &v)?;
            }
        }
        Ok(cfg)
    }
}

#[derive(Args, Debug)]
struct GenArgs {
    /// Number of customers.
    #[arg(long, short = 'n')]
    customers: usize,
    /// Number of vehicles.
    #[arg(long, short = 'k')]
    vehicles: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct OracleArgs {
    /// Routing (n <= 8) or knapsack instance file.
    path: PathBuf,
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Run(args) => {
            let plan = BenchPlan {
                config: args.into_config()?,
                default_variants: vec![Variant::Gea],
                default_instances: vec!["F1".to_string()],
                svg: false,
            };
            report_written(commands::execute(plan)?);
        }
        Command::Bench(args) => {
            let plan = BenchPlan {
                config: args.into_config()?,
                default_variants: Variant::ALL.to_vec(),
                default_instances: commands::suite_names(),
                svg: true,
            };
            report_written(commands::execute(plan)?);
        }
        Command::GenInstance(args) => {
            commands::gen_instance(args.customers, args.vehicles, args.seed, args.out.as_deref())?;
        }
        Command::Oracle(args) => {
            println!("{:.4}", commands::oracle(&args.path)?);
        }
    }
    Ok(())
}

fn report_written(paths: Vec<PathBuf>) {
    for p in paths {
        eprintln!("wrote {}", p.display());
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

use std::fs;
use std::path::{Path, PathBuf};

use gea_core::engineering::Variant;
use gea_core::harness::{
    full_benchmark, render_convergence_svg, render_table, write_convergence_csv,
    write_intervals_csv, write_results_csv, BenchmarkReport,
};
use gea_core::problems::{VrpInstance, STANDARD_SUITE};

use crate::config::CliConfig;
use crate::error::CliError;
use crate::instances::LoadedInstance;

/// What a `run` or `bench` invocation should produce.
pub struct BenchPlan {
    pub config: CliConfig,
    pub default_variants: Vec<Variant>,
    pub default_instances: Vec<String>,
    pub svg: bool,
}

/// Executes the plan and writes its reports. Returns the written files.
pub fn execute(plan: BenchPlan) -> Result<Vec<PathBuf>, CliError> {
    let cfg = &plan.config;
    cfg.validate()?;
    let variants = cfg.variants.clone().unwrap_or(plan.default_variants);
    let names = cfg.instances.clone().unwrap_or(plan.default_instances);
    let suite = names.iter().map(|n| LoadedInstance::resolve(n)).collect::<Result<Vec<_>, _>>()?;

    let report = full_benchmark(&cfg.gea, &suite, &variants, cfg.runs)?;
    print!("{}", render_table(&report));

    let files = render_files(&report, cfg, plan.svg)?;
    let out_dir = cfg.resolve_out_dir();
    write_all(&out_dir, files)
}

fn render_files(
    report: &BenchmarkReport,
    cfg: &CliConfig,
    svg: bool,
) -> Result<Vec<(String, Vec<u8>)>, CliError> {
    let mut files = Vec::new();
    if cfg.formats.csv {
        let mut buf = Vec::new();
        write_results_csv(report, &mut buf)?;
        files.push(("results.csv".to_string(), buf));
        let mut buf = Vec::new();
        write_convergence_csv(report, &mut buf)?;
        files.push(("convergence.csv".to_string(), buf));
        let mut buf = Vec::new();
        write_intervals_csv(report, &mut buf)?;
        files.push(("intervals.csv".to_string(), buf));
    }
    if cfg.formats.txt {
        files.push(("table.txt".to_string(), render_table(report).into_bytes()));
    }
    if svg && cfg.formats.svg {
        for instance in &report.instances {
            let chart = render_convergence_svg(report, instance)
                .ok_or_else(|| CliError::Internal(format!("no data for {instance}")))?;
            files.push((format!("convergence_{}.svg", file_stem(instance)), chart.into_bytes()));
        }
    }
    Ok(files)
}

fn file_stem(name: &str) -> String {
    name.chars().map(|c| if c.is_ascii_alphanumeric() || c == '-' { c } else { '_' }).collect()
}

/// Writes every file or none: on failure the files already written are
/// removed again.
fn write_all(dir: &Path, files: Vec<(String, Vec<u8>)>) -> Result<Vec<PathBuf>, CliError> {
    fs::create_dir_all(dir).map_err(|e| {
        CliError::Usage(format!("cannot create output directory {}: {e}", dir.display()))
    })?;
    let mut written = Vec::new();
    for (name, bytes) in files {
        let path = dir.join(name);
        if let Err(e) = fs::write(&path, bytes) {
            for p in &written {
                let _ = fs::remove_file(p);
            }
            return Err(CliError::Usage(format!("cannot write {}: {e}", path.display())));
        }
        written.push(path);
    }
    Ok(written)
}

pub fn suite_names() -> Vec<String> {
    STANDARD_SUITE.iter().map(|(n, ..)| n.to_string()).collect()
}

pub fn gen_instance(
    customers: usize,
    vehicles: usize,
    seed: u64,
    out: Option<&Path>,
) -> Result<(), CliError> {
    let inst = VrpInstance::generate(customers, vehicles, seed)?;
    let text = inst.to_text();
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Exact optimum: minimal route length for routing instances, maximal packed
/// value for knapsack instances.
pub fn oracle(path: &Path) -> Result<f64, CliError> {
    match LoadedInstance::load(path)? {
        LoadedInstance::Vrp(inst) => Ok(inst.brute_force()?.0),
        LoadedInstance::Knapsack(inst) => Ok(inst.dp_optimum()?),
    }
}

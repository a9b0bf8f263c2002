use std::fmt::Write as _;
use std::io::Write;

use super::BenchmarkReport;
use crate::error::Result;

type StatField = fn(&super::StatsRow) -> f64;

/// `algorithm,instance,best,worst,mean,std`, one row per cell, 4 decimals.
pub fn write_results_csv<W: Write>(report: &BenchmarkReport, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["algorithm", "instance", "best", "worst", "mean", "std"])?;
    for (batch, s) in report.batches.iter().zip(&report.stats) {
        w.write_record([
            batch.algorithm.name().to_string(),
            batch.instance.clone(),
            format!("{:.4}", s.best),
            format!("{:.4}", s.worst),
            format!("{:.4}", s.mean),
            format!("{:.4}", s.std),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// `algorithm,instance,run,iteration,best_cost`; iterations count from 1.
pub fn write_convergence_csv<W: Write>(report: &BenchmarkReport, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["algorithm", "instance", "run", "iteration", "best_cost"])?;
    for batch in &report.batches {
        for (run, trace) in batch.traces.iter().enumerate() {
            for (it, cost) in trace.as_slice().iter().enumerate() {
                w.write_record([
                    batch.algorithm.name(),
                    &batch.instance,
                    &run.to_string(),
                    &(it + 1).to_string(),
                    &format!("{cost:.4}"),
                ])?;
            }
        }
    }
    w.flush()?;
    Ok(())
}

/// `algorithm,center,half_width`.
pub fn write_intervals_csv<W: Write>(report: &BenchmarkReport, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["algorithm", "center", "half_width"])?;
    for row in &report.intervals {
        w.write_record([
            row.algorithm.name().to_string(),
            format!("{:.6}", row.center),
            format!("{:.6}", row.half_width),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Plain-text grid: one column per instance, four rows (B, W, M, Std) per
/// algorithm.
pub fn render_table(report: &BenchmarkReport) -> String {
    const W: usize = 14;
    let n = report.instances.len();
    let mut out = String::new();
    let rule = format!("{}\n", "-".repeat(12 + (W + 1) * n));
    out.push_str(&rule);
    write!(out, "{:<12}", "Instance").unwrap();
    for name in &report.instances {
        write!(out, " {name:>W$}").unwrap();
    }
    out.push('\n');
    out.push_str(&rule);
    for (v, variant) in report.variants.iter().enumerate() {
        let stats = &report.stats[v * n..(v + 1) * n];
        let rows: [(&str, StatField); 4] = [
            ("B", |s| s.best),
            ("W", |s| s.worst),
            ("M", |s| s.mean),
            ("Std", |s| s.std),
        ];
        for (k, (label, get)) in rows.iter().enumerate() {
            let head = if k == 0 { variant.name() } else { "" };
            write!(out, "{head:<7}{label:<5}").unwrap();
            for s in stats {
                let x = get(s);
                if *label == "Std" && x != 0.0 && x.abs() < 1e-3 {
                    write!(out, " {x:>W$.2E}").unwrap();
                } else {
                    write!(out, " {x:>W$.4}").unwrap();
                }
            }
            out.push('\n');
        }
        out.push_str(&rule);
    }
    out
}

const PALETTE: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];

/// Line chart of mean best cost per iteration (averaged over runs), one line
/// per algorithm, for a single instance. Returns `None` for an unknown
/// instance.
pub fn render_convergence_svg(report: &BenchmarkReport, instance: &str) -> Option<String> {
    let col = report.instances.iter().position(|x| x == instance)?;
    let n = report.instances.len();
    let series: Vec<(&str, Vec<f64>)> = report
        .variants
        .iter()
        .enumerate()
        .map(|(v, variant)| {
            let batch = &report.batches[v * n + col];
            let len = batch.traces.iter().map(|t| t.len()).min().unwrap_or(0);
            let runs = batch.traces.len().max(1) as f64;
            let mean = (0..len)
                .map(|i| batch.traces.iter().map(|t| t.as_slice()[i]).sum::<f64>() / runs)
                .collect();
            (variant.name(), mean)
        })
        .collect();

    let (width, height) = (800.0, 500.0);
    let (left, right, top, bottom) = (80.0, 150.0, 40.0, 50.0);
    let plot_w = width - left - right;
    let plot_h = height - top - bottom;
    let iters = series.iter().map(|(_, s)| s.len()).max().unwrap_or(0);
    let (mut lo, mut hi) = series
        .iter()
        .flat_map(|(_, s)| s.iter().copied())
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), x| (a.min(x), b.max(x)));
    if !lo.is_finite() {
        (lo, hi) = (0.0, 1.0);
    }
    if hi - lo < 1e-12 {
        hi = lo + 1.0;
    }
    let x_of = |i: usize| left + plot_w * if iters > 1 { i as f64 / (iters - 1) as f64 } else { 0.0 };
    let y_of = |c: f64| top + plot_h * (1.0 - (c - lo) / (hi - lo));

    let mut svg = String::new();
    writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width} {height}" width="{width}" height="{height}" font-family="sans-serif" font-size="12">"#
    )
    .unwrap();
    writeln!(svg, r#"<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>"#).unwrap();
    writeln!(
        svg,
        r#"<text x="{:.1}" y="24" text-anchor="middle" font-size="15">Convergence on {}</text>"#,
        left + plot_w / 2.0,
        escape(instance)
    )
    .unwrap();
    writeln!(
        svg,
        r#"<rect x="{left}" y="{top}" width="{plot_w}" height="{plot_h}" fill="none" stroke="black"/>"#
    )
    .unwrap();
    for k in 0..=4 {
        let frac = k as f64 / 4.0;
        let y = top + plot_h * (1.0 - frac);
        let value = lo + (hi - lo) * frac;
        writeln!(
            svg,
            r##"<line x1="{left}" y1="{y:.1}" x2="{:.1}" y2="{y:.1}" stroke="#dddddd"/><text x="{:.1}" y="{:.1}" text-anchor="end">{value:.2}</text>"##,
            left + plot_w,
            left - 6.0,
            y + 4.0
        )
        .unwrap();
        let x = left + plot_w * frac;
        let it = ((iters.max(1) - 1) as f64 * frac).round() as usize + 1;
        writeln!(
            svg,
            r#"<text x="{x:.1}" y="{:.1}" text-anchor="middle">{it}</text>"#,
            top + plot_h + 18.0
        )
        .unwrap();
    }
    writeln!(
        svg,
        r#"<text x="{:.1}" y="{:.1}" text-anchor="middle">Iteration</text>"#,
        left + plot_w / 2.0,
        height - 8.0
    )
    .unwrap();
    writeln!(
        svg,
        r#"<text x="18" y="{:.1}" text-anchor="middle" transform="rotate(-90 18 {:.1})">Mean best cost</text>"#,
        top + plot_h / 2.0,
        top + plot_h / 2.0
    )
    .unwrap();
    for (k, (name, values)) in series.iter().enumerate() {
        let color = PALETTE[k % PALETTE.len()];
        if !values.is_empty() {
            let points: Vec<String> = values
                .iter()
                .enumerate()
                .map(|(i, &c)| format!("{:.2},{:.2}", x_of(i), y_of(c)))
                .collect();
            writeln!(
                svg,
                r#"<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{}"/>"#,
                points.join(" ")
            )
            .unwrap();
        }
        let ly = top + 10.0 + 20.0 * k as f64;
        let lx = left + plot_w + 15.0;
        writeln!(
            svg,
            r#"<line x1="{lx}" y1="{ly}" x2="{:.1}" y2="{ly}" stroke="{color}" stroke-width="2"/><text x="{:.1}" y="{:.1}">{name}</text>"#,
            lx + 25.0,
            lx + 32.0,
            ly + 4.0
        )
        .unwrap();
    }
    svg.push_str("</svg>\n");
    Some(svg)
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engineering::{ConvergenceTrace, Variant};
    use crate::harness::{interval_data, RunBatchResult, StatsRow};

    fn report() -> BenchmarkReport {
        let batches = vec![
            RunBatchResult {
                algorithm: Variant::Ga,
                instance: "F1".into(),
                run_costs: vec![2.0, 4.0],
                traces: vec![
                    ConvergenceTrace::from(vec![5.0, 2.0]),
                    ConvergenceTrace::from(vec![6.0, 4.0]),
                ],
            },
            RunBatchResult {
                algorithm: Variant::Gea,
                instance: "F1".into(),
                run_costs: vec![1.0, 1.0],
                traces: vec![
                    ConvergenceTrace::from(vec![3.0, 1.0]),
                    ConvergenceTrace::from(vec![1.0, 1.0]),
                ],
            },
        ];
        let stats = batches.iter().map(|b| b.stats().unwrap()).collect();
        let intervals = interval_data(&batches).unwrap();
        BenchmarkReport {
            variants: vec![Variant::Ga, Variant::Gea],
            instances: vec!["F1".into()],
            batches,
            stats,
            intervals,
        }
    }

    #[test]
    fn results_csv_layout() {
        let mut buf = Vec::new();
        write_results_csv(&report(), &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text,
            "algorithm,instance,best,worst,mean,std\n\
             GA,F1,2.0000,4.0000,3.0000,1.4142\n\
             GEA,F1,1.0000,1.0000,1.0000,0.0000\n"
        );
    }

    #[test]
    fn convergence_csv_layout() {
        let mut buf = Vec::new();
        write_convergence_csv(&report(), &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "algorithm,instance,run,iteration,best_cost");
        assert_eq!(lines[1], "GA,F1,0,1,5.0000");
        assert_eq!(lines.len(), 1 + 8);
    }

    #[test]
    fn intervals_csv_layout() {
        let mut buf = Vec::new();
        write_intervals_csv(&report(), &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().next(), Some("algorithm,center,half_width"));
        assert_eq!(text.lines().count(), 3);
    }

    #[test]
    fn table_has_four_rows_per_algorithm() {
        let table = render_table(&report());
        assert!(table.contains("F1"));
        for label in ["B ", "W ", "M ", "Std"] {
            assert_eq!(table.lines().filter(|l| l[7..].starts_with(label)).count(), 2, "{label}");
        }
        let row = StatsRow { best: 1.0, worst: 1.0, mean: 1.0, std: 5.99e-14 };
        let mut r = report();
        r.stats[1] = row;
        assert!(render_table(&r).contains("5.99E-14"));
    }

    #[test]
    fn svg_has_one_line_per_algorithm() {
        let svg = render_convergence_svg(&report(), "F1").unwrap();
        assert!(svg.starts_with("<svg"));
        assert_eq!(svg.matches("<polyline").count(), 2);
        assert!(svg.contains(">GEA<"));
        assert!(render_convergence_svg(&report(), "F9").is_none());
    }
}

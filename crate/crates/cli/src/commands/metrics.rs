use socnet_core::metrics::{compute, normalize_01, Metric, MetricVector};
use socnet_core::{Graph, Result};

use super::{csv_bytes, format_name, load_input};
use crate::args::MetricsArgs;
use crate::manifest::{OutDir, RunManifest};

pub fn run(a: &MetricsArgs, out: &mut OutDir) -> Result<()> {
    let loaded = load_input(&a.input)?;
    let g = &loaded.graph;

    let mut metrics: Vec<Metric> = Vec::new();
    for &m in &a.metrics {
        if !metrics.contains(&m) {
            metrics.push(m);
        }
    }

    for &metric in &metrics {
        let raw = compute(g, metric);
        out.write(&format!("metric_{metric}.csv"), &vector_csv(g, &raw)?)?;
        if a.normalized {
            let norm = normalize_01(&raw, g)?;
            out.write(&format!("metric_{metric}_normalized.csv"), &vector_csv(g, &norm)?)?;
        }
        print_summary(metric, &raw.values);
    }

    let mut m = RunManifest::new("metrics");
    m.flag("input", a.input.input.display());
    m.flag("format", format_name(loaded.format));
    m.flag("lcc", a.input.lcc);
    m.flag(
        "metrics",
        metrics.iter().map(|m| m.name()).collect::<Vec<_>>().join(","),
    );
    m.flag("normalized", a.normalized);
    m.flag("out-dir", a.out_dir.display());
    m.inputs = vec![loaded.digest];
    m.write(out)
}

fn vector_csv(g: &Graph, m: &MetricVector) -> Result<Vec<u8>> {
    csv_bytes(|w| {
        w.write_record(["node_label", "value"])?;
        for (v, value) in m.values.iter().enumerate() {
            w.write_record([g.label(v as u32), value.to_string()])?;
        }
        Ok(())
    })
}

fn print_summary(metric: Metric, values: &[f64]) {
    if values.is_empty() {
        println!("{metric:<13} n=0");
        return;
    }
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let mean = values.iter().sum::<f64>() / values.len() as f64;
    println!(
        "{metric:<13} n={:<8} min={min:<12.6} max={max:<12.6} mean={mean:.6}",
        values.len()
    );
}

use serde::Serialize;
use socnet_core::distributions::{robustness_report, RobustnessReport};
use socnet_core::metrics::Metric;
use socnet_core::sampling::{run_repeated, SamplerConfig};
use socnet_core::Result;

use super::{csv_bytes, format_name, load_input};
use crate::args::RobustnessArgs;
use crate::manifest::{to_json_bytes, OutDir, RunManifest};

#[derive(Serialize)]
struct RobustnessDocument {
    method: String,
    size: u64,
    count: u64,
    seed: u64,
    threshold: f64,
    reports: Vec<RobustnessReport>,
    errors: Vec<MetricError>,
}

#[derive(Serialize)]
struct MetricError {
    metric: Metric,
    message: String,
}

pub fn run(a: &RobustnessArgs, out: &mut OutDir) -> Result<()> {
    let loaded = load_input(&a.input)?;
    let cfg = SamplerConfig {
        method: a.method.into(),
        target_size: a.size as usize,
        rng_seed: a.seed,
        on_exhaustion: a.on_exhaustion.into(),
    };
    let run = run_repeated(&loaded.graph, &cfg, a.count as usize)?;

    let mut metrics: Vec<Metric> = Vec::new();
    for &m in &a.metrics {
        if !metrics.contains(&m) {
            metrics.push(m);
        }
    }

    // One failing metric (e.g. a degenerate distribution in one sample)
    // must not sink the rest of the run.
    let mut reports = Vec::new();
    let mut failures: Vec<(Metric, socnet_core::Error)> = Vec::new();
    for &metric in &metrics {
        match robustness_report(&run, metric, a.threshold) {
            Ok(r) => reports.push(r),
            Err(e) => {
                eprintln!("warning: {metric}: {e}");
                failures.push((metric, e));
            }
        }
    }
    if reports.is_empty() && !failures.is_empty() {
        return Err(failures.swap_remove(0).1);
    }

    println!(
        "{:<13} {:>7} {:>9} {:>9} {:>8}",
        "metric", "samples", "min_r", "mean_r", "flagged"
    );
    for r in &reports {
        let min = r.correlations.iter().copied().fold(f64::INFINITY, f64::min);
        let mean = r.correlations.iter().sum::<f64>() / r.correlations.len() as f64;
        println!(
            "{:<13} {:>7} {:>9.4} {:>9.4} {:>8}",
            r.metric.name(),
            r.correlations.len(),
            min,
            mean,
            r.flagged.len()
        );
    }
    for r in &reports {
        if !r.flagged.is_empty() {
            println!(
                "flagged below {}: {} samples {:?}",
                r.threshold,
                r.metric.name(),
                r.flagged
            );
        }
    }

    let distributions = csv_bytes(|w| {
        w.write_record(["metric", "sample_id", "bin", "count"])?;
        for r in &reports {
            for (sample_id, d) in r.distributions.iter().enumerate() {
                for (bin, count) in d.bins.iter().enumerate() {
                    w.write_record([
                        r.metric.name().to_string(),
                        sample_id.to_string(),
                        bin.to_string(),
                        count.to_string(),
                    ])?;
                }
            }
        }
        Ok(())
    })?;
    out.write("robustness_distributions.csv", &distributions)?;

    let correlations = csv_bytes(|w| {
        w.write_record(["metric", "sample_id", "correlation", "flagged"])?;
        for r in &reports {
            for (sample_id, corr) in r.correlations.iter().enumerate() {
                w.write_record([
                    r.metric.name().to_string(),
                    sample_id.to_string(),
                    corr.to_string(),
                    r.flagged.contains(&sample_id).to_string(),
                ])?;
            }
        }
        Ok(())
    })?;
    out.write("robustness_correlations.csv", &correlations)?;

    let doc = RobustnessDocument {
        method: a.method.to_string(),
        size: a.size,
        count: a.count,
        seed: a.seed,
        threshold: a.threshold,
        reports,
        errors: failures
            .into_iter()
            .map(|(metric, e)| MetricError {
                metric,
                message: e.to_string(),
            })
            .collect(),
    };
    out.write("robustness.json", &to_json_bytes(&doc)?)?;

    let mut m = RunManifest::new("robustness");
    m.seed = Some(a.seed);
    m.flag("input", a.input.input.display());
    m.flag("format", format_name(loaded.format));
    m.flag("lcc", a.input.lcc);
    m.flag("method", a.method);
    m.flag("size", a.size);
    m.flag("count", a.count);
    m.flag("seed", a.seed);
    m.flag("on-exhaustion", a.on_exhaustion);
    m.flag(
        "metrics",
        metrics.iter().map(|m| m.name()).collect::<Vec<_>>().join(","),
    );
    m.flag("threshold", a.threshold);
    m.flag("out-dir", a.out_dir.display());
    m.inputs = vec![loaded.digest];
    m.write(out)
}

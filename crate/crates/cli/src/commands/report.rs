use serde::Serialize;
use socnet_core::distributions::{bin_distribution, trim_bins, BinSlice};
use socnet_core::metrics::{compute_normalized, Metric};
use socnet_core::sampling::{draw_sample, SamplerConfig};
use socnet_core::stats::{global_stats, GlobalStats};
use socnet_core::{Graph, Result};

use super::{csv_bytes, load_path, print_stats_table, stats_display_fields, stats_fields, STATS_COLUMNS};
use crate::args::ReportArgs;
use crate::manifest::{to_json_bytes, FileDigest, OutDir, RunManifest};

/// Metrics whose binned tails are mostly empty on sparse graphs; the report
/// trims leading and trailing zero-count bins for these.
const TRIMMED: [Metric; 4] = [
    Metric::Degree,
    Metric::Strength,
    Metric::Betweenness,
    Metric::Closeness,
];

#[derive(Serialize)]
struct DatasetStats {
    dataset: String,
    stats: GlobalStats,
}

pub fn run(a: &ReportArgs, out: &mut OutDir) -> Result<()> {
    let names = dataset_names(a);

    let mut digests: Vec<FileDigest> = Vec::new();
    let mut rows: Vec<DatasetStats> = Vec::new();
    let mut dist_rows: Vec<(String, Metric, usize, u64)> = Vec::new();

    for (path, name) in a.inputs.iter().zip(&names) {
        let attach = |e: socnet_core::Error| {
            eprintln!("error: dataset {name} ({}) failed", path.display());
            e
        };
        let loaded = load_path(path, a.format, a.lcc).map_err(attach)?;
        digests.push(loaded.digest);
        let object: Graph = if a.full_graph {
            loaded.graph
        } else {
            let cfg = SamplerConfig {
                method: a.method.expect("clap requires --method without --full-graph").into(),
                target_size: a.size.expect("clap requires --size without --full-graph") as usize,
                rng_seed: a.seed.expect("clap requires --seed without --full-graph"),
                on_exhaustion: a.on_exhaustion.into(),
            };
            draw_sample(&loaded.graph, &cfg).map_err(attach)?.graph
        };
        let stats = global_stats(&object, a.ccg_mode.into()).map_err(attach)?;
        rows.push(DatasetStats {
            dataset: name.clone(),
            stats,
        });
        for metric in Metric::ALL {
            let m = compute_normalized(&object, metric).map_err(attach)?;
            let d = bin_distribution(&m).map_err(attach)?;
            let view = if TRIMMED.contains(&metric) {
                trim_bins(&d.bins, 1)
            } else {
                BinSlice {
                    start: 0,
                    counts: &d.bins,
                }
            };
            for (offset, &count) in view.counts.iter().enumerate() {
                dist_rows.push((name.clone(), metric, view.start + offset, count));
            }
        }
    }

    let table: Vec<(Option<&str>, [String; 10])> = rows
        .iter()
        .map(|r| (Some(r.dataset.as_str()), stats_display_fields(&r.stats)))
        .collect();
    print_stats_table(&table);

    let stats_csv = csv_bytes(|w| {
        let mut header = vec!["dataset"];
        header.extend(STATS_COLUMNS);
        w.write_record(&header)?;
        for r in &rows {
            let mut record = vec![r.dataset.clone()];
            record.extend(stats_fields(&r.stats));
            w.write_record(&record)?;
        }
        Ok(())
    })?;
    out.write("report_stats.csv", &stats_csv)?;
    out.write("report_stats.json", &to_json_bytes(&rows)?)?;

    let dist_csv = csv_bytes(|w| {
        w.write_record(["dataset", "metric", "bin", "count"])?;
        for (dataset, metric, bin, count) in &dist_rows {
            w.write_record([
                dataset.clone(),
                metric.name().to_string(),
                bin.to_string(),
                count.to_string(),
            ])?;
        }
        Ok(())
    })?;
    out.write("report_distributions.csv", &dist_csv)?;

    let mut m = RunManifest::new("report");
    m.seed = a.seed;
    m.flag(
        "inputs",
        a.inputs
            .iter()
            .map(|p| p.display().to_string())
            .collect::<Vec<_>>()
            .join(" "),
    );
    if let Some(f) = a.format {
        m.flag("format", format!("{f:?}").to_lowercase());
    }
    m.flag("lcc", a.lcc);
    m.flag("full-graph", a.full_graph);
    if let Some(method) = a.method {
        m.flag("method", method);
    }
    if let Some(size) = a.size {
        m.flag("size", size);
    }
    if let Some(seed) = a.seed {
        m.flag("seed", seed);
    }
    m.flag("on-exhaustion", a.on_exhaustion);
    m.flag("ccg-mode", a.ccg_mode);
    m.flag("out-dir", a.out_dir.display());
    m.inputs = digests;
    m.write(out)
}

/// File stems as dataset names; duplicates get a position suffix so rows
/// stay distinguishable.
fn dataset_names(a: &ReportArgs) -> Vec<String> {
    let stems: Vec<String> = a
        .inputs
        .iter()
        .map(|p| {
            p.file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| p.display().to_string())
        })
        .collect();
    stems
        .iter()
        .enumerate()
        .map(|(i, s)| {
            if stems.iter().filter(|t| *t == s).count() > 1 {
                format!("{s}#{i}")
            } else {
                s.clone()
            }
        })
        .collect()
}

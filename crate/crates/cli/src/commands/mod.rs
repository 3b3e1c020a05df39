mod metrics;
mod report;
mod robustness;
mod sample;
mod stats;

use std::fs;
use std::path::Path;

use socnet_core::io::{parse_pajek, parse_snap_edgelist, sniff_format, EdgeListFormat};
use socnet_core::stats::GlobalStats;
use socnet_core::{largest_connected_component, Error, Graph, Result};

use crate::args::{Cli, Command, FormatArg, InputArgs};
use crate::manifest::{sha256_hex, FileDigest, OutDir};

pub fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Stats(a) => with_out_dir(a.out_dir.clone(), |out| stats::run(&a, out)),
        Command::Metrics(a) => with_out_dir(a.out_dir.clone(), |out| metrics::run(&a, out)),
        Command::Sample(a) => with_out_dir(a.out_dir.clone(), |out| sample::run(&a, out)),
        Command::Robustness(a) => with_out_dir(a.out_dir.clone(), |out| robustness::run(&a, out)),
        Command::Report(a) => with_out_dir(a.out_dir.clone(), |out| report::run(&a, out)),
    }
}

/// Runs one command against a tracked output directory; on failure the
/// partial outputs are removed so a directory never holds half a run.
fn with_out_dir(
    dir: std::path::PathBuf,
    f: impl FnOnce(&mut OutDir) -> Result<()>,
) -> Result<()> {
    let mut out = OutDir::create(&dir)?;
    let result = f(&mut out);
    if result.is_err() {
        out.discard();
    }
    result
}

pub struct Loaded {
    pub graph: Graph,
    pub digest: FileDigest,
    pub format: EdgeListFormat,
}

pub fn load_input(args: &InputArgs) -> Result<Loaded> {
    load_path(&args.input, args.format, args.lcc)
}

/// Reads, hashes, parses, and optionally LCC-reduces one input file.
/// Cleaning diagnostics go to stderr; they never affect outputs.
pub fn load_path(path: &Path, format: Option<FormatArg>, lcc: bool) -> Result<Loaded> {
    let bytes = fs::read(path).map_err(|e| {
        Error::Io(std::io::Error::new(
            e.kind(),
            format!("{}: {e}", path.display()),
        ))
    })?;
    let digest = FileDigest {
        path: path.display().to_string(),
        sha256: sha256_hex(&bytes),
    };
    let fmt = format
        .map(EdgeListFormat::from)
        .or_else(|| sniff_format(path))
        .unwrap_or(EdgeListFormat::Snap);
    let parsed = match fmt {
        EdgeListFormat::Snap => parse_snap_edgelist(bytes.as_slice())?,
        EdgeListFormat::Pajek => parse_pajek(bytes.as_slice())?,
    };
    let d = &parsed.diagnostics;
    if d.self_loops_dropped > 0 || d.duplicate_arcs_merged > 0 {
        eprintln!(
            "note: {}: dropped {} self-loop(s), merged {} duplicate arc(s)",
            path.display(),
            d.self_loops_dropped,
            d.duplicate_arcs_merged
        );
    }
    for w in &d.warnings {
        eprintln!("warning: {}: {w}", path.display());
    }
    let graph = if lcc {
        largest_connected_component(&parsed.graph)?
    } else {
        parsed.graph
    };
    Ok(Loaded {
        graph,
        digest,
        format: fmt,
    })
}

pub fn format_name(fmt: EdgeListFormat) -> &'static str {
    match fmt {
        EdgeListFormat::Snap => "snap",
        EdgeListFormat::Pajek => "pajek",
    }
}

/// Builds a CSV byte buffer through the closure; errors fold into I/O.
pub fn csv_bytes(
    f: impl FnOnce(&mut csv::Writer<Vec<u8>>) -> csv::Result<()>,
) -> Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    f(&mut w).map_err(csv_err)?;
    w.into_inner().map_err(|e| csv_err(e.into_error().into()))
}

fn csv_err(e: csv::Error) -> Error {
    Error::Io(std::io::Error::other(e))
}

pub const STATS_COLUMNS: [&str; 10] = [
    "nodes",
    "edges",
    "density",
    "highest_degree",
    "diameter",
    "girth",
    "ccg",
    "apl",
    "alpha",
    "ccg_mode",
];

/// One stats row with full-precision numbers, for CSV.
pub fn stats_fields(s: &GlobalStats) -> [String; 10] {
    [
        s.nodes.to_string(),
        s.edges.to_string(),
        s.density.to_string(),
        s.highest_degree.to_string(),
        s.diameter.to_string(),
        s.girth.map(|g| g.to_string()).unwrap_or_default(),
        s.ccg.to_string(),
        s.apl.to_string(),
        s.alpha.map(|a| a.to_string()).unwrap_or_default(),
        mode_name(s.ccg_mode).to_string(),
    ]
}

/// Same row rounded for reading; `-` marks absent values (acyclic girth,
/// unfittable alpha).
pub fn stats_display_fields(s: &GlobalStats) -> [String; 10] {
    [
        s.nodes.to_string(),
        s.edges.to_string(),
        format!("{:.4}", s.density),
        s.highest_degree.to_string(),
        s.diameter.to_string(),
        s.girth.map(|g| g.to_string()).unwrap_or_else(|| "-".into()),
        format!("{:.4}", s.ccg),
        format!("{:.4}", s.apl),
        s.alpha
            .map(|a| format!("{a:.3}"))
            .unwrap_or_else(|| "-".into()),
        mode_name(s.ccg_mode).to_string(),
    ]
}

pub fn mode_name(mode: socnet_core::stats::ClusteringMode) -> &'static str {
    match mode {
        socnet_core::stats::ClusteringMode::MeanLocal => "mean-local",
        socnet_core::stats::ClusteringMode::Transitivity => "transitivity",
    }
}

/// Prints an aligned table: optional leading name column, then the stats
/// columns.
pub fn print_stats_table(rows: &[(Option<&str>, [String; 10])]) {
    let name_width = rows
        .iter()
        .filter_map(|(n, _)| n.map(str::len))
        .chain(std::iter::once("dataset".len()))
        .max()
        .unwrap_or(0);
    let named = rows.iter().any(|(n, _)| n.is_some());
    let mut widths: Vec<usize> = STATS_COLUMNS.iter().map(|c| c.len()).collect();
    for (_, fields) in rows {
        for (w, f) in widths.iter_mut().zip(fields) {
            *w = (*w).max(f.len());
        }
    }
    let mut header = String::new();
    if named {
        header.push_str(&format!("{:<name_width$}  ", "dataset"));
    }
    for (c, w) in STATS_COLUMNS.iter().zip(&widths) {
        header.push_str(&format!("{c:>w$}  "));
    }
    println!("{}", header.trim_end());
    for (name, fields) in rows {
        let mut line = String::new();
        if named {
            line.push_str(&format!("{:<name_width$}  ", name.unwrap_or("")));
        }
        for (f, w) in fields.iter().zip(&widths) {
            line.push_str(&format!("{f:>w$}  "));
        }
        println!("{}", line.trim_end());
    }
}

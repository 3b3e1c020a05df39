use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use socnet_core::io::EdgeListFormat;
use socnet_core::metrics::Metric;
use socnet_core::sampling::{ExhaustionPolicy, SamplingMethod};
use socnet_core::stats::ClusteringMode;

#[derive(Parser)]
#[command(
    name = "socnet",
    version,
    about = "Structural statistics, node metrics, and sampling robustness for network edge lists"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Whole-graph statistics (size, density, distances, girth, clustering, degree exponent)
    Stats(StatsArgs),
    /// Per-node metric vectors written as CSV
    Metrics(MetricsArgs),
    /// Draw repeated samples and save each as an edge list
    Sample(SampleArgs),
    /// Stability of metric distributions across repeated samples
    Robustness(RobustnessArgs),
    /// Combined stats and binned metric distributions over several datasets
    Report(ReportArgs),
}

#[derive(Args)]
pub struct InputArgs {
    /// Input edge-list file
    #[arg(long)]
    pub input: PathBuf,
    /// Input format; inferred from the file extension when omitted
    #[arg(long, value_enum)]
    pub format: Option<FormatArg>,
    /// Reduce to the largest connected component before anything else
    #[arg(long)]
    pub lcc: bool,
}

#[derive(Debug, Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Snap,
    Pajek,
}

impl From<FormatArg> for EdgeListFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Snap => EdgeListFormat::Snap,
            FormatArg::Pajek => EdgeListFormat::Pajek,
        }
    }
}

#[derive(Debug, Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum CcgModeArg {
    MeanLocal,
    Transitivity,
}

impl From<CcgModeArg> for ClusteringMode {
    fn from(m: CcgModeArg) -> Self {
        match m {
            CcgModeArg::MeanLocal => ClusteringMode::MeanLocal,
            CcgModeArg::Transitivity => ClusteringMode::Transitivity,
        }
    }
}

impl std::fmt::Display for CcgModeArg {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CcgModeArg::MeanLocal => "mean-local",
            CcgModeArg::Transitivity => "transitivity",
        })
    }
}

#[derive(Debug, Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Node,
    Link,
    Snowball,
}

impl From<MethodArg> for SamplingMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Node => SamplingMethod::Node,
            MethodArg::Link => SamplingMethod::Link,
            MethodArg::Snowball => SamplingMethod::Snowball,
        }
    }
}

impl std::fmt::Display for MethodArg {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            MethodArg::Node => "node",
            MethodArg::Link => "link",
            MethodArg::Snowball => "snowball",
        })
    }
}

#[derive(Debug, Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum ExhaustionArg {
    Error,
    Reseed,
}

impl From<ExhaustionArg> for ExhaustionPolicy {
    fn from(p: ExhaustionArg) -> Self {
        match p {
            ExhaustionArg::Error => ExhaustionPolicy::Error,
            ExhaustionArg::Reseed => ExhaustionPolicy::Reseed,
        }
    }
}

impl std::fmt::Display for ExhaustionArg {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ExhaustionArg::Error => "error",
            ExhaustionArg::Reseed => "reseed",
        })
    }
}

#[derive(Args)]
pub struct StatsArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// How the global clustering coefficient is computed
    #[arg(long, value_enum, default_value_t = CcgModeArg::MeanLocal)]
    pub ccg_mode: CcgModeArg,
    /// Directory for stats.csv, stats.json, and manifest.json
    #[arg(long)]
    pub out_dir: PathBuf,
}

#[derive(Args)]
pub struct MetricsArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Comma-separated metric list
    #[arg(long, value_delimiter = ',', default_values_t = Metric::ALL)]
    pub metrics: Vec<Metric>,
    /// Also write each metric normalized into [0, 1]
    #[arg(long)]
    pub normalized: bool,
    /// Directory for one CSV per metric plus manifest.json
    #[arg(long)]
    pub out_dir: PathBuf,
}

#[derive(Args)]
pub struct SampleArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum)]
    pub method: MethodArg,
    /// Sample size in nodes
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub size: u64,
    /// Number of samples; sample i uses seed + i
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub count: u64,
    /// Base RNG seed; every random decision flows from it
    #[arg(long)]
    pub seed: u64,
    /// What to do when the node or edge supply runs out early
    #[arg(long, value_enum, default_value_t = ExhaustionArg::Error)]
    pub on_exhaustion: ExhaustionArg,
    /// Directory for sample_NNN.txt files plus manifest.json
    #[arg(long)]
    pub out_dir: PathBuf,
}

#[derive(Args)]
pub struct RobustnessArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum)]
    pub method: MethodArg,
    /// Sample size in nodes
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub size: u64,
    /// Number of samples; sample i uses seed + i
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
    pub count: u64,
    /// Base RNG seed
    #[arg(long)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = ExhaustionArg::Error)]
    pub on_exhaustion: ExhaustionArg,
    /// Comma-separated metric list
    #[arg(long, value_delimiter = ',', default_values_t = Metric::ALL)]
    pub metrics: Vec<Metric>,
    /// Samples whose correlation with the average falls below this are flagged
    #[arg(long, default_value_t = 0.9)]
    pub threshold: f64,
    /// Directory for robustness.json, the distribution CSVs, and manifest.json
    #[arg(long)]
    pub out_dir: PathBuf,
}

#[derive(Args)]
pub struct ReportArgs {
    /// Input edge-list files, one dataset each
    #[arg(long, num_args = 1.., required = true)]
    pub inputs: Vec<PathBuf>,
    /// Format applied to every input; inferred per file when omitted
    #[arg(long, value_enum)]
    pub format: Option<FormatArg>,
    /// Reduce each dataset to its largest connected component
    #[arg(long)]
    pub lcc: bool,
    /// Analyze each full graph instead of drawing one sample per dataset
    #[arg(long)]
    pub full_graph: bool,
    #[arg(long, value_enum, required_unless_present = "full_graph", conflicts_with = "full_graph")]
    pub method: Option<MethodArg>,
    /// Sample size in nodes
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..),
          required_unless_present = "full_graph", conflicts_with = "full_graph")]
    pub size: Option<u64>,
    /// RNG seed, applied to each dataset independently
    #[arg(long, required_unless_present = "full_graph", conflicts_with = "full_graph")]
    pub seed: Option<u64>,
    #[arg(long, value_enum, default_value_t = ExhaustionArg::Error)]
    pub on_exhaustion: ExhaustionArg,
    #[arg(long, value_enum, default_value_t = CcgModeArg::MeanLocal)]
    pub ccg_mode: CcgModeArg,
    /// Directory for report_stats.{csv,json}, report_distributions.csv, manifest.json
    #[arg(long)]
    pub out_dir: PathBuf,
}

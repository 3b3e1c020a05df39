//! Analysis toolkit for undirected social networks: file ingestion, global
//! statistics, per-node metrics, graph sampling, and distribution-robustness
//! reports.
//!
//! The building blocks mirror a common experiment pipeline:
//!
//! 1. [`io`] parses SNAP-style edge lists or Pajek files into a cleaned,
//!    undirected [`Graph`]; [`largest_connected_component`] restricts to the
//!    LCC when wanted.
//! 2. [`stats`] computes the whole-graph summary table (density, highest
//!    degree, diameter, girth, clustering, average path length, power-law
//!    exponent).
//! 3. [`metrics`] computes six per-node metrics and normalizes them into
//!    `[0, 1]`.
//! 4. [`sampling`] draws node, link, or snowball samples, and repeats them
//!    across derived seeds.
//! 5. [`distributions`] bins normalized metrics into 101 two-decimal bins
//!    and measures how well each sample's distribution correlates with the
//!    cross-sample average.
//!
//! # Determinism
//!
//! Every operation is a pure function of its inputs: samplers draw from a
//! ChaCha stream seeded explicitly, and all floating-point reductions fold
//! in a fixed order. With the default `parallel` feature, heavy per-source
//! loops (BFS sweeps, betweenness, per-sample work) run on a rayon pool, and
//! results are bitwise identical to the sequential build — see `exec` for
//! how that is upheld.
//!
//! ```
//! use socnet_core::stats::{global_stats, ClusteringMode};
//! use socnet_core::Graph;
//!
//! let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (2, 3)])?;
//! let s = global_stats(&g, ClusteringMode::MeanLocal)?;
//! assert_eq!(s.girth, Some(3));
//! assert_eq!(s.highest_degree, 3);
//! # Ok::<(), socnet_core::Error>(())
//! ```

mod bfs;
mod components;
mod exec;
mod graph;

pub mod distributions;
pub mod error;
pub mod io;
pub mod metrics;
pub mod sampling;
pub mod stats;
pub mod synth;

pub use bfs::bfs_distances;
pub use components::largest_connected_component;
pub use error::{Error, Result};
pub use graph::{CleaningStats, Graph, GraphBuilder};

//! Whole-graph statistics: density, highest degree, diameter, girth, global
//! clustering, average path length, and a log-log power-law exponent fit.
//!
//! Path-based quantities (diameter, average path length) are defined over
//! *reachable* pairs, so they stay meaningful on disconnected graphs. Run
//! them on [`largest_connected_component`](crate::largest_connected_component)
//! output when whole-graph connectivity is wanted.

use std::collections::VecDeque;
use std::sync::atomic::{AtomicU32, Ordering};

use serde::Serialize;

use crate::bfs::{per_source_distances, UNREACHED};
use crate::error::{Error, Result};
use crate::exec;
use crate::graph::Graph;

/// Two common definitions of the global clustering coefficient.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClusteringMode {
    /// Mean of per-node local clustering coefficients; nodes of degree < 2
    /// contribute 0. This is the default.
    #[default]
    MeanLocal,
    /// Transitivity: 3 x triangles / connected triples.
    Transitivity,
}

/// Edge-node ratio `m / n`.
pub fn density(g: &Graph) -> Result<f64> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    Ok(g.edge_count() as f64 / g.node_count() as f64)
}

pub fn highest_degree(g: &Graph) -> Result<u32> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    Ok(g.nodes().map(|v| g.degree(v) as u32).max().unwrap())
}

/// Longest shortest path over reachable pairs.
pub fn diameter(g: &Graph) -> Result<u32> {
    diameter_from(&per_source_distances(g))
}

/// Mean shortest-path distance over reachable pairs.
pub fn average_path_length(g: &Graph) -> Result<f64> {
    average_path_length_from(&per_source_distances(g))
}

fn diameter_from(summaries: &[crate::bfs::SourceDistances]) -> Result<u32> {
    if summaries.iter().all(|s| s.reached == 0) {
        return Err(Error::NoReachablePairs);
    }
    Ok(summaries.iter().map(|s| s.max).max().unwrap_or(0))
}

fn average_path_length_from(summaries: &[crate::bfs::SourceDistances]) -> Result<f64> {
    let pairs: u64 = summaries.iter().map(|s| s.reached as u64).sum();
    if pairs == 0 {
        return Err(Error::NoReachablePairs);
    }
    let total: u64 = summaries.iter().map(|s| s.sum).sum();
    Ok(total as f64 / pairs as f64)
}

struct GirthScratch {
    dist: Vec<u32>,
    parent: Vec<u32>,
    queue: VecDeque<u32>,
    touched: Vec<u32>,
}

impl GirthScratch {
    fn new(n: usize) -> Self {
        GirthScratch {
            dist: vec![UNREACHED; n],
            parent: vec![UNREACHED; n],
            queue: VecDeque::new(),
            touched: Vec::new(),
        }
    }
}

/// Length of a shortest cycle; `None` when the graph is acyclic.
///
/// One BFS per root: a non-tree edge `(u, w)` seen from root `r` witnesses a
/// closed walk of length `d(u) + d(w) + 1`, which is never shorter than the
/// girth, and is exactly the girth for some root on a shortest cycle. Search
/// depth is capped once a bound is known, and everything stops at 3 — no
/// shorter cycle exists in a simple graph.
pub fn girth(g: &Graph) -> Result<Option<u32>> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    if g.edge_count() == 0 {
        return Ok(None);
    }
    const ACYCLIC: u32 = u32::MAX;
    let best = AtomicU32::new(ACYCLIC);
    let n = g.node_count();
    exec::map_indexed_scratch(
        n,
        || GirthScratch::new(n),
        |s, root| {
            let mut bound = best.load(Ordering::Relaxed);
            if bound == 3 {
                return;
            }
            for &v in &s.touched {
                s.dist[v as usize] = UNREACHED;
                s.parent[v as usize] = UNREACHED;
            }
            s.touched.clear();
            s.queue.clear();
            let root = root as u32;
            s.dist[root as usize] = 0;
            s.touched.push(root);
            s.queue.push_back(root);
            while let Some(u) = s.queue.pop_front() {
                bound = bound.min(best.load(Ordering::Relaxed));
                if bound == 3 {
                    return;
                }
                let du = s.dist[u as usize];
                for &w in g.neighbors(u) {
                    let dw = s.dist[w as usize];
                    if dw == UNREACHED {
                        // A node first seen at depth d can only witness
                        // cycles of length >= 2d; skip it when that cannot
                        // beat the bound.
                        if 2 * (du as u64 + 1) < bound as u64 {
                            s.dist[w as usize] = du + 1;
                            s.parent[w as usize] = u;
                            s.touched.push(w);
                            s.queue.push_back(w);
                        }
                    } else if s.parent[u as usize] != w && s.parent[w as usize] != u {
                        let candidate = du as u64 + dw as u64 + 1;
                        if candidate < bound as u64 {
                            bound = candidate as u32;
                            best.fetch_min(bound, Ordering::Relaxed);
                        }
                    }
                }
            }
        },
    );
    match best.into_inner() {
        ACYCLIC => Ok(None),
        len => Ok(Some(len)),
    }
}

/// Number of edges among the neighbors of each node, i.e. triangles through
/// that node.
pub(crate) fn neighborhood_edge_counts(g: &Graph) -> Vec<u64> {
    exec::map_indexed(g.node_count(), |v| {
        let nbrs = g.neighbors(v as u32);
        let mut twice_links = 0u64;
        for &a in nbrs {
            twice_links += sorted_intersection_count(g.neighbors(a), nbrs);
        }
        twice_links / 2
    })
}

pub(crate) fn sorted_intersection_count(a: &[u32], b: &[u32]) -> u64 {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// Per-node local clustering coefficients; nodes of degree < 2 get 0.
pub(crate) fn local_clustering_values(g: &Graph) -> Vec<f64> {
    let links = neighborhood_edge_counts(g);
    g.nodes()
        .map(|v| {
            let d = g.degree(v) as u64;
            if d < 2 {
                0.0
            } else {
                links[v as usize] as f64 / choose2(d) as f64
            }
        })
        .collect()
}

fn choose2(d: u64) -> u64 {
    d * (d - 1) / 2
}

pub fn global_clustering(g: &Graph, mode: ClusteringMode) -> Result<f64> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    match mode {
        ClusteringMode::MeanLocal => {
            let values = local_clustering_values(g);
            Ok(values.iter().sum::<f64>() / values.len() as f64)
        }
        ClusteringMode::Transitivity => {
            let triangles_x3: u64 = neighborhood_edge_counts(g).iter().sum();
            let triples: u64 = g.nodes().map(|v| choose2(g.degree(v) as u64)).sum();
            if triples == 0 {
                return Err(Error::NoTriples);
            }
            Ok(triangles_x3 as f64 / triples as f64)
        }
    }
}

/// Power-law exponent of a degree histogram, fitted by least squares on
/// `log(count)` vs `log(degree)` over all degrees >= 1 with nonzero count.
/// Needs at least two usable points; returns the negated slope.
pub fn fit_power_law_alpha(histogram: &std::collections::BTreeMap<u32, u64>) -> Result<f64> {
    let points: Vec<(f64, f64)> = histogram
        .iter()
        .filter(|&(&degree, &count)| degree >= 1 && count >= 1)
        .map(|(&degree, &count)| ((degree as f64).ln(), (count as f64).ln()))
        .collect();
    if points.len() < 2 {
        return Err(Error::InsufficientSupport {
            points: points.len(),
        });
    }
    let n = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / n;
    let mut sxy = 0.0;
    let mut sxx = 0.0;
    for (x, y) in &points {
        sxy += (x - mean_x) * (y - mean_y);
        sxx += (x - mean_x) * (x - mean_x);
    }
    Ok(-(sxy / sxx))
}

/// The whole statistics table for one graph, in Table-1 column order.
#[derive(Debug, Clone, Serialize)]
pub struct GlobalStats {
    pub nodes: usize,
    pub edges: usize,
    pub density: f64,
    pub highest_degree: u32,
    pub diameter: u32,
    /// `None` when the graph is acyclic.
    pub girth: Option<u32>,
    pub ccg: f64,
    pub apl: f64,
    /// `None` when fewer than two distinct degrees occur.
    pub alpha: Option<f64>,
    pub ccg_mode: ClusteringMode,
}

/// Computes every statistic in one pass over the BFS summaries.
pub fn global_stats(g: &Graph, mode: ClusteringMode) -> Result<GlobalStats> {
    let density = density(g)?;
    let summaries = per_source_distances(g);
    let alpha = match fit_power_law_alpha(&g.degree_histogram()) {
        Ok(alpha) => Some(alpha),
        Err(Error::InsufficientSupport { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(GlobalStats {
        nodes: g.node_count(),
        edges: g.edge_count(),
        density,
        highest_degree: highest_degree(g)?,
        diameter: diameter_from(&summaries)?,
        girth: girth(g)?,
        ccg: global_clustering(g, mode)?,
        apl: average_path_length_from(&summaries)?,
        alpha,
        ccg_mode: mode,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn cycle(n: u32) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n as usize, &edges).unwrap()
    }

    fn path(n: u32) -> Graph {
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n as usize, &edges).unwrap()
    }

    fn complete(n: u32) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n as usize, &edges).unwrap()
    }

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5u32 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges).unwrap()
    }

    #[test]
    fn density_is_edge_node_ratio() {
        assert_relative_eq!(density(&cycle(4)).unwrap(), 1.0);
        assert_relative_eq!(density(&complete(5)).unwrap(), 2.0);
        assert_relative_eq!(density(&path(2)).unwrap(), 0.5);
        assert!(matches!(
            density(&Graph::from_edges(0, &[]).unwrap()),
            Err(Error::EmptyGraph)
        ));
    }

    #[test]
    fn highest_degree_star() {
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(highest_degree(&star).unwrap(), 4);
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(diameter(&path(4)).unwrap(), 3);
        assert_eq!(diameter(&cycle(5)).unwrap(), 2);
        assert_eq!(diameter(&complete(5)).unwrap(), 1);
    }

    #[test]
    fn diameter_ignores_unreachable_pairs() {
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(diameter(&two_k2).unwrap(), 1);
        let isolated = Graph::from_edges(2, &[]).unwrap();
        assert!(matches!(diameter(&isolated), Err(Error::NoReachablePairs)));
    }

    #[test]
    fn average_path_length_examples() {
        // P3 ordered reachable pairs: distances 1,2,1,1,2,1.
        assert_relative_eq!(average_path_length(&path(3)).unwrap(), 8.0 / 6.0);
        assert_relative_eq!(average_path_length(&complete(4)).unwrap(), 1.0);
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_relative_eq!(average_path_length(&two_k2).unwrap(), 1.0);
    }

    #[test]
    fn girth_examples() {
        assert_eq!(girth(&cycle(3)).unwrap(), Some(3));
        assert_eq!(girth(&cycle(5)).unwrap(), Some(5));
        assert_eq!(girth(&cycle(6)).unwrap(), Some(6));
        assert_eq!(girth(&complete(4)).unwrap(), Some(3));
        assert_eq!(girth(&petersen()).unwrap(), Some(5));
        assert_eq!(girth(&path(5)).unwrap(), None);
        assert_eq!(girth(&Graph::from_edges(1, &[]).unwrap()).unwrap(), None);
    }

    #[test]
    fn girth_bipartite_and_chords() {
        // K2,3 has girth 4.
        let k23 = Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(girth(&k23).unwrap(), Some(4));
        // A chord shortens C4 to a triangle.
        let chorded = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert_eq!(girth(&chorded).unwrap(), Some(3));
    }

    #[test]
    fn girth_sees_cycles_off_the_main_component() {
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (6, 4)]).unwrap();
        assert_eq!(girth(&g).unwrap(), Some(3));
    }

    #[test]
    fn clustering_triangle_with_pendant() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap();
        // Locals: 1/3 (hub), 1, 1, 0.
        assert_relative_eq!(
            global_clustering(&g, ClusteringMode::MeanLocal).unwrap(),
            7.0 / 12.0
        );
        // One triangle, five connected triples.
        assert_relative_eq!(
            global_clustering(&g, ClusteringMode::Transitivity).unwrap(),
            3.0 / 5.0
        );
    }

    #[test]
    fn clustering_extremes() {
        let k5 = complete(5);
        assert_relative_eq!(global_clustering(&k5, ClusteringMode::MeanLocal).unwrap(), 1.0);
        assert_relative_eq!(
            global_clustering(&k5, ClusteringMode::Transitivity).unwrap(),
            1.0
        );
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_relative_eq!(
            global_clustering(&star, ClusteringMode::MeanLocal).unwrap(),
            0.0
        );
        assert_relative_eq!(
            global_clustering(&star, ClusteringMode::Transitivity).unwrap(),
            0.0
        );
        let matching = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            global_clustering(&matching, ClusteringMode::Transitivity),
            Err(Error::NoTriples)
        ));
    }

    #[test]
    fn alpha_two_point_fit_is_exact() {
        // Degrees: four nodes of degree 1, one of degree 2, so the points
        // are (ln 1, ln 4) and (ln 2, ln 1): slope -2, alpha 2.
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        assert_relative_eq!(
            fit_power_law_alpha(&g.degree_histogram()).unwrap(),
            2.0,
            epsilon = 1e-12
        );
    }

    #[test]
    fn alpha_recovers_synthetic_exponents() {
        for alpha in [1.5, 2.0, 3.0] {
            let mut histogram = std::collections::BTreeMap::new();
            for k in 1..=100u32 {
                let count = (1e6 * (k as f64).powf(-alpha)).round() as u64;
                histogram.insert(k, count);
            }
            let fitted = fit_power_law_alpha(&histogram).unwrap();
            assert!(
                (fitted - alpha).abs() < 0.05,
                "alpha {alpha} fitted as {fitted}"
            );
        }
    }

    #[test]
    fn alpha_needs_two_distinct_degrees() {
        assert!(matches!(
            fit_power_law_alpha(&complete(5).degree_histogram()),
            Err(Error::InsufficientSupport { points: 1 })
        ));
        // Zero-count entries are not usable points.
        let mut sparse = std::collections::BTreeMap::new();
        sparse.insert(1u32, 5u64);
        sparse.insert(2, 0);
        assert!(fit_power_law_alpha(&sparse).is_err());
    }

    #[test]
    fn global_stats_cycle4() {
        let s = global_stats(&cycle(4), ClusteringMode::MeanLocal).unwrap();
        assert_eq!(s.nodes, 4);
        assert_eq!(s.edges, 4);
        assert_relative_eq!(s.density, 1.0);
        assert_eq!(s.highest_degree, 2);
        assert_eq!(s.diameter, 2);
        assert_eq!(s.girth, Some(4));
        assert_relative_eq!(s.ccg, 0.0);
        // Ordered pair distances per node: 1, 1, 2.
        assert_relative_eq!(s.apl, 4.0 / 3.0);
        assert!(s.alpha.is_none());
    }

    #[test]
    fn global_stats_k5_identities() {
        let s = global_stats(&complete(5), ClusteringMode::MeanLocal).unwrap();
        assert_relative_eq!(s.density, 2.0);
        assert_eq!(s.diameter, 1);
        assert_relative_eq!(s.apl, 1.0);
        assert_relative_eq!(s.ccg, 1.0);
        assert_eq!(s.girth, Some(3));
    }
}

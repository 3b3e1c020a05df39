//! Immutable undirected simple graph with dense node indices.

use std::collections::HashMap;

use crate::error::{Error, Result};

/// An undirected simple graph.
///
/// Nodes are dense indices `0..node_count`. Adjacency lists are sorted and
/// deduplicated; every edge appears in both endpoint lists, self-loops are
/// rejected at construction. The struct is immutable after construction and
/// safe to share across worker threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<u32>>,
    edge_count: usize,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from clean input: `edges` must contain no self-loops,
    /// no duplicates (in either orientation), and only endpoints `< node_count`.
    pub fn from_edges(node_count: usize, edges: &[(u32, u32)]) -> Result<Graph> {
        let mut adjacency = vec![Vec::new(); node_count];
        for &(u, v) in edges {
            for e in [u, v] {
                if e as usize >= node_count {
                    return Err(Error::NodeOutOfRange {
                        node: e,
                        node_count,
                    });
                }
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("self-loop at node {u}")));
            }
            adjacency[u as usize].push(v);
            adjacency[v as usize].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidArgument("duplicate edge".into()));
            }
        }
        Ok(Graph {
            adjacency,
            edge_count: edges.len(),
            labels: None,
        })
    }

    /// Internal constructor for parsers and samplers. `adjacency` must already
    /// be sorted, deduplicated, symmetric, and loop-free.
    pub(crate) fn from_parts(adjacency: Vec<Vec<u32>>, labels: Option<Vec<String>>) -> Graph {
        debug_assert!(labels.as_ref().is_none_or(|l| l.len() == adjacency.len()));
        let half_degree_sum: usize = adjacency.iter().map(Vec::len).sum();
        debug_assert!(half_degree_sum % 2 == 0);
        Graph {
            edge_count: half_degree_sum / 2,
            adjacency,
            labels,
        }
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    pub fn nodes(&self) -> std::ops::Range<u32> {
        0..self.node_count() as u32
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adjacency[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adjacency[v as usize].len()
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        (u as usize) < self.adjacency.len() && self.adjacency[u as usize].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` pairs with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            let u = u as u32;
            list.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// The original identifier of `v` from the source file, or the index
    /// rendered as a string when the graph was built without labels.
    pub fn label(&self, v: u32) -> String {
        match &self.labels {
            Some(labels) => labels[v as usize].clone(),
            None => v.to_string(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub(crate) fn set_labels(&mut self, labels: Vec<String>) {
        assert_eq!(labels.len(), self.node_count());
        self.labels = Some(labels);
    }

    /// Induced subgraph on `nodes` (distinct, in range), reindexed densely in
    /// the order given. Labels carry over.
    pub fn induced_subgraph(&self, nodes: &[u32]) -> Graph {
        let mut remap = vec![u32::MAX; self.node_count()];
        for (new, &old) in nodes.iter().enumerate() {
            debug_assert!(remap[old as usize] == u32::MAX, "duplicate node in subset");
            remap[old as usize] = new as u32;
        }
        let adjacency: Vec<Vec<u32>> = nodes
            .iter()
            .map(|&old| {
                let mut list: Vec<u32> = self.adjacency[old as usize]
                    .iter()
                    .filter_map(|&w| {
                        let mapped = remap[w as usize];
                        (mapped != u32::MAX).then_some(mapped)
                    })
                    .collect();
                list.sort_unstable();
                list
            })
            .collect();
        let labels = self
            .labels
            .as_ref()
            .map(|l| nodes.iter().map(|&old| l[old as usize].clone()).collect());
        Graph::from_parts(adjacency, labels)
    }

    /// Histogram of node degrees (including degree 0), keyed by degree.
    pub fn degree_histogram(&self) -> std::collections::BTreeMap<u32, u64> {
        let mut hist = std::collections::BTreeMap::new();
        for list in &self.adjacency {
            *hist.entry(list.len() as u32).or_insert(0u64) += 1;
        }
        hist
    }

    pub(crate) fn check_node(&self, v: u32) -> Result<()> {
        if (v as usize) < self.node_count() {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange {
                node: v,
                node_count: self.node_count(),
            })
        }
    }
}

/// Accumulates raw arcs (possibly directed, with duplicates and self-loops)
/// and produces a cleaned undirected [`Graph`].
///
/// Node indices are assigned by first appearance, which makes parsing
/// single-pass and deterministic for a given input.
#[derive(Debug, Default)]
pub struct GraphBuilder {
    labels: Vec<String>,
    index: HashMap<String, u32>,
    arcs: Vec<(u32, u32)>,
}

/// Counts of input irregularities cleaned away by [`GraphBuilder::finish`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CleaningStats {
    pub self_loops_dropped: u64,
    pub duplicate_arcs_merged: u64,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Index for the node identified by `id`, interning it on first sight.
    pub fn intern(&mut self, id: &str) -> u32 {
        if let Some(&i) = self.index.get(id) {
            return i;
        }
        let i = self.labels.len() as u32;
        self.labels.push(id.to_string());
        self.index.insert(id.to_string(), i);
        i
    }

    /// Appends a node with a fixed label without touching the intern table.
    /// Used by formats that declare vertices up front.
    pub fn push_node(&mut self, label: String) -> u32 {
        let i = self.labels.len() as u32;
        self.labels.push(label);
        i
    }

    pub fn set_label(&mut self, node: u32, label: String) {
        self.labels[node as usize] = label;
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn add_arc(&mut self, u: u32, v: u32) {
        self.arcs.push((u, v));
    }

    /// Collapses every arc to an undirected edge, merges duplicates, drops
    /// self-loops, and freezes the result.
    pub fn finish(self) -> (Graph, CleaningStats) {
        let mut stats = CleaningStats::default();
        let mut edges: Vec<(u32, u32)> = Vec::with_capacity(self.arcs.len());
        for (u, v) in self.arcs {
            if u == v {
                stats.self_loops_dropped += 1;
            } else {
                edges.push((u.min(v), u.max(v)));
            }
        }
        edges.sort_unstable();
        let before = edges.len();
        edges.dedup();
        stats.duplicate_arcs_merged = (before - edges.len()) as u64;

        let mut adjacency = vec![Vec::new(); self.labels.len()];
        for &(u, v) in &edges {
            adjacency[u as usize].push(v);
            adjacency[v as usize].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        let mut graph = Graph::from_parts(adjacency, None);
        graph.set_labels(self.labels);
        (graph, stats)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_rejects_bad_input() {
        assert!(Graph::from_edges(2, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(2, &[(0, 2)]).is_err());
        assert!(Graph::from_edges(2, &[(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn adjacency_is_symmetric_and_sorted() {
        let g = Graph::from_edges(4, &[(2, 1), (0, 3), (1, 0)]).unwrap();
        assert_eq!(g.neighbors(1), &[0, 2]);
        assert_eq!(g.neighbors(0), &[1, 3]);
        assert_eq!(g.edge_count(), 3);
        assert!(g.has_edge(3, 0));
        assert!(!g.has_edge(2, 3));
    }

    #[test]
    fn edges_are_listed_once_in_order() {
        let g = Graph::from_edges(3, &[(1, 2), (0, 2), (0, 1)]).unwrap();
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(edges, vec![(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn builder_merges_duplicates_and_drops_loops() {
        let mut b = GraphBuilder::new();
        let n1 = b.intern("1");
        let n2 = b.intern("2");
        let n3 = b.intern("3");
        b.add_arc(n1, n2);
        b.add_arc(n2, n1);
        b.add_arc(n2, n2);
        b.add_arc(n2, n3);
        let (g, stats) = b.finish();
        assert_eq!(g.node_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(stats.self_loops_dropped, 1);
        assert_eq!(stats.duplicate_arcs_merged, 1);
        assert_eq!(g.label(0), "1");
        assert_eq!(g.label(2), "3");
    }

    #[test]
    fn induced_subgraph_keeps_internal_edges_and_labels() {
        let mut b = GraphBuilder::new();
        for (u, v) in [("a", "b"), ("b", "c"), ("c", "a"), ("c", "d")] {
            let u = b.intern(u);
            let v = b.intern(v);
            b.add_arc(u, v);
        }
        let (g, _) = b.finish();
        let sub = g.induced_subgraph(&[0, 1, 2]);
        assert_eq!(sub.node_count(), 3);
        assert_eq!(sub.edge_count(), 3);
        assert_eq!(sub.label(2), "c");
    }
}

//! Unweighted shortest-path machinery shared by the statistics and metric
//! modules.

use std::collections::VecDeque;

use crate::error::Result;
use crate::exec;
use crate::graph::Graph;

pub(crate) const UNREACHED: u32 = u32::MAX;

/// Per-worker buffers for repeated BFS runs over the same graph.
pub(crate) struct BfsScratch {
    pub dist: Vec<u32>,
    queue: VecDeque<u32>,
    touched: Vec<u32>,
}

impl BfsScratch {
    pub fn new(node_count: usize) -> Self {
        BfsScratch {
            dist: vec![UNREACHED; node_count],
            queue: VecDeque::new(),
            touched: Vec::new(),
        }
    }

    /// Runs a BFS from `source`, filling `self.dist` for reached nodes and
    /// reporting each settled node to `visit(node, dist)`. Previously touched
    /// entries are reset first, so the scratch can be reused freely.
    pub fn run<F: FnMut(u32, u32)>(&mut self, g: &Graph, source: u32, mut visit: F) {
        for &v in &self.touched {
            self.dist[v as usize] = UNREACHED;
        }
        self.touched.clear();
        self.queue.clear();

        self.dist[source as usize] = 0;
        self.touched.push(source);
        self.queue.push_back(source);
        visit(source, 0);
        while let Some(u) = self.queue.pop_front() {
            let next = self.dist[u as usize] + 1;
            for &w in g.neighbors(u) {
                if self.dist[w as usize] == UNREACHED {
                    self.dist[w as usize] = next;
                    self.touched.push(w);
                    self.queue.push_back(w);
                    visit(w, next);
                }
            }
        }
    }
}

/// Shortest-path distance from `source` to every node; `None` marks nodes in
/// other components.
pub fn bfs_distances(g: &Graph, source: u32) -> Result<Vec<Option<u32>>> {
    g.check_node(source)?;
    let mut scratch = BfsScratch::new(g.node_count());
    let mut out = vec![None; g.node_count()];
    scratch.run(g, source, |v, d| out[v as usize] = Some(d));
    Ok(out)
}

/// Distance aggregates of one BFS source over the *other* reachable nodes.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub(crate) struct SourceDistances {
    /// Sum of distances to reachable nodes (source excluded).
    pub sum: u64,
    /// Maximum distance to a reachable node; 0 when nothing is reachable.
    pub max: u32,
    /// Number of other nodes reached.
    pub reached: u32,
}

/// One BFS per node, in parallel when enabled. Aggregates are integers, so
/// the result does not depend on scheduling.
pub(crate) fn per_source_distances(g: &Graph) -> Vec<SourceDistances> {
    let n = g.node_count();
    exec::map_indexed_scratch(
        n,
        || BfsScratch::new(n),
        |scratch, source| {
            let mut acc = SourceDistances::default();
            scratch.run(g, source as u32, |_, d| {
                if d > 0 {
                    acc.sum += d as u64;
                    acc.max = acc.max.max(d);
                    acc.reached += 1;
                }
            });
            acc
        },
    )
}

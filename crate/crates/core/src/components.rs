//! Connected-component utilities.

use crate::bfs::BfsScratch;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Component id per node, ids assigned in order of each component's smallest
/// node index.
pub(crate) fn component_labels(g: &Graph) -> Vec<u32> {
    let n = g.node_count();
    let mut comp = vec![u32::MAX; n];
    let mut next = 0u32;
    let mut scratch = BfsScratch::new(n);
    for start in g.nodes() {
        if comp[start as usize] != u32::MAX {
            continue;
        }
        scratch.run(g, start, |v, _| comp[v as usize] = next);
        next += 1;
    }
    comp
}

/// Induced subgraph on the largest connected component, reindexed densely
/// with node order (and labels) preserved. Ties go to the component whose
/// smallest original index is smallest.
pub fn largest_connected_component(g: &Graph) -> Result<Graph> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let comp = component_labels(g);
    let mut sizes: Vec<usize> = Vec::new();
    for &c in &comp {
        let c = c as usize;
        if c >= sizes.len() {
            sizes.resize(c + 1, 0);
        }
        sizes[c] += 1;
    }
    // Component ids are assigned in ascending order of their smallest node
    // index, so the first maximal id wins ties by that rule.
    let best = sizes
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
        .map(|(c, _)| c as u32)
        .expect("non-empty graph has at least one component");
    let members: Vec<u32> = g.nodes().filter(|&v| comp[v as usize] == best).collect();
    Ok(g.induced_subgraph(&members))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ties_break_toward_smallest_index() {
        // Two disjoint triangles plus an isolated node; first triangle wins.
        let mut b = crate::graph::GraphBuilder::new();
        let iso = b.intern("iso");
        let _ = iso;
        for (u, v) in [("a", "b"), ("b", "c"), ("c", "a")] {
            let u = b.intern(u);
            let v = b.intern(v);
            b.add_arc(u, v);
        }
        for (u, v) in [("x", "y"), ("y", "z"), ("z", "x")] {
            let u = b.intern(u);
            let v = b.intern(v);
            b.add_arc(u, v);
        }
        let (g, _) = b.finish();
        let lcc = largest_connected_component(&g).unwrap();
        assert_eq!(lcc.node_count(), 3);
        assert_eq!(lcc.edge_count(), 3);
        assert_eq!(lcc.label(0), "a");
    }

    #[test]
    fn picks_the_larger_component() {
        // P4 plus a disjoint edge.
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (4, 5)]).unwrap();
        let lcc = largest_connected_component(&g).unwrap();
        assert_eq!(lcc.node_count(), 4);
        assert_eq!(lcc.edge_count(), 3);
    }

    #[test]
    fn connected_graph_is_unchanged() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let lcc = largest_connected_component(&g).unwrap();
        assert_eq!(lcc, g);
    }

    #[test]
    fn empty_graph_is_an_error() {
        let g = Graph::from_edges(0, &[]).unwrap();
        assert!(largest_connected_component(&g).is_err());
    }

    #[test]
    fn idempotent() {
        let g = Graph::from_edges(5, &[(0, 1), (2, 3), (3, 4), (4, 2)]).unwrap();
        let once = largest_connected_component(&g).unwrap();
        let twice = largest_connected_component(&once).unwrap();
        assert_eq!(once, twice);
    }
}

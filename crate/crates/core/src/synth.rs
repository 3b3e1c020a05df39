//! Seeded random graph generators, for tests, benchmarks, and synthetic
//! experiments. Both are deterministic per seed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

/// Erdős–Rényi G(n, p): each of the C(n, 2) possible edges appears
/// independently with probability `p`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("generated edges are simple and in range")
}

/// Barabási–Albert preferential attachment: starts from a clique on
/// `m + 1` nodes, then each new node links to `m` distinct existing nodes
/// chosen proportionally to their degree. Yields the heavy-tailed degree
/// distributions typical of real social networks.
///
/// # Panics
/// Panics when `n < m + 1` or `m == 0`.
pub fn preferential_attachment(n: usize, m: usize, seed: u64) -> Graph {
    assert!(m >= 1, "each new node must attach at least one edge");
    assert!(n >= m + 1, "need at least m + 1 nodes to seed the clique");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(u32, u32)> = Vec::new();
    // One entry per edge endpoint: sampling from this list is
    // degree-proportional sampling.
    let mut endpoints: Vec<u32> = Vec::new();
    for u in 0..=m as u32 {
        for v in u + 1..=m as u32 {
            edges.push((u, v));
            endpoints.push(u);
            endpoints.push(v);
        }
    }
    let mut targets = Vec::with_capacity(m);
    for new in (m + 1) as u32..n as u32 {
        targets.clear();
        while targets.len() < m {
            let t = endpoints[rng.gen_range(0..endpoints.len())];
            if !targets.contains(&t) {
                targets.push(t);
            }
        }
        for &t in &targets {
            edges.push((t, new));
            endpoints.push(t);
            endpoints.push(new);
        }
    }
    Graph::from_edges(n, &edges).expect("generated edges are simple and in range")
}

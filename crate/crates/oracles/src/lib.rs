//! Brute-force reference implementations used to cross-check `socnet-core`.
//!
//! Everything here favors the most literal translation of each definition
//! over speed. The only thing shared with the main crate is the `Graph`
//! container itself; distances come from Floyd-Warshall instead of BFS,
//! betweenness from explicit shortest-path enumeration instead of Brandes,
//! girth from per-edge deletion instead of the per-root bound, and edge
//! strength from subset membership tests instead of sorted-list merges.
//! Intended for test graphs of at most a few dozen nodes.

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use socnet_core::Graph;

/// All-pairs shortest path lengths via Floyd-Warshall. `None` = unreachable.
pub fn apsp(g: &Graph) -> Vec<Vec<Option<u32>>> {
    let n = g.node_count();
    let mut dist = vec![vec![None; n]; n];
    for v in 0..n {
        dist[v][v] = Some(0u32);
    }
    for (u, v) in g.edges() {
        dist[u as usize][v as usize] = Some(1);
        dist[v as usize][u as usize] = Some(1);
    }
    for k in 0..n {
        for i in 0..n {
            let Some(dik) = dist[i][k] else { continue };
            for j in 0..n {
                let Some(dkj) = dist[k][j] else { continue };
                let via = dik + dkj;
                if dist[i][j].map_or(true, |d| via < d) {
                    dist[i][j] = Some(via);
                }
            }
        }
    }
    dist
}

/// Longest shortest path over reachable ordered pairs. `None` when the graph
/// has no reachable pair at all.
pub fn diameter(dist: &[Vec<Option<u32>>]) -> Option<u32> {
    let mut best = None;
    for (i, row) in dist.iter().enumerate() {
        for (j, d) in row.iter().enumerate() {
            if i != j {
                if let Some(d) = *d {
                    best = Some(best.map_or(d, |b: u32| b.max(d)));
                }
            }
        }
    }
    best
}

/// Mean shortest-path length over reachable ordered pairs.
pub fn average_path_length(dist: &[Vec<Option<u32>>]) -> Option<f64> {
    let mut sum = 0u64;
    let mut pairs = 0u64;
    for (i, row) in dist.iter().enumerate() {
        for (j, d) in row.iter().enumerate() {
            if i != j {
                if let Some(d) = *d {
                    sum += u64::from(d);
                    pairs += 1;
                }
            }
        }
    }
    (pairs > 0).then(|| sum as f64 / pairs as f64)
}

/// Reciprocal eccentricity per node: 1 / max distance to any reachable node,
/// 0.0 when nothing is reachable.
pub fn eccentricities(dist: &[Vec<Option<u32>>]) -> Vec<f64> {
    dist.iter()
        .enumerate()
        .map(|(i, row)| {
            let max = row
                .iter()
                .enumerate()
                .filter(|&(j, d)| j != i && d.is_some())
                .map(|(_, d)| d.unwrap())
                .max();
            match max {
                Some(m) => 1.0 / f64::from(m),
                None => 0.0,
            }
        })
        .collect()
}

/// Reciprocal closeness per node: 1 / sum of distances to reachable nodes,
/// 0.0 when nothing is reachable.
pub fn closenesses(dist: &[Vec<Option<u32>>]) -> Vec<f64> {
    dist.iter()
        .enumerate()
        .map(|(i, row)| {
            let mut sum = 0u64;
            let mut reached = false;
            for (j, d) in row.iter().enumerate() {
                if j != i {
                    if let Some(d) = *d {
                        sum += u64::from(d);
                        reached = true;
                    }
                }
            }
            if reached {
                1.0 / (sum as f64)
            } else {
                0.0
            }
        })
        .collect()
}

/// Shortest cycle length by edge deletion: for every edge (u, v), the
/// shortest u-v path that avoids that edge plus the edge itself closes the
/// shortest cycle through it. `None` for forests.
pub fn girth(g: &Graph) -> Option<u32> {
    let mut best: Option<u32> = None;
    for (u, v) in g.edges() {
        if let Some(d) = bfs_avoiding_edge(g, u, v) {
            let cycle = d + 1;
            if best.map_or(true, |b| cycle < b) {
                best = Some(cycle);
            }
        }
    }
    best
}

fn bfs_avoiding_edge(g: &Graph, source: u32, target: u32) -> Option<u32> {
    let n = g.node_count();
    let mut dist = vec![None; n];
    dist[source as usize] = Some(0u32);
    let mut queue = std::collections::VecDeque::from([source]);
    while let Some(x) = queue.pop_front() {
        let dx = dist[x as usize].unwrap();
        for &y in g.neighbors(x) {
            let skip = (x == source && y == target) || (x == target && y == source);
            if skip || dist[y as usize].is_some() {
                continue;
            }
            dist[y as usize] = Some(dx + 1);
            queue.push_back(y);
        }
    }
    dist[target as usize]
}

/// Local clustering per node by testing every neighbor pair for adjacency.
pub fn local_clustering(g: &Graph) -> Vec<f64> {
    (0..g.node_count() as u32)
        .map(|v| {
            let nb = g.neighbors(v);
            let k = nb.len();
            if k < 2 {
                return 0.0;
            }
            let mut links = 0u64;
            for i in 0..k {
                for j in i + 1..k {
                    if g.neighbors(nb[i]).contains(&nb[j]) {
                        links += 1;
                    }
                }
            }
            links as f64 / ((k * (k - 1) / 2) as f64)
        })
        .collect()
}

/// Edge strength by explicit set membership and pair enumeration.
///
/// gamma3 counts common neighbors (triangles through the edge). gamma4
/// counts node pairs {x, y} outside {u, v} that close a quadrilateral
/// through the edge: x-y adjacent and (u-x, v-y) or (u-y, v-x) present.
/// gamma_max is the count both could reach given the neighborhood sizes.
pub fn edge_strength(g: &Graph, u: u32, v: u32) -> f64 {
    let n = g.node_count() as u32;
    let adj = |a: u32, b: u32| g.neighbors(a).contains(&b);
    let mut w = 0u64;
    let mut mu = 0u64;
    let mut mv = 0u64;
    for x in 0..n {
        if x == u || x == v {
            continue;
        }
        match (adj(u, x), adj(v, x)) {
            (true, true) => w += 1,
            (true, false) => mu += 1,
            (false, true) => mv += 1,
            (false, false) => {}
        }
    }
    let gamma3 = w;
    let mut gamma4 = 0u64;
    for x in 0..n {
        for y in x + 1..n {
            if x == u || x == v || y == u || y == v || !adj(x, y) {
                continue;
            }
            if (adj(u, x) && adj(v, y)) || (adj(u, y) && adj(v, x)) {
                gamma4 += 1;
            }
        }
    }
    let gamma_max = w + mu * mv + w * mu + w * mv + w * w.saturating_sub(1) / 2;
    if gamma_max == 0 {
        0.0
    } else {
        (gamma3 + gamma4) as f64 / gamma_max as f64
    }
}

/// Raw betweenness (unordered pairs) as exact rationals, via explicit
/// enumeration of every shortest path.
pub fn betweenness(g: &Graph) -> Vec<Ratio<i128>> {
    let n = g.node_count();
    let dist = apsp(g);
    let mut bc = vec![Ratio::new(0i128, 1i128); n];
    for s in 0..n as u32 {
        for t in s + 1..n as u32 {
            let Some(d_st) = dist[s as usize][t as usize] else {
                continue;
            };
            if d_st == 0 {
                continue;
            }
            let mut sigma = 0i128;
            let mut through = vec![0i128; n];
            let mut path = vec![s];
            enumerate_paths(g, &dist, s, t, d_st, &mut path, &mut sigma, &mut through);
            debug_assert!(sigma > 0);
            for v in 0..n {
                if through[v] > 0 {
                    bc[v] += Ratio::new(through[v], sigma);
                }
            }
        }
    }
    bc
}

/// Walks the shortest-path DAG from the tip of `path` toward `t`, counting
/// complete paths and, for every interior node, how many pass through it.
fn enumerate_paths(
    g: &Graph,
    dist: &[Vec<Option<u32>>],
    s: u32,
    t: u32,
    d_st: u32,
    path: &mut Vec<u32>,
    sigma: &mut i128,
    through: &mut [i128],
) {
    let x = *path.last().unwrap();
    if x == t {
        *sigma += 1;
        for &v in &path[1..path.len() - 1] {
            through[v as usize] += 1;
        }
        return;
    }
    let dx = dist[s as usize][x as usize].unwrap();
    for &y in g.neighbors(x) {
        let on_dag = dist[s as usize][y as usize] == Some(dx + 1)
            && dist[y as usize][t as usize].map_or(false, |dyt| dx + 1 + dyt == d_st);
        if on_dag {
            path.push(y);
            enumerate_paths(g, dist, s, t, d_st, path, sigma, through);
            path.pop();
        }
    }
}

/// G(n, p) graph from a seeded generator, for feeding the oracle checks.
/// `edge_prob` is in percent to keep call sites readable.
pub fn random_graph(n: u32, edge_prob_pct: u32, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = f64::from(edge_prob_pct) / 100.0;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n as usize, &edges).expect("generated edges are in range")
}

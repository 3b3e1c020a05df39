//! Node, link, and snowball sampling, plus the repeated-sampling driver.
//!
//! Every sampler is a deterministic function of `(graph, config)`: all
//! randomness comes from a ChaCha stream seeded with `rng_seed`, so the same
//! seed reproduces the same sample bytes on any platform and thread count.
//!
//! Sample graphs always carry labels naming their source nodes (the source's
//! own labels, or original indices when it has none), so sampled nodes and
//! edges can be traced back to the input.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SamplingMethod {
    Node,
    Link,
    Snowball,
}

impl SamplingMethod {
    pub fn name(self) -> &'static str {
        match self {
            SamplingMethod::Node => "node",
            SamplingMethod::Link => "link",
            SamplingMethod::Snowball => "snowball",
        }
    }
}

impl std::fmt::Display for SamplingMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for SamplingMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "node" => Ok(SamplingMethod::Node),
            "link" => Ok(SamplingMethod::Link),
            "snowball" => Ok(SamplingMethod::Snowball),
            other => Err(Error::InvalidArgument(format!(
                "unknown sampling method {other:?}; valid methods: node, link, snowball"
            ))),
        }
    }
}

/// What to do when the node or edge supply runs out before `target_size`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ExhaustionPolicy {
    /// Fail the sample.
    #[default]
    Error,
    /// Keep going where possible (snowball restarts from a fresh uniform
    /// seed node); when nothing is left to add, return the partial sample.
    /// Either way the event is recorded on the sample.
    Reseed,
}

impl std::str::FromStr for ExhaustionPolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "error" => Ok(ExhaustionPolicy::Error),
            "reseed" => Ok(ExhaustionPolicy::Reseed),
            other => Err(Error::InvalidArgument(format!(
                "unknown exhaustion policy {other:?}; valid policies: error, reseed"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SamplerConfig {
    pub method: SamplingMethod,
    /// Requested sample size in nodes. Link sampling may legitimately stop
    /// one node short (its stop rule adds whole edges).
    pub target_size: usize,
    pub rng_seed: u64,
    pub on_exhaustion: ExhaustionPolicy,
}

/// Record of one supply-exhaustion during sampling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExhaustionEvent {
    /// Nodes collected when the supply ran out.
    pub collected: usize,
    /// Source-graph node where sampling resumed; `None` when nothing was
    /// left and the partial sample was returned.
    pub reseeded_at: Option<u32>,
}

/// One sample: the subgraph, the seed that produced it, and any exhaustion
/// events hit along the way.
#[derive(Debug, Clone)]
pub struct DrawnSample {
    pub graph: Graph,
    pub seed: u64,
    pub exhaustion: Vec<ExhaustionEvent>,
}

/// The outcome of [`run_repeated`]: `count` samples drawn with seeds
/// `rng_seed, rng_seed+1, ...`.
#[derive(Debug, Clone)]
pub struct SampleRun {
    pub source_node_count: usize,
    pub source_edge_count: usize,
    pub config: SamplerConfig,
    pub samples: Vec<DrawnSample>,
}

impl SampleRun {
    pub fn sample_count(&self) -> usize {
        self.samples.len()
    }
}

fn check_target(cfg: &SamplerConfig) -> Result<()> {
    if cfg.target_size == 0 {
        return Err(Error::InvalidArgument("target_size must be at least 1".into()));
    }
    Ok(())
}

/// Labels every sample node after its source node.
fn carry_labels(mut sample: Graph, source: &Graph, original: &[u32]) -> Graph {
    let labels = original.iter().map(|&v| source.label(v)).collect();
    sample.set_labels(labels);
    sample
}

fn exhausted(
    collected: usize,
    cfg: &SamplerConfig,
    events: &mut Vec<ExhaustionEvent>,
    reseeded_at: Option<u32>,
) -> Result<()> {
    match cfg.on_exhaustion {
        ExhaustionPolicy::Error => Err(Error::Exhausted {
            collected,
            target: cfg.target_size,
        }),
        ExhaustionPolicy::Reseed => {
            events.push(ExhaustionEvent {
                collected,
                reseeded_at,
            });
            Ok(())
        }
    }
}

/// Induced subgraph on `target_size` nodes drawn uniformly without
/// replacement.
pub fn node_sample(g: &Graph, cfg: &SamplerConfig) -> Result<DrawnSample> {
    check_target(cfg)?;
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let n = g.node_count();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.rng_seed);
    let mut events = Vec::new();
    let take = cfg.target_size.min(n);
    if take < cfg.target_size {
        exhausted(n, cfg, &mut events, None)?;
    }
    // Partial Fisher-Yates: the first `take` positions become the draw.
    let mut pool: Vec<u32> = g.nodes().collect();
    for i in 0..take {
        let j = rng.gen_range(i..n);
        pool.swap(i, j);
    }
    let mut chosen = pool[..take].to_vec();
    chosen.sort_unstable();
    let graph = carry_labels(g.induced_subgraph(&chosen), g, &chosen);
    Ok(DrawnSample {
        graph,
        seed: cfg.rng_seed,
        exhaustion: events,
    })
}

/// Draws edges uniformly without replacement, keeping each drawn edge and
/// both endpoints, and stops at the first draw that would push the node
/// count past `target_size` — so the result has `target_size` or
/// `target_size - 1` nodes. The sample contains only drawn edges, not the
/// induced edge set.
pub fn link_sample(g: &Graph, cfg: &SamplerConfig) -> Result<DrawnSample> {
    check_target(cfg)?;
    if g.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.rng_seed);
    let mut deck: Vec<(u32, u32)> = g.edges().collect();
    deck.shuffle(&mut rng);

    let mut in_sample = vec![false; g.node_count()];
    let mut node_count = 0usize;
    let mut drawn = Vec::new();
    let mut stopped_by_rule = false;
    for &(u, v) in &deck {
        let new = usize::from(!in_sample[u as usize]) + usize::from(!in_sample[v as usize]);
        if node_count + new > cfg.target_size {
            stopped_by_rule = true;
            break;
        }
        in_sample[u as usize] = true;
        in_sample[v as usize] = true;
        node_count += new;
        drawn.push((u, v));
    }
    let mut events = Vec::new();
    if !stopped_by_rule && node_count + 1 < cfg.target_size {
        exhausted(node_count, cfg, &mut events, None)?;
    }

    let nodes: Vec<u32> = g.nodes().filter(|&v| in_sample[v as usize]).collect();
    let mut local = vec![u32::MAX; g.node_count()];
    for (i, &v) in nodes.iter().enumerate() {
        local[v as usize] = i as u32;
    }
    let local_edges: Vec<(u32, u32)> = drawn
        .iter()
        .map(|&(u, v)| (local[u as usize], local[v as usize]))
        .collect();
    let graph = Graph::from_edges(nodes.len(), &local_edges)?;
    Ok(DrawnSample {
        graph: carry_labels(graph, g, &nodes),
        seed: cfg.rng_seed,
        exhaustion: events,
    })
}

/// Snowball sample from a uniformly chosen seed node (the first draw of the
/// RNG stream). See [`snowball_from`] for the expansion rules.
pub fn snowball_sample(g: &Graph, cfg: &SamplerConfig) -> Result<DrawnSample> {
    check_target(cfg)?;
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.rng_seed);
    let seed_node = rng.gen_range(0..g.node_count() as u32);
    snowball_inner(g, seed_node, cfg, &mut rng)
}

/// Snowball sample expanded from a caller-chosen seed node.
///
/// BFS proceeds level by level; each level is shuffled uniformly before
/// collection so truncation at the size budget carries no adjacency-order
/// bias. Collection stops at exactly `target_size` nodes; the induced
/// subgraph on the collected set is returned. If the component runs out
/// first, the exhaustion policy decides: error, or reseed at a uniformly
/// chosen uncollected node.
pub fn snowball_from(g: &Graph, seed_node: u32, cfg: &SamplerConfig) -> Result<DrawnSample> {
    check_target(cfg)?;
    g.check_node(seed_node)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.rng_seed);
    snowball_inner(g, seed_node, cfg, &mut rng)
}

fn snowball_inner(
    g: &Graph,
    first_seed: u32,
    cfg: &SamplerConfig,
    rng: &mut ChaCha8Rng,
) -> Result<DrawnSample> {
    let n = g.node_count();
    let target = cfg.target_size;
    let mut collected: Vec<u32> = Vec::with_capacity(target.min(n));
    let mut in_sample = vec![false; n];
    let mut queued = vec![false; n];
    let mut events = Vec::new();
    let mut seed = first_seed;
    loop {
        in_sample[seed as usize] = true;
        queued[seed as usize] = true;
        collected.push(seed);
        let mut current = vec![seed];
        while collected.len() < target && !current.is_empty() {
            let mut next = Vec::new();
            for &u in &current {
                for &w in g.neighbors(u) {
                    if !queued[w as usize] {
                        queued[w as usize] = true;
                        next.push(w);
                    }
                }
            }
            next.shuffle(rng);
            let room = target - collected.len();
            if next.len() > room {
                // Nodes cut off by the budget stay eligible for later runs.
                for &w in &next[room..] {
                    queued[w as usize] = false;
                }
                next.truncate(room);
            }
            for &w in &next {
                in_sample[w as usize] = true;
                collected.push(w);
            }
            current = next;
        }
        if collected.len() >= target {
            break;
        }
        // Component exhausted below target.
        let remaining = n - collected.len();
        if remaining == 0 {
            exhausted(collected.len(), cfg, &mut events, None)?;
            break;
        }
        match cfg.on_exhaustion {
            ExhaustionPolicy::Error => {
                return Err(Error::Exhausted {
                    collected: collected.len(),
                    target,
                })
            }
            ExhaustionPolicy::Reseed => {
                let k = rng.gen_range(0..remaining);
                let new_seed = g
                    .nodes()
                    .filter(|&v| !in_sample[v as usize])
                    .nth(k)
                    .expect("remaining count matches uncollected nodes");
                events.push(ExhaustionEvent {
                    collected: collected.len(),
                    reseeded_at: Some(new_seed),
                });
                seed = new_seed;
            }
        }
    }
    let graph = carry_labels(g.induced_subgraph(&collected), g, &collected);
    Ok(DrawnSample {
        graph,
        seed: cfg.rng_seed,
        exhaustion: events,
    })
}

/// Dispatches on `cfg.method`.
pub fn draw_sample(g: &Graph, cfg: &SamplerConfig) -> Result<DrawnSample> {
    match cfg.method {
        SamplingMethod::Node => node_sample(g, cfg),
        SamplingMethod::Link => link_sample(g, cfg),
        SamplingMethod::Snowball => snowball_sample(g, cfg),
    }
}

/// Draws `count` samples with seeds `rng_seed + i` (wrapping), in parallel
/// when enabled but always ordered and reported by sample index.
pub fn run_repeated(g: &Graph, cfg: &SamplerConfig, count: usize) -> Result<SampleRun> {
    if count == 0 {
        return Err(Error::InvalidArgument("sample count must be at least 1".into()));
    }
    let results = exec::map_batches(count, |i| {
        let sub = SamplerConfig {
            rng_seed: cfg.rng_seed.wrapping_add(i as u64),
            ..cfg.clone()
        };
        draw_sample(g, &sub)
    });
    let mut samples = Vec::with_capacity(count);
    for (index, result) in results.into_iter().enumerate() {
        match result {
            Ok(s) => samples.push(s),
            Err(e) => return Err(Error::in_sample(index, e)),
        }
    }
    Ok(SampleRun {
        source_node_count: g.node_count(),
        source_edge_count: g.edge_count(),
        config: cfg.clone(),
        samples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(method: SamplingMethod, target_size: usize, rng_seed: u64) -> SamplerConfig {
        SamplerConfig {
            method,
            target_size,
            rng_seed,
            on_exhaustion: ExhaustionPolicy::Error,
        }
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

    fn path(n: u32) -> Graph {
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n as usize, &edges).unwrap()
    }

    fn edge_set(g: &Graph) -> Vec<(String, String)> {
        g.edges().map(|(u, v)| (g.label(u), g.label(v))).collect()
    }

    #[test]
    fn node_sample_of_clique_is_clique() {
        for seed in 0..5 {
            let s = node_sample(&complete(5), &cfg(SamplingMethod::Node, 3, seed)).unwrap();
            assert_eq!(s.graph.node_count(), 3);
            assert_eq!(s.graph.edge_count(), 3);
            assert!(s.exhaustion.is_empty());
        }
    }

    #[test]
    fn node_sample_full_size_is_identity() {
        let g = path(4);
        let s = node_sample(&g, &cfg(SamplingMethod::Node, 4, 9)).unwrap();
        assert_eq!(s.graph.node_count(), 4);
        assert_eq!(edge_set(&s.graph), edge_set(&g));
    }

    #[test]
    fn node_sample_is_induced() {
        // In P4, sampling {0, 1, 3} must keep edge 0-1 and nothing else.
        let g = path(4);
        for seed in 0..20 {
            let s = node_sample(&g, &cfg(SamplingMethod::Node, 3, seed)).unwrap();
            for (u, v) in s.graph.edges() {
                let (lu, lv) = (s.graph.label(u), s.graph.label(v));
                let (a, b): (u32, u32) = (lu.parse().unwrap(), lv.parse().unwrap());
                assert!(g.has_edge(a, b));
            }
        }
    }

    #[test]
    fn node_sample_oversize() {
        let g = path(3);
        let err = node_sample(&g, &cfg(SamplingMethod::Node, 5, 1)).unwrap_err();
        assert!(matches!(err, Error::Exhausted { collected: 3, target: 5 }));
        let mut relaxed = cfg(SamplingMethod::Node, 5, 1);
        relaxed.on_exhaustion = ExhaustionPolicy::Reseed;
        let s = node_sample(&g, &relaxed).unwrap();
        assert_eq!(s.graph.node_count(), 3);
        assert_eq!(s.exhaustion, vec![ExhaustionEvent { collected: 3, reseeded_at: None }]);
    }

    #[test]
    fn samplers_are_deterministic() {
        let g = complete(8);
        for method in [SamplingMethod::Node, SamplingMethod::Link, SamplingMethod::Snowball] {
            let c = cfg(method, 5, 1234);
            let a = draw_sample(&g, &c).unwrap();
            let b = draw_sample(&g, &c).unwrap();
            assert_eq!(edge_set(&a.graph), edge_set(&b.graph), "{method}");
            assert_eq!(a.graph.labels(), b.graph.labels(), "{method}");
        }
    }

    #[test]
    fn link_sample_draws_single_edges() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let s = link_sample(&g, &cfg(SamplingMethod::Link, 2, 7)).unwrap();
        assert_eq!(s.graph.node_count(), 2);
        assert_eq!(s.graph.edge_count(), 1);

        let tri = complete(3);
        let s = link_sample(&tri, &cfg(SamplingMethod::Link, 2, 7)).unwrap();
        assert_eq!(s.graph.node_count(), 2);
        assert_eq!(s.graph.edge_count(), 1);
    }

    #[test]
    fn link_sample_stop_rule_and_edge_subset() {
        let g = complete(4);
        for seed in 0..20 {
            let s = link_sample(&g, &cfg(SamplingMethod::Link, 3, seed)).unwrap();
            let n = s.graph.node_count();
            assert!(n == 2 || n == 3, "stop rule allows target or target-1, got {n}");
            assert!(s.graph.nodes().all(|v| s.graph.degree(v) > 0));
            for (u, v) in s.graph.edges() {
                let (a, b): (u32, u32) = (
                    s.graph.label(u).parse().unwrap(),
                    s.graph.label(v).parse().unwrap(),
                );
                assert!(g.has_edge(a, b));
            }
        }
    }

    #[test]
    fn link_sample_is_not_induced() {
        // Star edges all share the hub, so a size-3 sample always has
        // exactly 2 of the star's edges; the third induced edge never
        // exists in the source.
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let s = link_sample(&star, &cfg(SamplingMethod::Link, 3, 3)).unwrap();
        assert_eq!(s.graph.node_count(), 3);
        assert_eq!(s.graph.edge_count(), 2);
    }

    #[test]
    fn link_sample_exhaustion() {
        let g = path(3);
        let err = link_sample(&g, &cfg(SamplingMethod::Link, 5, 1)).unwrap_err();
        assert!(matches!(err, Error::Exhausted { collected: 3, target: 5 }));
        // target-1 via exhaustion is still within tolerance: no event.
        let ok = link_sample(&g, &cfg(SamplingMethod::Link, 4, 1)).unwrap();
        assert_eq!(ok.graph.node_count(), 3);
        assert!(ok.exhaustion.is_empty());
        let mut relaxed = cfg(SamplingMethod::Link, 5, 1);
        relaxed.on_exhaustion = ExhaustionPolicy::Reseed;
        let s = link_sample(&g, &relaxed).unwrap();
        assert_eq!(s.graph.node_count(), 3);
        assert_eq!(s.exhaustion.len(), 1);
    }

    #[test]
    fn snowball_from_path_endpoint() {
        let g = path(5);
        let s = snowball_from(&g, 0, &cfg(SamplingMethod::Snowball, 3, 42)).unwrap();
        let mut labels: Vec<String> = (0..3).map(|v| s.graph.label(v)).collect();
        labels.sort();
        assert_eq!(labels, vec!["0", "1", "2"]);
        assert_eq!(s.graph.edge_count(), 2);
    }

    #[test]
    fn snowball_truncates_levels() {
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let s = snowball_from(&star, 0, &cfg(SamplingMethod::Snowball, 3, 11)).unwrap();
        assert_eq!(s.graph.node_count(), 3);
        assert_eq!(s.graph.edge_count(), 2); // hub plus two leaves
        assert_eq!(s.graph.label(0), "0");
    }

    #[test]
    fn snowball_is_induced() {
        let s = snowball_from(&complete(5), 0, &cfg(SamplingMethod::Snowball, 3, 5)).unwrap();
        assert_eq!(s.graph.edge_count(), 3);
    }

    #[test]
    fn snowball_full_component() {
        let g = path(4);
        let s = snowball_sample(&g, &cfg(SamplingMethod::Snowball, 4, 0)).unwrap();
        assert_eq!(s.graph.node_count(), 4);
        assert_eq!(s.graph.edge_count(), 3);
    }

    #[test]
    fn snowball_exhaustion_policies() {
        let two_triangles =
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        let c = cfg(SamplingMethod::Snowball, 5, 77);
        let err = snowball_from(&two_triangles, 0, &c).unwrap_err();
        assert!(matches!(err, Error::Exhausted { collected: 3, target: 5 }));

        let mut relaxed = c.clone();
        relaxed.on_exhaustion = ExhaustionPolicy::Reseed;
        let s = snowball_from(&two_triangles, 0, &relaxed).unwrap();
        assert_eq!(s.graph.node_count(), 5);
        assert_eq!(s.exhaustion.len(), 1);
        assert_eq!(s.exhaustion[0].collected, 3);
        let reseed = s.exhaustion[0].reseeded_at.unwrap();
        assert!(reseed >= 3, "reseed node must come from the other triangle");
    }

    #[test]
    fn run_repeated_derives_seeds() {
        let g = complete(8);
        let base = cfg(SamplingMethod::Snowball, 4, 100);
        let run = run_repeated(&g, &base, 5).unwrap();
        assert_eq!(run.sample_count(), 5);
        assert_eq!(run.source_node_count, 8);
        for (i, sample) in run.samples.iter().enumerate() {
            assert_eq!(sample.seed, 100 + i as u64);
            let lone = draw_sample(&g, &SamplerConfig { rng_seed: 100 + i as u64, ..base.clone() })
                .unwrap();
            assert_eq!(edge_set(&sample.graph), edge_set(&lone.graph));
        }
        let again = run_repeated(&g, &base, 5).unwrap();
        for (a, b) in run.samples.iter().zip(&again.samples) {
            assert_eq!(edge_set(&a.graph), edge_set(&b.graph));
        }
    }

    #[test]
    fn run_repeated_reports_failing_sample_index() {
        let g = path(3);
        let err = run_repeated(&g, &cfg(SamplingMethod::Node, 10, 1), 3).unwrap_err();
        match err {
            Error::InSample { index, source } => {
                assert_eq!(index, 0);
                assert!(matches!(*source, Error::Exhausted { .. }));
            }
            other => panic!("unexpected error {other:?}"),
        }
        assert!(matches!(
            run_repeated(&g, &cfg(SamplingMethod::Node, 2, 1), 0),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn samples_carry_source_labels() {
        let mut b = crate::graph::GraphBuilder::new();
        let u = b.intern("alice");
        let v = b.intern("bob");
        let w = b.intern("carol");
        b.add_arc(u, v);
        b.add_arc(v, w);
        let (g, _) = b.finish();
        let s = node_sample(&g, &cfg(SamplingMethod::Node, 2, 3)).unwrap();
        let labels = s.graph.labels().unwrap();
        assert!(labels.iter().all(|l| ["alice", "bob", "carol"].contains(&l.as_str())));
    }

    #[test]
    fn zero_target_is_rejected() {
        let g = path(3);
        for method in [SamplingMethod::Node, SamplingMethod::Link, SamplingMethod::Snowball] {
            assert!(matches!(
                draw_sample(&g, &cfg(method, 0, 1)),
                Err(Error::InvalidArgument(_))
            ));
        }
    }
}

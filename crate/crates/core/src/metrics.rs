//! Per-node metrics: degree, local clustering, strength, betweenness,
//! eccentricity, and closeness.
//!
//! Eccentricity and closeness follow the reciprocal definitions
//! `ecc(v) = 1/max d(v,u)` and `clo(v) = 1/sum d(v,u)`, so larger means more
//! central for every metric here and raw values already live in `[0, 1]`.
//! Distance aggregates run over reachable nodes only; isolated nodes get 0.

use std::collections::VecDeque;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::bfs::{per_source_distances, UNREACHED};
use crate::error::{Error, Result};
use crate::exec;
use crate::graph::Graph;
use crate::stats::{local_clustering_values, sorted_intersection_count};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Metric {
    Degree,
    LocalCc,
    Strength,
    Betweenness,
    Eccentricity,
    Closeness,
}

impl Metric {
    pub const ALL: [Metric; 6] = [
        Metric::Degree,
        Metric::LocalCc,
        Metric::Strength,
        Metric::Betweenness,
        Metric::Eccentricity,
        Metric::Closeness,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Metric::Degree => "degree",
            Metric::LocalCc => "local-cc",
            Metric::Strength => "strength",
            Metric::Betweenness => "betweenness",
            Metric::Eccentricity => "eccentricity",
            Metric::Closeness => "closeness",
        }
    }
}

impl std::fmt::Display for Metric {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Metric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Metric::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| {
                let valid: Vec<_> = Metric::ALL.iter().map(|m| m.name()).collect();
                Error::InvalidArgument(format!(
                    "unknown metric {s:?}; valid metrics: {}",
                    valid.join(", ")
                ))
            })
    }
}

/// One value per node of the source graph, tagged with what it measures and
/// whether [`normalize_01`] has been applied.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MetricVector {
    pub metric: Metric,
    pub values: Vec<f64>,
    pub normalized: bool,
}

impl MetricVector {
    fn raw(metric: Metric, values: Vec<f64>) -> Self {
        MetricVector {
            metric,
            values,
            normalized: false,
        }
    }
}

pub fn degree_vector(g: &Graph) -> MetricVector {
    MetricVector::raw(
        Metric::Degree,
        g.nodes().map(|v| g.degree(v) as f64).collect(),
    )
}

/// `cc(n) = 2 e_n / (k_n (k_n - 1))` with `e_n` the number of edges among
/// the neighbors of `n`; 0 for nodes of degree < 2.
pub fn local_clustering_vector(g: &Graph) -> MetricVector {
    MetricVector::raw(Metric::LocalCc, local_clustering_values(g))
}

pub fn eccentricity_vector(g: &Graph) -> MetricVector {
    let values = per_source_distances(g)
        .iter()
        .map(|s| if s.reached == 0 { 0.0 } else { 1.0 / s.max as f64 })
        .collect();
    MetricVector::raw(Metric::Eccentricity, values)
}

pub fn closeness_vector(g: &Graph) -> MetricVector {
    let values = per_source_distances(g)
        .iter()
        .map(|s| if s.reached == 0 { 0.0 } else { 1.0 / s.sum as f64 })
        .collect();
    MetricVector::raw(Metric::Closeness, values)
}

/// Strength of the edge `{u, v}`: cycles of length 3 or 4 through the edge,
/// over the maximum possible given the neighborhoods.
///
/// With `W = N(u) ∩ N(v)`, `Mu = N(u) \ (N(v) ∪ {v})`, `Mv = N(v) \ (N(u) ∪ {u})`:
///
/// * `γ3 = |W|` (triangles),
/// * `γ4 = edges(Mu, Mv) + edges(W, Mu) + edges(W, Mv) + edges within W`
///   (each such edge closes exactly one 4-cycle through `{u, v}`),
/// * `γmax = |W| + |Mu||Mv| + |W||Mu| + |W||Mv| + C(|W|, 2)`,
///
/// and the strength is `(γ3 + γ4) / γmax`, or 0 when `γmax = 0` (pendant
/// edges have no room for any cycle).
pub fn edge_strength(g: &Graph, u: u32, v: u32) -> Result<f64> {
    g.check_node(u)?;
    g.check_node(v)?;
    if !g.has_edge(u, v) {
        return Err(Error::EdgeNotFound { u, v });
    }
    Ok(edge_strength_unchecked(g, u, v))
}

fn edge_strength_unchecked(g: &Graph, u: u32, v: u32) -> f64 {
    let nu = g.neighbors(u);
    let nv = g.neighbors(v);
    let mut common = Vec::new();
    let mut side_u = Vec::new();
    let mut side_v = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < nu.len() || j < nv.len() {
        match (nu.get(i), nv.get(j)) {
            (Some(&a), Some(&b)) if a == b => {
                common.push(a);
                i += 1;
                j += 1;
            }
            (Some(&a), Some(&b)) if a < b => {
                if a != v {
                    side_u.push(a);
                }
                i += 1;
            }
            (Some(_), Some(&b)) => {
                if b != u {
                    side_v.push(b);
                }
                j += 1;
            }
            (Some(&a), None) => {
                if a != v {
                    side_u.push(a);
                }
                i += 1;
            }
            (None, Some(&b)) => {
                if b != u {
                    side_v.push(b);
                }
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    let w = common.len() as u64;
    let mu = side_u.len() as u64;
    let mv = side_v.len() as u64;
    let gamma_max = w + mu * mv + w * mu + w * mv + w * w.saturating_sub(1) / 2;
    if gamma_max == 0 {
        return 0.0;
    }
    let gamma3 = w;
    let gamma4 = edges_between(g, &side_u, &side_v)
        + edges_between(g, &common, &side_u)
        + edges_between(g, &common, &side_v)
        + edges_within(g, &common);
    (gamma3 + gamma4) as f64 / gamma_max as f64
}

/// Edge count between two disjoint sorted node sets.
fn edges_between(g: &Graph, a: &[u32], b: &[u32]) -> u64 {
    a.iter()
        .map(|&x| sorted_intersection_count(g.neighbors(x), b))
        .sum()
}

/// Edge count inside one sorted node set.
fn edges_within(g: &Graph, a: &[u32]) -> u64 {
    a.iter()
        .map(|&x| sorted_intersection_count(g.neighbors(x), a))
        .sum::<u64>()
        / 2
}

/// Strength of every edge, in [`Graph::edges`] order.
pub fn edge_strengths(g: &Graph) -> Vec<(u32, u32, f64)> {
    let edge_list: Vec<(u32, u32)> = g.edges().collect();
    let strengths = exec::map_indexed(edge_list.len(), |i| {
        let (u, v) = edge_list[i];
        edge_strength_unchecked(g, u, v)
    });
    edge_list
        .into_iter()
        .zip(strengths)
        .map(|((u, v), s)| (u, v, s))
        .collect()
}

/// `str(v)`: mean strength of the edges at `v`; 0 for isolated nodes.
pub fn strength_vector(g: &Graph) -> MetricVector {
    let mut sums = vec![0.0f64; g.node_count()];
    for (u, v, s) in edge_strengths(g) {
        sums[u as usize] += s;
        sums[v as usize] += s;
    }
    let values = g
        .nodes()
        .map(|v| {
            let d = g.degree(v);
            if d == 0 {
                0.0
            } else {
                sums[v as usize] / d as f64
            }
        })
        .collect();
    MetricVector::raw(Metric::Strength, values)
}

/// Numeric field for Brandes' algorithm, so the same accumulation runs in
/// fast floating point or exact rationals.
pub(crate) trait Count: Clone + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn div(&self, rhs: &Self) -> Self;
    fn halve(&self) -> Self;
}

impl Count for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn halve(&self) -> Self {
        self * 0.5
    }
}

impl Count for Ratio<i128> {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn halve(&self) -> Self {
        self / Ratio::from_integer(2)
    }
}

struct BrandesScratch<N> {
    dist: Vec<u32>,
    sigma: Vec<N>,
    delta: Vec<N>,
    order: Vec<u32>,
    queue: VecDeque<u32>,
}

impl<N: Count> BrandesScratch<N> {
    fn new(n: usize) -> Self {
        BrandesScratch {
            dist: vec![UNREACHED; n],
            sigma: vec![N::zero(); n],
            delta: vec![N::zero(); n],
            order: Vec::new(),
            queue: VecDeque::new(),
        }
    }
}

/// One source of Brandes' algorithm: count shortest paths outward, then
/// accumulate pair dependencies in reverse settle order. Predecessors are
/// re-derived from distances instead of stored.
fn brandes_source<N: Count>(g: &Graph, s: u32, sc: &mut BrandesScratch<N>, acc: &mut [N]) {
    for &v in &sc.order {
        sc.dist[v as usize] = UNREACHED;
        sc.sigma[v as usize] = N::zero();
        sc.delta[v as usize] = N::zero();
    }
    sc.order.clear();
    sc.queue.clear();
    sc.dist[s as usize] = 0;
    sc.sigma[s as usize] = N::one();
    sc.order.push(s);
    sc.queue.push_back(s);
    while let Some(u) = sc.queue.pop_front() {
        let next = sc.dist[u as usize] + 1;
        for &w in g.neighbors(u) {
            if sc.dist[w as usize] == UNREACHED {
                sc.dist[w as usize] = next;
                sc.order.push(w);
                sc.queue.push_back(w);
            }
            if sc.dist[w as usize] == next {
                sc.sigma[w as usize] = sc.sigma[w as usize].add(&sc.sigma[u as usize]);
            }
        }
    }
    for &w in sc.order.iter().rev() {
        if w == s {
            continue;
        }
        let dw = sc.dist[w as usize];
        let coeff = N::one().add(&sc.delta[w as usize]).div(&sc.sigma[w as usize]);
        for &u in g.neighbors(w) {
            // Neighbors of a settled node are always settled, so dist is
            // finite here.
            if sc.dist[u as usize] + 1 == dw {
                sc.delta[u as usize] = sc.delta[u as usize].add(&sc.sigma[u as usize].mul(&coeff));
            }
        }
        acc[w as usize] = acc[w as usize].add(&sc.delta[w as usize]);
    }
}

/// Sources are processed in fixed chunks and chunk results are folded in
/// chunk order, so floating-point sums come out identical with any number of
/// worker threads (or none).
const SOURCE_CHUNK: usize = 64;
/// Chunks in flight per wave; bounds the memory for partial accumulators.
const WAVE_CHUNKS: usize = 32;

fn brandes_raw<N: Count>(g: &Graph) -> Vec<N> {
    let n = g.node_count();
    let mut bc = vec![N::zero(); n];
    if n < 3 {
        return bc;
    }
    let chunk_count = n.div_ceil(SOURCE_CHUNK);
    let mut next_chunk = 0;
    while next_chunk < chunk_count {
        let wave = WAVE_CHUNKS.min(chunk_count - next_chunk);
        let partials = exec::map_batches_scratch(
            wave,
            || BrandesScratch::new(n),
            |sc, i| {
                let lo = (next_chunk + i) * SOURCE_CHUNK;
                let hi = n.min(lo + SOURCE_CHUNK);
                let mut acc = vec![N::zero(); n];
                for source in lo..hi {
                    brandes_source(g, source as u32, sc, &mut acc);
                }
                acc
            },
        );
        for partial in partials {
            for (b, p) in bc.iter_mut().zip(&partial) {
                *b = b.add(p);
            }
        }
        next_chunk += wave;
    }
    // Each unordered pair was seen from both endpoints.
    for b in &mut bc {
        *b = b.halve();
    }
    bc
}

/// `bc(v)`: over unordered pairs `{u, w}` avoiding `v`, the fraction of
/// shortest `u`–`w` paths through `v`. Pairs with no path contribute 0.
/// When `normalized`, divided by `(n-1)(n-2)/2`.
pub fn betweenness_vector(g: &Graph, normalized: bool) -> MetricVector {
    let mut values = brandes_raw::<f64>(g);
    if normalized {
        let n = g.node_count() as f64;
        let divisor = (n - 1.0) * (n - 2.0) / 2.0;
        if divisor > 0.0 {
            for v in &mut values {
                *v /= divisor;
            }
        }
    }
    MetricVector {
        metric: Metric::Betweenness,
        values,
        normalized,
    }
}

/// Raw betweenness in exact rational arithmetic, as reduced
/// (numerator, denominator) pairs. For verification on small graphs; path
/// counts grow fast, so keep inputs to a few dozen nodes.
pub fn betweenness_vector_exact(g: &Graph) -> Vec<(i128, i128)> {
    brandes_raw::<Ratio<i128>>(g)
        .into_iter()
        .map(|r| (*r.numer(), *r.denom()))
        .collect()
}

/// Maps a raw vector into `[0, 1]`: degree is divided by `n-1`, closeness
/// multiplied by `n-1`, betweenness divided by `(n-1)(n-2)/2`; local-cc,
/// strength, and eccentricity already live in `[0, 1]` and pass through.
/// Everything is clamped against rounding spill.
pub fn normalize_01(m: &MetricVector, g: &Graph) -> Result<MetricVector> {
    if m.normalized {
        return Err(Error::InvalidArgument(
            "metric vector is already normalized".into(),
        ));
    }
    if m.values.len() != g.node_count() {
        return Err(Error::InvalidArgument(format!(
            "metric vector length {} does not match graph with {} nodes",
            m.values.len(),
            g.node_count()
        )));
    }
    let n = g.node_count();
    if n < 2 {
        return Err(Error::InvalidArgument(
            "normalization needs a graph with at least 2 nodes".into(),
        ));
    }
    let scale = (n - 1) as f64;
    let bc_divisor = scale * (n as f64 - 2.0) / 2.0;
    let values = m
        .values
        .iter()
        .map(|&v| {
            let t = match m.metric {
                Metric::Degree => v / scale,
                Metric::Closeness => v * scale,
                Metric::Betweenness if bc_divisor > 0.0 => v / bc_divisor,
                _ => v,
            };
            t.clamp(0.0, 1.0)
        })
        .collect();
    Ok(MetricVector {
        metric: m.metric,
        values,
        normalized: true,
    })
}

/// Computes one raw metric vector.
pub fn compute(g: &Graph, metric: Metric) -> MetricVector {
    match metric {
        Metric::Degree => degree_vector(g),
        Metric::LocalCc => local_clustering_vector(g),
        Metric::Strength => strength_vector(g),
        Metric::Betweenness => betweenness_vector(g, false),
        Metric::Eccentricity => eccentricity_vector(g),
        Metric::Closeness => closeness_vector(g),
    }
}

/// Computes one metric vector and normalizes it into `[0, 1]`.
pub fn compute_normalized(g: &Graph, metric: Metric) -> Result<MetricVector> {
    normalize_01(&compute(g, metric), g)
}

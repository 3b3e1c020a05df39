//! Frequency distributions of normalized metrics, and the
//! correlation-vs-average robustness machinery for repeated samples.
//!
//! Normalized values are rounded to two decimals, giving 101 bins for
//! 0.00, 0.01, ..., 1.00. A metric is "robust" under a sampling method when
//! each sample's binned distribution correlates highly with the average
//! distribution across samples.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec;
use crate::metrics::{compute_normalized, Metric, MetricVector};
use crate::sampling::SampleRun;

/// Bins 0.00 through 1.00 inclusive.
pub const BIN_COUNT: usize = 101;

/// Histogram of one normalized metric vector over the 101 two-decimal bins.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BinnedDistribution {
    pub metric: Metric,
    /// `bins[k]` counts values rounding to `k/100`; always 101 entries.
    pub bins: Vec<u64>,
    /// Total count; equals the node count of the underlying vector.
    pub total: u64,
}

/// Rounds a normalized value to its bin: `floor(100v + 0.5)`, i.e. half-up
/// at two decimals.
fn bin_of(v: f64) -> usize {
    ((100.0 * v + 0.5).floor() as usize).min(BIN_COUNT - 1)
}

pub fn bin_distribution(m: &MetricVector) -> Result<BinnedDistribution> {
    if !m.normalized {
        return Err(Error::InvalidArgument(format!(
            "binning requires a normalized metric vector (got raw {})",
            m.metric
        )));
    }
    let mut bins = vec![0u64; BIN_COUNT];
    for &v in &m.values {
        bins[bin_of(v)] += 1;
    }
    Ok(BinnedDistribution {
        metric: m.metric,
        bins,
        total: m.values.len() as u64,
    })
}

/// Per-bin arithmetic mean over several distributions of the same metric.
pub fn average_distribution(ds: &[BinnedDistribution]) -> Result<Vec<f64>> {
    let Some(first) = ds.first() else {
        return Err(Error::InvalidArgument(
            "cannot average zero distributions".into(),
        ));
    };
    if let Some(odd) = ds.iter().find(|d| d.metric != first.metric) {
        return Err(Error::InvalidArgument(format!(
            "cannot average distributions of different metrics ({} vs {})",
            first.metric, odd.metric
        )));
    }
    let mut avg = vec![0.0f64; BIN_COUNT];
    for d in ds {
        for (a, &b) in avg.iter_mut().zip(&d.bins) {
            *a += b as f64;
        }
    }
    for a in &mut avg {
        *a /= ds.len() as f64;
    }
    Ok(avg)
}

/// Pearson product-moment correlation of two equal-length vectors.
pub fn pearson_correlation(x: &[f64], y: &[f64]) -> Result<f64> {
    if x.len() != y.len() || x.is_empty() {
        return Err(Error::InvalidArgument(format!(
            "correlation needs two equal-length non-empty vectors (got {} and {})",
            x.len(),
            y.len()
        )));
    }
    let n = x.len() as f64;
    let mean_x = x.iter().sum::<f64>() / n;
    let mean_y = y.iter().sum::<f64>() / n;
    let mut sxy = 0.0;
    let mut sxx = 0.0;
    let mut syy = 0.0;
    for (&a, &b) in x.iter().zip(y) {
        sxy += (a - mean_x) * (b - mean_y);
        sxx += (a - mean_x) * (a - mean_x);
        syy += (b - mean_y) * (b - mean_y);
    }
    if sxx == 0.0 || syy == 0.0 {
        return Err(Error::DegenerateDistribution);
    }
    Ok((sxy / (sxx * syy).sqrt()).clamp(-1.0, 1.0))
}

/// How stable one metric's distribution is across the samples of a run.
#[derive(Debug, Clone, Serialize)]
pub struct RobustnessReport {
    pub metric: Metric,
    pub threshold: f64,
    /// Per-sample binned distributions, by sample index.
    pub distributions: Vec<BinnedDistribution>,
    /// Per-bin mean over the samples.
    pub average: Vec<f64>,
    /// Pearson correlation of each sample against the average.
    pub correlations: Vec<f64>,
    /// Samples whose correlation fell below the threshold.
    pub flagged: Vec<usize>,
}

/// Computes `metric` on every sample of `run` (normalized), bins, averages,
/// and correlates each sample against the average. Samples with correlation
/// below `threshold` are flagged. Errors carry the offending sample index.
pub fn robustness_report(run: &SampleRun, metric: Metric, threshold: f64) -> Result<RobustnessReport> {
    if run.samples.is_empty() {
        return Err(Error::InvalidArgument("sample run is empty".into()));
    }
    let binned = exec::map_batches(run.samples.len(), |i| {
        compute_normalized(&run.samples[i].graph, metric).and_then(|m| bin_distribution(&m))
    });
    let mut distributions = Vec::with_capacity(binned.len());
    for (index, result) in binned.into_iter().enumerate() {
        match result {
            Ok(d) => distributions.push(d),
            Err(e) => return Err(Error::in_sample(index, e)),
        }
    }
    let average = average_distribution(&distributions)?;
    let mut correlations = Vec::with_capacity(distributions.len());
    for (index, d) in distributions.iter().enumerate() {
        let counts: Vec<f64> = d.bins.iter().map(|&b| b as f64).collect();
        match pearson_correlation(&counts, &average) {
            Ok(r) => correlations.push(r),
            Err(e) => return Err(Error::in_sample(index, e)),
        }
    }
    let flagged = correlations
        .iter()
        .enumerate()
        .filter(|(_, &r)| r < threshold)
        .map(|(i, _)| i)
        .collect();
    Ok(RobustnessReport {
        metric,
        threshold,
        distributions,
        average,
        correlations,
        flagged,
    })
}

/// A presentation view of a bin array with sub-threshold tails removed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BinSlice<'a> {
    /// Bin index of the first retained entry.
    pub start: usize,
    pub counts: &'a [u64],
}

/// Strips leading and trailing bins with counts below `min_count`. Interior
/// bins are never removed. An all-below-threshold input yields an empty
/// slice with `start = 0`.
pub fn trim_bins(bins: &[u64], min_count: u64) -> BinSlice<'_> {
    let first = bins.iter().position(|&b| b >= min_count);
    let Some(first) = first else {
        return BinSlice {
            start: 0,
            counts: &[],
        };
    };
    let last = bins.iter().rposition(|&b| b >= min_count).unwrap();
    BinSlice {
        start: first,
        counts: &bins[first..=last],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::metrics;
    use crate::sampling::{run_repeated, ExhaustionPolicy, SamplerConfig, SamplingMethod};
    use approx::assert_relative_eq;

    fn normalized(values: Vec<f64>) -> MetricVector {
        MetricVector {
            metric: Metric::Degree,
            values,
            normalized: true,
        }
    }

    #[test]
    fn binning_rounds_half_up() {
        let d = bin_distribution(&normalized(vec![0.0, 0.014, 0.015, 1.0])).unwrap();
        assert_eq!(d.bins[0], 1);
        assert_eq!(d.bins[1], 1);
        assert_eq!(d.bins[2], 1);
        assert_eq!(d.bins[100], 1);
        assert_eq!(d.total, 4);
        assert_eq!(d.bins.iter().sum::<u64>(), d.total);
    }

    #[test]
    fn binning_trivial_vectors() {
        let zeros = bin_distribution(&normalized(vec![0.0; 7])).unwrap();
        assert_eq!(zeros.bins[0], 7);
        let mut edges = Vec::new();
        for u in 0..5u32 {
            for v in u + 1..5 {
                edges.push((u, v));
            }
        }
        let k5 = Graph::from_edges(5, &edges).unwrap();
        let deg = metrics::compute_normalized(&k5, Metric::Degree).unwrap();
        let d = bin_distribution(&deg).unwrap();
        assert_eq!(d.bins[100], 5);
    }

    #[test]
    fn binning_rejects_raw_vectors() {
        let raw = MetricVector {
            metric: Metric::Degree,
            values: vec![1.0, 2.0],
            normalized: false,
        };
        assert!(matches!(bin_distribution(&raw), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn averaging_distributions() {
        let a = bin_distribution(&normalized(vec![0.0, 0.0])).unwrap();
        let b = bin_distribution(&normalized(vec![0.0, 0.0, 0.0, 0.0])).unwrap();
        let avg = average_distribution(&[a.clone(), b]).unwrap();
        assert_relative_eq!(avg[0], 3.0);
        assert_eq!(avg.len(), BIN_COUNT);
        let identity = average_distribution(&[a.clone(), a.clone()]).unwrap();
        assert_eq!(identity[0], a.bins[0] as f64);
        assert!(average_distribution(&[]).is_err());
    }

    #[test]
    fn averaging_rejects_mixed_metrics() {
        let a = bin_distribution(&normalized(vec![0.0])).unwrap();
        let mut b = a.clone();
        b.metric = Metric::Closeness;
        assert!(matches!(
            average_distribution(&[a, b]),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn pearson_known_values() {
        let x = vec![1.0, 2.0, 3.0, 4.0];
        let up = vec![2.0, 4.0, 6.0, 8.0];
        assert_relative_eq!(pearson_correlation(&x, &x).unwrap(), 1.0);
        assert_relative_eq!(pearson_correlation(&x, &up).unwrap(), 1.0);
        let down: Vec<f64> = x.iter().map(|v| -v + 10.0).collect();
        assert_relative_eq!(pearson_correlation(&x, &down).unwrap(), -1.0);
        let y = vec![2.0, 4.0, 6.0, 9.0];
        assert_relative_eq!(
            pearson_correlation(&x, &y).unwrap(),
            11.5 / 133.75f64.sqrt(),
            epsilon = 1e-12
        );
    }

    #[test]
    fn pearson_guards() {
        let x = vec![1.0, 2.0, 3.0];
        assert!(matches!(
            pearson_correlation(&x, &[1.0, 1.0, 1.0]),
            Err(Error::DegenerateDistribution)
        ));
        assert!(pearson_correlation(&x, &[1.0]).is_err());
    }

    #[test]
    fn pearson_is_scale_invariant() {
        let x = vec![3.0, 1.0, 4.0, 1.0, 5.0];
        let y = vec![2.0, 7.0, 1.0, 8.0, 2.0];
        let base = pearson_correlation(&x, &y).unwrap();
        let scaled: Vec<f64> = x.iter().map(|v| 3.5 * v + 2.0).collect();
        assert_relative_eq!(pearson_correlation(&scaled, &y).unwrap(), base, epsilon = 1e-12);
    }

    fn full_size_run(count: usize) -> SampleRun {
        let c6 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        let cfg = SamplerConfig {
            method: SamplingMethod::Node,
            target_size: 6,
            rng_seed: 9,
            on_exhaustion: ExhaustionPolicy::Error,
        };
        run_repeated(&c6, &cfg, count).unwrap()
    }

    #[test]
    fn identical_samples_correlate_perfectly() {
        let run = full_size_run(5);
        for metric in Metric::ALL {
            let report = robustness_report(&run, metric, 0.9).unwrap();
            assert_eq!(report.correlations, vec![1.0; 5], "{metric}");
            assert!(report.flagged.is_empty(), "{metric}");
            for d in &report.distributions {
                assert_eq!(d.bins.iter().sum::<u64>(), 6);
            }
        }
    }

    #[test]
    fn impossible_threshold_flags_everything() {
        let run = full_size_run(3);
        let report = robustness_report(&run, Metric::Degree, 1.1).unwrap();
        assert_eq!(report.flagged, vec![0, 1, 2]);
    }

    #[test]
    fn trimming_tails() {
        let bins = [0, 0, 3, 1, 2, 0, 0];
        let t = trim_bins(&bins, 1);
        assert_eq!(t.start, 2);
        assert_eq!(t.counts, &[3, 1, 2]);
        let untouched = trim_bins(&[5, 1, 7], 1);
        assert_eq!(untouched.start, 0);
        assert_eq!(untouched.counts, &[5, 1, 7]);
        let empty = trim_bins(&[0, 0], 1);
        assert_eq!(empty.counts.len(), 0);
        // Interior dips survive.
        let dip = trim_bins(&[0, 4, 0, 4, 0], 2);
        assert_eq!(dip.start, 1);
        assert_eq!(dip.counts, &[4, 0, 4]);
    }
}

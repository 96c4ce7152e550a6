//! Distance-distribution analytics: per-node distance distributions,
//! network node dispersion (NND) and the two-term graph distance
//! D(G,G') = w₁·sqrt(J(P(G),P(G'))/ln 2) + w₂·|sqrt(NND(G)) - sqrt(NND(G'))|.
//!
//! Distributions are carried as integer hop-distance counts so that
//! identical distributions divide out exactly: vertex-transitive graphs get
//! an NND of exactly 0.0, and D(G,G) is exactly 0.0. All logarithms are
//! natural.

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};

/// Hop-distance distribution of one node: fraction of the other n-1 nodes
/// sitting at each distance 1..=bin_cap, plus a final unreachable bin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeDistanceDistribution {
    pub node: usize,
    counts: Vec<u64>,
    total: u64,
}

impl NodeDistanceDistribution {
    /// Number of distance bins (excluding the unreachable bin).
    pub fn bin_cap(&self) -> usize {
        self.counts.len() - 1
    }

    /// Probability of distance `bin` (1-based); `bin_cap()+1` addresses the
    /// unreachable bin.
    pub fn probability(&self, bin: usize) -> f64 {
        self.counts[bin - 1] as f64 / self.total as f64
    }

    pub fn unreachable_probability(&self) -> f64 {
        self.counts[self.counts.len() - 1] as f64 / self.total as f64
    }

    /// All probabilities: bins 1..=bin_cap, then the unreachable bin.
    pub fn probabilities(&self) -> Vec<f64> {
        self.counts
            .iter()
            .map(|&c| c as f64 / self.total as f64)
            .collect()
    }
}

fn distance_counts(row: &[f64], node: usize, bin_cap: usize) -> Vec<u64> {
    let mut counts = vec![0u64; bin_cap + 1];
    for (j, &d) in row.iter().enumerate() {
        if j == node {
            continue;
        }
        if d.is_finite() {
            let bin = d as usize;
            assert!(
                (1..=bin_cap).contains(&bin),
                "bin_cap {bin_cap} below observed distance {bin}"
            );
            counts[bin - 1] += 1;
        } else {
            counts[bin_cap] += 1;
        }
    }
    counts
}

/// Distance distribution of node `i` over bins 1..=bin_cap.
///
/// `bin_cap` must be at least the largest finite distance from `i`.
pub fn node_distance_distribution(
    g: &Graph,
    i: &str,
    bin_cap: usize,
) -> Result<NodeDistanceDistribution> {
    let n = g.n();
    if n < 2 {
        return Err(Error::TooFewNodes { needed: 2, actual: n });
    }
    let node = g
        .node_index(i)
        .ok_or_else(|| Error::UnknownNode(i.to_string()))?;
    let row = g.single_source_distances(i)?;
    Ok(NodeDistanceDistribution {
        node,
        counts: distance_counts(&row, node, bin_cap),
        total: (n - 1) as u64,
    })
}

fn all_counts(t: &DistanceMatrix, bin_cap: usize) -> Vec<Vec<u64>> {
    (0..t.n())
        .map(|i| distance_counts(t.row(i), i, bin_cap))
        .collect()
}

/// Mean of the n per-node distributions: bins 1..=bin_cap then the
/// unreachable bin. Sums to 1.
pub fn mean_distance_distribution(g: &Graph, bin_cap: usize) -> Result<Vec<f64>> {
    let n = g.n();
    if n < 2 {
        return Err(Error::TooFewNodes { needed: 2, actual: n });
    }
    let t = g.distance_matrix();
    let counts = all_counts(&t, bin_cap);
    let denom = (n * (n - 1)) as f64;
    Ok((0..=bin_cap)
        .map(|b| counts.iter().map(|c| c[b]).sum::<u64>() as f64 / denom)
        .collect())
}

/// Mean hop distance of the average distribution P(G): the expected
/// distance over all ordered connected pairs.
pub fn graph_mean_distance(g: &Graph) -> Result<f64> {
    let n = g.n();
    if n < 2 {
        return Err(Error::TooFewNodes { needed: 2, actual: n });
    }
    let t = g.distance_matrix();
    let mut sum = 0.0;
    let mut pairs = 0u64;
    for i in 0..n {
        for &d in t.row(i) {
            if d.is_finite() && d > 0.0 {
                sum += d;
                pairs += 1;
            }
        }
    }
    if pairs == 0 {
        return Err(Error::NoConnectedPair);
    }
    Ok(sum / pairs as f64)
}

/// Jensen-Shannon divergence of the n node distributions, averaged over
/// nodes, computed from integer counts. Returns (J, max finite distance).
fn node_dispersion_parts(g: &Graph, strict: bool) -> Result<(f64, usize)> {
    let n = g.n();
    if n < 2 {
        return Err(Error::TooFewNodes { needed: 2, actual: n });
    }
    let t = g.distance_matrix();
    if strict && !t.all_finite() {
        return Err(Error::Disconnected);
    }
    let d = t.max_finite().unwrap_or(0.0) as usize;
    let counts = all_counts(&t, d);
    let bins = d + 1; // distance bins plus the unreachable bin
    let totals: Vec<u64> = (0..bins)
        .map(|b| counts.iter().map(|c| c[b]).sum())
        .collect();
    let per_node = (n - 1) as f64;
    let mut j = 0.0;
    for row in &counts {
        for (b, &c) in row.iter().enumerate() {
            if c > 0 {
                let p = c as f64 / per_node;
                // p/μ as a ratio of exact integers: (c·n) / Σ_i c_i
                let ratio = (c * n as u64) as f64 / totals[b] as f64;
                j += p * ratio.ln();
            }
        }
    }
    Ok((j / n as f64, d))
}

/// Network node dispersion NND = J(P₁..P_n)/ln(d+1) for a connected graph.
///
/// Errors with [`Error::Disconnected`] when some pair is unreachable; use
/// [`network_node_dispersion_lenient`] after edge removals.
pub fn network_node_dispersion(g: &Graph) -> Result<f64> {
    let (j, d) = node_dispersion_parts(g, true)?;
    if j == 0.0 {
        return Ok(0.0);
    }
    Ok(j / ((d + 1) as f64).ln())
}

/// NND with unreachable pairs collected in a dedicated final bin, defined
/// for disconnected graphs as well. Coincides with the strict form on
/// connected graphs.
pub fn network_node_dispersion_lenient(g: &Graph) -> Result<f64> {
    let (j, d) = node_dispersion_parts(g, false)?;
    if j == 0.0 {
        return Ok(0.0);
    }
    Ok(j / ((d + 1) as f64).ln())
}

/// Two-distribution Jensen-Shannon divergence; the shorter input is padded
/// with zero bins. Lies in [0, ln 2]; 0 iff the inputs are identical.
pub fn jensen_shannon_pair(p: &[f64], q: &[f64]) -> f64 {
    let len = p.len().max(q.len());
    let mut acc = 0.0;
    for b in 0..len {
        let pb = p.get(b).copied().unwrap_or(0.0);
        let qb = q.get(b).copied().unwrap_or(0.0);
        let m = 0.5 * (pb + qb);
        if pb > 0.0 {
            acc += pb * (pb / m).ln();
        }
        if qb > 0.0 {
            acc += qb * (qb / m).ln();
        }
    }
    0.5 * acc
}

/// [`jensen_shannon_pair`] without padding: inputs must align.
pub fn jensen_shannon_pair_strict(p: &[f64], q: &[f64]) -> Result<f64> {
    if p.len() != q.len() {
        return Err(Error::LengthMismatch(p.len(), q.len()));
    }
    Ok(jensen_shannon_pair(p, q))
}

/// The two weighted terms of D(G,G') and their sum.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphDistanceResult {
    pub jsd_term: f64,
    pub nnd_term: f64,
    pub total: f64,
    pub w1: f64,
    pub w2: f64,
}

fn check_weights(w1: f64, w2: f64) -> Result<()> {
    if !(w1 >= 0.0 && w2 >= 0.0 && (w1 + w2 - 1.0).abs() <= 1e-9) {
        return Err(Error::BadWeights { w1, w2 });
    }
    Ok(())
}

/// Distance D(G,G') in [0,1]. Bin ranges are aligned to the larger of the
/// two diameters, with unreachable mass in the shared final bin.
pub fn graph_distance(g1: &Graph, g2: &Graph, w1: f64, w2: f64) -> Result<GraphDistanceResult> {
    check_weights(w1, w2)?;
    let d1 = g1.distance_matrix().max_finite().unwrap_or(0.0) as usize;
    let d2 = g2.distance_matrix().max_finite().unwrap_or(0.0) as usize;
    let align = d1.max(d2);
    let p1 = mean_distance_distribution(g1, align)?;
    let p2 = mean_distance_distribution(g2, align)?;
    let jsd = jensen_shannon_pair(&p1, &p2);
    let jsd_term = w1 * (jsd / std::f64::consts::LN_2).sqrt();
    let n1 = network_node_dispersion_lenient(g1)?;
    let n2 = network_node_dispersion_lenient(g2)?;
    let nnd_term = w2 * (n1.sqrt() - n2.sqrt()).abs();
    Ok(GraphDistanceResult {
        jsd_term,
        nnd_term,
        total: jsd_term + nnd_term,
        w1,
        w2,
    })
}

/// Pairwise D over a family of graphs: symmetric, zero diagonal.
pub fn dissimilarity_matrix(graphs: &[Graph], w1: f64, w2: f64) -> Result<Vec<Vec<f64>>> {
    if graphs.len() < 2 {
        return Err(Error::TooFewGraphs(graphs.len()));
    }
    check_weights(w1, w2)?;
    let k = graphs.len();
    let mut m = vec![vec![0.0; k]; k];
    for i in 0..k {
        for j in (i + 1)..k {
            let d = graph_distance(&graphs[i], &graphs[j], w1, w2)?.total;
            m[i][j] = d;
            m[j][i] = d;
        }
    }
    Ok(m)
}

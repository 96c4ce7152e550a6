//! Spectral embedding, deterministic k-means, eigenratio k-selection and
//! critical cut-edge extraction with disconnection verification.

use std::collections::HashSet;

use crate::eigen::symmetric_eigen;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Which eigenvectors form the embedding columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EmbeddingMode {
    /// Eigenvectors of the k largest adjacency eigenvalues (the default).
    AdjacencyLargest,
    /// Eigenvectors of the k smallest Laplacian eigenvalues.
    LaplacianSmallest,
}

impl EmbeddingMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            EmbeddingMode::AdjacencyLargest => "adjacency",
            EmbeddingMode::LaplacianSmallest => "laplacian",
        }
    }
}

/// Parameters for [`spectral_clustering`].
#[derive(Debug, Clone)]
pub struct ClusteringConfig {
    /// Cluster count; selected by eigenratio when absent.
    pub k: Option<usize>,
    pub mode: EmbeddingMode,
    /// Recorded in the result; the pipeline itself is fully deterministic.
    pub seed: u64,
    /// Eigenratio threshold for automatic k selection.
    pub tau: f64,
    /// Smallest k the automatic selection may return.
    pub min_k: usize,
}

impl Default for ClusteringConfig {
    fn default() -> Self {
        Self {
            k: None,
            mode: EmbeddingMode::AdjacencyLargest,
            seed: 0,
            tau: 1.02,
            min_k: 2,
        }
    }
}

/// Node partition plus the edges crossing it.
#[derive(Debug, Clone, PartialEq)]
pub struct ClusteringResult {
    /// Cluster index per node, aligned with node indices.
    pub labels: Vec<usize>,
    pub k: usize,
    /// Edges with endpoints in different clusters, canonical and sorted.
    pub cut_edges: Vec<(usize, usize)>,
    pub embedding_mode: EmbeddingMode,
    pub seed: u64,
    /// k-means objective of the final partition.
    pub inertia: f64,
    /// Clusters whose induced subgraph is not connected (reported as-is).
    pub internally_disconnected_clusters: Vec<usize>,
}

/// Outcome of removing an edge set from the graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisconnectionCheck {
    pub removed_edges: Vec<(usize, usize)>,
    pub components_before: usize,
    pub components_after: usize,
    pub component_sizes_after: Vec<usize>,
}

/// n×k node coordinates from the selected eigenvectors.
pub fn spectral_embedding(g: &Graph, k: usize, mode: EmbeddingMode) -> Result<Vec<Vec<f64>>> {
    let n = g.n();
    if k < 1 || k > n {
        return Err(Error::BadK { k, n });
    }
    let eig = match mode {
        EmbeddingMode::AdjacencyLargest => symmetric_eigen(&g.adjacency_matrix())?,
        EmbeddingMode::LaplacianSmallest => symmetric_eigen(&g.laplacian_matrix())?,
    };
    // eigenvalues come back ascending; pick columns per mode
    let columns: Vec<usize> = match mode {
        EmbeddingMode::AdjacencyLargest => (0..k).map(|c| n - 1 - c).collect(),
        EmbeddingMode::LaplacianSmallest => (0..k).collect(),
    };
    let mut points = vec![vec![0.0; k]; n];
    for (c, &col) in columns.iter().enumerate() {
        for (i, point) in points.iter_mut().enumerate() {
            point[c] = eig.vectors[(i, col)];
        }
    }
    Ok(points)
}

/// Picks k as the smallest i >= min_k whose eigenratio |φ_i|/|φ_{i+1}|
/// reaches `tau` (list descending, ratios on absolute values). A
/// near-zero denominator ends the scan at i; without any qualifying
/// ratio the floor `min_k` is returned.
pub fn auto_select_k(descending: &[f64], tau: f64, min_k: usize) -> Result<usize> {
    let len = descending.len();
    if len < 2 {
        return Err(Error::TooShort(len));
    }
    let min_k = min_k.max(1);
    for i in min_k..len {
        let num = descending[i - 1].abs();
        let den = descending[i].abs();
        if den < 1e-12 {
            return Ok(i);
        }
        if num / den >= tau {
            return Ok(i);
        }
    }
    Ok(min_k.min(len))
}

fn sq_dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

fn nearest_center(point: &[f64], centers: &[Vec<f64>]) -> usize {
    let mut best = 0;
    let mut best_d = sq_dist(point, &centers[0]);
    for (c, center) in centers.iter().enumerate().skip(1) {
        let d = sq_dist(point, center);
        if d < best_d {
            best_d = d;
            best = c;
        }
    }
    best
}

fn assign(points: &[Vec<f64>], centers: &[Vec<f64>]) -> Vec<usize> {
    points.iter().map(|p| nearest_center(p, centers)).collect()
}

fn cluster_means(points: &[Vec<f64>], labels: &[usize], k: usize) -> Vec<Vec<f64>> {
    let dim = points[0].len();
    let mut sums = vec![vec![0.0; dim]; k];
    let mut counts = vec![0usize; k];
    for (p, &l) in points.iter().zip(labels) {
        counts[l] += 1;
        for (s, x) in sums[l].iter_mut().zip(p) {
            *s += x;
        }
    }
    for (sum, &count) in sums.iter_mut().zip(&counts) {
        if count > 0 {
            for s in sum.iter_mut() {
                *s /= count as f64;
            }
        }
    }
    sums
}

/// Moves the farthest point (from its own center) into each empty cluster;
/// ties break on the lowest point index, donors only from clusters that
/// keep at least one member.
fn repair_empty(points: &[Vec<f64>], labels: &mut [usize], centers: &mut [Vec<f64>], k: usize) {
    loop {
        let mut counts = vec![0usize; k];
        for &l in labels.iter() {
            counts[l] += 1;
        }
        let Some(empty) = counts.iter().position(|&c| c == 0) else {
            return;
        };
        let mut donor = usize::MAX;
        let mut donor_d = -1.0;
        for (i, p) in points.iter().enumerate() {
            if counts[labels[i]] < 2 {
                continue;
            }
            let d = sq_dist(p, &centers[labels[i]]);
            if d > donor_d {
                donor_d = d;
                donor = i;
            }
        }
        labels[donor] = empty;
        centers[empty] = points[donor].clone();
    }
}

/// Labels plus the k-means objective for a finished run.
#[derive(Debug, Clone, PartialEq)]
pub struct KMeansResult {
    pub labels: Vec<usize>,
    pub inertia: f64,
    pub iterations: usize,
}

const KMEANS_MAX_ITER: usize = 300;

/// Deterministic Lloyd k-means with farthest-first initialization.
///
/// The first center is point 0; each further center is the point farthest
/// from the chosen set (lowest index on ties). Assignment ties break on the
/// lowest center index; empty clusters are repaired by reseeding the
/// farthest point. Identical `(points, k, seed)` give bit-identical output;
/// `seed` is accepted for interface stability and recorded upstream.
pub fn kmeans(points: &[Vec<f64>], k: usize, seed: u64) -> Result<KMeansResult> {
    let _ = seed;
    let n = points.len();
    if k == 0 || k > n {
        return Err(Error::KTooLarge { k, n });
    }
    // farthest-first seeding
    let mut centers: Vec<Vec<f64>> = vec![points[0].clone()];
    let mut nearest: Vec<f64> = points.iter().map(|p| sq_dist(p, &centers[0])).collect();
    while centers.len() < k {
        let mut far = 0;
        let mut far_d = -1.0;
        for (i, &d) in nearest.iter().enumerate() {
            if d > far_d {
                far_d = d;
                far = i;
            }
        }
        centers.push(points[far].clone());
        let newest = centers.last().unwrap();
        for (i, p) in points.iter().enumerate() {
            let d = sq_dist(p, newest);
            if d < nearest[i] {
                nearest[i] = d;
            }
        }
    }

    let mut labels = assign(points, &centers);
    let mut iterations = 0;
    for iter in 0..KMEANS_MAX_ITER {
        iterations = iter + 1;
        repair_empty(points, &mut labels, &mut centers, k);
        let new_centers = cluster_means(points, &labels, k);
        let new_labels = assign(points, &new_centers);
        let converged = new_labels == labels;
        centers = new_centers;
        labels = new_labels;
        if converged {
            break;
        }
    }
    repair_empty(points, &mut labels, &mut centers, k);
    let means = cluster_means(points, &labels, k);
    let inertia = points
        .iter()
        .zip(&labels)
        .map(|(p, &l)| sq_dist(p, &means[l]))
        .sum();
    Ok(KMeansResult {
        labels,
        inertia,
        iterations,
    })
}

/// Edges whose endpoints carry different labels, canonical and sorted.
pub fn cut_edges(g: &Graph, labels: &[usize]) -> Result<Vec<(usize, usize)>> {
    if labels.len() != g.n() {
        return Err(Error::UnlabeledNode {
            labeled: labels.len(),
            nodes: g.n(),
        });
    }
    let mut cut: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(a, b)| labels[a] != labels[b])
        .collect();
    cut.sort_unstable();
    Ok(cut)
}

/// Recomputes components after removing `removed` (which must all exist).
pub fn verify_disconnection(g: &Graph, removed: &[(usize, usize)]) -> Result<DisconnectionCheck> {
    let n = g.n();
    let mut removed_set: HashSet<(usize, usize)> = HashSet::with_capacity(removed.len());
    for &(a, b) in removed {
        if a >= n || b >= n || !g.has_edge(a, b) {
            let name = |i: usize| {
                if i < n {
                    g.node_id(i).to_string()
                } else {
                    format!("#{i}")
                }
            };
            return Err(Error::UnknownEdge(name(a), name(b)));
        }
        removed_set.insert((a.min(b), a.max(b)));
    }
    let components_before = g.connected_components().component_count();
    let mut labels = vec![usize::MAX; n];
    let mut sizes = Vec::new();
    for start in 0..n {
        if labels[start] != usize::MAX {
            continue;
        }
        let label = sizes.len();
        labels[start] = label;
        let mut size = 0;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            size += 1;
            for &v in g.neighbors(u) {
                let key = (u.min(v), u.max(v));
                if removed_set.contains(&key) || labels[v] != usize::MAX {
                    continue;
                }
                labels[v] = label;
                stack.push(v);
            }
        }
        sizes.push(size);
    }
    let mut removed_sorted: Vec<(usize, usize)> = removed_set.into_iter().collect();
    removed_sorted.sort_unstable();
    Ok(DisconnectionCheck {
        removed_edges: removed_sorted,
        components_before,
        components_after: sizes.len(),
        component_sizes_after: sizes,
    })
}

fn internally_disconnected(g: &Graph, labels: &[usize], k: usize) -> Vec<usize> {
    let mut bad = Vec::new();
    for cluster in 0..k {
        let members: Vec<usize> = (0..g.n()).filter(|&i| labels[i] == cluster).collect();
        if members.len() <= 1 {
            continue;
        }
        let inside: HashSet<usize> = members.iter().copied().collect();
        let mut seen: HashSet<usize> = HashSet::new();
        let mut stack = vec![members[0]];
        seen.insert(members[0]);
        while let Some(u) = stack.pop() {
            for &v in g.neighbors(u) {
                if inside.contains(&v) && seen.insert(v) {
                    stack.push(v);
                }
            }
        }
        if seen.len() < members.len() {
            bad.push(cluster);
        }
    }
    bad
}

/// Full pipeline: embed, cluster with k-means, extract cut edges.
///
/// When `cfg.k` is absent the eigenratio rule runs on the descending
/// adjacency spectrum regardless of embedding mode.
pub fn spectral_clustering(g: &Graph, cfg: &ClusteringConfig) -> Result<ClusteringResult> {
    let n = g.n();
    if n == 0 {
        return Err(Error::TooFewNodes { needed: 1, actual: 0 });
    }
    let k = match cfg.k {
        Some(k) => k,
        None => {
            let adj = symmetric_eigen(&g.adjacency_matrix())?;
            let mut descending = adj.values;
            descending.reverse();
            auto_select_k(&descending, cfg.tau, cfg.min_k)?
        }
    };
    if k < 1 || k > n {
        return Err(Error::BadK { k, n });
    }
    let points = spectral_embedding(g, k, cfg.mode)?;
    let km = kmeans(&points, k, cfg.seed)?;
    let cut = cut_edges(g, &km.labels)?;
    let internally_disconnected_clusters = internally_disconnected(g, &km.labels, k);
    Ok(ClusteringResult {
        cut_edges: cut,
        k,
        embedding_mode: cfg.mode,
        seed: cfg.seed,
        inertia: km.inertia,
        internally_disconnected_clusters,
        labels: km.labels,
    })
}

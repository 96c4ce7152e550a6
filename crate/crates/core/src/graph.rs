//! Immutable undirected simple graph with the distance/component machinery
//! every other module builds on.
//!
//! Nodes are opaque string identifiers; internally each node gets a dense
//! index `0..n` in declaration order, which fixes the row/column layout of
//! every matrix derived from the graph.

use std::collections::BinaryHeap;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;

/// Sentinel for unreachable node pairs.
pub const UNREACHABLE: f64 = f64::INFINITY;

/// Immutable undirected simple graph, optionally edge-weighted.
///
/// Invariants enforced at construction: no self-loops, no duplicate edges,
/// every endpoint declared, weights (when present) nonnegative.
#[derive(Debug, Clone)]
pub struct Graph {
    node_ids: Vec<String>,
    index: HashMap<String, usize>,
    edges: Vec<(usize, usize)>,
    weights: Option<Vec<f64>>,
    adjacency: Vec<Vec<usize>>,
    edge_index: HashMap<(usize, usize), usize>,
}

impl Graph {
    /// Builds an unweighted graph from declared nodes and an edge list.
    pub fn build<S: AsRef<str>>(node_ids: &[S], edges: &[(S, S)]) -> Result<Self> {
        let spec: Vec<(&str, &str, Option<f64>)> = edges
            .iter()
            .map(|(a, b)| (a.as_ref(), b.as_ref(), None))
            .collect();
        Self::build_impl(node_ids.iter().map(|s| s.as_ref()), &spec, false)
    }

    /// Builds a weighted graph; every weight must be nonnegative and finite.
    pub fn build_weighted<S: AsRef<str>>(node_ids: &[S], edges: &[(S, S, f64)]) -> Result<Self> {
        let spec: Vec<(&str, &str, Option<f64>)> = edges
            .iter()
            .map(|(a, b, w)| (a.as_ref(), b.as_ref(), Some(*w)))
            .collect();
        Self::build_impl(node_ids.iter().map(|s| s.as_ref()), &spec, true)
    }

    /// Builds a graph whose node set is inferred from the edge list in
    /// first-appearance order. Convenient for small literal graphs.
    pub fn from_edges<'a, I>(edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let pairs: Vec<(&str, &str)> = edges.into_iter().collect();
        let mut seen = HashMap::new();
        let mut nodes: Vec<&str> = Vec::new();
        for &(a, b) in &pairs {
            for id in [a, b] {
                if !seen.contains_key(id) {
                    seen.insert(id.to_string(), nodes.len());
                    nodes.push(id);
                }
            }
        }
        Self::build(&nodes, &pairs)
    }

    /// Shared constructor. `edges` entries carry an optional weight;
    /// `weighted` marks the graph as weighted as a whole (missing weights
    /// default to 1.0 so mixed edge lists stay usable).
    pub(crate) fn build_impl<'a, I>(
        node_ids: I,
        edges: &[(&str, &str, Option<f64>)],
        weighted: bool,
    ) -> Result<Self>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let node_ids: Vec<String> = node_ids.into_iter().map(|s| s.to_string()).collect();
        let mut index = HashMap::with_capacity(node_ids.len());
        for (i, id) in node_ids.iter().enumerate() {
            if index.insert(id.clone(), i).is_some() {
                return Err(Error::DuplicateEdge(id.clone(), id.clone()));
            }
        }
        let n = node_ids.len();
        let mut edge_list = Vec::with_capacity(edges.len());
        let mut weights = if weighted {
            Some(Vec::with_capacity(edges.len()))
        } else {
            None
        };
        let mut adjacency = vec![Vec::new(); n];
        let mut edge_index = HashMap::with_capacity(edges.len());
        for &(a, b, w) in edges {
            let ia = *index
                .get(a)
                .ok_or_else(|| Error::UnknownEndpoint(a.to_string()))?;
            let ib = *index
                .get(b)
                .ok_or_else(|| Error::UnknownEndpoint(b.to_string()))?;
            if ia == ib {
                return Err(Error::SelfLoop(a.to_string()));
            }
            let key = (ia.min(ib), ia.max(ib));
            if edge_index.contains_key(&key) {
                return Err(Error::DuplicateEdge(a.to_string(), b.to_string()));
            }
            if let Some(w) = w {
                if !(w.is_finite() && w >= 0.0) {
                    return Err(Error::NegativeWeight {
                        a: a.to_string(),
                        b: b.to_string(),
                        weight: w,
                    });
                }
            }
            edge_index.insert(key, edge_list.len());
            edge_list.push(key);
            if let Some(ws) = weights.as_mut() {
                ws.push(w.unwrap_or(1.0));
            }
            adjacency[ia].push(ib);
            adjacency[ib].push(ia);
        }
        Ok(Self {
            node_ids,
            index,
            edges: edge_list,
            weights,
            adjacency,
            edge_index,
        })
    }

    pub fn n(&self) -> usize {
        self.node_ids.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn node_ids(&self) -> &[String] {
        &self.node_ids
    }

    pub fn node_id(&self, i: usize) -> &str {
        &self.node_ids[i]
    }

    pub fn node_index(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    fn require_node(&self, id: &str) -> Result<usize> {
        self.node_index(id)
            .ok_or_else(|| Error::UnknownNode(id.to_string()))
    }

    /// Edges as canonical `(min, max)` index pairs, in insertion order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_endpoints(&self, e: usize) -> (&str, &str) {
        let (a, b) = self.edges[e];
        (&self.node_ids[a], &self.node_ids[b])
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edge_index.contains_key(&(i.min(j), i.max(j)))
    }

    pub fn edge_position(&self, i: usize, j: usize) -> Option<usize> {
        self.edge_index.get(&(i.min(j), i.max(j))).copied()
    }

    pub fn is_weighted(&self) -> bool {
        self.weights.is_some()
    }

    /// Weight of edge `e`; 1.0 for unweighted graphs.
    pub fn edge_weight(&self, e: usize) -> f64 {
        self.weights.as_ref().map_or(1.0, |w| w[e])
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    pub fn degree_by_index(&self, i: usize) -> usize {
        self.adjacency[i].len()
    }

    /// Number of incident edges.
    pub fn degree(&self, id: &str) -> Result<usize> {
        Ok(self.degree_by_index(self.require_node(id)?))
    }

    /// Sum of incident edge weights (counts 1.0 per edge when unweighted).
    pub fn weighted_degree(&self, id: &str) -> Result<f64> {
        let i = self.require_node(id)?;
        Ok(self.adjacency[i]
            .iter()
            .map(|&j| self.edge_weight(self.edge_position(i, j).unwrap()))
            .sum())
    }

    /// 0/1 adjacency matrix, zero diagonal.
    pub fn adjacency_matrix(&self) -> SquareMatrix {
        let mut m = SquareMatrix::zeros(self.n());
        for &(a, b) in &self.edges {
            m[(a, b)] = 1.0;
            m[(b, a)] = 1.0;
        }
        m
    }

    /// Adjacency matrix carrying edge weights (1.0 entries when unweighted).
    pub fn weighted_adjacency_matrix(&self) -> SquareMatrix {
        let mut m = SquareMatrix::zeros(self.n());
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            let w = self.edge_weight(e);
            m[(a, b)] = w;
            m[(b, a)] = w;
        }
        m
    }

    /// Combinatorial Laplacian L = D - A over the 0/1 adjacency.
    pub fn laplacian_matrix(&self) -> SquareMatrix {
        let mut m = SquareMatrix::zeros(self.n());
        for &(a, b) in &self.edges {
            m[(a, b)] = -1.0;
            m[(b, a)] = -1.0;
            m[(a, a)] += 1.0;
            m[(b, b)] += 1.0;
        }
        m
    }

    pub(crate) fn bfs_distances(&self, s: usize) -> Vec<f64> {
        let mut dist = vec![UNREACHABLE; self.n()];
        dist[s] = 0.0;
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                if dist[v] == UNREACHABLE {
                    dist[v] = dist[u] + 1.0;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    fn dijkstra_distances(&self, s: usize) -> Vec<f64> {
        #[derive(PartialEq)]
        struct Item(f64, usize);
        impl Eq for Item {}
        impl Ord for Item {
            fn cmp(&self, other: &Self) -> std::cmp::Ordering {
                // min-heap on distance, index as deterministic tie-break
                other
                    .0
                    .total_cmp(&self.0)
                    .then_with(|| other.1.cmp(&self.1))
            }
        }
        impl PartialOrd for Item {
            fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
                Some(self.cmp(other))
            }
        }
        let mut dist = vec![UNREACHABLE; self.n()];
        dist[s] = 0.0;
        let mut heap = BinaryHeap::new();
        heap.push(Item(0.0, s));
        while let Some(Item(d, u)) = heap.pop() {
            if d > dist[u] {
                continue;
            }
            for &v in &self.adjacency[u] {
                let w = self.edge_weight(self.edge_position(u, v).unwrap());
                let nd = d + w;
                if nd < dist[v] {
                    dist[v] = nd;
                    heap.push(Item(nd, v));
                }
            }
        }
        dist
    }

    /// Hop distances from `s` to every node; unreachable entries are
    /// [`UNREACHABLE`].
    pub fn single_source_distances(&self, s: &str) -> Result<Vec<f64>> {
        Ok(self.bfs_distances(self.require_node(s)?))
    }

    /// Weighted shortest-path distances from `s` (Dijkstra, weights >= 0).
    pub fn weighted_single_source_distances(&self, s: &str) -> Result<Vec<f64>> {
        Ok(self.dijkstra_distances(self.require_node(s)?))
    }

    /// All-pairs hop distances.
    pub fn distance_matrix(&self) -> DistanceMatrix {
        let n = self.n();
        let mut entries = Vec::with_capacity(n * n);
        for s in 0..n {
            entries.extend(self.bfs_distances(s));
        }
        DistanceMatrix { n, entries }
    }

    /// All-pairs weighted shortest-path distances.
    pub fn weighted_distance_matrix(&self) -> DistanceMatrix {
        let n = self.n();
        let mut entries = Vec::with_capacity(n * n);
        for s in 0..n {
            entries.extend(self.dijkstra_distances(s));
        }
        DistanceMatrix { n, entries }
    }

    /// Connected components labelled in order of first appearance.
    pub fn connected_components(&self) -> ComponentLabeling {
        let n = self.n();
        let mut labels = vec![usize::MAX; n];
        let mut sizes = Vec::new();
        for start in 0..n {
            if labels[start] != usize::MAX {
                continue;
            }
            let label = sizes.len();
            let mut size = 0usize;
            let mut stack = vec![start];
            labels[start] = label;
            while let Some(u) = stack.pop() {
                size += 1;
                for &v in &self.adjacency[u] {
                    if labels[v] == usize::MAX {
                        labels[v] = label;
                        stack.push(v);
                    }
                }
            }
            sizes.push(size);
        }
        ComponentLabeling {
            labels,
            component_sizes: sizes,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.connected_components().component_count() == 1
    }

    /// Largest hop distance over all pairs; [`UNREACHABLE`] when the graph
    /// is disconnected (see [`Graph::component_diameters`] for the
    /// per-component values in that case).
    pub fn diameter(&self) -> f64 {
        let t = self.distance_matrix();
        if t.all_finite() {
            t.max_finite().unwrap_or(0.0)
        } else {
            UNREACHABLE
        }
    }

    /// Diameter of each connected component, indexed by component label.
    pub fn component_diameters(&self) -> Vec<f64> {
        let comps = self.connected_components();
        let t = self.distance_matrix();
        let mut diams = vec![0.0f64; comps.component_count()];
        for i in 0..self.n() {
            for j in 0..self.n() {
                let d = t.get(i, j);
                if d.is_finite() {
                    let c = comps.labels()[i];
                    diams[c] = diams[c].max(d);
                }
            }
        }
        diams
    }

    /// Mean hop distance over all unordered pairs at finite distance.
    pub fn characteristic_path_length(&self) -> Result<f64> {
        let t = self.distance_matrix();
        let mut sum = 0.0;
        let mut pairs = 0usize;
        for i in 0..self.n() {
            for j in (i + 1)..self.n() {
                let d = t.get(i, j);
                if d.is_finite() {
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

    /// Largest hop distance from `i` to any other node; [`UNREACHABLE`] if
    /// some node cannot be reached.
    pub fn eccentricity(&self, i: &str) -> Result<f64> {
        let s = self.require_node(i)?;
        let dist = self.bfs_distances(s);
        Ok(dist.iter().copied().fold(0.0, f64::max))
    }
}

/// All-pairs shortest-path distances; disconnected pairs hold
/// [`UNREACHABLE`].
#[derive(Debug, Clone)]
pub struct DistanceMatrix {
    n: usize,
    entries: Vec<f64>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn all_finite(&self) -> bool {
        self.entries.iter().all(|d| d.is_finite())
    }

    /// Largest finite entry, if any pair is connected.
    pub fn max_finite(&self) -> Option<f64> {
        self.entries
            .iter()
            .copied()
            .filter(|d| d.is_finite())
            .fold(None, |acc, d| Some(acc.map_or(d, |a: f64| a.max(d))))
    }

    /// Max distance in row `i` (the node's eccentricity).
    pub fn eccentricity(&self, i: usize) -> f64 {
        self.row(i).iter().copied().fold(0.0, f64::max)
    }
}

/// Partition of the nodes into connected components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentLabeling {
    labels: Vec<usize>,
    component_sizes: Vec<usize>,
}

impl ComponentLabeling {
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn component_count(&self) -> usize {
        self.component_sizes.len()
    }

    pub fn component_sizes(&self) -> &[usize] {
        &self.component_sizes
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn triangle_counts() {
        let g = Graph::from_edges([("a", "b"), ("b", "c"), ("a", "c")]).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 3);
    }

    #[test]
    fn self_loop_rejected() {
        let err = Graph::build(&["a"], &[("a", "a")]).unwrap_err();
        assert_eq!(err, Error::SelfLoop("a".into()));
    }

    #[test]
    fn duplicate_edge_rejected() {
        let err = Graph::from_edges([("a", "b"), ("b", "a")]).unwrap_err();
        assert_eq!(err, Error::DuplicateEdge("b".into(), "a".into()));
    }

    #[test]
    fn unknown_endpoint_rejected() {
        let err = Graph::build(&["a", "b"], &[("a", "c")]).unwrap_err();
        assert_eq!(err, Error::UnknownEndpoint("c".into()));
    }

    #[test]
    fn negative_weight_rejected() {
        let err = Graph::build_weighted(&["a", "b"], &[("a", "b", -1.0)]).unwrap_err();
        assert!(matches!(err, Error::NegativeWeight { .. }));
    }

    #[test]
    fn degrees() {
        let k3 = generators::complete(3);
        for id in k3.node_ids() {
            assert_eq!(k3.degree(id).unwrap(), 2);
        }
        let s4 = generators::star(4);
        assert_eq!(s4.degree("v0").unwrap(), 3);
        assert_eq!(s4.degree("v1").unwrap(), 1);
        let p3 = generators::path(3);
        assert_eq!(p3.degree("v1").unwrap(), 2);
        assert_eq!(p3.degree("zz").unwrap_err(), Error::UnknownNode("zz".into()));
    }

    #[test]
    fn weighted_degree_sums_weights() {
        let g =
            Graph::build_weighted(&["a", "b", "c"], &[("a", "b", 2.5), ("a", "c", 0.0)]).unwrap();
        assert_eq!(g.weighted_degree("a").unwrap(), 2.5);
        assert_eq!(g.weighted_degree("b").unwrap(), 2.5);
    }

    #[test]
    fn adjacency_matrix_entries() {
        let k3 = generators::complete(3);
        let a = k3.adjacency_matrix();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(a[(i, j)], if i == j { 0.0 } else { 1.0 });
            }
        }
        let p3 = generators::path(3);
        let a = p3.adjacency_matrix();
        assert_eq!(a[(0, 1)], 1.0);
        assert_eq!(a[(1, 2)], 1.0);
        assert_eq!(a[(0, 2)], 0.0);
    }

    #[test]
    fn weighted_adjacency_symmetric() {
        let g = Graph::build_weighted(&["a", "b"], &[("a", "b", 2.5)]).unwrap();
        let w = g.weighted_adjacency_matrix();
        assert_eq!(w[(0, 1)], 2.5);
        assert_eq!(w[(1, 0)], 2.5);
    }

    #[test]
    fn laplacian_entries_and_row_sums() {
        let k3 = generators::complete(3);
        let l = k3.laplacian_matrix();
        for i in 0..3 {
            assert_eq!(l[(i, i)], 2.0);
            assert_eq!(l.row_sum(i), 0.0);
        }
        let p3 = generators::path(3);
        let l = p3.laplacian_matrix();
        assert_eq!(l[(0, 0)], 1.0);
        assert_eq!(l[(1, 1)], 2.0);
        assert_eq!(l[(2, 2)], 1.0);
        assert_eq!(l[(0, 1)], -1.0);
        assert_eq!(l[(1, 2)], -1.0);
    }

    #[test]
    fn single_source() {
        let p3 = generators::path(3);
        assert_eq!(p3.single_source_distances("v0").unwrap(), vec![0.0, 1.0, 2.0]);
        let k3 = generators::complete(3);
        assert_eq!(k3.single_source_distances("v0").unwrap(), vec![0.0, 1.0, 1.0]);
        let two = Graph::from_edges([("a", "b"), ("c", "d")]).unwrap();
        let d = two.single_source_distances("a").unwrap();
        assert_eq!(d[1], 1.0);
        assert_eq!(d[2], UNREACHABLE);
        assert_eq!(d[3], UNREACHABLE);
    }

    #[test]
    fn distance_matrix_small_graphs() {
        let k3 = generators::complete(3);
        let t = k3.distance_matrix();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(t.get(i, j), if i == j { 0.0 } else { 1.0 });
            }
        }
        let p3 = generators::path(3);
        assert_eq!(p3.distance_matrix().max_finite(), Some(2.0));
        let s4 = generators::star(4);
        let t = s4.distance_matrix();
        assert_eq!(t.get(1, 2), 2.0);
        assert_eq!(t.get(0, 3), 1.0);
    }

    #[test]
    fn weighted_distances_follow_weights() {
        // a -2.5- b -0.0- c : zero-weight edges allowed
        let g = Graph::build_weighted(&["a", "b", "c"], &[("a", "b", 2.5), ("b", "c", 0.0)])
            .unwrap();
        let d = g.weighted_single_source_distances("a").unwrap();
        assert_eq!(d, vec![0.0, 2.5, 2.5]);
    }

    #[test]
    fn components() {
        assert_eq!(generators::complete(3).connected_components().component_count(), 1);
        let two = Graph::from_edges([
            ("a", "b"),
            ("b", "c"),
            ("a", "c"),
            ("x", "y"),
            ("y", "z"),
            ("x", "z"),
        ])
        .unwrap();
        let comps = two.connected_components();
        assert_eq!(comps.component_count(), 2);
        assert_eq!(comps.component_sizes(), &[3, 3]);
        let edgeless = Graph::build(&["a", "b", "c", "d"], &[]).unwrap();
        assert_eq!(edgeless.connected_components().component_count(), 4);
    }

    #[test]
    fn diameter_and_cpl() {
        assert_eq!(generators::path(3).diameter(), 2.0);
        assert_eq!(generators::complete(3).diameter(), 1.0);
        assert_eq!(generators::complete(3).characteristic_path_length().unwrap(), 1.0);
        let p3 = generators::path(3);
        assert!((p3.characteristic_path_length().unwrap() - 4.0 / 3.0).abs() < 1e-15);
        let edgeless = Graph::build(&["a", "b"], &[]).unwrap();
        assert_eq!(edgeless.characteristic_path_length().unwrap_err(), Error::NoConnectedPair);
        assert_eq!(edgeless.diameter(), UNREACHABLE);
    }

    #[test]
    fn component_diameters_on_disconnected() {
        let g = Graph::from_edges([("a", "b"), ("b", "c"), ("x", "y")]).unwrap();
        assert_eq!(g.diameter(), UNREACHABLE);
        assert_eq!(g.component_diameters(), vec![2.0, 1.0]);
    }

    #[test]
    fn eccentricities() {
        let p3 = generators::path(3);
        assert_eq!(p3.eccentricity("v0").unwrap(), 2.0);
        assert_eq!(p3.eccentricity("v1").unwrap(), 1.0);
        assert_eq!(generators::complete(3).eccentricity("v2").unwrap(), 1.0);
        assert_eq!(generators::star(4).eccentricity("v0").unwrap(), 1.0);
    }
}

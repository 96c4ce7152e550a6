//! Structural measures: density, degree statistics, clustering coefficient,
//! path-based centralities and the aggregated per-graph report.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Scalar measure bundle for one graph.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasureReport {
    pub density: f64,
    pub link_per_node_ratio: f64,
    pub mean_degree: f64,
    pub clustering_coefficient: f64,
    /// Hop diameter; infinite when the graph is disconnected.
    pub diameter: f64,
    pub characteristic_path_length: f64,
    pub central_point_dominance: f64,
}

/// Whether shortest-path endpoints count as lying on the path.
///
/// With `Include`, every node scores at least the pairs it terminates;
/// `Exclude` is the usual Brandes convention. Both are normalized by 1/n².
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Endpoints {
    Include,
    Exclude,
}

/// Fraction of possible edges present: q = 2m / (n(n-1)).
pub fn density(g: &Graph) -> Result<f64> {
    let n = g.n();
    if n < 2 {
        return Err(Error::TooFewNodes { needed: 2, actual: n });
    }
    Ok(2.0 * g.m() as f64 / (n as f64 * (n as f64 - 1.0)))
}

/// Edges per node: e = m / n.
pub fn link_per_node_ratio(g: &Graph) -> Result<f64> {
    if g.n() == 0 {
        return Err(Error::TooFewNodes { needed: 1, actual: 0 });
    }
    Ok(g.m() as f64 / g.n() as f64)
}

/// Mean vertex degree: c = 2m / n.
pub fn mean_degree(g: &Graph) -> Result<f64> {
    if g.n() == 0 {
        return Err(Error::TooFewNodes { needed: 1, actual: 0 });
    }
    Ok(2.0 * g.m() as f64 / g.n() as f64)
}

/// Number of triangles in the graph.
pub fn triangle_count(g: &Graph) -> usize {
    let mut triples3 = 0usize;
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        let _ = e;
        let (small, other) = if g.degree_by_index(a) <= g.degree_by_index(b) {
            (a, b)
        } else {
            (b, a)
        };
        triples3 += g
            .neighbors(small)
            .iter()
            .filter(|&&c| c != other && g.has_edge(c, other))
            .count();
    }
    // each triangle is seen once per edge
    triples3 / 3
}

/// Number of connected triples (paths of length two, counted per center).
pub fn connected_triple_count(g: &Graph) -> usize {
    (0..g.n())
        .map(|i| {
            let k = g.degree_by_index(i);
            k * k.saturating_sub(1) / 2
        })
        .sum()
}

/// Global clustering coefficient CC = 3·triangles / triples; 0 when the
/// graph has no connected triple.
pub fn clustering_coefficient(g: &Graph) -> f64 {
    let triples = connected_triple_count(g);
    if triples == 0 {
        return 0.0;
    }
    3.0 * triangle_count(g) as f64 / triples as f64
}

/// Closeness centrality C_i = n / Σ_j t_ij over hop distances.
///
/// Errors with [`Error::DisconnectedFrom`] when some node is unreachable
/// from `i`; see [`closeness_centrality_component`] for the lenient form.
pub fn closeness_centrality(g: &Graph, i: &str) -> Result<f64> {
    let dist = g.single_source_distances(i)?;
    let mut sum = 0.0;
    for &d in &dist {
        if !d.is_finite() {
            return Err(Error::DisconnectedFrom(i.to_string()));
        }
        sum += d;
    }
    if sum == 0.0 {
        // single node or n == 1 component of size 1
        return Ok(0.0);
    }
    Ok(g.n() as f64 / sum)
}

/// Closeness restricted to the component of `i`: |comp| / Σ_{j∈comp} t_ij.
/// Isolated nodes score 0.
pub fn closeness_centrality_component(g: &Graph, i: &str) -> Result<f64> {
    let dist = g.single_source_distances(i)?;
    let mut sum = 0.0;
    let mut size = 0usize;
    for &d in &dist {
        if d.is_finite() {
            sum += d;
            size += 1;
        }
    }
    if sum == 0.0 {
        return Ok(0.0);
    }
    Ok(size as f64 / sum)
}

struct BrandesSweep {
    order: Vec<usize>,
    preds: Vec<Vec<usize>>,
    sigma: Vec<f64>,
    dist: Vec<i64>,
}

fn brandes_sweep(g: &Graph, s: usize) -> BrandesSweep {
    let n = g.n();
    let mut sigma = vec![0.0; n];
    let mut dist = vec![-1i64; n];
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut order = Vec::with_capacity(n);
    let mut queue = std::collections::VecDeque::new();
    sigma[s] = 1.0;
    dist[s] = 0;
    queue.push_back(s);
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for &v in g.neighbors(u) {
            if dist[v] < 0 {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
            if dist[v] == dist[u] + 1 {
                sigma[v] += sigma[u];
                preds[v].push(u);
            }
        }
    }
    BrandesSweep {
        order,
        preds,
        sigma,
        dist,
    }
}

/// Betweenness centrality per node (aligned with node indices).
///
/// Accumulates the fraction of shortest s-t paths through each node over
/// all ordered pairs, normalized by 1/n².
pub fn betweenness_centrality(g: &Graph, endpoints: Endpoints) -> Vec<f64> {
    let n = g.n();
    let mut b = vec![0.0; n];
    if n == 0 {
        return b;
    }
    for s in 0..n {
        let sweep = brandes_sweep(g, s);
        let mut delta = vec![0.0; n];
        for &v in sweep.order.iter().rev() {
            for &u in &sweep.preds[v] {
                delta[u] += sweep.sigma[u] / sweep.sigma[v] * (1.0 + delta[v]);
            }
            if v != s {
                b[v] += delta[v];
            }
        }
        if endpoints == Endpoints::Include {
            let reachable = sweep.order.len() - 1;
            b[s] += reachable as f64;
            for &v in &sweep.order {
                if v != s {
                    b[v] += 1.0;
                }
            }
        }
    }
    let norm = (n * n) as f64;
    for x in &mut b {
        *x /= norm;
    }
    b
}

/// Edge betweenness (aligned with `g.edges()` order): fraction of shortest
/// s-t paths traversing each edge over all ordered pairs, normalized 1/n².
pub fn edge_betweenness(g: &Graph) -> Vec<f64> {
    let n = g.n();
    let mut eb = vec![0.0; g.m()];
    if n == 0 {
        return eb;
    }
    for s in 0..n {
        let sweep = brandes_sweep(g, s);
        let mut delta = vec![0.0; n];
        for &v in sweep.order.iter().rev() {
            for &u in &sweep.preds[v] {
                let c = sweep.sigma[u] / sweep.sigma[v] * (1.0 + delta[v]);
                delta[u] += c;
                let e = g.edge_position(u, v).expect("predecessor edge exists");
                eb[e] += c;
            }
        }
    }
    let norm = (n * n) as f64;
    for x in &mut eb {
        *x /= norm;
    }
    eb
}

/// Central point dominance c'_b = Σ_i (b_max - b_i) / (n - 1).
pub fn central_point_dominance(g: &Graph, endpoints: Endpoints) -> Result<f64> {
    let n = g.n();
    if n < 2 {
        return Err(Error::TooFewNodes { needed: 2, actual: n });
    }
    let b = betweenness_centrality(g, endpoints);
    let bmax = b.iter().copied().fold(f64::MIN, f64::max);
    Ok(b.iter().map(|&x| bmax - x).sum::<f64>() / (n as f64 - 1.0))
}

/// Dominant adjacency eigenpair found by power iteration.
#[derive(Debug, Clone)]
pub struct EigenvectorCentrality {
    /// Unit-norm nonnegative eigenvector, aligned with node indices.
    /// Entries outside the dominant component are zero.
    pub values: Vec<f64>,
    /// Spectral radius φ₁ (largest adjacency eigenvalue on the component).
    pub spectral_radius: f64,
    pub iterations: usize,
    /// Set when the graph was disconnected and the computation was
    /// restricted to the largest component.
    pub restricted_to_largest_component: bool,
}

/// Eigenvector centrality via power iteration on A + I (the shift keeps
/// bipartite graphs from oscillating). Converges when
/// ‖Ax - φ₁x‖∞ <= tol.
///
/// Disconnected graphs are handled by restricting to the largest component
/// (first one of maximal size) and flagging the result.
pub fn eigenvector_centrality(g: &Graph, tol: f64, max_iter: usize) -> Result<EigenvectorCentrality> {
    let n = g.n();
    if n == 0 {
        return Err(Error::TooFewNodes { needed: 1, actual: 0 });
    }
    let comps = g.connected_components();
    let restricted = comps.component_count() > 1;
    let target = comps
        .component_sizes()
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
        .map(|(c, _)| c)
        .unwrap();
    let members: Vec<usize> = (0..n).filter(|&i| comps.labels()[i] == target).collect();
    let size = members.len();

    let mut x = vec![0.0; n];
    let init = 1.0 / (size as f64).sqrt();
    for &i in &members {
        x[i] = init;
    }
    for iter in 0..=max_iter {
        // y = A x on the component
        let mut y = vec![0.0; n];
        for &i in &members {
            let mut acc = 0.0;
            for &j in g.neighbors(i) {
                acc += x[j];
            }
            y[i] = acc;
        }
        let rayleigh: f64 = members.iter().map(|&i| x[i] * y[i]).sum();
        let residual = members
            .iter()
            .map(|&i| (y[i] - rayleigh * x[i]).abs())
            .fold(0.0, f64::max);
        if residual <= tol {
            return Ok(EigenvectorCentrality {
                values: x,
                spectral_radius: rayleigh,
                iterations: iter,
                restricted_to_largest_component: restricted,
            });
        }
        if iter == max_iter {
            break;
        }
        // power step on (A + I)
        let mut norm = 0.0;
        for &i in &members {
            y[i] += x[i];
            norm += y[i] * y[i];
        }
        let norm = norm.sqrt();
        for &i in &members {
            x[i] = y[i] / norm;
        }
    }
    Err(Error::NoConvergence(max_iter))
}

/// Eigenvector-centrality defaults: tol 1e-10, max 10_000 iterations.
pub const EIGENVECTOR_TOL: f64 = 1e-10;
pub const EIGENVECTOR_MAX_ITER: usize = 10_000;

/// Computes the full scalar bundle. Betweenness uses endpoint-included
/// counting; the diameter is infinite for disconnected graphs.
pub fn measure_report(g: &Graph) -> Result<MeasureReport> {
    Ok(MeasureReport {
        density: density(g)?,
        link_per_node_ratio: link_per_node_ratio(g)?,
        mean_degree: mean_degree(g)?,
        clustering_coefficient: clustering_coefficient(g),
        diameter: g.diameter(),
        characteristic_path_length: g.characteristic_path_length()?,
        central_point_dominance: central_point_dominance(g, Endpoints::Include)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::graph::Graph;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn density_values() {
        assert_eq!(density(&generators::complete(3)).unwrap(), 1.0);
        assert_eq!(density(&generators::complete(6)).unwrap(), 1.0);
        assert!(close(density(&generators::path(3)).unwrap(), 2.0 / 3.0, 1e-15));
        let single = Graph::build(&["a"], &[]).unwrap();
        assert!(matches!(density(&single).unwrap_err(), Error::TooFewNodes { .. }));
    }

    #[test]
    fn ratio_and_mean_degree() {
        assert_eq!(link_per_node_ratio(&generators::complete(3)).unwrap(), 1.0);
        assert_eq!(mean_degree(&generators::complete(3)).unwrap(), 2.0);
        assert_eq!(mean_degree(&generators::star(4)).unwrap(), 1.5);
        // sparse synthetic network with 384 nodes / 469 edges
        let ids: Vec<String> = (0..384).map(|i| format!("n{i}")).collect();
        let mut edges: Vec<(String, String)> =
            (1..384).map(|i| (format!("n{}", i - 1), format!("n{i}"))).collect();
        let mut k = 2;
        while edges.len() < 469 {
            edges.push((format!("n0"), format!("n{k}")));
            k += 1;
        }
        let g = Graph::build(&ids, &edges).unwrap();
        assert!(close(link_per_node_ratio(&g).unwrap(), 469.0 / 384.0, 1e-12));
    }

    #[test]
    fn mean_degree_equals_density_identity() {
        for g in [generators::complete(5), generators::path(7), generators::star(6)] {
            let c = mean_degree(&g).unwrap();
            let q = density(&g).unwrap();
            assert_eq!(c, q * (g.n() as f64 - 1.0));
        }
    }

    #[test]
    fn clustering_coefficient_values() {
        assert_eq!(clustering_coefficient(&generators::complete(3)), 1.0);
        assert_eq!(clustering_coefficient(&generators::complete(4)), 1.0);
        assert_eq!(clustering_coefficient(&generators::path(3)), 0.0);
        assert_eq!(clustering_coefficient(&generators::cycle(4)), 0.0);
        // no connected triples at all
        let edgeless = Graph::build(&["a", "b"], &[]).unwrap();
        assert_eq!(clustering_coefficient(&edgeless), 0.0);
        // one triangle hanging off a path: tri=1, triples = C(2,2)*2 + C(3,2) = 2 + 3
        let g = Graph::from_edges([("a", "b"), ("b", "c"), ("a", "c"), ("c", "d")]).unwrap();
        assert_eq!(triangle_count(&g), 1);
        assert_eq!(connected_triple_count(&g), 5);
        assert!(close(clustering_coefficient(&g), 3.0 / 5.0, 1e-15));
    }

    #[test]
    fn closeness_values() {
        let s4 = generators::star(4);
        assert!(close(closeness_centrality(&s4, "v0").unwrap(), 4.0 / 3.0, 1e-15));
        assert!(close(closeness_centrality(&s4, "v1").unwrap(), 4.0 / 5.0, 1e-15));
        assert!(close(closeness_centrality(&generators::complete(3), "v0").unwrap(), 1.5, 1e-15));
        let two = Graph::from_edges([("a", "b"), ("x", "y")]).unwrap();
        assert_eq!(
            closeness_centrality(&two, "a").unwrap_err(),
            Error::DisconnectedFrom("a".into())
        );
        assert!(close(closeness_centrality_component(&two, "a").unwrap(), 2.0, 1e-15));
    }

    #[test]
    fn betweenness_frozen_values() {
        // P3: endpoints-included fractions over ordered pairs, 1/n².
        let b = betweenness_centrality(&generators::path(3), Endpoints::Include);
        assert!(close(b[0], 4.0 / 9.0, 1e-15));
        assert!(close(b[1], 6.0 / 9.0, 1e-15));
        assert!(close(b[2], 4.0 / 9.0, 1e-15));
        let be = betweenness_centrality(&generators::path(3), Endpoints::Exclude);
        assert!(close(be[0], 0.0, 1e-15));
        assert!(close(be[1], 2.0 / 9.0, 1e-15));
        // K3: vertex-transitive, all equal.
        let b = betweenness_centrality(&generators::complete(3), Endpoints::Include);
        assert!(b.iter().all(|&x| close(x, b[0], 1e-15)));
        // P4: interior strictly above the ends.
        let b = betweenness_centrality(&generators::path(4), Endpoints::Include);
        assert!(close(b[0], 6.0 / 16.0, 1e-15));
        assert!(close(b[1], 10.0 / 16.0, 1e-15));
        assert!(b[1] > b[0] && b[2] > b[3]);
    }

    #[test]
    fn edge_betweenness_values() {
        // all edges equal on K3 and on P3
        for g in [generators::complete(3), generators::path(3)] {
            let eb = edge_betweenness(&g);
            assert!(eb.iter().all(|&x| close(x, eb[0], 1e-15)));
        }
        // barbell: the bridge is the unique argmax
        let g = generators::barbell(3);
        let eb = edge_betweenness(&g);
        let bridge = g.edge_position(2, 3).unwrap();
        for (e, &v) in eb.iter().enumerate() {
            if e != bridge {
                assert!(v < eb[bridge]);
            }
        }
    }

    #[test]
    fn central_point_dominance_values() {
        assert_eq!(
            central_point_dominance(&generators::complete(3), Endpoints::Include).unwrap(),
            0.0
        );
        assert_eq!(
            central_point_dominance(&generators::cycle(5), Endpoints::Include).unwrap(),
            0.0
        );
        // star S4: b = (0.75, 0.375, 0.375, 0.375)
        let cpd = central_point_dominance(&generators::star(4), Endpoints::Include).unwrap();
        assert!(close(cpd, 0.375, 1e-15));
    }

    #[test]
    fn eigenvector_centrality_analytic() {
        let k3 = generators::complete(3);
        let r = eigenvector_centrality(&k3, EIGENVECTOR_TOL, EIGENVECTOR_MAX_ITER).unwrap();
        for &x in &r.values {
            assert!(close(x, 1.0 / 3.0f64.sqrt(), 1e-9));
        }
        assert!(close(r.spectral_radius, 2.0, 1e-9));

        let s4 = generators::star(4);
        let r = eigenvector_centrality(&s4, EIGENVECTOR_TOL, EIGENVECTOR_MAX_ITER).unwrap();
        assert!(close(r.spectral_radius, 3.0f64.sqrt(), 1e-9));
        assert!(close(r.values[0] / r.values[1], 3.0f64.sqrt(), 1e-7));

        let p3 = generators::path(3);
        let r = eigenvector_centrality(&p3, EIGENVECTOR_TOL, EIGENVECTOR_MAX_ITER).unwrap();
        assert!(close(r.values[1] / r.values[0], 2.0f64.sqrt(), 1e-7));
        // residual bound holds at the reported solution
        let a = p3.adjacency_matrix();
        let ax = a.mul_vec(&r.values);
        let res = ax
            .iter()
            .zip(&r.values)
            .map(|(y, x)| (y - r.spectral_radius * x).abs())
            .fold(0.0, f64::max);
        assert!(res <= EIGENVECTOR_TOL);
    }

    #[test]
    fn eigenvector_centrality_disconnected_and_failure() {
        let two = Graph::from_edges([("a", "b"), ("b", "c"), ("a", "c"), ("x", "y")]).unwrap();
        let r = eigenvector_centrality(&two, EIGENVECTOR_TOL, EIGENVECTOR_MAX_ITER).unwrap();
        assert!(r.restricted_to_largest_component);
        assert_eq!(r.values[3], 0.0);
        assert_eq!(r.values[4], 0.0);
        assert!(close(r.spectral_radius, 2.0, 1e-9));

        let p5 = generators::path(5);
        assert_eq!(
            eigenvector_centrality(&p5, 1e-12, 1).unwrap_err(),
            Error::NoConvergence(1)
        );
    }

    #[test]
    fn report_k3() {
        let r = measure_report(&generators::complete(3)).unwrap();
        assert_eq!(r.density, 1.0);
        assert_eq!(r.link_per_node_ratio, 1.0);
        assert_eq!(r.mean_degree, 2.0);
        assert_eq!(r.clustering_coefficient, 1.0);
        assert_eq!(r.diameter, 1.0);
        assert_eq!(r.characteristic_path_length, 1.0);
        assert_eq!(r.central_point_dominance, 0.0);
    }
}

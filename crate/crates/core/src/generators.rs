//! Small deterministic graph families used in tests, examples and docs.
//!
//! Nodes are named `v0..v{n-1}`; the star's hub is `v0`, the barbell's
//! bridge joins the last node of the first clique to the first node of the
//! second.

use crate::graph::Graph;

fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v{i}")).collect()
}

fn build(n: usize, edges: Vec<(usize, usize)>) -> Graph {
    let ids = names(n);
    let pairs: Vec<(String, String)> = edges
        .into_iter()
        .map(|(a, b)| (ids[a].clone(), ids[b].clone()))
        .collect();
    Graph::build(&ids, &pairs).expect("generator produces a valid simple graph")
}

/// Complete graph K_n.
pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            edges.push((i, j));
        }
    }
    build(n, edges)
}

/// Path P_n: v0 - v1 - ... - v{n-1}.
pub fn path(n: usize) -> Graph {
    build(n, (1..n).map(|i| (i - 1, i)).collect())
}

/// Cycle C_n (n >= 3).
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 nodes");
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((0, n - 1));
    build(n, edges)
}

/// Star S_n: hub v0 joined to n-1 leaves.
pub fn star(n: usize) -> Graph {
    assert!(n >= 2, "star needs at least 2 nodes");
    build(n, (1..n).map(|i| (0, i)).collect())
}

/// Two K_q cliques joined by a single bridge edge.
pub fn barbell(q: usize) -> Graph {
    assert!(q >= 3, "barbell cliques need at least 3 nodes");
    let mut edges = Vec::new();
    for i in 0..q {
        for j in (i + 1)..q {
            edges.push((i, j));
            edges.push((q + i, q + j));
        }
    }
    edges.push((q - 1, q));
    build(2 * q, edges)
}

/// Index of the barbell's bridge edge endpoints, `(q-1, q)`.
pub fn barbell_bridge(q: usize) -> (usize, usize) {
    (q - 1, q)
}

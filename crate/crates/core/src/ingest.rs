//! Network file ingestion: CSV edge lists and the topology subset of
//! EPANET INP files, plus the leaf-pruning preprocessing step.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Parses a `source,target[,weight]` edge list.
///
/// `#` starts a comment, blank lines are skipped, and a first row whose
/// third field is not numeric is treated as a header. Nodes appear in
/// first-appearance order; the graph is weighted as soon as any line
/// carries a weight (weightless lines then default to 1.0).
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut nodes: Vec<String> = Vec::new();
    let mut seen: HashMap<String, usize> = HashMap::new();
    let mut edges: Vec<(String, String, Option<f64>)> = Vec::new();
    let mut saw_data = false;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if !saw_data {
            saw_data = true;
            if fields.len() >= 3 && fields[2].parse::<f64>().is_err() {
                continue; // header row
            }
        }
        let (a, b, w) = match fields.len() {
            2 => (fields[0], fields[1], None),
            3 => {
                let w: f64 = fields[2].parse().map_err(|_| Error::MalformedLine {
                    line: lineno + 1,
                    reason: format!("unparseable weight `{}`", fields[2]),
                })?;
                (fields[0], fields[1], Some(w))
            }
            _ => {
                return Err(Error::MalformedLine {
                    line: lineno + 1,
                    reason: format!("expected 2 or 3 comma-separated fields, got {}", fields.len()),
                })
            }
        };
        if a.is_empty() || b.is_empty() {
            return Err(Error::MalformedLine {
                line: lineno + 1,
                reason: "empty node identifier".into(),
            });
        }
        for id in [a, b] {
            if !seen.contains_key(id) {
                seen.insert(id.to_string(), nodes.len());
                nodes.push(id.to_string());
            }
        }
        edges.push((a.to_string(), b.to_string(), w));
    }
    let weighted = edges.iter().any(|(_, _, w)| w.is_some());
    let spec: Vec<(&str, &str, Option<f64>)> = edges
        .iter()
        .map(|(a, b, w)| (a.as_str(), b.as_str(), *w))
        .collect();
    Graph::build_impl(nodes.iter().map(String::as_str), &spec, weighted)
}

/// Serializes a graph back to the edge-list format accepted by
/// [`parse_edge_list`]. Isolated nodes have no representation in this
/// format, so round-tripping preserves graphs of minimum degree one.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        out.push_str(g.node_id(a));
        out.push(',');
        out.push_str(g.node_id(b));
        if g.is_weighted() {
            out.push(',');
            out.push_str(&g.edge_weight(e).to_string());
        }
        out.push('\n');
    }
    out
}

/// An INP parse: the graph plus any warnings (collapsed parallel links).
#[derive(Debug, Clone)]
pub struct ParsedInp {
    pub graph: Graph,
    pub warnings: Vec<String>,
}

const NODE_SECTIONS: [&str; 3] = ["JUNCTIONS", "RESERVOIRS", "TANKS"];
const LINK_SECTIONS: [&str; 3] = ["PIPES", "PUMPS", "VALVES"];

/// Parses the topology subset of an EPANET INP file.
///
/// `[JUNCTIONS]`, `[RESERVOIRS]` and `[TANKS]` declare nodes;
/// `[PIPES]`, `[PUMPS]` and `[VALVES]` declare links through their first
/// three whitespace-separated columns (id, node1, node2). A pipe's fourth
/// column (length) becomes the edge weight when present. Everything else is
/// skipped; `;` starts a comment; section names are case-insensitive.
/// Parallel links are collapsed to the first occurrence with a warning.
pub fn parse_inp(text: &str) -> Result<ParsedInp> {
    let mut section: Option<String> = None;
    let mut nodes: Vec<String> = Vec::new();
    let mut node_set: HashSet<String> = HashSet::new();
    let mut edges: Vec<(String, String, Option<f64>)> = Vec::new();
    let mut edge_keys: HashSet<(String, String)> = HashSet::new();
    let mut warnings = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split(';').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('[') {
            let Some(name) = rest.strip_suffix(']') else {
                return Err(Error::MalformedSection {
                    section: line.to_string(),
                    line: lineno + 1,
                    reason: "missing closing bracket".into(),
                });
            };
            section = Some(name.trim().to_ascii_uppercase());
            continue;
        }
        let Some(name) = section.as_deref() else {
            continue; // prologue before the first section
        };
        if NODE_SECTIONS.contains(&name) {
            let id = line.split_whitespace().next().unwrap().to_string();
            if !node_set.insert(id.clone()) {
                return Err(Error::MalformedSection {
                    section: name.to_string(),
                    line: lineno + 1,
                    reason: format!("duplicate node id `{id}`"),
                });
            }
            nodes.push(id);
        } else if LINK_SECTIONS.contains(&name) {
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.len() < 3 {
                return Err(Error::MalformedSection {
                    section: name.to_string(),
                    line: lineno + 1,
                    reason: "link rows need id, node1 and node2".into(),
                });
            }
            let (id, a, b) = (tokens[0], tokens[1], tokens[2]);
            let weight = if name == "PIPES" && tokens.len() >= 4 {
                Some(tokens[3].parse::<f64>().map_err(|_| Error::MalformedSection {
                    section: name.to_string(),
                    line: lineno + 1,
                    reason: format!("unparseable pipe length `{}`", tokens[3]),
                })?)
            } else {
                None
            };
            let key = if a <= b {
                (a.to_string(), b.to_string())
            } else {
                (b.to_string(), a.to_string())
            };
            if a != b && !edge_keys.insert(key) {
                warnings.push(format!(
                    "parallel link `{id}` ({a}, {b}) collapsed into the earlier one"
                ));
                continue;
            }
            edges.push((a.to_string(), b.to_string(), weight));
        }
        // any other section: skipped
    }

    let weighted = edges.iter().any(|(_, _, w)| w.is_some());
    let spec: Vec<(&str, &str, Option<f64>)> = edges
        .iter()
        .map(|(a, b, w)| (a.as_str(), b.as_str(), *w))
        .collect();
    let graph = Graph::build_impl(nodes.iter().map(String::as_str), &spec, weighted)?;
    Ok(ParsedInp { graph, warnings })
}

/// Removes degree-1 nodes and their edges: one sweep by default, repeated
/// until none remain with `iterative`. Degree-0 nodes are kept.
pub fn prune_leaves(g: &Graph, iterative: bool) -> Graph {
    let n = g.n();
    let mut keep = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|i| g.degree_by_index(i)).collect();
    loop {
        let leaves: Vec<usize> = (0..n).filter(|&i| keep[i] && degree[i] == 1).collect();
        if leaves.is_empty() {
            break;
        }
        for &leaf in &leaves {
            keep[leaf] = false;
            for &nb in g.neighbors(leaf) {
                if keep[nb] {
                    degree[nb] -= 1;
                }
            }
        }
        if !iterative {
            break;
        }
    }
    let nodes: Vec<&str> = (0..n).filter(|&i| keep[i]).map(|i| g.node_id(i)).collect();
    let spec: Vec<(&str, &str, Option<f64>)> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, &(a, b))| keep[a] && keep[b])
        .map(|(e, &(a, b))| {
            let w = g.is_weighted().then(|| g.edge_weight(e));
            (g.node_id(a), g.node_id(b), w)
        })
        .collect();
    Graph::build_impl(nodes, &spec, g.is_weighted()).expect("pruning preserves graph invariants")
}

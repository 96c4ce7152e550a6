use thiserror::Error;

/// Errors produced by graph construction, analysis and file ingestion.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("self-loop on node `{0}`")]
    SelfLoop(String),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(String, String),

    #[error("edge endpoint `{0}` is not a declared node")]
    UnknownEndpoint(String),

    #[error("negative or non-finite weight {weight} on edge ({a}, {b})")]
    NegativeWeight { a: String, b: String, weight: f64 },

    #[error("unknown node `{0}`")]
    UnknownNode(String),

    #[error("operation requires at least {needed} nodes, graph has {actual}")]
    TooFewNodes { needed: usize, actual: usize },

    #[error("no connected pair of nodes")]
    NoConnectedPair,

    #[error("node `{0}` is not reachable from every node")]
    DisconnectedFrom(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("iteration did not converge within {0} iterations")]
    NoConvergence(usize),

    #[error("matrix is not symmetric (max asymmetry {0:e})")]
    NotSymmetric(f64),

    #[error("cluster count k={k} out of range for n={n} nodes")]
    BadK { k: usize, n: usize },

    #[error("k={k} clusters requested for {n} points")]
    KTooLarge { k: usize, n: usize },

    #[error("eigenvalue list too short ({0} entries)")]
    TooShort(usize),

    #[error("weights w1={w1}, w2={w2} must be nonnegative and sum to 1")]
    BadWeights { w1: f64, w2: f64 },

    #[error("distribution lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("labeling covers {labeled} nodes, graph has {nodes}")]
    UnlabeledNode { labeled: usize, nodes: usize },

    #[error("edge ({0}, {1}) is not in the graph")]
    UnknownEdge(String, String),

    #[error("line {line}: {reason}")]
    MalformedLine { line: usize, reason: String },

    #[error("section [{section}], line {line}: {reason}")]
    MalformedSection {
        section: String,
        line: usize,
        reason: String,
    },

    #[error("need at least two graphs, got {0}")]
    TooFewGraphs(usize),
}

pub type Result<T> = std::result::Result<T, Error>;

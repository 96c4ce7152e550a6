//! Graph-based resilience analysis for networked infrastructure, built
//! around water distribution networks: structural measures, Laplacian and
//! adjacency spectra, distance-distribution dissimilarity, and spectral
//! clustering that surfaces the edges whose joint failure disconnects the
//! network.
//!
//! The crate is organized along the analysis pipeline:
//!
//! - [`graph`]: immutable simple graphs, shortest paths, components
//! - [`measures`]: density, clustering coefficient, centralities
//! - [`eigen`] / [`spectral`]: dense symmetric eigensolver and the spectral
//!   connectivity measures built on it
//! - [`dissimilarity`]: node distance distributions, NND and D(G,G')
//! - [`clustering`]: spectral embedding, k-means, cut-edge verification
//! - [`ingest`]: CSV edge lists, EPANET INP topology, leaf pruning
//! - [`generators`]: small deterministic graph families

pub mod clustering;
pub mod dissimilarity;
pub mod eigen;
pub mod error;
pub mod generators;
pub mod graph;
pub mod ingest;
pub mod matrix;
pub mod measures;
pub mod spectral;

pub use error::{Error, Result};
pub use graph::{ComponentLabeling, DistanceMatrix, Graph, UNREACHABLE};
pub use matrix::SquareMatrix;

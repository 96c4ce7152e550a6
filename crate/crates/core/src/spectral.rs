//! Graph spectra: Laplacian/adjacency eigenvalues and the connectivity
//! measures derived from them.

use crate::eigen::{symmetric_eigen, SymmetricEigen};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Spectral scalars and vectors for one graph.
#[derive(Debug, Clone)]
pub struct SpectralSummary {
    /// Laplacian eigenvalues, ascending (λ₁ = 0 within tolerance).
    pub laplacian_eigenvalues: Vec<f64>,
    /// Adjacency eigenvalues, descending (φ₁ first).
    pub adjacency_eigenvalues: Vec<f64>,
    /// λ₂ of the Laplacian.
    pub algebraic_connectivity: f64,
    /// λ_n - λ_{n-1} of the Laplacian.
    pub spectral_gap_laplacian: f64,
    /// φ₁ - φ₂ of the adjacency matrix.
    pub spectral_gap_adjacency: f64,
    /// Count of near-zero Laplacian eigenvalues (= component count).
    pub zero_multiplicity: usize,
    /// Eigenvector of λ₂; `None` when the graph is disconnected.
    pub fiedler_vector: Option<Vec<f64>>,
}

/// Default tolerance below which a Laplacian eigenvalue counts as zero.
pub fn default_zero_tolerance(n: usize) -> f64 {
    1e-9 * n as f64
}

fn laplacian_eigen(g: &Graph) -> Result<SymmetricEigen> {
    symmetric_eigen(&g.laplacian_matrix())
}

/// Second-smallest Laplacian eigenvalue; ≈0 exactly when disconnected.
pub fn algebraic_connectivity(g: &Graph) -> Result<f64> {
    if g.n() < 2 {
        return Err(Error::TooFewNodes { needed: 2, actual: g.n() });
    }
    Ok(laplacian_eigen(g)?.values[1])
}

/// Difference between the two largest Laplacian eigenvalues.
pub fn spectral_gap(g: &Graph) -> Result<f64> {
    if g.n() < 2 {
        return Err(Error::TooFewNodes { needed: 2, actual: g.n() });
    }
    let values = laplacian_eigen(g)?.values;
    Ok(values[g.n() - 1] - values[g.n() - 2])
}

/// Difference between the two largest adjacency eigenvalues (φ₁ - φ₂).
pub fn adjacency_spectral_gap(g: &Graph) -> Result<f64> {
    if g.n() < 2 {
        return Err(Error::TooFewNodes { needed: 2, actual: g.n() });
    }
    let values = symmetric_eigen(&g.adjacency_matrix())?.values;
    Ok(values[g.n() - 1] - values[g.n() - 2])
}

/// Multiplicity of the Laplacian zero eigenvalue, i.e. the number of
/// connected components. `tol` defaults to [`default_zero_tolerance`].
pub fn zero_multiplicity(g: &Graph, tol: Option<f64>) -> Result<usize> {
    if g.n() == 0 {
        return Ok(0);
    }
    let tol = tol.unwrap_or_else(|| default_zero_tolerance(g.n()));
    let values = laplacian_eigen(g)?.values;
    Ok(values.iter().take_while(|&&v| v < tol).count())
}

/// Unit-norm eigenvector of λ₂ (sign fixed by the eigensolver convention).
pub fn fiedler_vector(g: &Graph) -> Result<Vec<f64>> {
    if g.n() < 2 {
        return Err(Error::TooFewNodes { needed: 2, actual: g.n() });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(laplacian_eigen(g)?.eigenvector(1))
}

/// Computes the full spectral bundle in one pass over both matrices.
pub fn spectral_summary(g: &Graph) -> Result<SpectralSummary> {
    let n = g.n();
    if n < 2 {
        return Err(Error::TooFewNodes { needed: 2, actual: n });
    }
    let lap = laplacian_eigen(g)?;
    let adj = symmetric_eigen(&g.adjacency_matrix())?;
    let tol = default_zero_tolerance(n);
    let zero_multiplicity = lap.values.iter().take_while(|&&v| v < tol).count();
    let connected = zero_multiplicity == 1;
    let mut adjacency_eigenvalues = adj.values.clone();
    adjacency_eigenvalues.reverse();
    Ok(SpectralSummary {
        algebraic_connectivity: lap.values[1],
        spectral_gap_laplacian: lap.values[n - 1] - lap.values[n - 2],
        spectral_gap_adjacency: adjacency_eigenvalues[0] - adjacency_eigenvalues[1],
        zero_multiplicity,
        fiedler_vector: connected.then(|| lap.eigenvector(1)),
        laplacian_eigenvalues: lap.values,
        adjacency_eigenvalues,
    })
}

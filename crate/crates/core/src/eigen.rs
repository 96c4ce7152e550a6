//! Dense symmetric eigendecomposition.
//!
//! Householder reduction to tridiagonal form followed by the implicit-QL
//! iteration, after the classic EISPACK tred2/tql2 routines. Deterministic:
//! identical input bytes give identical output bytes.

use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;

/// Largest admissible |m_ij - m_ji| before the input is rejected.
pub const SYMMETRY_TOL: f64 = 1e-12;

const MAX_QL_ITER: usize = 50;

/// Eigendecomposition of a symmetric matrix: `values` ascending, `vectors`
/// holding the matching orthonormal eigenvectors as columns.
#[derive(Debug, Clone)]
pub struct SymmetricEigen {
    pub values: Vec<f64>,
    pub vectors: SquareMatrix,
}

impl SymmetricEigen {
    pub fn eigenvector(&self, j: usize) -> Vec<f64> {
        self.vectors.column(j)
    }
}

/// Full eigendecomposition of a symmetric matrix.
///
/// Fails with [`Error::NotSymmetric`] when any |m_ij - m_ji| exceeds
/// [`SYMMETRY_TOL`], and with [`Error::NoConvergence`] should the QL
/// iteration stall (practically unreachable for real symmetric input).
/// Each eigenvector's first entry larger than 1e-12 in magnitude is made
/// positive so repeated runs agree bit-for-bit.
pub fn symmetric_eigen(m: &SquareMatrix) -> Result<SymmetricEigen> {
    let asym = m.max_asymmetry();
    if asym > SYMMETRY_TOL {
        return Err(Error::NotSymmetric(asym));
    }
    let n = m.n();
    if n == 0 {
        return Ok(SymmetricEigen {
            values: Vec::new(),
            vectors: SquareMatrix::zeros(0),
        });
    }
    let mut v = m.clone();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    tred2(&mut v, &mut d, &mut e);
    tql2(&mut v, &mut d, &mut e)?;
    apply_sign_convention(&mut v);
    Ok(SymmetricEigen {
        values: d,
        vectors: v,
    })
}

fn apply_sign_convention(v: &mut SquareMatrix) {
    let n = v.n();
    for j in 0..n {
        for i in 0..n {
            let x = v[(i, j)];
            if x.abs() > 1e-12 {
                if x < 0.0 {
                    for k in 0..n {
                        v[(k, j)] = -v[(k, j)];
                    }
                }
                break;
            }
        }
    }
}

/// Householder reduction of `v` (symmetric) to tridiagonal form; on return
/// `d` holds the diagonal, `e` the subdiagonal, and `v` the accumulated
/// orthogonal transformation.
fn tred2(v: &mut SquareMatrix, d: &mut [f64], e: &mut [f64]) {
    let n = v.n();
    for j in 0..n {
        d[j] = v[(n - 1, j)];
    }

    for i in (1..n).rev() {
        let mut scale = 0.0;
        let mut h = 0.0;
        for item in d.iter().take(i) {
            scale += item.abs();
        }
        if scale == 0.0 {
            e[i] = d[i - 1];
            for j in 0..i {
                d[j] = v[(i - 1, j)];
                v[(i, j)] = 0.0;
                v[(j, i)] = 0.0;
            }
        } else {
            for k in 0..i {
                d[k] /= scale;
                h += d[k] * d[k];
            }
            let f = d[i - 1];
            let mut g = h.sqrt();
            if f > 0.0 {
                g = -g;
            }
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            for item in e.iter_mut().take(i) {
                *item = 0.0;
            }
            for j in 0..i {
                let f = d[j];
                v[(j, i)] = f;
                let mut g = e[j] + v[(j, j)] * f;
                for k in (j + 1)..i {
                    g += v[(k, j)] * d[k];
                    e[k] += v[(k, j)] * f;
                }
                e[j] = g;
            }
            let mut f = 0.0;
            for j in 0..i {
                e[j] /= h;
                f += e[j] * d[j];
            }
            let hh = f / (h + h);
            for j in 0..i {
                e[j] -= hh * d[j];
            }
            for j in 0..i {
                let f = d[j];
                let g = e[j];
                for k in j..i {
                    v[(k, j)] -= f * e[k] + g * d[k];
                }
                d[j] = v[(i - 1, j)];
                v[(i, j)] = 0.0;
            }
        }
        d[i] = h;
    }

    // accumulate transformations
    for i in 0..(n - 1) {
        v[(n - 1, i)] = v[(i, i)];
        v[(i, i)] = 1.0;
        let h = d[i + 1];
        if h != 0.0 {
            for k in 0..=i {
                d[k] = v[(k, i + 1)] / h;
            }
            for j in 0..=i {
                let mut g = 0.0;
                for k in 0..=i {
                    g += v[(k, i + 1)] * v[(k, j)];
                }
                for k in 0..=i {
                    v[(k, j)] -= g * d[k];
                }
            }
        }
        for k in 0..=i {
            v[(k, i + 1)] = 0.0;
        }
    }
    for j in 0..n {
        d[j] = v[(n - 1, j)];
        v[(n - 1, j)] = 0.0;
    }
    v[(n - 1, n - 1)] = 1.0;
    e[0] = 0.0;
}

/// Implicit-QL iteration on the tridiagonal (d, e); eigenvectors accumulate
/// into `v`. Values and vectors are sorted ascending on return.
fn tql2(v: &mut SquareMatrix, d: &mut [f64], e: &mut [f64]) -> Result<()> {
    let n = v.n();
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    let mut f = 0.0f64;
    let mut tst1 = 0.0f64;
    let eps = 2.0f64.powi(-52);
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n {
            if e[m].abs() <= eps * tst1 {
                break;
            }
            m += 1;
        }
        if m > l {
            let mut iter = 0;
            loop {
                iter += 1;
                if iter > MAX_QL_ITER {
                    return Err(Error::NoConvergence(MAX_QL_ITER));
                }
                // implicit shift
                let g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = p.hypot(1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut h = g - d[l];
                for item in d.iter_mut().take(n).skip(l + 2) {
                    *item -= h;
                }
                f += h;

                // implicit QL sweep
                p = d[m];
                let mut c = 1.0f64;
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = 0.0f64;
                let mut s2 = 0.0f64;
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    let g = c * e[i];
                    h = c * p;
                    r = p.hypot(e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                    for k in 0..n {
                        let h = v[(k, i + 1)];
                        v[(k, i + 1)] = s * v[(k, i)] + c * h;
                        v[(k, i)] = c * v[(k, i)] - s * h;
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
                if e[l].abs() <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = 0.0;
    }

    // sort ascending, carrying eigenvectors along
    for i in 0..n.saturating_sub(1) {
        let mut k = i;
        let mut p = d[i];
        for j in (i + 1)..n {
            if d[j] < p {
                k = j;
                p = d[j];
            }
        }
        if k != i {
            d[k] = d[i];
            d[i] = p;
            v.swap_columns(i, k);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn residual(m: &SquareMatrix, eig: &SymmetricEigen) -> f64 {
        let n = m.n();
        let mut worst = 0.0f64;
        for j in 0..n {
            let v = eig.eigenvector(j);
            let mv = m.mul_vec(&v);
            for i in 0..n {
                worst = worst.max((mv[i] - eig.values[j] * v[i]).abs());
            }
        }
        worst
    }

    fn orthonormality_defect(eig: &SymmetricEigen) -> f64 {
        let n = eig.values.len();
        let mut worst = 0.0f64;
        for a in 0..n {
            let va = eig.eigenvector(a);
            for b in a..n {
                let vb = eig.eigenvector(b);
                let dot: f64 = va.iter().zip(&vb).map(|(x, y)| x * y).sum();
                let expect = if a == b { 1.0 } else { 0.0 };
                worst = worst.max((dot - expect).abs());
            }
        }
        worst
    }

    #[test]
    fn laplacian_k3_spectrum() {
        let l = generators::complete(3).laplacian_matrix();
        let eig = symmetric_eigen(&l).unwrap();
        assert!((eig.values[0]).abs() < 1e-12);
        assert!((eig.values[1] - 3.0).abs() < 1e-10);
        assert!((eig.values[2] - 3.0).abs() < 1e-10);
    }

    #[test]
    fn laplacian_p3_spectrum() {
        let l = generators::path(3).laplacian_matrix();
        let eig = symmetric_eigen(&l).unwrap();
        let expect = [0.0, 1.0, 3.0];
        for (got, want) in eig.values.iter().zip(expect) {
            assert!((got - want).abs() < 1e-10);
        }
    }

    #[test]
    fn path_laplacian_analytic_spectrum() {
        // eigenvalues of L(P_n) are 2(1 - cos(k*pi/n)), k = 0..n-1
        for n in [5usize, 10] {
            let l = generators::path(n).laplacian_matrix();
            let eig = symmetric_eigen(&l).unwrap();
            let mut expect: Vec<f64> = (0..n)
                .map(|k| 2.0 * (1.0 - (k as f64 * std::f64::consts::PI / n as f64).cos()))
                .collect();
            expect.sort_by(f64::total_cmp);
            for (got, want) in eig.values.iter().zip(expect) {
                assert!((got - want).abs() < 1e-9, "n={n}: {got} vs {want}");
            }
        }
    }

    #[test]
    fn residuals_and_orthonormality() {
        for g in [
            generators::complete(6),
            generators::barbell(4),
            generators::cycle(9),
            generators::star(8),
        ] {
            for m in [g.laplacian_matrix(), g.adjacency_matrix()] {
                let eig = symmetric_eigen(&m).unwrap();
                let bound = 1e-8 * m.max_abs().max(1.0);
                assert!(residual(&m, &eig) <= bound);
                assert!(orthonormality_defect(&eig) <= 1e-8);
            }
        }
    }

    #[test]
    fn rejects_asymmetric() {
        let mut m = SquareMatrix::zeros(2);
        m[(0, 1)] = 1.0;
        assert!(matches!(
            symmetric_eigen(&m).unwrap_err(),
            Error::NotSymmetric(_)
        ));
    }

    #[test]
    fn deterministic_and_sign_fixed() {
        let m = generators::barbell(3).laplacian_matrix();
        let a = symmetric_eigen(&m).unwrap();
        let b = symmetric_eigen(&m).unwrap();
        assert_eq!(a.values, b.values);
        assert_eq!(a.vectors, b.vectors);
        for j in 0..m.n() {
            let v = a.eigenvector(j);
            let first = v.iter().find(|x| x.abs() > 1e-12).unwrap();
            assert!(*first > 0.0);
        }
    }

    #[test]
    fn tiny_matrices() {
        let eig = symmetric_eigen(&SquareMatrix::zeros(0)).unwrap();
        assert!(eig.values.is_empty());
        let mut one = SquareMatrix::zeros(1);
        one[(0, 0)] = 4.0;
        let eig = symmetric_eigen(&one).unwrap();
        assert_eq!(eig.values, vec![4.0]);
        assert_eq!(eig.vectors[(0, 0)], 1.0);
    }
}

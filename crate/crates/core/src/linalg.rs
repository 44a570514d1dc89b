//! Dense symmetric matrices and a cyclic Jacobi eigensolver.

/// Relative off-diagonal threshold: iteration stops once the off-diagonal
/// Frobenius norm falls to `OFF_TOL * ||M||_F`.
pub const OFF_TOL: f64 = 1e-12;
pub const MAX_SWEEPS: usize = 100;

use crate::error::{Error, Result};

/// A dense, exactly symmetric matrix (row-major).
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        SymMatrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    /// Builds from a row-major array; fails unless `data[i][j] == data[j][i]`
    /// holds exactly.
    pub fn from_row_major(n: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != n * n {
            return Err(Error::DimensionMismatch {
                left: data.len(),
                right: n * n,
            });
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if data[i * n + j] != data[j * n + i] {
                    return Err(Error::InvalidArgument(format!(
                        "matrix is not symmetric at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(SymMatrix { n, data })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
        self.data[j * self.n + i] = v;
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        (0..self.n)
            .map(|i| {
                self.data[i * self.n..(i + 1) * self.n]
                    .iter()
                    .zip(x)
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    fn off_diagonal_norm(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                let v = self.get(i, j);
                s += 2.0 * v * v;
            }
        }
        s.sqrt()
    }
}

/// Eigenvalues in ascending order with their orthonormal eigenvectors.
/// `vectors[k]` belongs to `values[k]`.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenPairs {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<f64>>,
}

impl EigenPairs {
    /// Largest `||M v - lambda v|| / max(1, |lambda|)` over all pairs.
    pub fn max_scaled_residual(&self, m: &SymMatrix) -> f64 {
        self.values
            .iter()
            .zip(&self.vectors)
            .map(|(&lambda, v)| {
                let mv = m.mul_vec(v);
                let r: f64 = mv
                    .iter()
                    .zip(v)
                    .map(|(a, b)| (a - lambda * b).powi(2))
                    .sum::<f64>()
                    .sqrt();
                r / lambda.abs().max(1.0)
            })
            .fold(0.0, f64::max)
    }

    /// Largest deviation of `V^T V` from the identity.
    pub fn max_orthonormality_error(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for (a, va) in self.vectors.iter().enumerate() {
            for (b, vb) in self.vectors.iter().enumerate().skip(a) {
                let dot: f64 = va.iter().zip(vb).map(|(x, y)| x * y).sum();
                let target = if a == b { 1.0 } else { 0.0 };
                worst = worst.max((dot - target).abs());
            }
        }
        worst
    }
}

/// Cyclic Jacobi eigendecomposition.
///
/// Rotations sweep the strict upper triangle in row order, so the output is
/// a deterministic function of the input. Eigenpairs are sorted by
/// `(value, original diagonal index)`.
pub fn eig_sym(m: &SymMatrix) -> Result<EigenPairs> {
    eig_sym_named(m, "matrix")
}

/// As [`eig_sym`], naming the matrix in the non-convergence error.
pub fn eig_sym_named(m: &SymMatrix, name: &str) -> Result<EigenPairs> {
    let n = m.n();
    let mut a = m.clone();
    // v is stored column-major: column k is v[k*n..(k+1)*n]
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }

    let threshold = OFF_TOL * m.frobenius_norm();
    let mut converged = a.off_diagonal_norm() <= threshold;
    let mut sweeps = 0;
    while !converged && sweeps < MAX_SWEEPS {
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
        sweeps += 1;
        converged = a.off_diagonal_norm() <= threshold;
    }
    if !converged {
        return Err(Error::NoConvergence {
            matrix: name.to_string(),
            sweeps,
            residual: a.off_diagonal_norm(),
        });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a.get(i, i).total_cmp(&a.get(j, j)).then(i.cmp(&j)));
    let values = order.iter().map(|&i| a.get(i, i)).collect();
    let vectors = order
        .iter()
        .map(|&k| v[k * n..(k + 1) * n].to_vec())
        .collect();
    Ok(EigenPairs { values, vectors })
}

/// One Jacobi rotation annihilating `a[p][q]` (Golub & Van Loan, Alg. 8.5.1).
fn rotate(a: &mut SymMatrix, v: &mut [f64], p: usize, q: usize) {
    let apq = a.get(p, q);
    if apq == 0.0 {
        return;
    }
    let n = a.n();
    let app = a.get(p, p);
    let aqq = a.get(q, q);
    let tau = (aqq - app) / (2.0 * apq);
    let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
    let t = if tau == 0.0 { 1.0 } else { t };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a.get(k, p);
        let akq = a.get(k, q);
        a.set(k, p, c * akp - s * akq);
        a.set(k, q, s * akp + c * akq);
    }
    a.set(p, p, app - t * apq);
    a.set(q, q, aqq + t * apq);
    a.set(p, q, 0.0);

    for k in 0..n {
        let vkp = v[p * n + k];
        let vkq = v[q * n + k];
        v[p * n + k] = c * vkp - s * vkq;
        v[q * n + k] = s * vkp + c * vkq;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn check(m: &SymMatrix, e: &EigenPairs) {
        assert!(e.max_scaled_residual(m) <= 1e-8);
        assert!(e.max_orthonormality_error() <= 1e-8);
        assert!(e.values.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn identity() {
        let m = SymMatrix::from_row_major(2, vec![1.0, 0.0, 0.0, 1.0]).unwrap();
        let e = eig_sym(&m).unwrap();
        assert_eq!(e.values, vec![1.0, 1.0]);
        check(&m, &e);
    }

    #[test]
    fn k3_adjacency() {
        let m = SymMatrix::from_row_major(3, vec![0., 1., 1., 1., 0., 1., 1., 1., 0.]).unwrap();
        let e = eig_sym(&m).unwrap();
        for (got, want) in e.values.iter().zip([-1.0, -1.0, 2.0]) {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-12);
        }
        check(&m, &e);
    }

    #[test]
    fn p3_laplacian() {
        let m = SymMatrix::from_row_major(3, vec![1., -1., 0., -1., 2., -1., 0., -1., 1.]).unwrap();
        let e = eig_sym(&m).unwrap();
        for (got, want) in e.values.iter().zip([0.0, 1.0, 3.0]) {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-12);
        }
        check(&m, &e);
    }

    #[test]
    fn zero_and_empty_matrices() {
        let e = eig_sym(&SymMatrix::zeros(3)).unwrap();
        assert_eq!(e.values, vec![0.0; 3]);
        let e = eig_sym(&SymMatrix::zeros(0)).unwrap();
        assert!(e.values.is_empty());
    }

    #[test]
    fn deterministic() {
        let data: Vec<f64> = (0..25)
            .map(|k| ((k / 5) as f64 - (k % 5) as f64).abs().sin())
            .collect();
        let m = SymMatrix::from_row_major(5, data).unwrap();
        let a = eig_sym(&m).unwrap();
        let b = eig_sym(&m).unwrap();
        assert_eq!(a, b);
        check(&m, &a);
    }

    #[test]
    fn rejects_asymmetric() {
        assert!(SymMatrix::from_row_major(2, vec![0.0, 1.0, 2.0, 0.0]).is_err());
    }
}

//! Dense symmetric eigendecomposition by cyclic Jacobi rotations.

use super::{LaplacianKind, LaplacianMatrix};
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Sweep cap for the Jacobi iteration.
pub const MAX_SWEEPS: usize = 100;
/// Converged once the off-diagonal Frobenius mass drops below this.
pub const OFF_DIAGONAL_TOL: f64 = 1e-12;
/// Sorted eigenvalues closer than this belong to one eigenspace.
pub const GROUPING_TOL: f64 = 1e-8;

/// One eigenvalue with multiplicity and its orthogonal projection.
#[derive(Debug, Clone, PartialEq)]
pub struct Eigenspace<T> {
    pub value: T,
    /// Indices into [`SpectralDecomposition::basis`].
    pub members: Vec<usize>,
    /// Row-major `n x n` projection matrix.
    pub projection: Vec<T>,
}

impl<T: Real> Eigenspace<T> {
    pub fn multiplicity(&self) -> usize {
        self.members.len()
    }
}

/// Eigenvalues in descending order with an orthonormal eigenbasis.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralDecomposition<T> {
    pub kind: LaplacianKind,
    pub eigenvalues: Vec<T>,
    /// `basis[i]` is the unit eigenvector for `eigenvalues[i]`.
    pub basis: Vec<Vec<T>>,
    pub eigenspaces: Vec<Eigenspace<T>>,
}

impl<T: Real> SpectralDecomposition<T> {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    /// The eigenspace whose value is within `tol` of `mu`.
    pub fn eigenspace_near(&self, mu: T, tol: T) -> Option<&Eigenspace<T>> {
        self.eigenspaces.iter().find(|s| (s.value - mu).abs() <= tol)
    }

    /// `Σ_λ λ P_λ` as a dense row-major matrix.
    pub fn reconstruct(&self) -> Vec<T> {
        let n = self.dim();
        let mut out = vec![T::zero(); n * n];
        for s in &self.eigenspaces {
            for (o, p) in out.iter_mut().zip(&s.projection) {
                *o = *o + s.value * *p;
            }
        }
        out
    }
}

/// Raw symmetric eigensolve of a dense row-major matrix. Returns unsorted
/// eigenvalues and the eigenvectors as rows.
pub fn jacobi_eigen<T: Real>(matrix: &[T], n: usize) -> Result<(Vec<T>, Vec<Vec<T>>)> {
    assert_eq!(matrix.len(), n * n);
    let mut a = matrix.to_vec();
    // v is stored column-major: v[k * n + i] is component i of eigenvector k
    let mut v = vec![T::zero(); n * n];
    for i in 0..n {
        v[i * n + i] = T::one();
    }
    let frob = a.iter().fold(T::zero(), |acc, &x| acc + x * x).sqrt();
    let tol = T::lit(OFF_DIAGONAL_TOL).max(T::epsilon() * T::int(4 * n.max(1)) * frob);

    let off = |a: &[T]| -> T {
        let mut s = T::zero();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s = s + a[i * n + j] * a[i * n + j];
                }
            }
        }
        s.sqrt()
    };

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        if off(&a) < tol {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == T::zero() {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (T::int(2) * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt());
                let c = T::one() / (t * t + T::one()).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[p * n + k];
                    let vkq = v[q * n + k];
                    v[p * n + k] = c * vkp - s * vkq;
                    v[q * n + k] = s * vkp + c * vkq;
                }
            }
        }
    }
    if !converged && off(&a) >= tol {
        return Err(Error::ConvergenceFailure(MAX_SWEEPS));
    }
    let values = (0..n).map(|i| a[i * n + i]).collect();
    let vectors = (0..n).map(|k| v[k * n..(k + 1) * n].to_vec()).collect();
    Ok((values, vectors))
}

/// Eigendecomposition of a Laplacian, sorted descending and grouped into
/// eigenspaces.
pub fn eig_sym<T: Real>(l: &LaplacianMatrix<T>) -> Result<SpectralDecomposition<T>> {
    let n = l.dim();
    let (values, vectors) = jacobi_eigen(l.entries(), n)?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| values[j].partial_cmp(&values[i]).expect("finite eigenvalues"));
    let eigenvalues: Vec<T> = order.iter().map(|&i| values[i]).collect();
    let basis: Vec<Vec<T>> = order
        .iter()
        .map(|&i| {
            let mut x = vectors[i].clone();
            // deterministic sign: first entry of largest magnitude is positive
            let big = x.iter().fold(T::zero(), |m, &y| m.max(y.abs()));
            let lead = x.iter().copied().find(|y| y.abs() >= big - T::lit(1e-9)).unwrap_or(T::zero());
            if lead < T::zero() {
                x.iter_mut().for_each(|y| *y = -*y);
            }
            x
        })
        .collect();

    let mut eigenspaces = Vec::new();
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && eigenvalues[end - 1] - eigenvalues[end] <= T::lit(GROUPING_TOL) {
            end += 1;
        }
        let members: Vec<usize> = (start..end).collect();
        let value = members.iter().fold(T::zero(), |acc, &i| acc + eigenvalues[i]) / T::int(members.len());
        let mut projection = vec![T::zero(); n * n];
        for &m in &members {
            let phi = &basis[m];
            for i in 0..n {
                for j in 0..n {
                    projection[i * n + j] = projection[i * n + j] + phi[i] * phi[j];
                }
            }
        }
        eigenspaces.push(Eigenspace { value, members, projection });
        start = end;
    }
    Ok(SpectralDecomposition { kind: l.kind(), eigenvalues, basis, eigenspaces })
}

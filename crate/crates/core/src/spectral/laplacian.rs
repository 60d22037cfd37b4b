use serde::{Deserialize, Serialize};

use crate::cover::Support;
use crate::error::{Error, Result};
use crate::graph::{classify, Graph, GraphKind};
use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LaplacianKind {
    Vertex,
    Edge,
}

impl LaplacianKind {
    pub fn support(self) -> Support {
        match self {
            LaplacianKind::Vertex => Support::Vertices,
            LaplacianKind::Edge => Support::Edges,
        }
    }
}

/// A degree-normalised adjacency operator: each row averages over
/// neighbours, so row sums are 1.
#[derive(Debug, Clone, PartialEq)]
pub struct LaplacianMatrix<T> {
    kind: LaplacianKind,
    n: usize,
    divisor: usize,
    entries: Vec<T>,
}

impl<T: Real> LaplacianMatrix<T> {
    /// Wraps a dense row-major symmetric matrix.
    pub fn from_dense(kind: LaplacianKind, n: usize, divisor: usize, entries: Vec<T>) -> Self {
        assert_eq!(entries.len(), n * n);
        LaplacianMatrix { kind, n, divisor, entries }
    }

    pub fn kind(&self) -> LaplacianKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// The degree the adjacency counts were divided by.
    pub fn divisor(&self) -> usize {
        self.divisor
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn apply(&self, x: &[T]) -> Vec<T> {
        (0..self.n).map(|i| (0..self.n).fold(T::zero(), |acc, j| acc + self.get(i, j) * x[j])).collect()
    }

    pub fn max_asymmetry(&self) -> T {
        let mut worst = T::zero();
        for i in 0..self.n {
            for j in 0..i {
                worst = worst.max((self.get(i, j) - self.get(j, i)).abs());
            }
        }
        worst
    }
}

/// `(1/(q+1)) A_G` for a `(q+1)`-regular graph. Multi-edges add their
/// multiplicity and a loop adds 2 on the diagonal.
pub fn vertex_laplacian<T: Real>(g: &Graph) -> Result<LaplacianMatrix<T>> {
    let d = g.degree(0);
    if d == 0 || g.degrees().iter().any(|&x| x != d) {
        return Err(Error::NotRegular);
    }
    let n = g.vertex_count();
    let w = T::one() / T::int(d);
    let mut entries = vec![T::zero(); n * n];
    for he in g.half_edges() {
        entries[he.tail * n + he.head] = entries[he.tail * n + he.head] + w;
    }
    Ok(LaplacianMatrix { kind: LaplacianKind::Vertex, n, divisor: d, entries })
}

/// `(1/d') A_{L(G)}` for a simple regular (`q >= 2`) or semiregular
/// (`p, q >= 2`) graph.
pub fn edge_laplacian<T: Real>(g: &Graph) -> Result<LaplacianMatrix<T>> {
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    let divisor = match classify(g).kind {
        GraphKind::Regular { q } | GraphKind::RegularBipartite { q, .. } if q >= 2 => 2 * q,
        GraphKind::Semiregular { p, q, .. } if p >= 2 && q >= 2 => p + q,
        kind => return Err(Error::UnsupportedDegreeStructure(format!("{kind:?}"))),
    };
    let lg = g.line_graph()?;
    let n = lg.vertex_count();
    let w = T::one() / T::int(divisor);
    let mut entries = vec![T::zero(); n * n];
    for (a, b) in lg.edges() {
        entries[a * n + b] = w;
        entries[b * n + a] = w;
    }
    Ok(LaplacianMatrix { kind: LaplacianKind::Edge, n, divisor, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Generator, GraphFlags};

    #[test]
    fn row_sums_and_symmetry() {
        for gen in [Generator::Complete(4), Generator::Petersen, Generator::CompleteBipartite(3, 3)] {
            let g = generate(&gen).unwrap();
            let l = vertex_laplacian::<f64>(&g).unwrap();
            assert!(l.max_asymmetry() < 1e-14);
            for i in 0..l.dim() {
                let s: f64 = (0..l.dim()).map(|j| l.get(i, j)).sum();
                assert!((s - 1.0).abs() < 1e-14);
            }
            let le = edge_laplacian::<f64>(&g).unwrap();
            assert_eq!(le.dim(), g.edge_count());
            for i in 0..le.dim() {
                let s: f64 = (0..le.dim()).map(|j| le.get(i, j)).sum();
                assert!((s - 1.0).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn loops_count_twice() {
        let g = Graph::from_edges(2, &[(0, 0), (0, 1), (1, 1)], GraphFlags::ANY).unwrap();
        let l = vertex_laplacian::<f64>(&g).unwrap();
        assert_eq!(l.divisor(), 3);
        assert!((l.get(0, 0) - 2.0 / 3.0).abs() < 1e-15);
        assert!((l.get(0, 1) - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn rejections() {
        let lollipop = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (2, 3)], GraphFlags::SIMPLE).unwrap();
        assert_eq!(vertex_laplacian::<f64>(&lollipop), Err(Error::NotRegular));
        let multi = Graph::from_edges(2, &[(0, 1), (0, 1), (0, 1)], GraphFlags::ANY).unwrap();
        assert_eq!(edge_laplacian::<f64>(&multi), Err(Error::NotSimple));
        let k23 = generate(&Generator::CompleteBipartite(2, 3)).unwrap();
        assert!(matches!(edge_laplacian::<f64>(&k23), Err(Error::UnsupportedDegreeStructure(_))));
    }
}

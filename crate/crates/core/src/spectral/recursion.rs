//! Radial recursions for arc averages of lifted eigenfunctions.

use serde::{Deserialize, Serialize};

use crate::scalar::Real;

/// Which recursion governs `F(n)`.
///
/// For `SemiregularEdge`, `p + 1` is the degree at the tail of the arc's
/// base edge and `q + 1` at its head.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Regime {
    RegularVertex { q: usize },
    RegularEdge { q: usize },
    SemiregularEdge { p: usize, q: usize },
}

impl Regime {
    /// `(s, siblings, children)` for the step from radius `n` to `n + 1`:
    /// the element at radius `n` has `s` neighbours in total, one parent,
    /// `siblings` at its own radius and `children` at radius `n + 1`.
    pub fn step_counts(self, n: usize) -> (usize, usize, usize) {
        match self {
            Regime::RegularVertex { q } => (q + 1, 0, q),
            Regime::RegularEdge { q } => (2 * q, q - 1, q),
            Regime::SemiregularEdge { p, q } if n.is_multiple_of(2) => (p + q, p - 1, q),
            Regime::SemiregularEdge { p, q } => (p + q, q - 1, p),
        }
    }

    /// `F(n + 1)` from `F(n)` and `F(n - 1)`, valid for `n >= 1`.
    pub fn advance<T: Real>(self, mu: T, n: usize, current: T, previous: T) -> T {
        let (s, siblings, children) = self.step_counts(n);
        ((T::int(s) * mu - T::int(siblings)) * current - previous) / T::int(children)
    }

    /// `F(n + 1) - ((s μ - siblings) F(n) - F(n - 1)) / children`.
    pub fn residual<T: Real>(self, mu: T, n: usize, next: T, current: T, previous: T) -> T {
        next - self.advance(mu, n, current, previous)
    }
}

/// `F(n)` obtained by iterating the recursion from `F(0)` and `F(1)`.
pub fn predicted_f<T: Real>(f0: T, f1: T, mu: T, regime: Regime, n: usize) -> T {
    predicted_series(f0, f1, mu, regime, n)[n]
}

/// `[F(0), ..., F(n)]`.
pub fn predicted_series<T: Real>(f0: T, f1: T, mu: T, regime: Regime, n: usize) -> Vec<T> {
    let mut out = vec![f0, f1];
    for k in 1..n {
        let next = regime.advance(mu, k, out[k], out[k - 1]);
        out.push(next);
    }
    out.truncate(n + 1);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::{arc_average_transfer, ScalarField, Support};
    use crate::graph::{generate, DirectedEdge, Generator};
    use crate::spectral::{eig_sym, vertex_laplacian};

    #[test]
    fn constants_are_fixed() {
        for regime in
            [Regime::RegularVertex { q: 2 }, Regime::RegularEdge { q: 3 }, Regime::SemiregularEdge { p: 2, q: 3 }]
        {
            for n in 0..10 {
                assert!((predicted_f(2.5f64, 2.5, 1.0, regime, n) - 2.5).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn star_condition_gives_pure_geometric() {
        let q = 3;
        let f0 = 1.0;
        let f1 = -f0 / q as f64;
        for n in 0..12 {
            let expected = (-1.0 / q as f64).powi(n as i32) * f0;
            assert!((predicted_f(f0, f1, -1.0 / q as f64, Regime::RegularEdge { q }, n) - expected).abs() < 1e-14);
        }
    }

    #[test]
    fn k4_eigenvectors_match_cover() {
        let g = generate(&Generator::Complete(4)).unwrap();
        let d = eig_sym(&vertex_laplacian::<f64>(&g).unwrap()).unwrap();
        for (mu, phi) in d.eigenvalues.iter().zip(&d.basis) {
            let f = ScalarField::new(Support::Vertices, phi.clone()).unwrap();
            let a = DirectedEdge(0);
            let f0 = arc_average_transfer(&g, &f, a, 0).unwrap();
            let f1 = arc_average_transfer(&g, &f, a, 1).unwrap();
            let series = predicted_series(f0, f1, *mu, Regime::RegularVertex { q: 2 }, 15);
            for (n, p) in series.iter().enumerate() {
                let actual = arc_average_transfer(&g, &f, a, n).unwrap();
                assert!((actual - p).abs() < 1e-10, "n = {n}");
            }
        }
    }
}

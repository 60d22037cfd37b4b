//! Per-eigenvalue convergence rates for regular graphs.
//!
//! The radial average `F(n)` of a lifted eigenfunction satisfies a
//! three-term recursion whose characteristic roots `α±` decide the rate:
//! complex roots (negative discriminant) decay like `q^{-1/2}`, a double
//! root adds a linear factor, and real roots decay like the larger modulus.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// `|D| < DISCRIMINANT_TOL` counts as a double root.
pub const DISCRIMINANT_TOL: f64 = 1e-10;
/// Tolerance for recognising the special eigenvalues `±1`, `-1/q`, `-2/(p+q)`.
pub const EIGENVALUE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RateKind {
    /// `|F(n)| <= C β^n`.
    ExactGeometric,
    /// `|F(n)| <= C (1 + n) β^n` (double characteristic root).
    GeometricWithPolynomialFactor,
    /// The trivial eigenvalue: the average is exact from the first step.
    ExactOneStep,
}

impl RateKind {
    pub fn name(self) -> &'static str {
        match self {
            RateKind::ExactGeometric => "exact_geometric",
            RateKind::GeometricWithPolynomialFactor => "geometric_polynomial",
            RateKind::ExactOneStep => "exact_one_step",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateTerm<T> {
    pub beta: T,
    pub kind: RateKind,
}

fn near<T: Real>(a: T, b: T) -> bool {
    (a - b).abs() <= T::lit(EIGENVALUE_TOL)
}

/// Roots of `x^2 - b x + c` as complex numbers, `+` root first.
pub(crate) fn quadratic_roots<T: Real>(b: T, c: T) -> (Complex<T>, Complex<T>) {
    let disc = b * b - T::int(4) * c;
    let half = T::lit(0.5);
    if disc >= T::zero() {
        let s = disc.sqrt();
        (Complex::new((b + s) * half, T::zero()), Complex::new((b - s) * half, T::zero()))
    } else {
        let s = (-disc).sqrt();
        (Complex::new(b * half, s * half), Complex::new(b * half, -s * half))
    }
}

/// `D = (q+1)^2 μ^2 - 4q` for the vertex recursion.
pub fn vertex_discriminant<T: Real>(mu: T, q: usize) -> T {
    let q1 = T::int(q + 1);
    q1 * q1 * mu * mu - T::int(4 * q)
}

/// `α± = (q+1)μ/(2q) ± √D/(2q)`, roots of `x^2 - ((q+1)/q) μ x + 1/q`.
pub fn vertex_roots<T: Real>(mu: T, q: usize) -> (Complex<T>, Complex<T>) {
    let qf = T::int(q);
    quadratic_roots(T::int(q + 1) / qf * mu, T::one() / qf)
}

/// Rate for a vertex-Laplacian eigenvalue of a nonbipartite
/// `(q+1)`-regular graph.
pub fn beta_regular_vertex<T: Real>(mu: T, q: usize) -> Result<RateTerm<T>> {
    if q < 2 {
        return Err(Error::UnsupportedDegreeStructure(format!("q = {q} < 2")));
    }
    if near(mu, -T::one()) {
        return Err(Error::BipartiteEigenvalue);
    }
    if near(mu, T::one()) {
        return Ok(RateTerm { beta: T::zero(), kind: RateKind::ExactOneStep });
    }
    if mu.abs() > T::one() {
        return Err(Error::EigenvalueOutOfRange(mu.to_f64_lossy()));
    }
    let qf = T::int(q);
    let d = vertex_discriminant(mu, q);
    let inv_sqrt_q = qf.sqrt().recip();
    Ok(if d.abs() < T::lit(DISCRIMINANT_TOL) {
        RateTerm { beta: inv_sqrt_q, kind: RateKind::GeometricWithPolynomialFactor }
    } else if d < T::zero() {
        RateTerm { beta: inv_sqrt_q, kind: RateKind::ExactGeometric }
    } else {
        let beta = (T::int(q + 1) * mu.abs() + d.sqrt()) / (T::int(2) * qf);
        RateTerm { beta, kind: RateKind::ExactGeometric }
    })
}

/// `D = (q - 1 - 2μq)^2 - 4q` for the edge recursion.
pub fn edge_discriminant<T: Real>(mu: T, q: usize) -> T {
    let qf = T::int(q);
    let b = qf - T::one() - T::int(2) * mu * qf;
    b * b - T::int(4 * q)
}

/// `α± = μ - (q-1)/(2q) ± √D/(2q)`, roots of
/// `x^2 + ((q-1-2μq)/q) x + 1/q`.
pub fn edge_roots<T: Real>(mu: T, q: usize) -> (Complex<T>, Complex<T>) {
    let qf = T::int(q);
    quadratic_roots(-(qf - T::one() - T::int(2) * mu * qf) / qf, T::one() / qf)
}

/// Rate for an edge-Laplacian eigenvalue of a simple `(q+1)`-regular graph.
/// At `μ = -1/q` the star sums vanish and `F(n) = (-1/q)^n F(0)`.
pub fn beta_regular_edge<T: Real>(mu: T, q: usize) -> Result<RateTerm<T>> {
    if q < 2 {
        return Err(Error::UnsupportedDegreeStructure(format!("q = {q} < 2")));
    }
    let qf = T::int(q);
    let floor = -qf.recip();
    if mu < floor - T::lit(EIGENVALUE_TOL) || mu > T::one() + T::lit(EIGENVALUE_TOL) {
        return Err(Error::EigenvalueOutOfRange(mu.to_f64_lossy()));
    }
    if near(mu, T::one()) {
        return Ok(RateTerm { beta: T::zero(), kind: RateKind::ExactOneStep });
    }
    if near(mu, floor) {
        return Ok(RateTerm { beta: qf.recip(), kind: RateKind::ExactGeometric });
    }
    let d = edge_discriminant(mu, q);
    let inv_sqrt_q = qf.sqrt().recip();
    Ok(if d.abs() < T::lit(DISCRIMINANT_TOL) {
        RateTerm { beta: inv_sqrt_q, kind: RateKind::GeometricWithPolynomialFactor }
    } else if d < T::zero() {
        RateTerm { beta: inv_sqrt_q, kind: RateKind::ExactGeometric }
    } else {
        let (a, b) = edge_roots(mu, q);
        RateTerm { beta: a.norm().max(b.norm()), kind: RateKind::ExactGeometric }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn vertex_cases() {
        let t = beta_regular_vertex(-1.0 / 3.0, 2).unwrap();
        assert!((vertex_discriminant(-1.0f64 / 3.0, 2) + 7.0).abs() < 1e-12);
        assert!((t.beta - 2f64.powf(-0.5)).abs() < 1e-15);
        assert_eq!(t.kind, RateKind::ExactGeometric);

        for q in 2..7 {
            let mu = 2.0 * (q as f64).sqrt() / (q as f64 + 1.0);
            let t = beta_regular_vertex(mu, q).unwrap();
            assert_eq!(t.kind, RateKind::GeometricWithPolynomialFactor);
            assert!((t.beta - (q as f64).powf(-0.5)).abs() < 1e-15);
        }

        let t = beta_regular_vertex(0.99, 2).unwrap();
        let expected = (3.0 * 0.99 + (9.0 * 0.9801f64 - 8.0).sqrt()) / 4.0;
        assert!((t.beta - expected).abs() < 1e-15);
        let (a, b) = vertex_roots(0.99, 2);
        for x in [a, b] {
            assert!((x * x - x * 1.5 * 0.99 + 0.5).norm() < 1e-12);
        }

        assert_eq!(beta_regular_vertex(-1.0, 2), Err(Error::BipartiteEigenvalue));
        assert_eq!(beta_regular_vertex(1.0, 2).unwrap().kind, RateKind::ExactOneStep);
    }

    #[test]
    fn edge_cases() {
        let t = beta_regular_edge(-0.5, 2).unwrap();
        assert_eq!(t.beta, 0.5);
        let t = beta_regular_edge(0.0, 2).unwrap();
        assert!((edge_discriminant(0.0f64, 2) + 7.0).abs() < 1e-12);
        assert!((t.beta - 2f64.powf(-0.5)).abs() < 1e-15);
        // before the star-sum correction the lower boundary root has modulus 1
        for q in 2..6 {
            let (_, minus) = edge_roots(-1.0 / q as f64, q);
            assert!((minus.norm() - 1.0).abs() < 1e-12);
        }
        assert!(matches!(beta_regular_edge(-0.6, 2), Err(Error::EigenvalueOutOfRange(_))));
    }

    proptest! {
        #[test]
        fn vertex_root_identities(q in 2usize..8, mu in -0.999f64..0.999) {
            let (a, b) = vertex_roots(mu, q);
            let qf = q as f64;
            for x in [a, b] {
                prop_assert!((x * x - x * ((qf + 1.0) / qf * mu) + 1.0 / qf).norm() < 1e-12);
            }
            prop_assert!(((a * b).re - 1.0 / qf).abs() < 1e-12);
            let t = beta_regular_vertex(mu, q).unwrap();
            prop_assert!(t.beta >= qf.powf(-0.5) - 1e-12 && t.beta < 1.0);
            prop_assert!((t.beta - a.norm().max(b.norm())).abs() < 1e-7);
        }

        #[test]
        fn edge_root_identities(q in 2usize..8, frac in 0.0f64..0.999) {
            let qf = q as f64;
            let mu = -1.0 / qf + frac * (1.0 + 1.0 / qf);
            let (a, b) = edge_roots(mu, q);
            for x in [a, b] {
                prop_assert!((x * x + x * ((qf - 1.0 - 2.0 * mu * qf) / qf) + 1.0 / qf).norm() < 1e-12);
            }
            prop_assert!(((a * b).re - 1.0 / qf).abs() < 1e-12);
            let t = beta_regular_edge(mu, q).unwrap();
            let in_range = (t.beta - 1.0 / qf).abs() < 1e-12 || (t.beta >= qf.powf(-0.5) - 1e-12 && t.beta < 1.0);
            prop_assert!(in_range);
        }
    }
}

//! Two-step analysis for edge arcs on semiregular graphs.
//!
//! Edge arcs based at a degree-`(p+1)` vertex branch alternately into `q`
//! and `p` children, so the radial averages obey a recursion with period
//! two. Advancing two radii at once gives a linear map `A` on
//! `(F(2k-1), F(2k-2))` with eigenvalues `t±(μ)` and `det A = 1/(pq)`.

use num_complex::Complex;

use super::rates::{RateKind, RateTerm, DISCRIMINANT_TOL, EIGENVALUE_TOL};
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Row-major 2x2 matrix.
pub type Matrix2<T> = [[T; 2]; 2];

/// `A` with `(F(2k+1), F(2k)) = A (F(2k-1), F(2k-2))`.
pub fn transfer_matrix<T: Real>(mu: T, p: usize, q: usize) -> Matrix2<T> {
    let (pf, qf) = (T::int(p), T::int(q));
    let ms = mu * T::int(p + q);
    let a = pf - T::one() - ms;
    let b = qf - T::one() - ms;
    let pq = pf * qf;
    [[(a * b - pf) / pq, a / pq], [-b / pf, -pf.recip()]]
}

/// `X = (p-1-μ(p+q))(q-1-μ(p+q)) - p - q`, so that `trace A = X/(pq)`.
fn trace_numerator<T: Real>(mu: T, p: usize, q: usize) -> T {
    let ms = mu * T::int(p + q);
    (T::int(p) - T::one() - ms) * (T::int(q) - T::one() - ms) - T::int(p + q)
}

/// `D(μ) = X^2 - 4pq`.
pub fn discriminant<T: Real>(mu: T, p: usize, q: usize) -> T {
    let x = trace_numerator(mu, p, q);
    x * x - T::int(4 * p * q)
}

/// Eigenvalues of the two-step map and the discriminant deciding whether
/// they are real.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoStepRoots<T> {
    pub plus: Complex<T>,
    pub minus: Complex<T>,
    pub discriminant: T,
}

impl<T: Real> TwoStepRoots<T> {
    pub fn is_complex(&self) -> bool {
        self.discriminant < T::zero()
    }
}

/// `t±(μ) = (X ± √D)/(2pq)`. A discriminant within
/// [`DISCRIMINANT_TOL`] of zero is treated as a double root.
pub fn t_pm<T: Real>(mu: T, p: usize, q: usize) -> TwoStepRoots<T> {
    let x = trace_numerator(mu, p, q);
    let d = x * x - T::int(4 * p * q);
    let denom = T::int(2 * p * q);
    let (plus, minus) = if d.abs() < T::lit(DISCRIMINANT_TOL) {
        let t = Complex::new(x / denom, T::zero());
        (t, t)
    } else if d >= T::zero() {
        let s = d.sqrt();
        (Complex::new((x + s) / denom, T::zero()), Complex::new((x - s) / denom, T::zero()))
    } else {
        let s = (-d).sqrt() / denom;
        (Complex::new(x / denom, s), Complex::new(x / denom, -s))
    };
    TwoStepRoots { plus, minus, discriminant: d }
}

/// The four zeros of `D`, ordered `[m_{-+}, m_{--}, m_{+-}, m_{++}]`.
pub fn discriminant_roots<T: Real>(p: usize, q: usize) -> [T; 4] {
    let (sp, sq) = (T::int(p).sqrt(), T::int(q).sqrt());
    let s = T::int(p + q);
    let diff = T::int(p.abs_diff(q));
    let m = |outer: T, inner: T| {
        let t = sp + inner * sq;
        (s - T::int(2) + outer * (diff * diff + T::int(4) * t * t).sqrt()) / (T::int(2) * s)
    };
    let one = T::one();
    [m(-one, one), m(-one, -one), m(one, -one), m(one, one)]
}

/// The only stationary point of `t±` where `D > 0`: `(p+q-2)/(2(p+q))`.
pub fn critical_point<T: Real>(p: usize, q: usize) -> T {
    T::int(p + q - 2) / T::int(2 * (p + q))
}

/// Open interval `((min(p,q)-1)/(p+q), (max(p,q)-1)/(p+q))` that contains
/// no edge-Laplacian eigenvalue. Empty when `p = q`.
pub fn forbidden_gap<T: Real>(p: usize, q: usize) -> (T, T) {
    let s = T::int(p + q);
    (T::int(p.min(q) - 1) / s, T::int(p.max(q) - 1) / s)
}

/// The four intervals with `D > 0` on which `t±` are monotone, in order
/// `[I_1, I_5, I_6, I_3]`, each as `(lo, hi)`.
pub fn monotone_intervals<T: Real>(p: usize, q: usize) -> [(T, T); 4] {
    let [m_mp, m_mm, m_pm, m_pp] = discriminant_roots::<T>(p, q);
    let (g0, g1) = forbidden_gap::<T>(p, q);
    [(-T::int(2) / T::int(p + q), m_mp), (m_mm, g0), (g1, m_pm), (m_pp, T::one())]
}

/// Per-radius rate `ρ` with `|F(n)| <= C ρ^n` for an edge-Laplacian
/// eigenvalue of a simple semiregular graph, arcs based at a
/// degree-`(p+1)` vertex.
pub fn beta_semiregular_edge<T: Real>(mu: T, p: usize, q: usize) -> Result<RateTerm<T>> {
    if p < 2 || q < 2 {
        return Err(Error::UnsupportedDegreeStructure(format!("p = {p}, q = {q}; both must be at least 2")));
    }
    let tol = T::lit(EIGENVALUE_TOL);
    let floor = -T::int(2) / T::int(p + q);
    if mu < floor - tol || mu > T::one() + tol {
        return Err(Error::EigenvalueOutOfRange(mu.to_f64_lossy()));
    }
    let (g0, g1) = forbidden_gap::<T>(p, q);
    if mu > g0 + tol && mu < g1 - tol {
        return Err(Error::ForbiddenGapEigenvalue(mu.to_f64_lossy()));
    }
    if (mu - T::one()).abs() <= tol {
        return Ok(RateTerm { beta: T::zero(), kind: RateKind::ExactOneStep });
    }
    let pq = T::int(p * q);
    if (mu - floor).abs() <= tol {
        return Ok(RateTerm { beta: pq.sqrt().recip(), kind: RateKind::ExactGeometric });
    }
    let roots = t_pm(mu, p, q);
    let d = roots.discriminant;
    let quarter = pq.powf(T::lit(-0.25));
    Ok(if d.abs() < T::lit(DISCRIMINANT_TOL) {
        RateTerm { beta: quarter, kind: RateKind::GeometricWithPolynomialFactor }
    } else if d < T::zero() {
        RateTerm { beta: quarter, kind: RateKind::ExactGeometric }
    } else {
        RateTerm { beta: roots.plus.norm().max(roots.minus.norm()).sqrt(), kind: RateKind::ExactGeometric }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn eig2(a: Matrix2<f64>) -> (Complex<f64>, Complex<f64>) {
        let tr = a[0][0] + a[1][1];
        let det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
        let s = Complex::new(tr * tr - 4.0 * det, 0.0).sqrt();
        ((s + tr) / 2.0, (-s + tr) / 2.0)
    }

    #[test]
    fn k34_boundary_value() {
        let r = t_pm(0.2f64, 2, 3);
        assert!((r.discriminant - 1.0).abs() < 1e-12);
        assert!((r.plus.re + 1.0 / 3.0).abs() < 1e-12);
        assert!((r.minus.re + 0.5).abs() < 1e-12);
        let t = beta_semiregular_edge(0.2, 2, 3).unwrap();
        assert!((t.beta - 0.5f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn special_values() {
        for (p, q) in [(2, 3), (3, 2), (2, 2), (4, 5)] {
            let s = (p + q) as f64;
            for mu in [1.0, -2.0 / s] {
                let r = t_pm(mu, p, q);
                assert!((r.plus.re - 1.0).abs() < 1e-12);
                assert!((r.minus.norm() - 1.0 / (p * q) as f64).abs() < 1e-12);
            }
            let b = beta_semiregular_edge(-2.0 / s, p, q).unwrap();
            assert!((b.beta - ((p * q) as f64).powf(-0.5)).abs() < 1e-15);
            for m in discriminant_roots::<f64>(p, q) {
                assert!(discriminant(m, p, q).abs() < 1e-9);
                let r = t_pm(m, p, q);
                assert!((r.plus.norm() - ((p * q) as f64).powf(-0.5)).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn gap_is_rejected() {
        assert!(matches!(beta_semiregular_edge(0.3, 2, 3), Err(Error::ForbiddenGapEigenvalue(_))));
        assert!(matches!(beta_semiregular_edge(-0.5, 2, 3), Err(Error::EigenvalueOutOfRange(_))));
        assert!(beta_semiregular_edge(0.3, 1, 3).is_err());
    }

    proptest! {
        #[test]
        fn matrix_invariants(p in 2usize..6, q in 2usize..6, mu in -0.5f64..1.0) {
            let a = transfer_matrix(mu, p, q);
            let det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
            prop_assert!((det - 1.0 / (p * q) as f64).abs() < 1e-12);
            let r = t_pm(mu, p, q);
            prop_assert!(((r.plus * r.minus).re - 1.0 / (p * q) as f64).abs() < 1e-12);
            let (e1, e2) = eig2(a);
            let close = |x: Complex<f64>, y: Complex<f64>| (x - y).norm() < 1e-6;
            prop_assert!((close(e1, r.plus) && close(e2, r.minus)) || (close(e1, r.minus) && close(e2, r.plus)));
        }

        #[test]
        fn roots_are_ordered(p in 2usize..9, q in 2usize..9) {
            let m = discriminant_roots::<f64>(p, q);
            prop_assert!(m[0] < m[1] && m[1] <= m[2] && m[2] < m[3]);
            prop_assert_eq!(p == q, m[2] - m[1] < 1e-12);
            let c = critical_point::<f64>(p, q);
            prop_assert!(m[1] <= c + 1e-15 && c <= m[2] + 1e-15);
        }
    }
}

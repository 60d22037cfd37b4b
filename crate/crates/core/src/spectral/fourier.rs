use super::SpectralDecomposition;
use crate::cover::ScalarField;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Projection norms at or below this mark an eigenspace inactive for a field.
pub const ACTIVITY_TOL: f64 = 1e-9;

/// `a_i = <f, φ_i>` plus the basis-independent norms `‖P_λ f‖`.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierCoefficients<T> {
    pub coefficients: Vec<T>,
    /// One entry per eigenspace, in the decomposition's order.
    pub eigenspace_norms: Vec<T>,
}

impl<T: Real> FourierCoefficients<T> {
    pub fn is_active(&self, eigenspace: usize) -> bool {
        self.eigenspace_norms[eigenspace] > T::lit(ACTIVITY_TOL)
    }
}

pub fn fourier_coefficients<T: Real>(
    f: &ScalarField<T>,
    decomposition: &SpectralDecomposition<T>,
) -> Result<FourierCoefficients<T>> {
    if f.support() != decomposition.kind.support() {
        return Err(Error::SupportMismatch);
    }
    let n = decomposition.dim();
    if f.len() != n {
        return Err(Error::FieldLength { expected: n, found: f.len() });
    }
    let coefficients = decomposition
        .basis
        .iter()
        .map(|phi| phi.iter().zip(f.values()).fold(T::zero(), |acc, (&p, &v)| acc + p * v))
        .collect();
    let eigenspace_norms = decomposition
        .eigenspaces
        .iter()
        .map(|s| {
            let mut sq = T::zero();
            for i in 0..n {
                let row = (0..n).fold(T::zero(), |acc, j| acc + s.projection[i * n + j] * *f.value(j));
                sq = sq + row * row;
            }
            sq.sqrt()
        })
        .collect();
    Ok(FourierCoefficients { coefficients, eigenspace_norms })
}

//! Laplacian spectra and the convergence rates they predict.

mod eigen;
mod fourier;
mod laplacian;
mod prediction;
mod rates;
mod recursion;
pub mod semiregular;

pub use eigen::{eig_sym, jacobi_eigen, Eigenspace, SpectralDecomposition, GROUPING_TOL, MAX_SWEEPS, OFF_DIAGONAL_TOL};
pub use fourier::{fourier_coefficients, FourierCoefficients, ACTIVITY_TOL};
pub use laplacian::{edge_laplacian, vertex_laplacian, LaplacianKind, LaplacianMatrix};
pub use prediction::{
    check_hypothesis, rate_prediction, rate_prediction_with, spectrum_for, EigenvalueRate, Hypothesis, RatePrediction,
    Theorem,
};
pub use rates::{
    beta_regular_edge, beta_regular_vertex, edge_discriminant, edge_roots, vertex_discriminant, vertex_roots, RateKind,
    RateTerm, DISCRIMINANT_TOL, EIGENVALUE_TOL,
};
pub use recursion::{predicted_f, predicted_series, Regime};
pub use semiregular::{beta_semiregular_edge, t_pm, transfer_matrix, TwoStepRoots};

//! Radial averages on universal covering trees of finite graphs.
//!
//! A function on the vertices or edges of a finite graph lifts to its
//! universal covering tree. This crate averages such lifts over arcs,
//! spheres, tubes and horocycle pieces, predicts from the Laplacian
//! spectrum how fast those averages approach the graph average, and checks
//! the prediction against brute-force enumeration.
//!
//! Averaging code is generic over [`scalar::Scalar`] (`f32`, `f64` or exact
//! [`num_rational::BigRational`]); spectral code over [`scalar::Real`].

pub mod analysis;
pub mod cover;
pub mod error;
pub mod graph;
pub mod io;
pub mod random;
pub mod scalar;
pub mod spectral;

pub use error::{Error, Result};

pub use num_rational::BigRational;

/// A field of `f64` values.
pub type Field = cover::ScalarField<f64>;
/// A field of exact rationals.
pub type ExactField = cover::ScalarField<BigRational>;
pub type Laplacian = spectral::LaplacianMatrix<f64>;
pub type Spectrum = spectral::SpectralDecomposition<f64>;

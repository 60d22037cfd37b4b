//! Deterministic pseudo-random fields.
//!
//! A 64-bit linear congruential generator
//! `x <- 6364136223846793005 x + 1442695040888963407 (mod 2^64)`, seeded
//! with the seed itself. Each value takes the top 53 bits of the advanced
//! state as `u / 2^53` in `[0, 1)` and maps it to `2u - 1`, so the output
//! is identical on every platform.

use crate::cover::{ScalarField, Support};
use crate::graph::Graph;
use crate::spectral::{fourier_coefficients, SpectralDecomposition};

pub const LCG_MULTIPLIER: u64 = 6364136223846793005;
pub const LCG_INCREMENT: u64 = 1442695040888963407;
/// Attempts before [`generic_field`] gives up on re-seeding.
pub const MAX_RESEEDS: u64 = 64;

#[derive(Debug, Clone)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Lcg { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_mul(LCG_MULTIPLIER).wrapping_add(LCG_INCREMENT);
        self.state
    }

    /// Uniform in `[-1, 1)`.
    pub fn next_signed_unit(&mut self) -> f64 {
        let u = (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64;
        2.0 * u - 1.0
    }
}

pub fn random_field(g: &Graph, support: Support, seed: u64) -> ScalarField<f64> {
    let mut rng = Lcg::new(seed);
    let values = (0..support.len(g)).map(|_| rng.next_signed_unit()).collect();
    ScalarField::new(support, values).expect("values are finite")
}

/// A random field with a nonzero projection on every eigenspace of
/// `spectrum`, trying `seed, seed + 1, ...`. Returns the field and the seed
/// that produced it, or `None` after [`MAX_RESEEDS`] attempts.
pub fn generic_field(g: &Graph, spectrum: &SpectralDecomposition<f64>, seed: u64) -> Option<(ScalarField<f64>, u64)> {
    let support = spectrum.kind.support();
    (0..MAX_RESEEDS).map(|i| seed.wrapping_add(i)).find_map(|s| {
        let f = random_field(g, support, s);
        let c = fourier_coefficients(&f, spectrum).ok()?;
        (0..spectrum.eigenspaces.len()).all(|i| c.is_active(i)).then_some((f, s))
    })
}

//! Scalar abstractions.
//!
//! Two tiers are used throughout the crate:
//!
//! * [`Scalar`] is a field element that can be averaged: `f32`, `f64` and the
//!   exact [`BigRational`]. Enumeration averages and the half-edge transfer
//!   operator are generic over it, so the same code path yields either a
//!   floating-point or an exact result.
//! * [`Real`] is a floating-point type (`f32` or `f64`) used wherever square
//!   roots, eigendecompositions or logarithms are required.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Float, FromPrimitive, Num, ToPrimitive};

/// A field element that can be summed and divided by a count.
pub trait Scalar: Num + Clone + Debug + PartialOrd {
    /// Embeds a nonnegative count.
    fn from_count(n: usize) -> Self;

    /// Lossy conversion used for reporting and comparisons.
    fn to_f64_lossy(&self) -> f64;
}

impl Scalar for f64 {
    fn from_count(n: usize) -> Self {
        n as f64
    }

    fn to_f64_lossy(&self) -> f64 {
        *self
    }
}

impl Scalar for f32 {
    fn from_count(n: usize) -> Self {
        n as f32
    }

    fn to_f64_lossy(&self) -> f64 {
        f64::from(*self)
    }
}

impl Scalar for BigRational {
    fn from_count(n: usize) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

/// Floating-point scalar: `f32` or `f64`.
pub trait Real: Float + FromPrimitive + Scalar + Debug + Display + Send + Sync + 'static {
    /// Converts an `f64` constant into this type.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    /// Converts a small integer into this type.
    fn int(n: usize) -> Self {
        Self::from_usize(n).expect("integer representable")
    }
}

impl Real for f32 {}
impl Real for f64 {}

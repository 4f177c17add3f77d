//! Floating-point abstraction for the numerical layer.
//!
//! Group combinatorics (permutations, partitions, characters) is exact
//! integer arithmetic and does not go through this trait; everything that
//! touches kernel values, Schur evaluations or Gaussian sampling is generic
//! over [`Scalar`]. Concrete aliases for the common instantiations live at
//! the crate root.

use std::fmt;
use std::iter::{Product, Sum};

use num_traits::{Float, FromPrimitive, NumAssign, ToPrimitive};
use rand::Rng;
use rand_distr::StandardNormal;

/// Real scalar type: `f32` or `f64`.
pub trait Scalar:
    Float
    + FromPrimitive
    + ToPrimitive
    + NumAssign
    + Sum
    + Product
    + fmt::Debug
    + fmt::Display
    + fmt::LowerExp
    + Default
    + Send
    + Sync
    + 'static
{
    /// Conversion from `f64` constants. Always succeeds for `f32`/`f64`
    /// (overflowing values map to infinities).
    fn of(x: f64) -> Self {
        Self::from_f64(x).unwrap_or_else(|| {
            if x > 0.0 {
                Self::infinity()
            } else {
                Self::neg_infinity()
            }
        })
    }

    /// Lossy conversion to `f64` for reporting and serialization.
    fn to_double(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    /// One standard normal draw from the given stream.
    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self;
}

impl Scalar for f32 {
    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
        rng.sample(StandardNormal)
    }
}

impl Scalar for f64 {
    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
        rng.sample(StandardNormal)
    }
}

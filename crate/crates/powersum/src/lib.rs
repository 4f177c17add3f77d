//! Power-sum kernels and bi-invariant Gaussian processes on symmetric
//! groups.
//!
//! The kernel family is indexed by a nonnegative vector `z`: the value at a
//! pair of permutations is the product, over the cycles of `g h^-1`, of the
//! power sums `p_j(z) = z_1^j + ... + z_m^j`, one factor per cycle of
//! length `j`. These kernels are positive semidefinite and invariant under
//! left and right translation, which this crate verifies executably rather
//! than assumes.
//!
//! What lives where:
//!
//! * [`perm`], [`partition`]: permutation arithmetic, cycle types, Cayley
//!   distance, group enumeration and uniform sampling;
//! * [`tableaux`]: hook lengths, irreducible dimensions, semistandard
//!   tableau enumeration;
//! * [`characters`]: Murnaghan-Nakayama characters with a shared memo;
//! * [`rsk`]: Robinson-Schensted shapes (Plancherel-distributed diagrams);
//! * [`symfunc`]: power sums and three mutually cross-checking Schur
//!   polynomial evaluators;
//! * [`kernel`]: kernel evaluation, Gram assembly, monotonicity along
//!   Cayley geodesics, per-class tables;
//! * [`sampler`]: exact sampling by spectral square root, and two
//!   polynomial-cost random-feature constructions;
//! * [`export`]: deterministic CSV/JSON/DOT output.
//!
//! Floating arithmetic is generic over [`scalar::Scalar`] (`f32` or
//! `f64`); the combinatorial layers are exact integer arithmetic. The
//! aliases below fix the common `f64` instantiation.

pub mod characters;
pub mod cmatrix;
pub mod error;
pub mod export;
pub mod kernel;
pub mod linalg;
pub mod partition;
pub mod perm;
pub mod rsk;
pub mod sampler;
pub mod scalar;
pub mod symfunc;
pub mod tableaux;

pub use error::{Error, Result};
pub use partition::{CycleCounts, Partition};
pub use perm::Permutation;
pub use scalar::Scalar;

/// Kernel parameters over `f64`.
pub type KernelParams64 = kernel::KernelParams<f64>;
/// Kernel parameters over `f32`.
pub type KernelParams32 = kernel::KernelParams<f32>;
/// Gram matrix over `f64`.
pub type Gram64 = kernel::Gram<f64>;
/// Factorized Gram over `f64`.
pub type FactorizedGram64 = sampler::exact::FactorizedGram<f64>;
/// Feature basis over `f64`.
pub type FeatureBasis64 = sampler::features::FeatureBasis<f64>;
/// Truncated basis over `f64`.
pub type TruncatedBasis64 = sampler::features::TruncatedBasis<f64>;
/// Complex square matrix over `f64`.
pub type CMatrix64 = cmatrix::CMatrix<f64>;

//! Exact prior sampling through a square root of the Gram matrix.
//!
//! The default route is spectral: eigendecompose, clamp the numerically
//! zero eigenvalues, and take `root = diag(sqrt(values)) * vectors^T`, so
//! that `root^T root` reconstructs the Gram matrix. Power-sum Grams are
//! routinely rank-deficient (the constant kernel has rank 1), which plain
//! Cholesky cannot handle; a jittered Cholesky is kept as an opt-in fast
//! path.

use rand::Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::kernel::Gram;
use crate::linalg::{cholesky_lower, symmetric_eigen};
use crate::sampler::substream;
use crate::scalar::Scalar;

/// Default ceiling on the factorized matrix dimension: the size of the
/// group of degree 7. The cubic cost of factorization makes anything much
/// bigger untenable, which is what the feature samplers are for.
pub const MAX_EXACT_FACTOR_DIM: usize = 5040;

/// Negative eigenvalues above `-tol * dim` are treated as rounding noise.
pub const INDEFINITE_TOL_PER_DIM: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorMethod {
    Spectral,
    CholeskyJitter,
}

/// A Gram matrix together with a root satisfying
/// `root^T root = gram` up to rounding.
#[derive(Debug, Clone)]
pub struct FactorizedGram<S: Scalar> {
    gram: Gram<S>,
    root: Vec<S>,
    method: FactorMethod,
}

/// Spectral factorization with the default dimension cap.
pub fn factorize<S: Scalar>(gram: Gram<S>) -> Result<FactorizedGram<S>> {
    factorize_with_limit(gram, MAX_EXACT_FACTOR_DIM)
}

/// Spectral factorization with an explicit dimension cap.
pub fn factorize_with_limit<S: Scalar>(gram: Gram<S>, limit: usize) -> Result<FactorizedGram<S>> {
    let dim = gram.dim();
    if dim > limit {
        return Err(Error::CapExceeded {
            what: "exact factorization",
            requested: dim,
            cap: limit,
        });
    }
    let eig = symmetric_eigen(gram.values(), dim)?;
    let tolerance = INDEFINITE_TOL_PER_DIM * dim as f64;
    let min = eig.min_value().to_double();
    if min < -tolerance {
        return Err(Error::Indefinite {
            min_eigenvalue: min,
            tolerance,
        });
    }
    // Eigenvalues below dim * eps * lambda_max are numerically zero; clamp
    // them so rank-deficient kernels produce exactly rank-deficient roots.
    let numerical_zero =
        S::of(dim as f64) * S::epsilon() * eig.max_value().abs().max(S::epsilon());
    let mut root = vec![S::zero(); dim * dim];
    for k in 0..dim {
        let lambda = eig.values[k];
        if lambda <= numerical_zero {
            continue; // row of zeros
        }
        let scale = lambda.sqrt();
        for i in 0..dim {
            root[k * dim + i] = scale * eig.vector_entry(i, k);
        }
    }
    Ok(FactorizedGram {
        gram,
        root,
        method: FactorMethod::Spectral,
    })
}

/// Cholesky with diagonal jitter `1e-10 * trace / dim`. Fails on Grams that
/// are rank-deficient beyond what the jitter absorbs.
pub fn factorize_cholesky<S: Scalar>(gram: Gram<S>) -> Result<FactorizedGram<S>> {
    let dim = gram.dim();
    if dim > MAX_EXACT_FACTOR_DIM {
        return Err(Error::CapExceeded {
            what: "exact factorization",
            requested: dim,
            cap: MAX_EXACT_FACTOR_DIM,
        });
    }
    let trace: S = (0..dim).map(|i| gram.value(i, i)).fold(S::zero(), |a, b| a + b);
    let jitter = S::of(1e-10) * trace / S::of(dim as f64);
    let mut a = gram.values().to_vec();
    for i in 0..dim {
        a[i * dim + i] = a[i * dim + i] + jitter;
    }
    let lower = cholesky_lower(&a, dim).ok_or(Error::Indefinite {
        min_eigenvalue: f64::NAN,
        tolerance: jitter.to_double(),
    })?;
    // root^T root = gram wants root = L^T
    let mut root = vec![S::zero(); dim * dim];
    for i in 0..dim {
        for j in 0..dim {
            root[j * dim + i] = lower[i * dim + j];
        }
    }
    Ok(FactorizedGram {
        gram,
        root,
        method: FactorMethod::CholeskyJitter,
    })
}

impl<S: Scalar> FactorizedGram<S> {
    pub fn gram(&self) -> &Gram<S> {
        &self.gram
    }

    pub fn method(&self) -> FactorMethod {
        self.method
    }

    /// Row-major root matrix with `root^T root = gram`.
    pub fn root(&self) -> &[S] {
        &self.root
    }

    /// Largest entry of `|root^T root - gram|`.
    pub fn reconstruction_residual(&self) -> S {
        let dim = self.gram.dim();
        let mut worst = S::zero();
        for i in 0..dim {
            for j in 0..dim {
                let mut v = S::zero();
                for k in 0..dim {
                    v = v + self.root[k * dim + i] * self.root[k * dim + j];
                }
                worst = worst.max((v - self.gram.value(i, j)).abs());
            }
        }
        worst
    }

    /// Draws `count` sample vectors `f = root^T eps` with independent
    /// standard normal `eps`, one RNG substream per draw.
    pub fn sample(&self, count: usize, seed: u64) -> Samples<S> {
        let dim = self.gram.dim();
        let live_rows: Vec<usize> = (0..dim)
            .filter(|&k| self.root[k * dim..(k + 1) * dim].iter().any(|&v| v != S::zero()))
            .collect();
        let draws: Vec<Vec<S>> = (0..count)
            .into_par_iter()
            .map(|d| {
                let mut rng = substream(seed, d as u64);
                // the full eps vector is always drawn so the stream layout
                // does not depend on the root's rank
                let eps: Vec<S> = (0..dim).map(|_| S::standard_normal(&mut rng)).collect();
                let mut f = vec![S::zero(); dim];
                for &k in &live_rows {
                    let e = eps[k];
                    let row = &self.root[k * dim..(k + 1) * dim];
                    for i in 0..dim {
                        f[i] = f[i] + row[i] * e;
                    }
                }
                f
            })
            .collect();
        Samples { draws, seed }
    }
}

/// Sampled trajectories: `draws[d][i]` is the value of draw `d` at point
/// `i` of the Gram's point list.
#[derive(Debug, Clone)]
pub struct Samples<S: Scalar> {
    pub draws: Vec<Vec<S>>,
    pub seed: u64,
}

impl<S: Scalar> Samples<S> {
    /// Empirical covariance of coordinates `i` and `j` (mean not
    /// subtracted; the process is centered by construction).
    pub fn covariance(&self, i: usize, j: usize) -> S {
        let n = S::of(self.draws.len() as f64);
        self.draws
            .iter()
            .map(|d| d[i] * d[j])
            .fold(S::zero(), |a, b| a + b)
            / n
    }
}

/// `count` i.i.d. standard normal draws from the given stream.
pub fn sample_standard_normal<S: Scalar, R: Rng + ?Sized>(count: usize, rng: &mut R) -> Vec<S> {
    (0..count).map(|_| S::standard_normal(rng)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{gram, KernelParams};
    use crate::perm::enumerate_group;
    use rand::SeedableRng;
    use rand_chacha::ChaCha12Rng;

    fn s3_gram(z: Vec<f64>) -> Gram<f64> {
        let k = KernelParams::normalized(z, 3).unwrap();
        gram(&k, &enumerate_group(3).unwrap()).unwrap()
    }

    #[test]
    fn one_by_one_factorization() {
        let k = KernelParams::normalized(vec![0.5f64, 0.5], 3).unwrap();
        let gm = gram(&k, &[crate::perm::Permutation::identity(3)]).unwrap();
        let f = factorize(gm).unwrap();
        assert_eq!(f.root(), &[1.0]);
    }

    #[test]
    fn spectral_reconstruction_is_tight() {
        let f = factorize(s3_gram(vec![0.5, 0.5])).unwrap();
        assert!(f.reconstruction_residual() < 1e-10);
        assert_eq!(f.method(), FactorMethod::Spectral);
    }

    #[test]
    fn cholesky_route_reconstructs_positive_definite_grams() {
        let f = factorize_cholesky(s3_gram(vec![0.7, 0.3])).unwrap();
        assert!(f.reconstruction_residual() < 1e-8);
        assert_eq!(f.method(), FactorMethod::CholeskyJitter);
    }

    #[test]
    fn dimension_cap_is_enforced() {
        let gm = s3_gram(vec![0.5, 0.5]);
        assert!(matches!(
            factorize_with_limit(gm, 5),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn constant_kernel_root_has_rank_one() {
        let k = KernelParams::new(vec![1.0f64], 3).unwrap();
        let gm = gram(&k, &enumerate_group(3).unwrap()).unwrap();
        let f = factorize(gm).unwrap();
        let dim = 6;
        let nonzero_rows: Vec<usize> = (0..dim)
            .filter(|&r| f.root()[r * dim..(r + 1) * dim].iter().any(|&v| v != 0.0))
            .collect();
        assert_eq!(nonzero_rows.len(), 1, "root must have exactly one nonzero row");
        // all draws are constant vectors up to a few ulps of eigenvector
        // rounding (the root row is not bitwise uniform)
        let samples = f.sample(100, 7);
        for draw in &samples.draws {
            for &v in draw {
                assert!((v - draw[0]).abs() <= 8.0 * f64::EPSILON * draw[0].abs());
            }
        }
    }

    #[test]
    fn sampling_is_deterministic_given_seed() {
        let f = factorize(s3_gram(vec![0.5, 0.5])).unwrap();
        let a = f.sample(10, 99);
        let b = f.sample(10, 99);
        assert_eq!(a.draws, b.draws);
        let c = f.sample(10, 100);
        assert_ne!(a.draws, c.draws);
    }

    #[test]
    fn empirical_covariance_matches_gram() {
        let gm = s3_gram(vec![0.5, 0.5]);
        let f = factorize(gm).unwrap();
        let samples = f.sample(100_000, 12345);
        // diagonal variance 1 +- 0.02
        let var = samples.covariance(0, 0);
        assert!((var - 1.0).abs() < 0.02, "variance {}", var);
        for i in 0..6 {
            for j in 0..6 {
                let emp = samples.covariance(i, j);
                let want = f.gram().value(i, j);
                assert!((emp - want).abs() < 0.05, "({}, {}): {} vs {}", i, j, emp, want);
            }
        }
    }

    #[test]
    fn variance_constant_across_conjugacy_classes() {
        let gm = s3_gram(vec![0.8, 0.2]);
        let f = factorize(gm).unwrap();
        let samples = f.sample(50_000, 4242);
        let vars: Vec<f64> = (0..6).map(|i| samples.covariance(i, i)).collect();
        for &v in &vars {
            assert!((v - 1.0).abs() < 0.05, "{:?}", vars);
        }
    }

    #[test]
    fn standard_normal_moments_and_determinism() {
        let mut rng = ChaCha12Rng::seed_from_u64(1);
        let xs: Vec<f64> = sample_standard_normal(1_000_000, &mut rng);
        let mean = xs.iter().sum::<f64>() / xs.len() as f64;
        let var = xs.iter().map(|x| x * x).sum::<f64>() / xs.len() as f64 - mean * mean;
        assert!(mean.abs() < 0.005, "mean {}", mean);
        assert!((var - 1.0).abs() < 0.01, "variance {}", var);

        let mut rng2 = ChaCha12Rng::seed_from_u64(1);
        let ys: Vec<f64> = sample_standard_normal(100, &mut rng2);
        assert_eq!(&xs[..100], &ys[..]);
    }

    #[test]
    fn standard_normal_kolmogorov_smirnov() {
        // KS against the standard normal CDF at the 99% level
        let mut rng = ChaCha12Rng::seed_from_u64(2);
        let mut xs: Vec<f64> = sample_standard_normal(100_000, &mut rng);
        xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let n = xs.len() as f64;
        let phi = |x: f64| 0.5 * (1.0 + erf(x / std::f64::consts::SQRT_2));
        let mut d: f64 = 0.0;
        for (i, &x) in xs.iter().enumerate() {
            let cdf = phi(x);
            d = d.max((cdf - i as f64 / n).abs());
            d = d.max(((i + 1) as f64 / n - cdf).abs());
        }
        // critical value c(0.01) / sqrt(n) with c(0.01) = 1.62762
        assert!(d < 1.62762 / n.sqrt(), "KS statistic {}", d);
    }

    /// Error function via Abramowitz-Stegun 7.1.26; absolute error < 1.5e-7,
    /// plenty for a KS test at this sample size.
    fn erf(x: f64) -> f64 {
        let sign = if x < 0.0 { -1.0 } else { 1.0 };
        let x = x.abs();
        let t = 1.0 / (1.0 + 0.3275911 * x);
        let y = 1.0
            - (((((1.061405429 * t - 1.453152027) * t) + 1.421413741) * t - 0.284496736) * t
                + 0.254829592)
                * t
                * (-x * x).exp();
        sign * y
    }
}

//! Approximate sampling by random features.
//!
//! Two constructions are provided. The main one draws, per feature, a
//! uniform permutation whose insertion shape gives a Plancherel-distributed
//! diagram, a uniform group shift, and a complex Gaussian matrix whose
//! Schur amplitude carries the kernel's spectral weight. Its per-feature
//! cost is polynomial in the degree: nothing in this module ever touches an
//! object of size `n!`.
//!
//! The second, truncated construction ranks all admissible diagrams by
//! spectral mass and keeps the top `R`; it needs an exhaustive partition
//! enumeration, so it is a small-degree cross-check rather than a scalable
//! sampler.

use num_complex::Complex;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::characters::Characters;
use crate::cmatrix::CMatrix;
use crate::error::{Error, Result};
use crate::kernel::KernelParams;
use crate::partition::{factorial, partitions_of, Partition};
use crate::perm::{random_uniform, Permutation};
use crate::rsk::rsk_shape;
use crate::sampler::substream;
use crate::scalar::Scalar;
use crate::symfunc::{schur_from_characters_matrix, schur_from_characters_vec, SCHUR_CHARACTER_CAP};
use crate::tableaux::dimension;

/// Draws an `m x m` matrix with independent `N(0, 1/2) + i N(0, 1/2)`
/// entries, so that every entry has unit second absolute moment.
pub fn sample_ginibre<S: Scalar, R: Rng + ?Sized>(m: usize, rng: &mut R) -> CMatrix<S> {
    let spread = S::of(0.5).sqrt();
    let mut z = CMatrix::zeros(m);
    for i in 0..m {
        for j in 0..m {
            let re = S::standard_normal(rng) * spread;
            let im = S::standard_normal(rng) * spread;
            z.set(i, j, Complex::new(re, im));
        }
    }
    z
}

/// The real diagonal scaling `A = diag(sqrt(z_1), ..., sqrt(z_m))`, so that
/// `A A*` recovers `diag(z)`.
pub fn scaling_matrix<S: Scalar>(params: &KernelParams<S>) -> CMatrix<S> {
    let roots: Vec<S> = params.z().iter().map(|&v| v.sqrt()).collect();
    CMatrix::diagonal(&roots)
}

/// One random feature: a diagram, a group shift, a complex Schur amplitude,
/// and the pair of real weights that turn the amplitude into a real draw.
#[derive(Debug, Clone)]
pub struct Feature<S: Scalar> {
    pub shape: Partition,
    pub shift: Permutation,
    pub amplitude: Complex<S>,
    pub w1: S,
    pub w2: S,
}

/// A sampled feature set defining one approximate process draw, evaluable
/// at any group element.
#[derive(Debug, Clone)]
pub struct FeatureBasis<S: Scalar> {
    pub features: Vec<Feature<S>>,
    n: usize,
    m: usize,
    z: Vec<S>,
    seed: u64,
}

fn check_feature_cap(n: usize) -> Result<()> {
    if n > SCHUR_CHARACTER_CAP {
        return Err(Error::CapExceeded {
            what: "feature sampling",
            requested: n,
            cap: SCHUR_CHARACTER_CAP,
        });
    }
    Ok(())
}

/// Builds `l` features, one independent RNG substream per feature. The
/// draw order within a feature is fixed (shape permutation, shift, Ginibre
/// matrix, then the two weights), so rebuilding with the same seed is
/// reproducible regardless of thread count.
pub fn build_feature_basis<S: Scalar>(
    params: &KernelParams<S>,
    l: usize,
    seed: u64,
    chars: &Characters,
) -> Result<FeatureBasis<S>> {
    if l == 0 {
        return Err(Error::InvalidKernelParams("feature count must be positive".into()));
    }
    check_feature_cap(params.degree())?;
    let n = params.degree();
    let a = scaling_matrix(params);
    let features: Vec<Feature<S>> = (0..l)
        .into_par_iter()
        .map(|j| -> Result<Feature<S>> {
            let mut rng = substream(seed, j as u64);
            let v = random_uniform(n, &mut rng);
            let u = random_uniform(n, &mut rng);
            let z = sample_ginibre::<S, _>(params.m(), &mut rng);
            let w1 = S::standard_normal(&mut rng);
            let w2 = S::standard_normal(&mut rng);
            let shape = rsk_shape(&v);
            let amplitude = schur_from_characters_matrix(&shape, &a.mul(&z), chars)?;
            Ok(Feature {
                shape,
                shift: u,
                amplitude,
                w1,
                w2,
            })
        })
        .collect::<Result<_>>()?;
    Ok(FeatureBasis {
        features,
        n,
        m: params.m(),
        z: params.z().to_vec(),
        seed,
    })
}

impl<S: Scalar> FeatureBasis<S> {
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.features.len()
    }

    pub fn is_empty(&self) -> bool {
        self.features.is_empty()
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn z(&self) -> &[S] {
        &self.z
    }

    /// Evaluates the approximate draw at `g`:
    /// `L^{-1/2} sum_j (w1 Re a_j + w2 Im a_j) chi_{shape_j}(g shift_j)`.
    /// Characters of the symmetric group are integers, so the value is
    /// exactly real by construction.
    pub fn evaluate(&self, g: &Permutation, chars: &Characters) -> Result<S> {
        if g.degree() != self.n {
            return Err(Error::DegreeMismatch {
                left: g.degree(),
                right: self.n,
            });
        }
        let mut total = S::zero();
        for f in &self.features {
            let chi = chars.character_at(&f.shape, &g.compose(&f.shift)?)?;
            if chi == 0 {
                continue;
            }
            let coeff = f.w1 * f.amplitude.re + f.w2 * f.amplitude.im;
            total = total + coeff * S::of(chi as f64);
        }
        Ok(total / S::of(self.features.len() as f64).sqrt())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(BasisWire::from(self)).expect("basis serialization")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let wire: BasisWire = serde_json::from_value(value.clone())
            .map_err(|e| Error::Parse(format!("feature basis: {}", e)))?;
        wire.try_into()
    }
}

/// Serialization form: floats as `f64`, permutations and partitions in
/// their text formats.
#[derive(Serialize, Deserialize)]
struct BasisWire {
    n: usize,
    m: usize,
    z: Vec<f64>,
    l: usize,
    seed: u64,
    features: Vec<FeatureWire>,
}

#[derive(Serialize, Deserialize)]
struct FeatureWire {
    shape: String,
    shift: String,
    amplitude_re: f64,
    amplitude_im: f64,
    w1: f64,
    w2: f64,
}

impl<S: Scalar> From<&FeatureBasis<S>> for BasisWire {
    fn from(b: &FeatureBasis<S>) -> Self {
        BasisWire {
            n: b.n,
            m: b.m,
            z: b.z.iter().map(|v| v.to_double()).collect(),
            l: b.features.len(),
            seed: b.seed,
            features: b
                .features
                .iter()
                .map(|f| FeatureWire {
                    shape: f.shape.to_string(),
                    shift: f.shift.to_string(),
                    amplitude_re: f.amplitude.re.to_double(),
                    amplitude_im: f.amplitude.im.to_double(),
                    w1: f.w1.to_double(),
                    w2: f.w2.to_double(),
                })
                .collect(),
        }
    }
}

impl<S: Scalar> TryFrom<BasisWire> for FeatureBasis<S> {
    type Error = Error;

    fn try_from(wire: BasisWire) -> Result<Self> {
        let features = wire
            .features
            .iter()
            .map(|f| -> Result<Feature<S>> {
                Ok(Feature {
                    shape: f.shape.parse()?,
                    shift: f.shift.parse()?,
                    amplitude: Complex::new(S::of(f.amplitude_re), S::of(f.amplitude_im)),
                    w1: S::of(f.w1),
                    w2: S::of(f.w2),
                })
            })
            .collect::<Result<_>>()?;
        Ok(FeatureBasis {
            features,
            n: wire.n,
            m: wire.m,
            z: wire.z.iter().map(|&v| S::of(v)).collect(),
            seed: wire.seed,
        })
    }
}

/// Monte Carlo verification of the Ginibre moment identity
/// `E |s_lambda(A Z)|^2 = n! s_lambda(z) / d_lambda`.
#[derive(Debug, Clone)]
pub struct GinibreSchurReport {
    pub estimate: f64,
    pub exact: f64,
    pub std_error: f64,
    pub pass: bool,
    /// Mean of `(Re s)^2` and `(Im s)^2`: equal in distribution by phase
    /// invariance of the ensemble.
    pub re_mean_sq: f64,
    pub im_mean_sq: f64,
    pub symmetry_std_error: f64,
    pub symmetry_pass: bool,
}

/// Estimates `E |s_lambda(A Z)|^2` over `samples` Ginibre draws and
/// compares with the exact value at four standard errors.
pub fn verify_ginibre_schur<S: Scalar>(
    lambda: &Partition,
    params: &KernelParams<S>,
    samples: usize,
    seed: u64,
    chars: &Characters,
) -> Result<GinibreSchurReport> {
    check_feature_cap(lambda.weight())?;
    let a = scaling_matrix(params);
    let stats: Vec<(f64, f64)> = (0..samples)
        .into_par_iter()
        .map(|i| -> Result<(f64, f64)> {
            let mut rng = substream(seed, i as u64);
            let z = sample_ginibre::<S, _>(params.m(), &mut rng);
            let s = schur_from_characters_matrix(lambda, &a.mul(&z), chars)?;
            let re = s.re.to_double();
            let im = s.im.to_double();
            Ok((re * re, im * im))
        })
        .collect::<Result<_>>()?;
    let nf = samples as f64;
    let mean_re = stats.iter().map(|s| s.0).sum::<f64>() / nf;
    let mean_im = stats.iter().map(|s| s.1).sum::<f64>() / nf;
    let estimate = mean_re + mean_im;
    let var_norm = stats
        .iter()
        .map(|s| {
            let d = s.0 + s.1 - estimate;
            d * d
        })
        .sum::<f64>()
        / (nf - 1.0);
    let std_error = (var_norm / nf).sqrt();
    let s_z = schur_from_characters_vec(lambda, params.z(), chars)?.to_double();
    let exact = factorial(lambda.weight())? as f64 * s_z / dimension(lambda)? as f64;
    let var_diff = stats
        .iter()
        .map(|s| {
            let d = (s.0 - s.1) - (mean_re - mean_im);
            d * d
        })
        .sum::<f64>()
        / (nf - 1.0);
    let symmetry_std_error = (var_diff / nf).sqrt();
    // degenerate shapes (s identically zero) pass both checks trivially
    let pass = (estimate - exact).abs() <= 4.0 * std_error.max(1e-300) || exact == estimate;
    let symmetry_pass =
        (mean_re - mean_im).abs() <= 4.0 * symmetry_std_error || mean_re == mean_im;
    Ok(GinibreSchurReport {
        estimate,
        exact,
        std_error,
        pass,
        re_mean_sq: mean_re,
        im_mean_sq: mean_im,
        symmetry_std_error,
        symmetry_pass,
    })
}

/// One retained diagram of the truncated construction with its spectral
/// coefficient, inner shifts, and Gaussian weights.
#[derive(Debug, Clone)]
pub struct TruncatedShape<S: Scalar> {
    pub shape: Partition,
    /// `a_lambda = s_lambda(z)`.
    pub coefficient: S,
    pub dimension: u128,
    pub shifts: Vec<Permutation>,
    pub weights: Vec<S>,
}

/// Truncated character expansion: the top-`R` diagrams by `a_lambda *
/// d_lambda`, each carrying `L` inner features.
#[derive(Debug, Clone)]
pub struct TruncatedBasis<S: Scalar> {
    pub shapes: Vec<TruncatedShape<S>>,
    n: usize,
    l: usize,
    seed: u64,
}

/// All admissible diagrams (weight `n`, at most `m` rows) with their
/// coefficients `a_lambda = s_lambda(z)` and dimensions, ranked by
/// `a_lambda * d_lambda` descending; ties broken by descending
/// lexicographic diagram order.
pub fn ranked_shapes<S: Scalar>(
    params: &KernelParams<S>,
    chars: &Characters,
) -> Result<Vec<(Partition, S, u128)>> {
    check_feature_cap(params.degree())?;
    let mut out: Vec<(Partition, S, u128)> = Vec::new();
    for lambda in partitions_of(params.degree()) {
        if lambda.len() > params.m() {
            continue;
        }
        // s_lambda(z) >= 0 for nonnegative z; tiny negative values are
        // cancellation noise from the character expansion
        let a = schur_from_characters_vec(&lambda, params.z(), chars)?.max(S::zero());
        let d = dimension(&lambda)?;
        out.push((lambda, a, d));
    }
    out.sort_by(|x, y| {
        let kx = x.1 * S::of(x.2 as f64);
        let ky = y.1 * S::of(y.2 as f64);
        ky.partial_cmp(&kx)
            .expect("finite ranking keys")
            .then_with(|| y.0.cmp(&x.0))
    });
    Ok(out)
}

/// Number of diagrams with strictly positive spectral mass; using this as
/// `R` makes the truncated estimator unbiased.
pub fn full_rank_count<S: Scalar>(params: &KernelParams<S>, chars: &Characters) -> Result<usize> {
    Ok(ranked_shapes(params, chars)?
        .iter()
        .filter(|(_, a, _)| *a > S::zero())
        .count())
}

/// Builds the truncated basis with the top `r` diagrams (all admissible
/// ones when `r` exceeds their number) and `l` inner features per diagram.
///
/// The inner weights are drawn `N(0, a_lambda d_lambda)`: together with the
/// character averaging identity this makes the full-rank estimator's
/// covariance reproduce the kernel.
pub fn build_truncated_basis<S: Scalar>(
    params: &KernelParams<S>,
    r: usize,
    l: usize,
    seed: u64,
    chars: &Characters,
) -> Result<TruncatedBasis<S>> {
    if l == 0 || r == 0 {
        return Err(Error::InvalidKernelParams(
            "shape and feature counts must be positive".into(),
        ));
    }
    let ranked = ranked_shapes(params, chars)?;
    let n = params.degree();
    let shapes: Vec<TruncatedShape<S>> = ranked
        .into_iter()
        .take(r)
        .enumerate()
        .map(|(idx, (shape, coefficient, dim))| {
            let mut rng = substream(seed, idx as u64);
            let shifts: Vec<Permutation> = (0..l).map(|_| random_uniform(n, &mut rng)).collect();
            let std = (coefficient * S::of(dim as f64)).sqrt();
            let weights: Vec<S> = (0..l)
                .map(|_| S::standard_normal(&mut rng) * std)
                .collect();
            TruncatedShape {
                shape,
                coefficient,
                dimension: dim,
                shifts,
                weights,
            }
        })
        .collect();
    Ok(TruncatedBasis {
        shapes,
        n,
        l,
        seed,
    })
}

impl<S: Scalar> TruncatedBasis<S> {
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn inner_count(&self) -> usize {
        self.l
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// `sum_r L^{-1/2} sum_l w_l^r chi_{lambda_r}(g u_l^r)`.
    pub fn evaluate(&self, g: &Permutation, chars: &Characters) -> Result<S> {
        if g.degree() != self.n {
            return Err(Error::DegreeMismatch {
                left: g.degree(),
                right: self.n,
            });
        }
        let scale = S::of(self.l as f64).sqrt();
        let mut total = S::zero();
        for shape in &self.shapes {
            let mut inner = S::zero();
            for (u, &w) in shape.shifts.iter().zip(shape.weights.iter()) {
                let chi = chars.character_at(&shape.shape, &g.compose(u)?)?;
                if chi != 0 {
                    inner = inner + w * S::of(chi as f64);
                }
            }
            total = total + inner / scale;
        }
        Ok(total)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::KernelParams;
    use crate::perm::enumerate_group;
    use rand::SeedableRng;
    use rand_chacha::ChaCha12Rng;
    use std::collections::HashMap;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn ginibre_moments() {
        let mut rng = ChaCha12Rng::seed_from_u64(0);
        let draws = 100_000;
        let mut sum = Complex::new(0.0f64, 0.0);
        let mut sum_sq = 0.0f64;
        let mut sum_trace_zz = 0.0f64;
        for _ in 0..draws {
            let z = sample_ginibre::<f64, _>(3, &mut rng);
            sum = sum + z.get(0, 0);
            sum_sq += z.get(0, 0).norm_sqr();
            sum_trace_zz += z.mul(&z.conjugate_transpose()).trace().re;
        }
        let mean = sum / draws as f64;
        // mean within 4 sigma: entry std is 1/sqrt(draws) per component scaled by sqrt(1/2)
        let sigma = (0.5f64 / draws as f64).sqrt();
        assert!(mean.re.abs() < 4.0 * sigma, "re mean {}", mean.re);
        assert!(mean.im.abs() < 4.0 * sigma, "im mean {}", mean.im);
        let second = sum_sq / draws as f64;
        assert!((second - 1.0).abs() < 0.02, "E|entry|^2 = {}", second);
        // E trace(Z Z*) = m^2 = 9
        let t = sum_trace_zz / draws as f64;
        assert!((t - 9.0).abs() < 0.1, "E tr(ZZ*) = {}", t);
    }

    #[test]
    fn scaling_matrix_examples() {
        let k = KernelParams::new(vec![1.0f64, 1.0], 3).unwrap();
        assert_eq!(scaling_matrix(&k), CMatrix::identity(2));
        let k = KernelParams::new(vec![0.49f64, 0.09], 3).unwrap();
        let a = scaling_matrix(&k);
        assert!((a.get(0, 0).re - 0.7).abs() < 1e-15);
        assert!((a.get(1, 1).re - 0.3).abs() < 1e-15);
        // zero coordinate: singular scaling accepted
        let k = KernelParams::new(vec![1.0f64, 0.0], 3).unwrap();
        let a = scaling_matrix(&k);
        assert_eq!(a.get(1, 1), Complex::new(0.0, 0.0));
    }

    #[test]
    fn basis_build_is_deterministic() {
        let chars = Characters::new();
        let k = KernelParams::normalized(vec![0.5f64, 0.5], 4).unwrap();
        let a = build_feature_basis(&k, 50, 7, &chars).unwrap();
        let b = build_feature_basis(&k, 50, 7, &chars).unwrap();
        for (fa, fb) in a.features.iter().zip(b.features.iter()) {
            assert_eq!(fa.shape, fb.shape);
            assert_eq!(fa.shift, fb.shift);
            assert_eq!(fa.amplitude, fb.amplitude);
            assert_eq!(fa.w1, fb.w1);
            assert_eq!(fa.w2, fb.w2);
        }
        let c = build_feature_basis(&k, 50, 8, &chars).unwrap();
        assert!(a.features.iter().zip(c.features.iter()).any(|(x, y)| x.shift != y.shift));
    }

    #[test]
    fn degree_one_features_are_gaussian_with_variance_z1() {
        let chars = Characters::new();
        let k = KernelParams::new(vec![0.37f64], 1).unwrap();
        let basis = build_feature_basis(&k, 2000, 3, &chars).unwrap();
        for f in &basis.features {
            assert_eq!(f.shape, part(&[1]));
        }
        // evaluate at the unique element over many rebuilds: variance z1
        let g = Permutation::identity(1);
        let mut acc = 0.0f64;
        let rebuilds = 4000;
        for s in 0..rebuilds {
            let b = build_feature_basis(&k, 1, 1000 + s, &chars).unwrap();
            let v = b.evaluate(&g, &chars).unwrap();
            acc += v * v;
        }
        let var = acc / rebuilds as f64;
        assert!((var - 0.37).abs() < 0.05, "variance {}", var);
    }

    #[test]
    fn shape_frequencies_follow_plancherel() {
        let chars = Characters::new();
        let n = 5;
        let k = KernelParams::normalized(vec![0.5f64, 0.5], n).unwrap();
        let basis = build_feature_basis(&k, 100_000, 11, &chars).unwrap();
        let mut counts: HashMap<Partition, u64> = HashMap::new();
        for f in &basis.features {
            *counts.entry(f.shape.clone()).or_insert(0) += 1;
        }
        let mut chi2 = 0.0;
        for lambda in partitions_of(n) {
            let expect =
                crate::tableaux::plancherel_probability(&lambda, n).unwrap() * basis.len() as f64;
            let got = counts.get(&lambda).copied().unwrap_or(0) as f64;
            chi2 += (got - expect) * (got - expect) / expect;
        }
        // chi-square 0.999 quantile, p(5) - 1 = 6 degrees of freedom
        assert!(chi2 < 22.458, "chi2 = {}", chi2);
    }

    #[test]
    fn evaluation_is_linear_in_weights() {
        let chars = Characters::new();
        let k = KernelParams::normalized(vec![0.5f64, 0.5], 3).unwrap();
        let basis = build_feature_basis(&k, 20, 5, &chars).unwrap();
        let mut negated = basis.clone();
        for f in negated.features.iter_mut() {
            f.w1 = -f.w1;
            f.w2 = -f.w2;
        }
        for g in enumerate_group(3).unwrap() {
            let a = basis.evaluate(&g, &chars).unwrap();
            let b = negated.evaluate(&g, &chars).unwrap();
            assert_eq!(a, -b);
        }
    }

    #[test]
    fn single_feature_products_estimate_the_kernel() {
        let chars = Characters::new();
        let n = 3;
        let k = KernelParams::normalized(vec![0.5f64, 0.5], n).unwrap();
        let g = Permutation::from_images(vec![2, 1, 3]).unwrap();
        let h = Permutation::identity(n);
        let want = k.kernel_eval(&g, &h).unwrap();
        let rebuilds = 20_000;
        let mut prods = Vec::with_capacity(rebuilds);
        for s in 0..rebuilds {
            let b = build_feature_basis(&k, 1, s as u64, &chars).unwrap();
            let fg = b.evaluate(&g, &chars).unwrap();
            let fh = b.evaluate(&h, &chars).unwrap();
            prods.push(fg * fh);
        }
        let mean = prods.iter().sum::<f64>() / rebuilds as f64;
        let var = prods.iter().map(|p| (p - mean) * (p - mean)).sum::<f64>()
            / (rebuilds as f64 - 1.0);
        let se = (var / rebuilds as f64).sqrt();
        assert!(
            (mean - want).abs() < 4.0 * se,
            "mean {} vs kernel {} (se {})",
            mean,
            want,
            se
        );
    }

    #[test]
    fn evaluations_are_gaussian_for_large_feature_counts() {
        let chars = Characters::new();
        let n = 3;
        let k = KernelParams::normalized(vec![0.5f64, 0.5], n).unwrap();
        let e = Permutation::identity(n);
        let rebuilds = 1500;
        let mut vals: Vec<f64> = (0..rebuilds)
            .map(|s| {
                build_feature_basis(&k, 400, 50_000 + s as u64, &chars)
                    .unwrap()
                    .evaluate(&e, &chars)
                    .unwrap()
            })
            .collect();
        vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
        // KS against N(0, 1): k(e, e) = 1 for normalized z
        let nf = rebuilds as f64;
        let phi = |x: f64| 0.5 * (1.0 + erf(x / std::f64::consts::SQRT_2));
        let mut d: f64 = 0.0;
        for (i, &x) in vals.iter().enumerate() {
            let cdf = phi(x);
            d = d.max((cdf - i as f64 / nf).abs());
            d = d.max(((i + 1) as f64 / nf - cdf).abs());
        }
        assert!(d < 1.62762 / nf.sqrt(), "KS statistic {}", d);
    }

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

    #[test]
    fn ginibre_schur_identity_small_shapes() {
        let chars = Characters::new();
        let k = KernelParams::new(vec![0.7f64, 0.3], 3).unwrap();
        for lambda in [part(&[3]), part(&[2, 1])] {
            let r = verify_ginibre_schur(&lambda, &k, 40_000, 5, &chars).unwrap();
            assert!(r.pass, "{}: estimate {} vs exact {} (se {})", lambda, r.estimate, r.exact, r.std_error);
            assert!(r.symmetry_pass, "{}: re {} vs im {}", lambda, r.re_mean_sq, r.im_mean_sq);
        }
        // single-entry case is exact: E |sqrt(z) Z|^2 = z
        let k1 = KernelParams::new(vec![0.37f64], 1).unwrap();
        let r = verify_ginibre_schur(&part(&[1]), &k1, 20_000, 6, &chars).unwrap();
        assert!(r.pass);
        assert!((r.exact - 0.37).abs() < 1e-15);
    }

    #[test]
    fn ranking_is_deterministic_and_reproducible() {
        let chars = Characters::new();
        let k = KernelParams::normalized(vec![0.5f64, 0.5], 4).unwrap();
        let ranked = ranked_shapes(&k, &chars).unwrap();
        // admissible shapes for m = 2: (4), (3,1), (2,2); then length > 2 excluded
        assert_eq!(ranked.len(), 3);
        let again = ranked_shapes(&k, &chars).unwrap();
        for (a, b) in ranked.iter().zip(again.iter()) {
            assert_eq!(a.0, b.0);
            assert_eq!(a.1, b.1);
        }
        // keys are sorted descending
        for w in ranked.windows(2) {
            let ka = w[0].1 * w[0].2 as f64;
            let kb = w[1].1 * w[1].2 as f64;
            assert!(ka >= kb);
        }
    }

    #[test]
    fn constant_kernel_needs_one_shape() {
        let chars = Characters::new();
        let k = KernelParams::new(vec![1.0f64], 4).unwrap();
        assert_eq!(full_rank_count(&k, &chars).unwrap(), 1);
        let basis = build_truncated_basis(&k, 1, 100, 3, &chars).unwrap();
        assert_eq!(basis.shapes[0].shape, Partition::single_row(4));
        // constant process: same value at every element
        let vals: Vec<f64> = enumerate_group(4)
            .unwrap()
            .iter()
            .map(|g| basis.evaluate(g, &chars).unwrap())
            .collect();
        for &v in &vals {
            assert_eq!(v, vals[0]);
        }
    }

    #[test]
    fn truncated_full_rank_products_estimate_the_kernel() {
        let chars = Characters::new();
        let n = 3;
        let k = KernelParams::normalized(vec![0.5f64, 0.5], n).unwrap();
        let r = full_rank_count(&k, &chars).unwrap();
        let g = Permutation::from_images(vec![2, 3, 1]).unwrap();
        let h = Permutation::identity(n);
        let want = k.kernel_eval(&g, &h).unwrap();
        let rebuilds = 20_000;
        let mut prods = Vec::with_capacity(rebuilds);
        for s in 0..rebuilds {
            let b = build_truncated_basis(&k, r, 1, s as u64, &chars).unwrap();
            prods.push(b.evaluate(&g, &chars).unwrap() * b.evaluate(&h, &chars).unwrap());
        }
        let mean = prods.iter().sum::<f64>() / rebuilds as f64;
        let var = prods.iter().map(|p| (p - mean) * (p - mean)).sum::<f64>()
            / (rebuilds as f64 - 1.0);
        let se = (var / rebuilds as f64).sqrt();
        assert!(
            (mean - want).abs() < 4.0 * se,
            "mean {} vs kernel {} (se {})",
            mean,
            want,
            se
        );
    }

    #[test]
    fn basis_json_round_trip_is_exact() {
        let chars = Characters::new();
        let k = KernelParams::normalized(vec![0.6f64, 0.4], 4).unwrap();
        let basis = build_feature_basis(&k, 30, 21, &chars).unwrap();
        let json = basis.to_json();
        let back: FeatureBasis<f64> = FeatureBasis::from_json(&json).unwrap();
        for g in enumerate_group(4).unwrap() {
            let a = basis.evaluate(&g, &chars).unwrap();
            let b = back.evaluate(&g, &chars).unwrap();
            assert_eq!(a.to_bits(), b.to_bits(), "bit-identical re-evaluation");
        }
    }

    #[test]
    fn caps_are_enforced() {
        let chars = Characters::new();
        let k = KernelParams::new(vec![0.5f64, 0.5], 15).unwrap();
        assert!(matches!(
            build_feature_basis(&k, 1, 0, &chars),
            Err(Error::CapExceeded { .. })
        ));
        assert!(matches!(
            build_truncated_basis(&k, 1, 1, 0, &chars),
            Err(Error::CapExceeded { .. })
        ));
    }
}

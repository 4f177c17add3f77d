//! Power-sum kernel evaluation, Gram matrices, and structural checks.
//!
//! A kernel is parametrized by a nonnegative vector `z`; its value at
//! `(g, h)` is the product over the cycles of `g h^-1` of the power sums
//! `p_j(z)`, one factor per cycle of length `j`. The per-length factors are
//! precomputed once so Gram assembly never re-touches `z`.

use rand::Rng;
use rayon::prelude::*;

use crate::characters::Characters;
use crate::error::{Error, Result};
use crate::linalg::symmetric_eigen;
use crate::partition::{partitions_of, CycleCounts, Partition};
use crate::perm::Permutation;
use crate::scalar::Scalar;
use crate::symfunc::{power_sum, schur_from_characters_vec, SCHUR_CHARACTER_CAP};

/// Class-table and quotient-graph construction enumerate all partitions of
/// `n`; refuse degrees above this.
pub const CLASS_TABLE_CAP: usize = 12;

/// Kernel parameters: the vector `z` plus precomputed factors
/// `factors[j-1] = p_j(z)` for `j = 1..=n`.
#[derive(Debug, Clone, PartialEq)]
pub struct KernelParams<S: Scalar> {
    z: Vec<S>,
    n: usize,
    factors: Vec<S>,
    normalized: bool,
}

impl<S: Scalar> KernelParams<S> {
    /// Builds parameters for degree `n` from a nonnegative, not identically
    /// zero vector `z`.
    pub fn new(z: Vec<S>, n: usize) -> Result<Self> {
        Self::build(z, n, false)
    }

    /// Divides `z` by its l1 norm first, so that `k(g, g) = 1`.
    pub fn normalized(z: Vec<S>, n: usize) -> Result<Self> {
        Self::build(z, n, true)
    }

    fn build(mut z: Vec<S>, n: usize, normalize: bool) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidKernelParams("degree must be at least 1".into()));
        }
        if z.is_empty() {
            return Err(Error::InvalidKernelParams("z must be nonempty".into()));
        }
        if z.iter().any(|v| !v.is_finite() || *v < S::zero()) {
            return Err(Error::InvalidKernelParams(format!(
                "z must be finite and nonnegative, got {:?}",
                z.iter().map(|v| v.to_double()).collect::<Vec<_>>()
            )));
        }
        let norm = z.iter().fold(S::zero(), |a, &b| a + b);
        if norm == S::zero() {
            return Err(Error::InvalidKernelParams(
                "z must have at least one positive entry".into(),
            ));
        }
        if normalize {
            for v in z.iter_mut() {
                *v = *v / norm;
            }
        }
        let factors: Vec<S> = (1..=n).map(|d| power_sum(d, &z)).collect();
        let normalized = {
            let total = z.iter().fold(S::zero(), |a, &b| a + b);
            (total - S::one()).abs() < S::of(1e-12)
        };
        Ok(KernelParams {
            z,
            n,
            factors,
            normalized,
        })
    }

    pub fn z(&self) -> &[S] {
        &self.z
    }

    /// Group degree `n`.
    pub fn degree(&self) -> usize {
        self.n
    }

    /// Length of `z`.
    pub fn m(&self) -> usize {
        self.z.len()
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    /// Precomputed `p_j(z)`, 1-based in `j`.
    pub fn factor(&self, j: usize) -> S {
        self.factors[j - 1]
    }

    pub fn factors(&self) -> &[S] {
        &self.factors
    }

    /// Kernel diagonal `k(g, g) = |z|_1^n`.
    pub fn variance(&self) -> S {
        self.factors[0].powi(self.n as i32)
    }

    /// Kernel value from the cycle counts of `g h^-1`.
    pub fn eval_cycle_counts(&self, counts: &CycleCounts) -> S {
        let mut acc = S::one();
        for (i, &c) in counts.counts().iter().enumerate() {
            if c > 0 {
                acc = acc * self.factors[i].powi(c as i32);
            }
        }
        acc
    }

    /// Kernel value at the conjugacy class with cycle type `mu`, i.e.
    /// `k(g, e)` for any `g` of that cycle type.
    pub fn eval_class(&self, mu: &Partition) -> Result<S> {
        if mu.weight() != self.n {
            return Err(Error::WeightMismatch {
                left: mu.weight(),
                right: self.n,
            });
        }
        Ok(self.eval_cycle_counts(&mu.cycle_counts()))
    }

    /// Kernel value `k(g, h)` by the cycle-count product formula.
    pub fn kernel_eval(&self, g: &Permutation, h: &Permutation) -> Result<S> {
        if g.degree() != self.n || h.degree() != self.n {
            return Err(Error::DegreeMismatch {
                left: g.degree().max(h.degree()),
                right: self.n,
            });
        }
        let q = g.compose(&h.inverse())?;
        Ok(self.eval_cycle_counts(&q.cycle_type().cycle_counts()))
    }

    /// Kernel value by the character expansion
    /// `sum over lambda of chi_lambda(g h^-1) s_lambda(z)`: an independent
    /// evaluation route used to cross-check [`Self::kernel_eval`].
    pub fn kernel_eval_via_characters(
        &self,
        g: &Permutation,
        h: &Permutation,
        chars: &Characters,
    ) -> Result<S> {
        if g.degree() != self.n || h.degree() != self.n {
            return Err(Error::DegreeMismatch {
                left: g.degree().max(h.degree()),
                right: self.n,
            });
        }
        if self.n > SCHUR_CHARACTER_CAP {
            return Err(Error::CapExceeded {
                what: "kernel evaluation via characters",
                requested: self.n,
                cap: SCHUR_CHARACTER_CAP,
            });
        }
        let q = g.compose(&h.inverse())?;
        let mu = q.cycle_type();
        let mut total = S::zero();
        for lambda in partitions_of(self.n) {
            if lambda.len() > self.m() {
                continue; // s_lambda vanishes on m variables
            }
            let chi = chars.character(&lambda, &mu)?;
            if chi == 0 {
                continue;
            }
            let s = schur_from_characters_vec(&lambda, &self.z, chars)?;
            total = total + S::of(chi as f64) * s;
        }
        Ok(total)
    }
}

/// Symmetric matrix of kernel values over an explicit point list.
#[derive(Debug, Clone)]
pub struct Gram<S: Scalar> {
    points: Vec<Permutation>,
    values: Vec<S>,
    params: KernelParams<S>,
}

impl<S: Scalar> Gram<S> {
    pub fn dim(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[Permutation] {
        &self.points
    }

    pub fn params(&self) -> &KernelParams<S> {
        &self.params
    }

    pub fn value(&self, i: usize, j: usize) -> S {
        self.values[i * self.points.len() + j]
    }

    pub fn values(&self) -> &[S] {
        &self.values
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.values[i * self.points.len()..(i + 1) * self.points.len()]
    }

    /// Smallest eigenvalue, for positive semidefiniteness checks.
    pub fn min_eigenvalue(&self) -> Result<S> {
        Ok(symmetric_eigen(&self.values, self.dim())?.min_value())
    }

    /// True when the smallest eigenvalue is above `-tol_per_dim * dim`.
    pub fn is_psd(&self, tol_per_dim: f64) -> Result<bool> {
        let min = self.min_eigenvalue()?.to_double();
        Ok(min >= -tol_per_dim * self.dim() as f64)
    }
}

/// Assembles the Gram matrix over `points`, filling rows in parallel.
pub fn gram<S: Scalar>(params: &KernelParams<S>, points: &[Permutation]) -> Result<Gram<S>> {
    if points.is_empty() {
        return Err(Error::InvalidKernelParams("empty point list".into()));
    }
    for p in points {
        if p.degree() != params.degree() {
            return Err(Error::DegreeMismatch {
                left: p.degree(),
                right: params.degree(),
            });
        }
    }
    let dim = points.len();
    let inverses: Vec<Permutation> = points.iter().map(|p| p.inverse()).collect();
    let mut values = vec![S::zero(); dim * dim];
    // Upper triangle row by row, then mirror; entries are pure functions of
    // (i, j) so the parallel fill is deterministic.
    values
        .par_chunks_mut(dim)
        .enumerate()
        .try_for_each(|(i, row)| -> Result<()> {
            for j in i..dim {
                let q = points[i].compose(&inverses[j])?;
                row[j] = params.eval_cycle_counts(&q.cycle_type().cycle_counts());
            }
            Ok(())
        })?;
    for i in 0..dim {
        for j in 0..i {
            values[i * dim + j] = values[j * dim + i];
        }
    }
    Ok(Gram {
        points: points.to_vec(),
        values,
        params: params.clone(),
    })
}

/// One step of [`check_monotonicity`]: the kernel values before and after a
/// cycle split.
#[derive(Debug, Clone)]
pub struct MonotonicityStep<S: Scalar> {
    pub before: S,
    pub after: S,
}

/// Result of walking random shortest paths toward the identity.
#[derive(Debug, Clone)]
pub struct MonotonicityReport<S: Scalar> {
    pub steps: Vec<MonotonicityStep<S>>,
    pub nondecreasing: bool,
    pub strictly_increasing: bool,
}

/// Multiplies `g` by a uniformly chosen transposition that splits one of its
/// cycles (one Cayley step toward the identity). Returns `None` when `g` is
/// the identity.
pub fn random_split_step<S: Scalar, R: Rng + ?Sized>(
    params: &KernelParams<S>,
    g: &Permutation,
    rng: &mut R,
) -> Result<Option<(MonotonicityStep<S>, Permutation)>> {
    if g.degree() != params.degree() {
        return Err(Error::DegreeMismatch {
            left: g.degree(),
            right: params.degree(),
        });
    }
    // Transpositions (a, b) with a, b in the same cycle of g are exactly the
    // ones whose right multiplication increases the cycle count.
    let mut splitters: Vec<(usize, usize)> = Vec::new();
    for cycle in g.cycles() {
        if cycle.len() < 2 {
            continue;
        }
        for i in 0..cycle.len() {
            for j in (i + 1)..cycle.len() {
                splitters.push((cycle[i] as usize, cycle[j] as usize));
            }
        }
    }
    if splitters.is_empty() {
        return Ok(None);
    }
    let (a, b) = splitters[rng.random_range(0..splitters.len())];
    let tau = Permutation::transposition(g.degree(), a, b)?;
    let next = g.compose(&tau)?;
    debug_assert_eq!(next.cycle_count(), g.cycle_count() + 1);
    let e = Permutation::identity(g.degree());
    Ok(Some((
        MonotonicityStep {
            before: params.kernel_eval(g, &e)?,
            after: params.kernel_eval(&next, &e)?,
        },
        next,
    )))
}

/// Walks `trials` random shortest paths from `g` to the identity, recording
/// every kernel value along the way. With at least two positive entries in
/// `z` the value must strictly increase at every step; it may never
/// decrease.
pub fn check_monotonicity<S: Scalar, R: Rng + ?Sized>(
    params: &KernelParams<S>,
    g: &Permutation,
    trials: usize,
    rng: &mut R,
) -> Result<MonotonicityReport<S>> {
    let mut steps = Vec::new();
    for _ in 0..trials {
        let mut current = g.clone();
        while let Some((step, next)) = random_split_step(params, &current, rng)? {
            steps.push(step);
            current = next;
        }
        debug_assert!(current.is_identity());
    }
    let nondecreasing = steps.iter().all(|s| s.after >= s.before);
    let strictly_increasing = !steps.is_empty() && steps.iter().all(|s| s.after > s.before);
    Ok(MonotonicityReport {
        steps,
        nondecreasing,
        strictly_increasing,
    })
}

/// Kernel values per conjugacy class together with the quotient graph of
/// the Cayley graph: classes are adjacent when one cycle type arises from
/// the other by splitting a part in two (equivalently, merging two parts).
#[derive(Debug, Clone)]
pub struct ClassKernelTable<S: Scalar> {
    pub classes: Vec<(Partition, S)>,
    /// Index pairs into `classes`, each unordered edge once, lexicographic.
    pub edges: Vec<(usize, usize)>,
}

/// Builds the per-class kernel table and quotient-graph adjacency for the
/// degree of `params`.
pub fn class_kernel_table<S: Scalar>(params: &KernelParams<S>) -> Result<ClassKernelTable<S>> {
    let n = params.degree();
    if n > CLASS_TABLE_CAP {
        return Err(Error::CapExceeded {
            what: "class kernel table",
            requested: n,
            cap: CLASS_TABLE_CAP,
        });
    }
    let all = partitions_of(n);
    let index: std::collections::HashMap<&Partition, usize> =
        all.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let classes: Vec<(Partition, S)> = all
        .iter()
        .map(|mu| Ok((mu.clone(), params.eval_class(mu)?)))
        .collect::<Result<_>>()?;
    let mut edges = std::collections::BTreeSet::new();
    for (i, mu) in all.iter().enumerate() {
        for (pos, &a) in mu.parts().iter().enumerate() {
            if a < 2 {
                continue;
            }
            for b in 1..=a / 2 {
                let mut parts: Vec<u32> = mu.parts().to_vec();
                parts.remove(pos);
                parts.push(b);
                parts.push(a - b);
                let split = Partition::from_unsorted(parts)?;
                let j = index[&split];
                edges.insert((i.min(j), i.max(j)));
            }
        }
    }
    Ok(ClassKernelTable {
        classes,
        edges: edges.into_iter().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{enumerate_group, random_uniform};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha12Rng;

    fn p(images: &[u32]) -> Permutation {
        Permutation::from_images(images.to_vec()).unwrap()
    }

    fn random_z(m: usize, rng: &mut ChaCha12Rng) -> Vec<f64> {
        (0..m).map(|_| rng.random_range(0.01..1.0)).collect()
    }

    #[test]
    fn construction_validates_z() {
        assert!(KernelParams::new(vec![0.5f64, 0.5], 3).is_ok());
        assert!(KernelParams::new(vec![0.0f64, 0.0], 3).is_err());
        assert!(KernelParams::new(vec![-0.1f64, 1.0], 3).is_err());
        assert!(KernelParams::new(vec![f64::NAN], 3).is_err());
        assert!(KernelParams::<f64>::new(vec![], 3).is_err());
        let k = KernelParams::normalized(vec![2.0f64, 2.0], 3).unwrap();
        assert!(k.is_normalized());
        assert_eq!(k.z(), &[0.5, 0.5]);
        assert_eq!(k.variance(), 1.0);
    }

    #[test]
    fn product_formula_examples() {
        let k = KernelParams::new(vec![0.5f64, 0.5], 3).unwrap();
        let e = Permutation::identity(3);
        assert_eq!(k.kernel_eval(&e, &e).unwrap(), 1.0);
        assert_eq!(k.kernel_eval(&p(&[2, 1, 3]), &e).unwrap(), 0.5);
        assert_eq!(k.kernel_eval(&p(&[2, 3, 1]), &e).unwrap(), 0.25);
    }

    #[test]
    fn extreme_case_all_ones_is_m_to_cycle_count() {
        let k = KernelParams::new(vec![1.0f64, 1.0], 3).unwrap();
        let e = Permutation::identity(3);
        // transposition: 2 cycles -> m^2 = 4
        assert_eq!(k.kernel_eval(&p(&[2, 1, 3]), &e).unwrap(), 4.0);
        for n in [3usize, 5] {
            for m in [2usize, 3] {
                let k = KernelParams::new(vec![1.0f64; m], n).unwrap();
                for g in enumerate_group(n).unwrap() {
                    let expect = (m as f64).powi(g.cycle_count() as i32);
                    assert_eq!(k.kernel_eval(&g, &Permutation::identity(n)).unwrap(), expect);
                }
            }
        }
    }

    #[test]
    fn extreme_case_single_entry_is_constant() {
        let k = KernelParams::new(vec![1.0f64], 4).unwrap();
        for g in enumerate_group(4).unwrap() {
            for h in enumerate_group(4).unwrap() {
                assert_eq!(k.kernel_eval(&g, &h).unwrap(), 1.0);
            }
        }
    }

    #[test]
    fn extreme_case_uniform_z_bounds_off_diagonal() {
        for m in [2usize, 3, 5] {
            let n = 5;
            let k = KernelParams::new(vec![1.0 / m as f64; m], n).unwrap();
            let e = Permutation::identity(n);
            for g in enumerate_group(n).unwrap() {
                let v = k.kernel_eval(&g, &e).unwrap();
                if g.is_identity() {
                    assert!((v - 1.0).abs() < 1e-12);
                } else {
                    let l = g.cycle_count() as i32;
                    let expect = (m as f64).powi(l - n as i32);
                    assert!((v - expect).abs() <= 1e-13 * expect);
                    assert!(v <= 1.0 / m as f64 + 1e-13);
                }
            }
        }
    }

    #[test]
    fn kernel_is_a_class_function_of_the_quotient() {
        let k = KernelParams::new(vec![0.3f64, 0.7], 6).unwrap();
        let mut rng = ChaCha12Rng::seed_from_u64(3);
        let g = random_uniform(6, &mut rng);
        let h = random_uniform(6, &mut rng);
        let base = k.kernel_eval(&g, &h).unwrap();
        for _ in 0..100 {
            let s = random_uniform(6, &mut rng);
            // conjugating gh^-1 leaves the value unchanged
            let g2 = s.compose(&g).unwrap().compose(&s.inverse()).unwrap();
            let h2 = s.compose(&h).unwrap().compose(&s.inverse()).unwrap();
            assert_eq!(k.kernel_eval(&g2, &h2).unwrap(), base);
        }
    }

    #[test]
    fn bi_invariance_exhaustive_s4() {
        let k = KernelParams::new(vec![0.6f64, 0.4], 4).unwrap();
        let all = enumerate_group(4).unwrap();
        for sigma in &all {
            for g in &all {
                for h in &all {
                    let base = k.kernel_eval(g, h).unwrap();
                    let left = k
                        .kernel_eval(&sigma.compose(g).unwrap(), &sigma.compose(h).unwrap())
                        .unwrap();
                    let right = k
                        .kernel_eval(&g.compose(sigma).unwrap(), &h.compose(sigma).unwrap())
                        .unwrap();
                    assert_eq!(base, left);
                    assert_eq!(base, right);
                }
            }
        }
    }

    #[test]
    fn homogeneity_in_z() {
        let mut rng = ChaCha12Rng::seed_from_u64(8);
        let z = random_z(3, &mut rng);
        let r: f64 = rng.random_range(0.2..3.0);
        let n = 5;
        let k = KernelParams::new(z.clone(), n).unwrap();
        let kr = KernelParams::new(z.iter().map(|&v| r * v).collect(), n).unwrap();
        for _ in 0..50 {
            let g = random_uniform(n, &mut rng);
            let h = random_uniform(n, &mut rng);
            let a = k.kernel_eval(&g, &h).unwrap();
            let b = kr.kernel_eval(&g, &h).unwrap();
            assert!((b - r.powi(n as i32) * a).abs() < 1e-12 * b.abs().max(1.0));
        }
    }

    #[test]
    fn character_route_agrees_exhaustively_on_s4() {
        let chars = Characters::new();
        let mut rng = ChaCha12Rng::seed_from_u64(21);
        let all = enumerate_group(4).unwrap();
        for m in 1..=3usize {
            for _ in 0..3 {
                let k = KernelParams::new(random_z(m, &mut rng), 4).unwrap();
                for g in &all {
                    for h in &all {
                        let a = k.kernel_eval(g, h).unwrap();
                        let b = k.kernel_eval_via_characters(g, h, &chars).unwrap();
                        assert!((a - b).abs() < 1e-10, "m={} g={} h={}: {} vs {}", m, g, h, a, b);
                    }
                }
            }
        }
    }

    #[test]
    fn character_route_diagonal_is_variance() {
        let chars = Characters::new();
        let z = vec![0.3f64, 0.2, 0.5];
        let k = KernelParams::new(z, 5).unwrap();
        let e = Permutation::identity(5);
        let via = k.kernel_eval_via_characters(&e, &e, &chars).unwrap();
        assert!((via - k.variance()).abs() < 1e-10);
    }

    #[test]
    fn zero_coordinate_is_dropped_transparently() {
        let chars = Characters::new();
        let with_zero = KernelParams::new(vec![0.4f64, 0.0, 0.6], 4).unwrap();
        let without = KernelParams::new(vec![0.4f64, 0.6], 4).unwrap();
        let all = enumerate_group(4).unwrap();
        for g in &all {
            let e = Permutation::identity(4);
            assert_eq!(
                with_zero.kernel_eval(g, &e).unwrap(),
                without.kernel_eval(g, &e).unwrap()
            );
            let a = with_zero.kernel_eval_via_characters(g, &e, &chars).unwrap();
            let b = without.kernel_eval_via_characters(g, &e, &chars).unwrap();
            assert!((a - b).abs() < 1e-10);
        }
    }

    #[test]
    fn gram_on_s3_has_three_class_values() {
        let k = KernelParams::new(vec![0.5f64, 0.5], 3).unwrap();
        let points = enumerate_group(3).unwrap();
        let gm = gram(&k, &points).unwrap();
        assert_eq!(gm.dim(), 6);
        for i in 0..6 {
            assert_eq!(gm.value(i, i), 1.0);
            for j in 0..6 {
                assert_eq!(gm.value(i, j), gm.value(j, i));
                assert!([1.0, 0.5, 0.25].contains(&gm.value(i, j)));
            }
        }
        assert!(gm.is_psd(1e-9).unwrap());
    }

    #[test]
    fn single_point_gram() {
        let k = KernelParams::new(vec![0.5f64, 0.5], 3).unwrap();
        let gm = gram(&k, &[Permutation::identity(3)]).unwrap();
        assert_eq!(gm.dim(), 1);
        assert_eq!(gm.value(0, 0), k.variance());
    }

    #[test]
    fn gram_rejects_degree_mismatch() {
        let k = KernelParams::new(vec![0.5f64, 0.5], 3).unwrap();
        assert!(gram(&k, &[Permutation::identity(4)]).is_err());
        assert!(gram(&k, &[]).is_err());
    }

    #[test]
    fn full_s5_gram_is_psd_for_random_z() {
        let points = enumerate_group(5).unwrap();
        let mut rng = ChaCha12Rng::seed_from_u64(55);
        for _ in 0..5 {
            let k = KernelParams::normalized(random_z(3, &mut rng), 5).unwrap();
            let gm = gram(&k, &points).unwrap();
            let min = gm.min_eigenvalue().unwrap();
            assert!(min >= -1e-9, "min eigenvalue {}", min);
        }
    }

    #[test]
    fn monotone_along_random_splitting_paths() {
        let mut rng = ChaCha12Rng::seed_from_u64(4);
        let n = 6;
        let k = KernelParams::normalized(vec![0.5f64, 0.5], n).unwrap();
        // full cycle starts at the bottom
        let g = p(&[2, 3, 4, 5, 6, 1]);
        let report = check_monotonicity(&k, &g, 20, &mut rng).unwrap();
        assert!(report.nondecreasing);
        assert!(report.strictly_increasing);
        // splitting an a-cycle into b + c with z = (1,1) doubles the value:
        // p_b p_c / p_a = 2*2/2 = 2
        let k2 = KernelParams::new(vec![1.0f64, 1.0], n).unwrap();
        let report = check_monotonicity(&k2, &g, 5, &mut rng).unwrap();
        for step in &report.steps {
            assert_eq!(step.after, 2.0 * step.before);
        }
        // single positive entry: kernel constant along the path
        let k1 = KernelParams::new(vec![1.0f64, 0.0], n).unwrap();
        let report = check_monotonicity(&k1, &g, 5, &mut rng).unwrap();
        assert!(report.nondecreasing);
        assert!(!report.strictly_increasing);
        for step in &report.steps {
            assert_eq!(step.before, step.after);
        }
    }

    #[test]
    fn class_table_for_s6() {
        let k = KernelParams::new(vec![0.5f64, 0.5], 6).unwrap();
        let table = class_kernel_table(&k).unwrap();
        assert_eq!(table.classes.len(), 11); // p(6) = 11
        let lookup = |parts: &[u32]| {
            let target = Partition::new(parts.to_vec()).unwrap();
            table
                .classes
                .iter()
                .find(|(p, _)| *p == target)
                .map(|(_, v)| *v)
                .unwrap()
        };
        assert_eq!(lookup(&[1, 1, 1, 1, 1, 1]), 1.0);
        assert_eq!(lookup(&[6]), 1.0 / 32.0);
        assert_eq!(lookup(&[2, 1, 1, 1, 1]), 0.5);
        // every edge changes the part count by exactly one
        for &(i, j) in &table.edges {
            let a = table.classes[i].0.len() as i64;
            let b = table.classes[j].0.len() as i64;
            assert_eq!((a - b).abs(), 1);
        }
        // the (1^6) class only splits from (2, 1^4)
        let id_idx = table.classes.iter().position(|(p, _)| p.len() == 6).unwrap();
        let neighbors: Vec<usize> = table
            .edges
            .iter()
            .filter_map(|&(i, j)| {
                if i == id_idx {
                    Some(j)
                } else if j == id_idx {
                    Some(i)
                } else {
                    None
                }
            })
            .collect();
        assert_eq!(neighbors.len(), 1);
        assert_eq!(
            table.classes[neighbors[0]].0,
            Partition::new(vec![2, 1, 1, 1, 1]).unwrap()
        );
    }

    #[test]
    fn class_table_cap() {
        let k = KernelParams::new(vec![0.5f64, 0.5], 13).unwrap();
        assert!(matches!(
            class_kernel_table(&k),
            Err(Error::CapExceeded { .. })
        ));
    }
}

//! Verification suites: executable forms of the identities the kernel
//! construction rests on. Each check prints one line; the command exits
//! nonzero if any check fails.

use std::collections::HashMap;

use powersum::characters::{
    character_table, check_column_orthogonality, check_row_orthogonality, Characters,
};
use powersum::kernel::{gram, random_split_step, KernelParams};
use powersum::partition::{partition_count, partitions_of, Partition};
use powersum::perm::{enumerate_group, enumerate_group_with_cap, random_uniform, Permutation};
use powersum::rsk::rsk_shape;
use powersum::sampler::features::verify_ginibre_schur;
use powersum::symfunc::{power_sum_partition, schur_ssyt};
use powersum::tableaux::{dimension, plancherel_probability};
use rand_chacha::ChaCha12Rng;

use rand::{Rng, SeedableRng};

use crate::{CliError, CliResult};

struct Reporter {
    suite: &'static str,
    all_pass: bool,
}

impl Reporter {
    fn new(suite: &'static str) -> Self {
        Reporter {
            suite,
            all_pass: true,
        }
    }

    fn check(&mut self, pass: bool, detail: &str) {
        println!(
            "[{}] {}: {}",
            if pass { "pass" } else { "FAIL" },
            self.suite,
            detail
        );
        self.all_pass &= pass;
    }

    fn finish(self) -> bool {
        println!(
            "suite {}: {}",
            self.suite,
            if self.all_pass { "PASS" } else { "FAIL" }
        );
        self.all_pass
    }
}

pub fn run(
    suite: &str,
    n: Option<usize>,
    m: Option<usize>,
    count: Option<usize>,
    seed: u64,
    z_spec: Option<&str>,
) -> CliResult {
    let z = match z_spec {
        Some(spec) => Some(crate::commands::parse_z(spec)?),
        None => None,
    };
    let pass = match suite {
        "frobenius" => frobenius(n.unwrap_or(4), m.unwrap_or(3), count.unwrap_or(10), seed)?,
        "characters" => characters_suite(n.unwrap_or(6))?,
        "ginibre" => ginibre(n.unwrap_or(3), count.unwrap_or(100_000), seed, z.as_deref())?,
        "plancherel" => plancherel(n.unwrap_or(6), count.unwrap_or(100_000), seed)?,
        "monotonic" => monotonic(n.unwrap_or(8), count.unwrap_or(10_000), seed)?,
        "psd" => psd(n.unwrap_or(5), m.unwrap_or(3), count.unwrap_or(20), seed)?,
        "all" => {
            let mut all = true;
            all &= frobenius(4, 3, 10, seed)?;
            all &= characters_suite(6)?;
            all &= ginibre(3, 100_000, seed, z.as_deref())?;
            all &= plancherel(6, 100_000, seed)?;
            all &= monotonic(8, 10_000, seed)?;
            all &= psd(5, 3, 20, seed)?;
            all
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown suite {:?}; expected frobenius, characters, ginibre, plancherel, monotonic, psd or all",
                other
            )))
        }
    };
    Ok(pass)
}

/// `p_mu(z) = sum over lambda (length <= m) of chi_lambda(mu) s_lambda(z)`
/// for every class of the group, with tableau-enumerated Schur values.
fn frobenius(n: usize, m: usize, trials: usize, seed: u64) -> Result<bool, CliError> {
    let chars = Characters::new();
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut reporter = Reporter::new("frobenius");
    let mut worst = 0.0f64;
    for _ in 0..trials {
        let z: Vec<f64> = (0..m).map(|_| rng.random_range(0.0..1.0)).collect();
        for mu in partitions_of(n) {
            let lhs = power_sum_partition(&mu, &z);
            let mut rhs = 0.0;
            for lambda in partitions_of(n) {
                if lambda.len() <= m {
                    rhs += chars.character(&lambda, &mu)? as f64 * schur_ssyt(&lambda, &z)?;
                }
            }
            worst = worst.max((lhs - rhs).abs());
        }
    }
    reporter.check(
        worst < 1e-10,
        &format!(
            "power sums match the character expansion over S{} classes, m = {}, {} random z: max residual {:e}",
            n, m, trials, worst
        ),
    );
    Ok(reporter.finish())
}

/// Dimensions and both orthogonality relations, all in exact integers.
fn characters_suite(n_max: usize) -> Result<bool, CliError> {
    let chars = Characters::new();
    let mut reporter = Reporter::new("characters");
    for n in 1..=n_max {
        let mut dims_ok = true;
        let e_class = Partition::single_column(n);
        for lambda in partitions_of(n) {
            dims_ok &= chars.character(&lambda, &e_class)? as u128 == dimension(&lambda)?;
        }
        reporter.check(dims_ok, &format!("chi(e) equals the dimension for all shapes of S{}", n));
        let table = character_table(n, &chars)?;
        reporter.check(
            check_row_orthogonality(&table)?,
            &format!("row orthogonality exact on S{}", n),
        );
        reporter.check(
            check_column_orthogonality(&table)?,
            &format!("column orthogonality exact on S{}", n),
        );
    }
    Ok(reporter.finish())
}

/// Monte Carlo check of `E |s_lambda(A Z)|^2 = n! s_lambda(z) / d_lambda`
/// for every admissible shape of weight `n`.
fn ginibre(n: usize, samples: usize, seed: u64, z: Option<&[f64]>) -> Result<bool, CliError> {
    let z = z.map(|v| v.to_vec()).unwrap_or_else(|| vec![0.7, 0.3]);
    let m = z.len();
    let params = KernelParams::new(z, n)?;
    let chars = Characters::new();
    let mut reporter = Reporter::new("ginibre");
    for lambda in partitions_of(n) {
        if lambda.len() > m {
            continue;
        }
        let report = verify_ginibre_schur(&lambda, &params, samples, seed, &chars)?;
        reporter.check(
            report.pass,
            &format!(
                "shape ({}): estimate {:.6} vs exact {:.6}, stderr {:.2e}",
                lambda, report.estimate, report.exact, report.std_error
            ),
        );
        reporter.check(
            report.symmetry_pass,
            &format!(
                "shape ({}): Re/Im power symmetry {:.6} vs {:.6}",
                lambda, report.re_mean_sq, report.im_mean_sq
            ),
        );
    }
    Ok(reporter.finish())
}

/// Insertion shapes of uniform permutations follow the squared-dimension
/// law: exact by enumeration on S5, chi-square on the requested degree.
fn plancherel(n: usize, draws: usize, seed: u64) -> Result<bool, CliError> {
    let mut reporter = Reporter::new("plancherel");
    // exact count on S5
    let mut counts: HashMap<Partition, u128> = HashMap::new();
    for g in enumerate_group(5)? {
        *counts.entry(rsk_shape(&g)).or_insert(0) += 1;
    }
    let exact_ok = partitions_of(5).iter().all(|lambda| {
        let d = dimension(lambda).unwrap();
        counts.get(lambda).copied().unwrap_or(0) == d * d
    });
    reporter.check(exact_ok, "shape counts over all of S5 equal d^2 exactly");

    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut freq: HashMap<Partition, u64> = HashMap::new();
    for _ in 0..draws {
        *freq.entry(rsk_shape(&random_uniform(n, &mut rng))).or_insert(0) += 1;
    }
    let mut chi2 = 0.0;
    for lambda in partitions_of(n) {
        let expect = plancherel_probability(&lambda, n)? * draws as f64;
        let got = freq.get(&lambda).copied().unwrap_or(0) as f64;
        chi2 += (got - expect) * (got - expect) / expect;
    }
    let dof = partition_count(n) - 1;
    let critical = chi_square_quantile_999(dof);
    reporter.check(
        chi2 < critical,
        &format!(
            "chi-square over {} draws on S{}: {:.2} < {:.2} (99.9% level, {} dof)",
            draws, n, chi2, critical, dof
        ),
    );
    Ok(reporter.finish())
}

/// Wilson-Hilferty approximation of the 0.999 chi-square quantile.
fn chi_square_quantile_999(dof: usize) -> f64 {
    let k = dof as f64;
    let z = 3.090232; // standard normal 0.999 quantile
    let t = 1.0 - 2.0 / (9.0 * k) + z * (2.0 / (9.0 * k)).sqrt();
    k * t * t * t
}

/// Splitting a cycle never decreases the kernel; strictly increases it when
/// z has at least two positive entries.
fn monotonic(n: usize, trials: usize, seed: u64) -> Result<bool, CliError> {
    let mut reporter = Reporter::new("monotonic");
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let strict_params = KernelParams::normalized(vec![0.5, 0.3, 0.2], n)?;
    let flat_params = KernelParams::new(vec![1.0, 0.0, 0.0], n)?;
    let mut strict_ok = true;
    let mut flat_ok = true;
    let mut done = 0;
    while done < trials {
        let g = random_uniform(n, &mut rng);
        match random_split_step(&strict_params, &g, &mut rng)? {
            Some((step, _)) => {
                strict_ok &= step.after > step.before;
            }
            None => continue, // identity has no splitting step
        }
        if let Some((step, _)) = random_split_step(&flat_params, &g, &mut rng)? {
            flat_ok &= step.after >= step.before;
        }
        done += 1;
    }
    reporter.check(
        strict_ok,
        &format!("{} random splitting steps on S{} strictly increase the kernel (all z_j > 0)", trials, n),
    );
    reporter.check(
        flat_ok,
        &format!("{} random splitting steps never decrease it for z = (1,0,0)", trials),
    );
    Ok(reporter.finish())
}

/// Minimum Gram eigenvalue stays above the PSD tolerance for random z.
fn psd(n: usize, m: usize, trials: usize, seed: u64) -> Result<bool, CliError> {
    let mut reporter = Reporter::new("psd");
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut worst = f64::INFINITY;
    for _ in 0..trials {
        let z: Vec<f64> = (0..m).map(|_| rng.random_range(0.01..1.0)).collect();
        let params = KernelParams::normalized(z, n)?;
        let points: Vec<Permutation> = if n <= 6 {
            enumerate_group_with_cap(n, 6)?
        } else {
            // too large to enumerate: a 200-point random subset
            let mut set = std::collections::BTreeSet::new();
            while set.len() < 200 {
                set.insert(random_uniform(n, &mut rng));
            }
            set.into_iter().collect()
        };
        let gm = gram(&params, &points)?;
        worst = worst.min(gm.min_eigenvalue()?);
    }
    reporter.check(
        worst >= -1e-9,
        &format!(
            "min eigenvalue over {} random z on S{}: {:e} >= -1e-9",
            trials, n, worst
        ),
    );
    Ok(reporter.finish())
}

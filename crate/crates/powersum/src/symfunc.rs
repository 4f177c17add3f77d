//! Power sums and Schur polynomials.
//!
//! Three Schur evaluation routes are kept deliberately distinct so they can
//! cross-check each other:
//!
//! * [`schur_ssyt`] sums monomials over semistandard tableaux (oracle,
//!   small shapes only);
//! * [`schur_weyl_determinant`] is the bialternant determinant ratio
//!   (oracle, needs well-separated entries);
//! * [`schur_from_characters_vec`] / [`schur_from_characters_matrix`]
//!   expand in power sums with character coefficients. This is the
//!   production path: it works on complex matrix arguments through traces
//!   of powers, with no eigensolver anywhere.

use num_complex::Complex;

use crate::characters::Characters;
use crate::cmatrix::{power_traces, CMatrix};
use crate::error::{Error, Result};
use crate::partition::{centralizer_size, partitions_of, Partition};
use crate::scalar::Scalar;
use crate::tableaux::enumerate_ssyt;

/// The character expansion enumerates all partitions of `n`; refuse weights
/// above this.
pub const SCHUR_CHARACTER_CAP: usize = 14;

/// Minimum pairwise gap the determinant path accepts before the Vandermonde
/// denominator is considered numerically degenerate.
pub const WEYL_MIN_GAP: f64 = 1e-8;

/// Newton power sum `p_d(x) = sum_j x_j^d`.
pub fn power_sum<S: Scalar>(d: usize, x: &[S]) -> S {
    assert!(d >= 1, "power sum degree must be positive");
    x.iter().map(|&v| v.powi(d as i32)).fold(S::zero(), |a, b| a + b)
}

/// Product of power sums over the parts of `mu`.
pub fn power_sum_partition<S: Scalar>(mu: &Partition, x: &[S]) -> S {
    mu.parts()
        .iter()
        .map(|&p| power_sum(p as usize, x))
        .fold(S::one(), |a, b| a * b)
}

/// `p_d` of the eigenvalues of `x`, computed as the trace of `x^d`.
pub fn power_sum_matrix<S: Scalar>(d: usize, x: &CMatrix<S>) -> Complex<S> {
    assert!(d >= 1, "power sum degree must be positive");
    power_traces(x, d)[d - 1]
}

/// Schur polynomial as the generating function of semistandard tableaux.
pub fn schur_ssyt<S: Scalar>(lambda: &Partition, x: &[S]) -> Result<S> {
    let m = x.len();
    let tableaux = enumerate_ssyt(lambda, m)?;
    let mut total = S::zero();
    for t in &tableaux {
        let mut monomial = S::one();
        for (j, &count) in t.letter_counts(m).iter().enumerate() {
            if count > 0 {
                monomial = monomial * x[j].powi(count as i32);
            }
        }
        total = total + monomial;
    }
    Ok(total)
}

/// Schur polynomial as a ratio of alternants
/// `det(x_i^{lambda_j + m - j}) / det(x_i^{m - j})`.
///
/// Rejects inputs whose minimum pairwise gap is below [`WEYL_MIN_GAP`]; the
/// denominator is the Vandermonde determinant and vanishes at coincident
/// entries.
pub fn schur_weyl_determinant<S: Scalar>(lambda: &Partition, x: &[S]) -> Result<S> {
    let m = x.len();
    if lambda.len() > m {
        return Ok(S::zero());
    }
    let mut min_gap = f64::INFINITY;
    for i in 0..m {
        for j in (i + 1)..m {
            min_gap = min_gap.min((x[i] - x[j]).abs().to_double());
        }
    }
    if min_gap < WEYL_MIN_GAP {
        return Err(Error::CoincidentEntries {
            gap: min_gap,
            tolerance: WEYL_MIN_GAP,
        });
    }
    let mut numerator = vec![S::zero(); m * m];
    for i in 0..m {
        for j in 0..m {
            let exponent = lambda.part(j) + (m - 1 - j) as u32;
            numerator[i * m + j] = x[i].powi(exponent as i32);
        }
    }
    let num_det = crate::linalg::lu_determinant(numerator, m);
    // Vandermonde in closed form
    let mut den_det = S::one();
    for i in 0..m {
        for j in (i + 1)..m {
            den_det = den_det * (x[i] - x[j]);
        }
    }
    if den_det == S::zero() {
        return Err(Error::CoincidentEntries {
            gap: min_gap,
            tolerance: WEYL_MIN_GAP,
        });
    }
    Ok(num_det / den_det)
}

fn check_schur_cap(lambda: &Partition) -> Result<usize> {
    let n = lambda.weight();
    if n > SCHUR_CHARACTER_CAP {
        return Err(Error::CapExceeded {
            what: "character expansion of a Schur polynomial",
            requested: n,
            cap: SCHUR_CHARACTER_CAP,
        });
    }
    Ok(n)
}

/// Schur polynomial by the character expansion
/// `s_lambda = sum_mu chi_lambda(mu) p_mu / z_mu` over partitions of `n`.
pub fn schur_from_characters_vec<S: Scalar>(
    lambda: &Partition,
    x: &[S],
    chars: &Characters,
) -> Result<S> {
    let n = check_schur_cap(lambda)?;
    // power sums p_1..p_n once
    let traces: Vec<S> = (1..=n).map(|d| power_sum(d, x)).collect();
    let mut total = S::zero();
    for mu in partitions_of(n) {
        let chi = chars.character(lambda, &mu)?;
        if chi == 0 {
            continue;
        }
        let mut p_mu = S::one();
        for &part in mu.parts() {
            p_mu = p_mu * traces[part as usize - 1];
        }
        let coeff = S::of(chi as f64 / centralizer_size(&mu)? as f64);
        total = total + coeff * p_mu;
    }
    Ok(total)
}

/// Character expansion of `s_lambda` at a complex matrix argument, using
/// traces of matrix powers as the power sums of its eigenvalues.
pub fn schur_from_characters_matrix<S: Scalar>(
    lambda: &Partition,
    x: &CMatrix<S>,
    chars: &Characters,
) -> Result<Complex<S>> {
    let n = check_schur_cap(lambda)?;
    let traces = power_traces(x, n);
    let mut total = Complex::new(S::zero(), S::zero());
    for mu in partitions_of(n) {
        let chi = chars.character(lambda, &mu)?;
        if chi == 0 {
            continue;
        }
        let mut p_mu = Complex::new(S::one(), S::zero());
        for &part in mu.parts() {
            p_mu = p_mu * traces[part as usize - 1];
        }
        let coeff = S::of(chi as f64 / centralizer_size(&mu)? as f64);
        total = total + p_mu * coeff;
    }
    Ok(total)
}

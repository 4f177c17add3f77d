//! Irreducible characters of the symmetric group on conjugacy classes,
//! computed by the Murnaghan-Nakayama rule with memoization.
//!
//! Values are exact integers throughout; the recursion never touches
//! floating point. The memo is shared behind an `RwLock`, so a single
//! [`Characters`] instance can serve concurrent readers.

use std::collections::HashMap;
use std::sync::RwLock;

use crate::error::{Error, Result};
use crate::partition::{centralizer_size, factorial, partitions_of, Partition};
use crate::perm::Permutation;
use crate::tableaux::dimension;

/// Memoized character evaluator.
///
/// Cheap to construct; the memo grows on demand and is never evicted (the
/// partition lattice for the degrees we support is small).
#[derive(Debug, Default)]
pub struct Characters {
    memo: RwLock<HashMap<(Partition, Partition), i64>>,
}

impl Characters {
    pub fn new() -> Self {
        Characters {
            memo: RwLock::new(HashMap::new()),
        }
    }

    /// Character of the representation `lambda` on the conjugacy class with
    /// cycle type `mu`, both partitions of the same weight.
    pub fn character(&self, lambda: &Partition, mu: &Partition) -> Result<i64> {
        if lambda.weight() != mu.weight() {
            return Err(Error::WeightMismatch {
                left: lambda.weight(),
                right: mu.weight(),
            });
        }
        Ok(self.eval(lambda, mu))
    }

    /// Character evaluated at a group element: `character(lambda, cycle_type(g))`.
    pub fn character_at(&self, lambda: &Partition, g: &Permutation) -> Result<i64> {
        self.character(lambda, &g.cycle_type())
    }

    fn eval(&self, lambda: &Partition, mu: &Partition) -> i64 {
        if mu.is_empty() {
            return 1; // empty diagram, empty class
        }
        if let Some(&v) = self.memo.read().unwrap().get(&(lambda.clone(), mu.clone())) {
            return v;
        }
        // Remove a border strip of the largest remaining cycle length from
        // every possible position, recursing on the rest of mu.
        let strip = mu.parts()[0];
        let rest = Partition::new(mu.parts()[1..].to_vec()).expect("suffix stays sorted");
        let betas = beta_numbers(lambda);
        let mut total = 0i64;
        for (idx, &b) in betas.iter().enumerate() {
            if b < strip {
                continue;
            }
            let target = b - strip;
            if betas.contains(&target) {
                continue;
            }
            // Strip height minus one = number of occupied beta slots passed over.
            let crossings = betas
                .iter()
                .filter(|&&x| x < b && x > target)
                .count();
            let sign = if crossings % 2 == 0 { 1 } else { -1 };
            let shrunk = partition_from_betas(&betas, idx, target);
            total += sign * self.eval(&shrunk, &rest);
        }
        self.memo
            .write()
            .unwrap()
            .insert((lambda.clone(), mu.clone()), total);
        total
    }
}

/// First-column hook lengths `lambda_i + (len - 1 - i)`: strictly decreasing.
fn beta_numbers(lambda: &Partition) -> Vec<u32> {
    let len = lambda.len() as u32;
    lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (len - 1 - i as u32))
        .collect()
}

/// Rebuilds a partition after replacing `betas[replaced]` with `new_value`.
fn partition_from_betas(betas: &[u32], replaced: usize, new_value: u32) -> Partition {
    let mut bs: Vec<u32> = betas.to_vec();
    bs[replaced] = new_value;
    bs.sort_unstable_by(|a, b| b.cmp(a));
    let len = bs.len() as u32;
    let parts: Vec<u32> = bs
        .iter()
        .enumerate()
        .map(|(i, &b)| b - (len - 1 - i as u32))
        .filter(|&p| p > 0)
        .collect();
    Partition::new(parts).expect("beta numbers give a valid partition")
}

/// Full character table of degree `n`: rows indexed by representations,
/// columns by conjugacy classes, both in descending lexicographic order.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    n: usize,
    partitions: Vec<Partition>,
    values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn degree(&self) -> usize {
        self.n
    }

    /// Row and column labels (the same list).
    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn value(&self, row: usize, col: usize) -> i64 {
        self.values[row][col]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.values
    }
}

/// Builds the character table of degree `n`.
pub fn character_table(n: usize, chars: &Characters) -> Result<CharacterTable> {
    let partitions = partitions_of(n);
    let mut values = Vec::with_capacity(partitions.len());
    for lambda in &partitions {
        let mut row = Vec::with_capacity(partitions.len());
        for mu in &partitions {
            row.push(chars.character(lambda, mu)?);
        }
        values.push(row);
    }
    Ok(CharacterTable {
        n,
        partitions,
        values,
    })
}

/// Exact row orthogonality: `sum_mu (n!/z_mu) chi_l(mu) chi_k(mu) = n! [l = k]`.
pub fn check_row_orthogonality(table: &CharacterTable) -> Result<bool> {
    let nf = factorial(table.degree())? as i128;
    let class_sizes: Vec<i128> = table
        .partitions()
        .iter()
        .map(|mu| Ok(nf / centralizer_size(mu)? as i128))
        .collect::<Result<_>>()?;
    for a in 0..table.partitions().len() {
        for b in 0..table.partitions().len() {
            let sum: i128 = (0..table.partitions().len())
                .map(|c| class_sizes[c] * table.value(a, c) as i128 * table.value(b, c) as i128)
                .sum();
            let expect = if a == b { nf } else { 0 };
            if sum != expect {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Exact column orthogonality: `sum_lambda chi(mu) chi(nu) = z_mu [mu = nu]`.
pub fn check_column_orthogonality(table: &CharacterTable) -> Result<bool> {
    for a in 0..table.partitions().len() {
        for b in 0..table.partitions().len() {
            let sum: i128 = (0..table.partitions().len())
                .map(|l| table.value(l, a) as i128 * table.value(l, b) as i128)
                .sum();
            let expect = if a == b {
                centralizer_size(&table.partitions()[a])? as i128
            } else {
                0
            };
            if sum != expect {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Outcome of the averaging identity check
/// `chi(g h^-1)/d = mean over u of chi(g u) chi(h u)`.
#[derive(Debug, Clone)]
pub struct AverageReport {
    pub lhs: f64,
    pub rhs: f64,
    pub residual: f64,
    pub pass: bool,
}

/// Verifies the character averaging identity by exhaustive summation over
/// the whole group; restricted to small degrees.
pub fn verify_character_average(
    lambda: &Partition,
    g: &Permutation,
    h: &Permutation,
    chars: &Characters,
) -> Result<AverageReport> {
    let n = g.degree();
    if h.degree() != n {
        return Err(Error::DegreeMismatch {
            left: n,
            right: h.degree(),
        });
    }
    if n > 6 {
        return Err(Error::CapExceeded {
            what: "exhaustive character averaging",
            requested: n,
            cap: 6,
        });
    }
    let d = dimension(lambda)? as f64;
    let lhs = chars.character(lambda, &g.compose(&h.inverse())?.cycle_type())? as f64 / d;
    let mut acc: i128 = 0;
    let group = crate::perm::enumerate_group(n)?;
    for u in &group {
        let a = chars.character_at(lambda, &g.compose(u)?)?;
        let b = chars.character_at(lambda, &h.compose(u)?)?;
        acc += a as i128 * b as i128;
    }
    let rhs = acc as f64 / group.len() as f64;
    let residual = (lhs - rhs).abs();
    Ok(AverageReport {
        lhs,
        rhs,
        residual,
        pass: residual < 1e-12,
    })
}

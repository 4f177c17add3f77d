//! Young diagram combinatorics: hook lengths, irreducible dimensions, and
//! semistandard tableau enumeration.
//!
//! The tableau enumerators exist as small-case oracles for the symmetric
//! function layer, so clarity beats speed throughout.

use crate::error::{Error, Result};
use crate::partition::{factorial, Partition};

/// Hook lengths of every cell, row by row.
pub fn hook_lengths(shape: &Partition) -> Vec<Vec<u32>> {
    let conj = shape.conjugate();
    let mut out = Vec::with_capacity(shape.len());
    for i in 0..shape.len() {
        let row_len = shape.part(i) as usize;
        let mut row = Vec::with_capacity(row_len);
        for j in 0..row_len {
            let arm = shape.part(i) - (j as u32) - 1;
            let leg = conj.part(j) - (i as u32) - 1;
            row.push(arm + leg + 1);
        }
        out.push(row);
    }
    out
}

/// Dimension of the irreducible representation indexed by `shape`: the hook
/// length formula `n! / prod(hooks)`. Equals the number of standard Young
/// tableaux of that shape.
pub fn dimension(shape: &Partition) -> Result<u128> {
    let n = shape.weight();
    let mut hooks_product: u128 = 1;
    for row in hook_lengths(shape) {
        for h in row {
            hooks_product = hooks_product
                .checked_mul(h as u128)
                .ok_or(Error::Overflow("dimension"))?;
        }
    }
    Ok(factorial(n)? / hooks_product)
}

/// Plancherel weight `d_lambda^2 / n!` of `shape` among partitions of `n`.
pub fn plancherel_probability(shape: &Partition, n: usize) -> Result<f64> {
    if shape.weight() != n {
        return Err(Error::WeightMismatch {
            left: shape.weight(),
            right: n,
        });
    }
    let d = dimension(shape)? as f64;
    Ok(d * d / factorial(n)? as f64)
}

/// Filling of a Young diagram that weakly increases along rows and strictly
/// increases down columns, with entries in `1..=m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemistandardTableau {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

impl SemistandardTableau {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Occurrence count of each letter: `weight()[j - 1]` cells hold `j`.
    pub fn letter_counts(&self, m: usize) -> Vec<u32> {
        let mut counts = vec![0u32; m];
        for row in &self.rows {
            for &v in row {
                counts[v as usize - 1] += 1;
            }
        }
        counts
    }
}

/// Guard for [`enumerate_ssyt`]: refuse when the exact tableau count exceeds
/// this many entries.
pub const SSYT_ENUMERATION_LIMIT: f64 = 1e7;

/// Exact number of semistandard tableaux of `shape` with entries `1..=m`,
/// via the hook content formula, as a float for guard purposes.
pub fn ssyt_count(shape: &Partition, m: usize) -> f64 {
    let hooks = hook_lengths(shape);
    let mut acc = 1.0f64;
    for i in 0..shape.len() {
        for j in 0..shape.part(i) as usize {
            let content = j as f64 - i as f64;
            acc *= (m as f64 + content) / hooks[i][j] as f64;
        }
    }
    // zero (not a tiny float) when the diagram is taller than the alphabet
    if shape.len() > m {
        0.0
    } else {
        acc
    }
}

/// Every semistandard tableau of `shape` over the alphabet `1..=m`, exactly
/// once, in a deterministic row-major backtracking order.
pub fn enumerate_ssyt(shape: &Partition, m: usize) -> Result<Vec<SemistandardTableau>> {
    let estimate = ssyt_count(shape, m);
    if estimate > SSYT_ENUMERATION_LIMIT {
        return Err(Error::ExplosionGuard {
            estimate,
            limit: SSYT_ENUMERATION_LIMIT,
        });
    }
    let mut out = Vec::new();
    if shape.len() > m {
        return Ok(out); // column of height > m cannot increase strictly
    }
    let mut rows: Vec<Vec<u32>> = (0..shape.len())
        .map(|i| vec![0u32; shape.part(i) as usize])
        .collect();
    fill(shape, m, 0, 0, &mut rows, &mut out);
    Ok(out)
}

fn fill(
    shape: &Partition,
    m: usize,
    row: usize,
    col: usize,
    rows: &mut Vec<Vec<u32>>,
    out: &mut Vec<SemistandardTableau>,
) {
    if row == shape.len() {
        out.push(SemistandardTableau {
            shape: shape.clone(),
            rows: rows.clone(),
        });
        return;
    }
    let (next_row, next_col) = if col + 1 < shape.part(row) as usize {
        (row, col + 1)
    } else {
        (row + 1, 0)
    };
    let min_left = if col > 0 { rows[row][col - 1] } else { 1 };
    let min_above = if row > 0 && col < shape.part(row - 1) as usize {
        rows[row - 1][col] + 1
    } else {
        1
    };
    let lo = min_left.max(min_above);
    for v in lo..=m as u32 {
        rows[row][col] = v;
        fill(shape, m, next_row, next_col, rows, out);
    }
    rows[row][col] = 0;
}

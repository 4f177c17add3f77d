//! Integer partitions and cycle-count vectors.
//!
//! A [`Partition`] is a weakly decreasing sequence of positive integers. It
//! serves double duty as the cycle type of a permutation and as a Young
//! diagram indexing an irreducible representation.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Weakly decreasing sequence of positive integers.
///
/// The empty partition (weight 0) is allowed; it is the base case of the
/// character recursion.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, validating that `parts` is weakly decreasing with
    /// every part positive.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::InvalidPartition(format!(
                    "parts not weakly decreasing: {:?}",
                    parts
                )));
            }
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!(
                "zero part in {:?}",
                parts
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts the given parts into canonical descending order first.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Single row `(n)`.
    pub fn single_row(n: usize) -> Self {
        Partition {
            parts: vec![n as u32],
        }
    }

    /// Single column `(1, ..., 1)` of weight `n`.
    pub fn single_column(n: usize) -> Self {
        Partition {
            parts: vec![1; n],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Row length at `row`, zero beyond the last row.
    pub fn part(&self, row: usize) -> u32 {
        self.parts.get(row).copied().unwrap_or(0)
    }

    /// Sum of all parts.
    pub fn weight(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// Number of parts (the height of the diagram).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Transposed Young diagram.
    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let mut parts = Vec::with_capacity(cols);
        for j in 0..cols {
            let count = self.parts.iter().take_while(|&&p| p as usize > j).count();
            parts.push(count as u32);
        }
        Partition { parts }
    }

    /// Cycle counts `(c_1, ..., c_n)` where `c_j` is the number of parts
    /// equal to `j` and `n` is the weight.
    pub fn cycle_counts(&self) -> CycleCounts {
        let n = self.weight();
        let mut counts = vec![0u32; n];
        for &p in &self.parts {
            counts[p as usize - 1] += 1;
        }
        CycleCounts { counts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses comma-separated parts, e.g. `"3,2,1"`.
    fn from_str(s: &str) -> Result<Self> {
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            if tok.is_empty() {
                continue;
            }
            let p: u32 = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad partition part {:?}", tok)))?;
            parts.push(p);
        }
        Partition::new(parts)
    }
}

/// Cycle-count form of a cycle type: `counts[j-1]` cycles of length `j`,
/// with `sum(j * counts[j-1]) = n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleCounts {
    counts: Vec<u32>,
}

impl CycleCounts {
    pub fn new(counts: Vec<u32>) -> Self {
        CycleCounts { counts }
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn weight(&self) -> usize {
        self.counts
            .iter()
            .enumerate()
            .map(|(i, &c)| (i + 1) * c as usize)
            .sum()
    }

    /// Total number of cycles, fixed points included.
    pub fn total_cycles(&self) -> usize {
        self.counts.iter().map(|&c| c as usize).sum()
    }

    pub fn to_partition(&self) -> Partition {
        let mut parts = Vec::new();
        for (i, &c) in self.counts.iter().enumerate().rev() {
            for _ in 0..c {
                parts.push((i + 1) as u32);
            }
        }
        Partition { parts }
    }
}

/// All partitions of `n` in descending lexicographic order:
/// `(n), (n-1,1), ..., (1,...,1)`.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    partitions_of_max_len(n, n)
}

/// Partitions of `n` with at most `max_len` parts, descending lexicographic.
pub fn partitions_of_max_len(n: usize, max_len: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u32, max_part: u32, budget: usize, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        if budget == 0 {
            return;
        }
        let hi = max_part.min(remaining);
        // Remaining weight must fit in the remaining rows.
        for p in (1..=hi).rev() {
            if (p as usize) * budget < remaining as usize {
                break;
            }
            current.push(p);
            rec(remaining - p, p, budget - 1, current, out);
            current.pop();
        }
    }
    if n == 0 {
        return vec![Partition::empty()];
    }
    rec(n as u32, n as u32, max_len, &mut current, &mut out);
    out
}

/// Number of partitions of `n` (length of [`partitions_of`]).
pub fn partition_count(n: usize) -> usize {
    partitions_of(n).len()
}

/// Exact factorial with overflow checking; fits `u128` for `n <= 33`.
pub fn factorial(n: usize) -> Result<u128> {
    let mut acc: u128 = 1;
    for k in 2..=n as u128 {
        acc = acc.checked_mul(k).ok_or(Error::Overflow("factorial"))?;
    }
    Ok(acc)
}

/// Centralizer order `z_mu = prod_j j^{c_j} c_j!` of the class with cycle
/// type `mu`. The conjugacy class has `n!/z_mu` elements.
pub fn centralizer_size(mu: &Partition) -> Result<u128> {
    let counts = mu.cycle_counts();
    let mut acc: u128 = 1;
    for (i, &c) in counts.counts().iter().enumerate() {
        let j = (i + 1) as u128;
        for _ in 0..c {
            acc = acc.checked_mul(j).ok_or(Error::Overflow("centralizer_size"))?;
        }
        acc = acc
            .checked_mul(factorial(c as usize)?)
            .ok_or(Error::Overflow("centralizer_size"))?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructor_rejects_bad_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::new(vec![3, 2, 2, 1]).is_ok());
    }

    #[test]
    fn partitions_of_three() {
        let ps = partitions_of(3);
        let expect = vec![
            Partition::new(vec![3]).unwrap(),
            Partition::new(vec![2, 1]).unwrap(),
            Partition::new(vec![1, 1, 1]).unwrap(),
        ];
        assert_eq!(ps, expect);
    }

    #[test]
    fn partition_counts() {
        // p(1..10) = 1, 2, 3, 5, 7, 11, 15, 22, 30, 42
        let expect = [1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, &e) in (1..=10).zip(expect.iter()) {
            assert_eq!(partition_count(n), e, "p({})", n);
        }
    }

    #[test]
    fn partitions_with_length_filter() {
        let ps = partitions_of_max_len(4, 2);
        let expect = vec![
            Partition::new(vec![4]).unwrap(),
            Partition::new(vec![3, 1]).unwrap(),
            Partition::new(vec![2, 2]).unwrap(),
        ];
        assert_eq!(ps, expect);
    }

    #[test]
    fn centralizer_examples() {
        // z_(1,1,1) = 1^3 * 3! = 6
        assert_eq!(centralizer_size(&Partition::new(vec![1, 1, 1]).unwrap()).unwrap(), 6);
        // single n-cycle: z = n
        for n in 1..=8u32 {
            assert_eq!(centralizer_size(&Partition::new(vec![n]).unwrap()).unwrap(), n as u128);
        }
        // (2,1) in S3: 2 * 1 = 2, class of 6/2 = 3 transpositions
        assert_eq!(centralizer_size(&Partition::new(vec![2, 1]).unwrap()).unwrap(), 2);
    }

    #[test]
    fn class_sizes_sum_to_group_order() {
        for n in 1..=8 {
            let nf = factorial(n).unwrap();
            let total: u128 = partitions_of(n)
                .iter()
                .map(|mu| nf / centralizer_size(mu).unwrap())
                .sum();
            assert_eq!(total, nf, "n = {}", n);
        }
    }

    #[test]
    fn conjugate_involution() {
        for n in 1..=8 {
            for p in partitions_of(n) {
                assert_eq!(p.conjugate().conjugate(), p);
                assert_eq!(p.conjugate().weight(), n);
            }
        }
        let p = Partition::new(vec![3, 1]).unwrap();
        assert_eq!(p.conjugate(), Partition::new(vec![2, 1, 1]).unwrap());
    }

    #[test]
    fn cycle_counts_round_trip() {
        for n in 1..=8 {
            for p in partitions_of(n) {
                let cc = p.cycle_counts();
                assert_eq!(cc.weight(), n);
                assert_eq!(cc.to_partition(), p);
                assert_eq!(cc.total_cycles(), p.len());
            }
        }
    }

    #[test]
    fn parse_and_display() {
        let p: Partition = "3,2,1".parse().unwrap();
        assert_eq!(p, Partition::new(vec![3, 2, 1]).unwrap());
        assert_eq!(p.to_string(), "3,2,1");
        assert!("1,3".parse::<Partition>().is_err());
        assert!("a,b".parse::<Partition>().is_err());
    }
}

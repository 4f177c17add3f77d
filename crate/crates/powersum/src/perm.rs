//! Permutations of `{1, ..., n}` in one-line notation.
//!
//! One-line notation with 1-based values is the canonical representation;
//! cycle structure is derived on demand, never stored. The composition
//! convention is `(g * h)(i) = g(h(i))`, so `g h^-1` is
//! `g.compose(&h.inverse())`.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::partition::{factorial, Partition};

/// Enumeration refuses degrees above this unless an explicit cap is given.
pub const DEFAULT_ENUMERATION_CAP: usize = 8;

/// Element of the symmetric group on `{1, ..., n}`.
///
/// `images[i]` is the image of `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    /// Builds a permutation from one-line images, validating that they form
    /// a bijection of `{1, ..., n}` with `n >= 1`.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("degree must be at least 1".into()));
        }
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v as usize > n {
                return Err(Error::InvalidPermutation(format!(
                    "value {} out of range 1..={}",
                    v, n
                )));
            }
            if seen[v as usize - 1] {
                return Err(Error::InvalidPermutation(format!("value {} repeated", v)));
            }
            seen[v as usize - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n as u32).collect(),
        }
    }

    /// Transposition swapping `a` and `b` (1-based) in degree `n`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        if a == b || a == 0 || b == 0 || a > n || b > n {
            return Err(Error::InvalidPermutation(format!(
                "bad transposition ({}, {}) in degree {}",
                a, b, n
            )));
        }
        let mut images: Vec<u32> = (1..=n as u32).collect();
        images.swap(a - 1, b - 1);
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// Composition `(self * h)(i) = self(h(i))`.
    pub fn compose(&self, h: &Permutation) -> Result<Permutation> {
        if self.degree() != h.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: h.degree(),
            });
        }
        let images = h.images.iter().map(|&v| self.images[v as usize - 1]).collect();
        Ok(Permutation { images })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize - 1] = (i + 1) as u32;
        }
        Permutation { images }
    }

    /// Cycles in a canonical order: each cycle starts at its smallest
    /// element, cycles ordered by that element. Fixed points included.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cycle.push((cur + 1) as u32);
                cur = self.images[cur] as usize - 1;
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle type: cycle lengths sorted descending, fixed points included.
    pub fn cycle_type(&self) -> Partition {
        let mut lengths: Vec<u32> = self.cycles().iter().map(|c| c.len() as u32).collect();
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(lengths).expect("cycle lengths form a partition")
    }

    /// Total number of cycles, fixed points included.
    pub fn cycle_count(&self) -> usize {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut count = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = self.images[cur] as usize - 1;
            }
        }
        count
    }

    /// Cayley distance `n - |cycles(g h^-1)|`: the minimum number of
    /// transpositions turning `h` into `self`.
    pub fn cayley_distance(&self, h: &Permutation) -> Result<usize> {
        let q = self.compose(&h.inverse())?;
        Ok(q.degree() - q.cycle_count())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.images {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{}", v)?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses whitespace- or comma-separated one-line images, e.g. `"2 1 3"`
    /// or `"2,1,3"`.
    fn from_str(s: &str) -> Result<Self> {
        let mut images = Vec::new();
        for (pos, tok) in s.split(|c: char| c.is_whitespace() || c == ',').enumerate() {
            if tok.is_empty() {
                continue;
            }
            let v: u32 = tok.parse().map_err(|_| {
                Error::Parse(format!("bad permutation image {:?} at token {}", tok, pos))
            })?;
            images.push(v);
        }
        Permutation::from_images(images)
    }
}

/// All `n!` permutations of degree `n` in lexicographic one-line order.
/// Refuses `n > DEFAULT_ENUMERATION_CAP`.
pub fn enumerate_group(n: usize) -> Result<Vec<Permutation>> {
    enumerate_group_with_cap(n, DEFAULT_ENUMERATION_CAP)
}

/// Enumeration with an explicit degree cap.
pub fn enumerate_group_with_cap(n: usize, cap: usize) -> Result<Vec<Permutation>> {
    if n > cap {
        return Err(Error::CapExceeded {
            what: "group enumeration",
            requested: n,
            cap,
        });
    }
    if n == 0 {
        return Err(Error::InvalidPermutation("degree must be at least 1".into()));
    }
    let total = factorial(n)? as usize;
    let mut out = Vec::with_capacity(total);
    let mut images: Vec<u32> = (1..=n as u32).collect();
    loop {
        out.push(Permutation {
            images: images.clone(),
        });
        if !next_lex(&mut images) {
            break;
        }
    }
    Ok(out)
}

/// Advances to the next permutation in lexicographic order in place;
/// returns false when already at the last one.
fn next_lex(v: &mut [u32]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Uniform draw from the symmetric group via Fisher-Yates shuffle.
pub fn random_uniform<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Permutation {
    let mut images: Vec<u32> = (1..=n as u32).collect();
    images.shuffle(rng);
    Permutation { images }
}

//! Robinson-Schensted correspondence by standard row insertion.
//!
//! Only the shape is needed by the feature sampler; the full tableau pair
//! exists for test oracles (bijectivity, shape distribution). Row insertion
//! uses a binary search per row, `O(n^2 log n)` worst case, which is plenty
//! at the degrees this crate supports.

use crate::partition::Partition;
use crate::perm::Permutation;

/// Insertion/recording tableau pair of common shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableauPair {
    pub p_tableau: Vec<Vec<u32>>,
    pub q_tableau: Vec<Vec<u32>>,
    pub shape: Partition,
}

/// Shape of the insertion tableau of `g`. Its first row length equals the
/// longest increasing subsequence of the one-line word.
pub fn rsk_shape(g: &Permutation) -> Partition {
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for &x in g.images() {
        insert(&mut rows, x);
    }
    shape_of(&rows)
}

/// Full correspondence: insertion tableau plus the recording tableau that
/// tracks insertion order.
pub fn rsk_full(g: &Permutation) -> TableauPair {
    let mut p: Vec<Vec<u32>> = Vec::new();
    let mut q: Vec<Vec<u32>> = Vec::new();
    for (step, &x) in g.images().iter().enumerate() {
        let row = insert(&mut p, x);
        if q.len() <= row {
            q.push(Vec::new());
        }
        q[row].push((step + 1) as u32);
    }
    TableauPair {
        shape: shape_of(&p),
        p_tableau: p,
        q_tableau: q,
    }
}

/// Row-inserts `x`, bumping down until something lands at the end of a row;
/// returns the row index where the new cell was created.
fn insert(rows: &mut Vec<Vec<u32>>, mut x: u32) -> usize {
    for (r, row) in rows.iter_mut().enumerate() {
        let pos = row.partition_point(|&y| y < x);
        if pos == row.len() {
            row.push(x);
            return r;
        }
        std::mem::swap(&mut row[pos], &mut x);
    }
    rows.push(vec![x]);
    rows.len() - 1
}

fn shape_of(rows: &[Vec<u32>]) -> Partition {
    Partition::new(rows.iter().map(|r| r.len() as u32).collect())
        .expect("row lengths of a tableau decrease weakly")
}

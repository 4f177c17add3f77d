//! Dense symmetric eigensolver and small factorization helpers.
//!
//! The eigensolver is the classical pair: Householder reduction to
//! tridiagonal form followed by implicit QL iteration with Wilkinson
//! shifts, accumulating the orthogonal transformation. Matrices here are
//! flat row-major `Vec<S>` slices with an explicit dimension.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Eigendecomposition of a symmetric matrix: `a = q diag(values) q^T`.
///
/// `vectors` is row-major with eigenvectors in columns, ordered so that
/// `values` is ascending.
#[derive(Debug, Clone)]
pub struct SymEigen<S: Scalar> {
    pub dim: usize,
    pub values: Vec<S>,
    pub vectors: Vec<S>,
}

impl<S: Scalar> SymEigen<S> {
    pub fn vector_entry(&self, row: usize, col: usize) -> S {
        self.vectors[row * self.dim + col]
    }

    pub fn min_value(&self) -> S {
        self.values[0]
    }

    pub fn max_value(&self) -> S {
        self.values[self.dim - 1]
    }
}

const MAX_QL_ITERATIONS: usize = 50;

/// Full eigendecomposition of a symmetric matrix given as a row-major slice.
pub fn symmetric_eigen<S: Scalar>(a: &[S], dim: usize) -> Result<SymEigen<S>> {
    assert_eq!(a.len(), dim * dim, "matrix shape");
    let mut z = a.to_vec();
    let mut d = vec![S::zero(); dim];
    let mut e = vec![S::zero(); dim];
    tridiagonalize(&mut z, dim, &mut d, &mut e);
    ql_implicit(&mut d, &mut e, dim, &mut z)?;
    sort_pairs(&mut d, &mut z, dim);
    Ok(SymEigen {
        dim,
        values: d,
        vectors: z,
    })
}

/// Smallest eigenvalue of a symmetric matrix.
pub fn min_eigenvalue<S: Scalar>(a: &[S], dim: usize) -> Result<S> {
    Ok(symmetric_eigen(a, dim)?.min_value())
}

/// Householder reduction of a symmetric matrix to tridiagonal form,
/// accumulating the transformation in place of the input.
fn tridiagonalize<S: Scalar>(a: &mut [S], n: usize, d: &mut [S], e: &mut [S]) {
    let at = |a: &[S], i: usize, j: usize| a[i * n + j];
    if n == 1 {
        d[0] = at(a, 0, 0);
        a[0] = S::one();
        e[0] = S::zero();
        return;
    }
    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = S::zero();
        if i > 1 {
            let mut scale = S::zero();
            for k in 0..=l {
                scale = scale + at(a, i, k).abs();
            }
            if scale == S::zero() {
                e[i] = at(a, i, l);
            } else {
                for k in 0..=l {
                    a[i * n + k] = at(a, i, k) / scale;
                    h = h + at(a, i, k) * at(a, i, k);
                }
                let f = at(a, i, l);
                let g = if f >= S::zero() { -h.sqrt() } else { h.sqrt() };
                e[i] = scale * g;
                h = h - f * g;
                a[i * n + l] = f - g;
                let mut f_acc = S::zero();
                for j in 0..=l {
                    a[j * n + i] = at(a, i, j) / h;
                    let mut g_acc = S::zero();
                    for k in 0..=j {
                        g_acc = g_acc + at(a, j, k) * at(a, i, k);
                    }
                    for k in (j + 1)..=l {
                        g_acc = g_acc + at(a, k, j) * at(a, i, k);
                    }
                    e[j] = g_acc / h;
                    f_acc = f_acc + e[j] * at(a, i, j);
                }
                let hh = f_acc / (h + h);
                for j in 0..=l {
                    let f = at(a, i, j);
                    let g = e[j] - hh * f;
                    e[j] = g;
                    for k in 0..=j {
                        a[j * n + k] = at(a, j, k) - (f * e[k] + g * at(a, i, k));
                    }
                }
            }
        } else {
            e[i] = at(a, i, l);
        }
        d[i] = h;
    }
    d[0] = S::zero();
    e[0] = S::zero();
    for i in 0..n {
        if d[i] != S::zero() {
            for j in 0..i {
                let mut g = S::zero();
                for k in 0..i {
                    g = g + at(a, i, k) * at(a, k, j);
                }
                for k in 0..i {
                    a[k * n + j] = at(a, k, j) - g * at(a, k, i);
                }
            }
        }
        d[i] = at(a, i, i);
        a[i * n + i] = S::one();
        for j in 0..i {
            a[j * n + i] = S::zero();
            a[i * n + j] = S::zero();
        }
    }
}

/// Implicit QL with Wilkinson shifts on a symmetric tridiagonal matrix,
/// rotating the accumulated transformation `z` along.
fn ql_implicit<S: Scalar>(d: &mut [S], e: &mut [S], n: usize, z: &mut [S]) -> Result<()> {
    if n == 1 {
        return Ok(());
    }
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = S::zero();
    let eps = S::epsilon();
    for l in 0..n {
        let mut iterations = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= eps * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iterations += 1;
            if iterations > MAX_QL_ITERATIONS {
                return Err(Error::Overflow("QL iteration failed to converge"));
            }
            let two = S::of(2.0);
            let mut g = (d[l + 1] - d[l]) / (two * e[l]);
            let mut r = g.hypot(S::one());
            let sign_r = if g >= S::zero() { r } else { -r };
            g = d[m] - d[l] + e[l] / (g + sign_r);
            let mut s = S::one();
            let mut c = S::one();
            let mut p = S::zero();
            let mut underflow = false;
            for i in (l..m).rev() {
                let mut f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == S::zero() {
                    d[i + 1] = d[i + 1] - p;
                    e[m] = S::zero();
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + two * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                for k in 0..n {
                    f = z[k * n + i + 1];
                    z[k * n + i + 1] = s * z[k * n + i] + c * f;
                    z[k * n + i] = c * z[k * n + i] - s * f;
                }
            }
            if underflow {
                continue;
            }
            d[l] = d[l] - p;
            e[l] = g;
            e[m] = S::zero();
        }
    }
    Ok(())
}

/// Sorts eigenvalues ascending, permuting eigenvector columns to match.
fn sort_pairs<S: Scalar>(d: &mut [S], z: &mut [S], n: usize) {
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| d[a].partial_cmp(&d[b]).expect("eigenvalues are finite"));
    let sorted_d: Vec<S> = order.iter().map(|&i| d[i]).collect();
    d.copy_from_slice(&sorted_d);
    let old = z.to_vec();
    for row in 0..n {
        for (new_col, &old_col) in order.iter().enumerate() {
            z[row * n + new_col] = old[row * n + old_col];
        }
    }
}

/// Lower-triangular Cholesky factor of a positive definite matrix, or
/// `None` if a pivot goes nonpositive.
pub fn cholesky_lower<S: Scalar>(a: &[S], dim: usize) -> Option<Vec<S>> {
    let mut l = vec![S::zero(); dim * dim];
    for i in 0..dim {
        for j in 0..=i {
            let mut sum = a[i * dim + j];
            for k in 0..j {
                sum = sum - l[i * dim + k] * l[j * dim + k];
            }
            if i == j {
                if sum <= S::zero() {
                    return None;
                }
                l[i * dim + i] = sum.sqrt();
            } else {
                l[i * dim + j] = sum / l[j * dim + j];
            }
        }
    }
    Some(l)
}

/// Determinant by LU elimination with partial pivoting. Consumes its input.
pub fn lu_determinant<S: Scalar>(mut a: Vec<S>, dim: usize) -> S {
    let mut det = S::one();
    for col in 0..dim {
        let mut pivot = col;
        for row in (col + 1)..dim {
            if a[row * dim + col].abs() > a[pivot * dim + col].abs() {
                pivot = row;
            }
        }
        if a[pivot * dim + col] == S::zero() {
            return S::zero();
        }
        if pivot != col {
            for k in 0..dim {
                a.swap(col * dim + k, pivot * dim + k);
            }
            det = -det;
        }
        det = det * a[col * dim + col];
        for row in (col + 1)..dim {
            let factor = a[row * dim + col] / a[col * dim + col];
            for k in col..dim {
                a[row * dim + k] = a[row * dim + k] - factor * a[col * dim + k];
            }
        }
    }
    det
}

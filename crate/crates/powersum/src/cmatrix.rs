//! Small dense complex matrices.
//!
//! The sampler only ever multiplies `m x m` matrices for single-digit `m`,
//! so a naive row-major implementation is all that is needed.

use num_complex::Complex;

use crate::scalar::Scalar;

/// Row-major square complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix<S: Scalar> {
    size: usize,
    data: Vec<Complex<S>>,
}

impl<S: Scalar> CMatrix<S> {
    pub fn zeros(size: usize) -> Self {
        CMatrix {
            size,
            data: vec![Complex::new(S::zero(), S::zero()); size * size],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = CMatrix::zeros(size);
        for i in 0..size {
            m.set(i, i, Complex::new(S::one(), S::zero()));
        }
        m
    }

    /// Real diagonal matrix.
    pub fn diagonal(entries: &[S]) -> Self {
        let mut m = CMatrix::zeros(entries.len());
        for (i, &v) in entries.iter().enumerate() {
            m.set(i, i, Complex::new(v, S::zero()));
        }
        m
    }

    pub fn from_fn(size: usize, mut f: impl FnMut(usize, usize) -> Complex<S>) -> Self {
        let mut m = CMatrix::zeros(size);
        for i in 0..size {
            for j in 0..size {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> Complex<S> {
        self.data[i * self.size + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Complex<S>) {
        self.data[i * self.size + j] = v;
    }

    pub fn mul(&self, other: &CMatrix<S>) -> CMatrix<S> {
        assert_eq!(self.size, other.size, "size mismatch");
        let n = self.size;
        let mut out = CMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.re == S::zero() && a.im == S::zero() {
                    continue;
                }
                for j in 0..n {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn conjugate_transpose(&self) -> CMatrix<S> {
        CMatrix::from_fn(self.size, |i, j| self.get(j, i).conj())
    }

    pub fn trace(&self) -> Complex<S> {
        (0..self.size).map(|i| self.get(i, i)).fold(
            Complex::new(S::zero(), S::zero()),
            |acc, v| acc + v,
        )
    }
}

/// Traces of `x^1, ..., x^max_power` by iterated multiplication. These are
/// the power sums of the eigenvalues, obtained without any eigensolver.
pub fn power_traces<S: Scalar>(x: &CMatrix<S>, max_power: usize) -> Vec<Complex<S>> {
    let mut out = Vec::with_capacity(max_power);
    let mut current = x.clone();
    for d in 1..=max_power {
        if d > 1 {
            current = current.mul(x);
        }
        out.push(current.trace());
    }
    out
}

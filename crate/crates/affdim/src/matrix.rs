//! Minimal dense square-matrix container for the truncated operator.

use crate::scalar::Scalar;

/// Row-major square matrix over a scalar field.
#[derive(Clone, Debug, PartialEq)]
pub struct SquareMatrix<T = f64> {
    n: usize,
    data: Vec<T>,
}

impl<T: Scalar> SquareMatrix<T> {
    pub fn zeros(n: usize) -> Self {
        SquareMatrix {
            n,
            data: vec![T::zero(); n * n],
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> T {
        self.data[row * self.n + col]
    }

    pub fn set(&mut self, row: usize, col: usize, v: T) {
        self.data[row * self.n + col] = v;
    }

    pub fn add_to(&mut self, row: usize, col: usize, v: T) {
        let i = row * self.n + col;
        self.data[i] = self.data[i] + v;
    }

    /// y = M x. Accumulation runs in index order so results are
    /// bit-deterministic.
    pub fn matvec(&self, x: &[T]) -> Vec<T> {
        debug_assert_eq!(x.len(), self.n);
        let mut y = vec![T::zero(); self.n];
        for (i, yi) in y.iter_mut().enumerate() {
            let row = &self.data[i * self.n..(i + 1) * self.n];
            let mut acc = T::zero();
            for (m, xv) in row.iter().zip(x) {
                acc = acc + *m * *xv;
            }
            *yi = acc;
        }
        y
    }

    /// y = M^T x (plain transpose, no conjugation).
    pub fn tr_matvec(&self, x: &[T]) -> Vec<T> {
        debug_assert_eq!(x.len(), self.n);
        let mut y = vec![T::zero(); self.n];
        for (i, &xi) in x.iter().enumerate() {
            let row = &self.data[i * self.n..(i + 1) * self.n];
            for (yj, m) in y.iter_mut().zip(row) {
                *yj = *yj + *m * xi;
            }
        }
        y
    }

    pub fn frob_norm(&self) -> f64 {
        self.data
            .iter()
            .map(|x| x.abs() * x.abs())
            .sum::<f64>()
            .sqrt()
    }

    pub fn max_abs_im(&self) -> f64 {
        self.data.iter().map(|x| x.im().abs()).fold(0.0, f64::max)
    }

    pub fn scale(&self, k: T) -> Self {
        SquareMatrix {
            n: self.n,
            data: self.data.iter().map(|&x| x * k).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        SquareMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&x, &y)| x - y)
                .collect(),
        }
    }

    pub fn matmul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = SquareMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let aik = self.get(i, k);
                if aik == T::zero() {
                    continue;
                }
                for j in 0..n {
                    out.add_to(i, j, aik * other.get(k, j));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matvec_and_transpose() {
        let mut m = SquareMatrix::<f64>::zeros(2);
        m.set(0, 0, 1.0);
        m.set(0, 1, 2.0);
        m.set(1, 0, 3.0);
        m.set(1, 1, 4.0);
        assert_eq!(m.matvec(&[1.0, 1.0]), vec![3.0, 7.0]);
        assert_eq!(m.tr_matvec(&[1.0, 1.0]), vec![4.0, 6.0]);
        assert!((m.frob_norm() - 30.0f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn matmul_small() {
        let mut a = SquareMatrix::<f64>::zeros(2);
        a.set(0, 0, 1.0);
        a.set(0, 1, 2.0);
        a.set(1, 0, 3.0);
        a.set(1, 1, 4.0);
        let b = a.clone();
        let c = a.matmul(&b);
        assert_eq!(c.get(0, 0), 7.0);
        assert_eq!(c.get(0, 1), 10.0);
        assert_eq!(c.get(1, 0), 15.0);
        assert_eq!(c.get(1, 1), 22.0);
    }
}

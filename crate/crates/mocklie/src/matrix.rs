//! Dense matrices over exact rationals.
//!
//! Row-major, 0-based, desk-scale (dims well under a hundred).  The only
//! nontrivial operation is fraction-free-ish Gauss-Jordan inversion, which
//! over ℚ is exact; a singular input reports its rank.

use num_traits::{One, Zero};

use crate::error::Error;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, Error> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows in matrix literal".into()));
        }
        Ok(Self {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self {
            rows,
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix, Error> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimMismatch(format!(
                "add {}x{} + {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j) + other.get(i, j)
        }))
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix, Error> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimMismatch(format!(
                "sub {}x{} - {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j) - other.get(i, j)
        }))
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) * c)
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, Error> {
        if self.cols != other.rows {
            return Err(Error::DimMismatch(format!(
                "mul {}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = Scalar::zero();
            for k in 0..self.cols {
                acc += self.get(i, k) * other.get(k, j);
            }
            acc
        }))
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>, Error> {
        if self.cols != v.len() {
            return Err(Error::DimMismatch(format!(
                "mul_vec {}x{} * {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for j in 0..self.cols {
                    acc += self.get(i, j) * &v[j];
                }
                acc
            })
            .collect())
    }

    /// Rank via Gaussian elimination (exact, so no pivot thresholds).
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            let pivot = (rank..m.rows).find(|&r| !m.get(r, col).is_zero());
            let Some(p) = pivot else { continue };
            m.swap_rows(rank, p);
            let inv = m.get(rank, col).recip();
            for j in col..m.cols {
                let v = m.get(rank, j) * &inv;
                m.set(rank, j, v);
            }
            for r in 0..m.rows {
                if r != rank && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    for j in col..m.cols {
                        let v = m.get(r, j) - &factor * m.get(rank, j);
                        m.set(r, j, v);
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// Exact inverse by Gauss-Jordan on `[self | I]`.
    ///
    /// Returns `Error::Singular` with the rank when no inverse exists.
    pub fn inverse(&self) -> Result<Matrix, Error> {
        if !self.is_square() {
            return Err(Error::Shape(format!(
                "inverse of non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        let mut rank = 0;
        for col in 0..n {
            let Some(p) = (rank..n).find(|&r| !a.get(r, col).is_zero()) else {
                continue;
            };
            a.swap_rows(rank, p);
            inv.swap_rows(rank, p);
            let scale = a.get(rank, col).recip();
            for j in 0..n {
                let v = a.get(rank, j) * &scale;
                a.set(rank, j, v);
                let w = inv.get(rank, j) * &scale;
                inv.set(rank, j, w);
            }
            for r in 0..n {
                if r != rank && !a.get(r, col).is_zero() {
                    let factor = a.get(r, col).clone();
                    for j in 0..n {
                        let v = a.get(r, j) - &factor * a.get(rank, j);
                        a.set(r, j, v);
                        let w = inv.get(r, j) - &factor * inv.get(rank, j);
                        inv.set(r, j, w);
                    }
                }
            }
            rank += 1;
        }
        if rank < n {
            return Err(Error::Singular { rank, dim: n });
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries
                .swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    fn m2(a: i64, b: i64, c: i64, d: i64) -> Matrix {
        Matrix::from_rows(vec![vec![int(a), int(b)], vec![int(c), int(d)]]).unwrap()
    }

    #[test]
    fn identity_inverts_to_itself() {
        let id = Matrix::identity(2);
        assert_eq!(id.inverse().unwrap(), id);
    }

    #[test]
    fn inverse_of_1234() {
        // frozen from the cofactor formula: det = -2
        let m = m2(1, 2, 3, 4);
        let inv = m.inverse().unwrap();
        let expected = Matrix::from_rows(vec![
            vec![int(-2), int(1)],
            vec![rat(3, 2), rat(-1, 2)],
        ])
        .unwrap();
        assert_eq!(inv, expected);
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(2));
    }

    #[test]
    fn singular_reports_rank() {
        let m = m2(1, 2, 2, 4);
        assert_eq!(m.inverse(), Err(Error::Singular { rank: 1, dim: 2 }));
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn non_square_inverse_is_shape_error() {
        let m = Matrix::zeros(2, 3);
        assert!(matches!(m.inverse(), Err(Error::Shape(_))));
    }

    #[test]
    fn mul_vec_checks_dims() {
        let m = Matrix::identity(2);
        assert!(matches!(
            m.mul_vec(&[int(1)]),
            Err(Error::DimMismatch(_))
        ));
    }
}

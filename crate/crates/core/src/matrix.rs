//! Small dense square/rectangular matrices over a [`Scalar`], with exact
//! Gaussian elimination (no pivoting heuristics beyond "first nonzero").

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::multi_index::MultiIndex;
use crate::scalar::Scalar;

#[derive(Clone, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = S::one();
        }
        m
    }

    pub fn diagonal(entries: &[S]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape {
                rows: r,
                cols: c,
                dim: r,
            });
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
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

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<S>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, rhs: &Matrix<S>) -> Self {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        Self::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = S::zero();
            for k in 0..self.cols {
                acc = acc + self[(i, k)].clone() * rhs[(k, j)].clone();
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    pub fn scale(&self, s: &S) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.clone() * s.clone()).collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Row-echelon reduction in place; returns (rank, determinant sign/scale
    /// accumulated for square input).
    fn eliminate(&mut self) -> (usize, S) {
        let mut det = S::one();
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let Some(pivot) = (rank..self.rows).find(|&r| !self[(r, col)].is_zero()) else {
                det = S::zero();
                continue;
            };
            if pivot != rank {
                self.swap_rows(pivot, rank);
                det = -det;
            }
            let p = self[(rank, col)].clone();
            det = det * p.clone();
            for r in rank + 1..self.rows {
                if self[(r, col)].is_zero() {
                    continue;
                }
                let factor = self[(r, col)].clone() / p.clone();
                for c in col..self.cols {
                    let v = self[(rank, c)].clone() * factor.clone();
                    self[(r, c)] = self[(r, c)].clone() - v;
                }
            }
            rank += 1;
        }
        if rank < self.rows.min(self.cols) || !self.is_square() {
            det = S::zero();
        }
        (rank, det)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.clone().eliminate().0
    }

    pub fn determinant(&self) -> S {
        assert!(self.is_square(), "determinant of a non-square matrix");
        if self.rows == 0 {
            return S::one();
        }
        self.clone().eliminate().1
    }

    /// Determinant of the submatrix picking rows `rows` and columns `cols`
    /// (both in increasing index order).
    pub fn minor(&self, rows: MultiIndex, cols: MultiIndex) -> S {
        debug_assert_eq!(rows.degree(), cols.degree());
        let r: Vec<usize> = rows.indices().collect();
        let c: Vec<usize> = cols.indices().collect();
        Self::from_fn(r.len(), c.len(), |i, j| self[(r[i], c[j])].clone()).determinant()
    }

    /// Exact inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Singular);
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[(r, col)].is_zero())
                .ok_or(Error::Singular)?;
            a.swap_rows(pivot, col);
            inv.swap_rows(pivot, col);
            let p = a[(col, col)].clone();
            for c in 0..n {
                a[(col, c)] = a[(col, c)].clone() / p.clone();
                inv[(col, c)] = inv[(col, c)].clone() / p.clone();
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone();
                for c in 0..n {
                    let va = a[(col, c)].clone() * f.clone();
                    a[(r, c)] = a[(r, c)].clone() - va;
                    let vi = inv[(col, c)].clone() * f.clone();
                    inv[(r, c)] = inv[(r, c)].clone() - vi;
                }
            }
        }
        Ok(inv)
    }
}

impl<S> Index<(usize, usize)> for Matrix<S> {
    type Output = S;

    fn index(&self, (i, j): (usize, usize)) -> &S {
        &self.data[i * self.cols + j]
    }
}

impl<S> IndexMut<(usize, usize)> for Matrix<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        &mut self.data[i * self.cols + j]
    }
}

impl<S: fmt::Debug> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{:?}", self.data[i * self.cols + j])?;
            }
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    type Q = Ratio<i64>;

    fn q(n: i64, d: i64) -> Q {
        Ratio::new(n, d)
    }

    fn m(rows: &[&[i64]]) -> Matrix<Q> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Q::from_integer(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn determinant_and_inverse() {
        let a = m(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(a.determinant(), Q::from_integer(18));
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(3));
        assert_eq!(inv[(0, 0)], q(11, 18));
    }

    #[test]
    fn determinant_needs_row_swap() {
        let a = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.determinant(), Q::from_integer(-1));
    }

    #[test]
    fn singular_inputs() {
        let a = m(&[&[1, 2], &[2, 4]]);
        assert_eq!(a.determinant(), Q::from_integer(0));
        assert_eq!(a.inverse(), Err(Error::Singular));
        assert_eq!(a.rank(), 1);
    }

    #[test]
    fn rank_of_degenerate_blocks() {
        let h = Matrix::diagonal(&[Q::from_integer(0), q(-1, 1), q(-1, 1), q(-1, 1)]);
        assert_eq!(h.rank(), 3);
        assert_eq!(Matrix::<Q>::zeros(3, 3).rank(), 0);
        let tall = m(&[&[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(tall.rank(), 2);
    }

    #[test]
    fn minors() {
        let a = m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]);
        let rows = MultiIndex::from_indices(&[0, 2]).unwrap().1;
        let cols = MultiIndex::from_indices(&[1, 2]).unwrap().1;
        // [[2,3],[8,10]]
        assert_eq!(a.minor(rows, cols), Q::from_integer(-4));
        assert_eq!(a.minor(MultiIndex::EMPTY, MultiIndex::EMPTY), Q::from_integer(1));
    }
}

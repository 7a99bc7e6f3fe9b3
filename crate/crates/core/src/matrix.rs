//! Dense matrices over the crate's rings.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use crate::error::{Error, Result};
use crate::rings::{EuclideanDomain, Field, Ring, RingTag};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![R::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = R::one();
        }
        m
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        Matrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn try_from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let ncols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Shape("rows have different lengths".into()));
        }
        Ok(Matrix::from_rows(rows))
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
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

    pub fn ring_tag(&self) -> RingTag {
        R::ring_tag()
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> impl Iterator<Item = &R> {
        self.data.iter()
    }

    /// Nonzero entries as `(row, col, value)`.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, &R)> {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(k, v)| (k / self.cols, k % self.cols, v))
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<R> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_diagonal(&self) -> bool {
        self.nonzero().all(|(i, j, _)| i == j)
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_mul(&self, rhs: &Matrix<R>) -> Result<Matrix<R>> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out: Matrix<R> = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j).clone() + a.clone() * b.clone();
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, rhs: &Matrix<R>) -> Result<Matrix<R>> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::Shape(
                "cannot add matrices of different shapes".into(),
            ));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[target] += c * row[source]`
    pub fn add_row_multiple(&mut self, target: usize, source: usize, c: &R) {
        if c.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let s = self.get(source, j);
            if s.is_zero() {
                continue;
            }
            let v = self.get(target, j).clone() + c.clone() * s.clone();
            self.set(target, j, v);
        }
    }

    /// `col[target] += c * col[source]`
    pub fn add_col_multiple(&mut self, target: usize, source: usize, c: &R) {
        if c.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let s = self.get(i, source);
            if s.is_zero() {
                continue;
            }
            let v = self.get(i, target).clone() + s.clone() * c.clone();
            self.set(i, target, v);
        }
    }

    pub fn scale_row(&mut self, i: usize, c: &R) {
        for j in 0..self.cols {
            let v = self.get(i, j).clone() * c.clone();
            self.set(i, j, v);
        }
    }

    pub fn scale_col(&mut self, j: usize, c: &R) {
        for i in 0..self.rows {
            let v = self.get(i, j).clone() * c.clone();
            self.set(i, j, v);
        }
    }

    /// Block matrix `[[a, b], [c, d]]`.
    pub fn block(a: &Matrix<R>, b: &Matrix<R>, c: &Matrix<R>, d: &Matrix<R>) -> Result<Self> {
        if a.rows != b.rows || c.rows != d.rows || a.cols != c.cols || b.cols != d.cols {
            return Err(Error::Shape("incompatible block sizes".into()));
        }
        let (r1, c1) = (a.rows, a.cols);
        Ok(Matrix::from_fn(
            a.rows + c.rows,
            a.cols + b.cols,
            |i, j| match (i < r1, j < c1) {
                (true, true) => a.get(i, j).clone(),
                (true, false) => b.get(i, j - c1).clone(),
                (false, true) => c.get(i - r1, j).clone(),
                (false, false) => d.get(i - r1, j - c1).clone(),
            },
        ))
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| {
            self.get(rows[i], cols[j]).clone()
        })
    }
}

impl<R: EuclideanDomain> Matrix<R> {
    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<R> {
        if !self.is_square() {
            return Err(Error::Shape("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut prev = R::one();
        let mut sign_flip = false;
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a.get(i, k).is_zero()) else {
                return Ok(R::zero());
            };
            if p != k {
                a.swap_rows(p, k);
                sign_flip = !sign_flip;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a.get(i, j).clone() * a.get(k, k).clone()
                        - a.get(i, k).clone() * a.get(k, j).clone();
                    let (q, r) = num.div_rem(&prev);
                    debug_assert!(r.is_zero(), "Bareiss division must be exact");
                    a.set(i, j, q);
                }
            }
            prev = a.get(k, k).clone();
        }
        Ok(if sign_flip { -prev } else { prev })
    }
}

impl<K: Field> Matrix<K> {
    /// Rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let mut rank = 0;
        for col in 0..a.cols {
            let Some(p) = (rank..a.rows).find(|&i| !a.get(i, col).is_zero()) else {
                continue;
            };
            a.swap_rows(p, rank);
            let inv = a.get(rank, col).inv().expect("nonzero pivot");
            for i in rank + 1..a.rows {
                if a.get(i, col).is_zero() {
                    continue;
                }
                let c = -(a.get(i, col).clone() * inv.clone());
                a.add_row_multiple(i, rank, &c);
            }
            rank += 1;
        }
        rank
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Matrix<K>, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        for col in 0..a.cols {
            let r = pivots.len();
            let Some(p) = (r..a.rows).find(|&i| !a.get(i, col).is_zero()) else {
                continue;
            };
            a.swap_rows(p, r);
            let inv = a.get(r, col).inv().expect("nonzero pivot");
            a.scale_row(r, &inv);
            for i in 0..a.rows {
                if i == r || a.get(i, col).is_zero() {
                    continue;
                }
                let c = -a.get(i, col).clone();
                a.add_row_multiple(i, r, &c);
            }
            pivots.push(col);
        }
        (a, pivots)
    }

    /// Basis of the null space, as the columns of the returned matrix.
    pub fn kernel(&self) -> Matrix<K> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zeros(self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            out.set(f, k, K::one());
            for (row, &p) in pivots.iter().enumerate() {
                out.set(p, k, -r.get(row, f).clone());
            }
        }
        out
    }
}

impl<R> Index<(usize, usize)> for Matrix<R> {
    type Output = R;
    fn index(&self, (i, j): (usize, usize)) -> &R {
        &self.data[i * self.cols + j]
    }
}

impl<R> IndexMut<(usize, usize)> for Matrix<R> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut R {
        &mut self.data[i * self.cols + j]
    }
}

impl<R: Ring> Mul for &Matrix<R> {
    type Output = Matrix<R>;
    fn mul(self, rhs: &Matrix<R>) -> Matrix<R> {
        self.try_mul(rhs).expect("matrix dimensions agree")
    }
}

impl<R: Ring> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<R: fmt::Debug> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix{}x{}", self.rows, self.cols)?;
        f.debug_list()
            .entries(self.data.chunks(self.cols.max(1)).take(self.rows))
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{RatFunc, Q};
    use num_bigint::BigInt;

    fn z(rows: &[&[i64]]) -> Matrix<BigInt> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn determinant_integer() {
        assert_eq!(
            z(&[&[-1, 1], &[1, 0]]).determinant().unwrap(),
            BigInt::from(-1)
        );
        assert_eq!(
            z(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]])
                .determinant()
                .unwrap(),
            BigInt::from(6)
        );
        assert_eq!(
            z(&[&[1, 2], &[2, 4]]).determinant().unwrap(),
            BigInt::from(0)
        );
    }

    #[test]
    fn rank_over_fields() {
        let m = z(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]).map(|x| Q::from_integer(x.clone()));
        assert_eq!(m.rank(), 2);
        let id: Matrix<RatFunc> = Matrix::identity(4);
        assert_eq!(id.rank(), 4);
    }

    #[test]
    fn block_assembly() {
        let a = z(&[&[1]]);
        let b = z(&[&[2, 3]]);
        let c = z(&[&[4], &[5]]);
        let d = z(&[&[6, 7], &[8, 9]]);
        let m = Matrix::block(&a, &b, &c, &d).unwrap();
        assert_eq!(m, z(&[&[1, 2, 3], &[4, 6, 7], &[5, 8, 9]]));
        assert!(Matrix::block(&a, &c, &b, &d).is_err());
    }

    #[test]
    fn kernel_spans_null_space() {
        let m = z(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]).map(|x| Q::from_integer(x.clone()));
        let k = m.kernel();
        assert_eq!((k.rows(), k.cols()), (3, 1));
        assert!((&m * &k).is_zero());
        assert_eq!(k.rank(), 1);
        let empty: Matrix<Q> = Matrix::zeros(0, 2);
        assert_eq!(empty.kernel().rank(), 2);
    }
}

//! Dense exact linear algebra.
//!
//! Every routine here is exact. Echelon forms pick, column by column, the
//! first row holding a nonzero entry, so bases computed from them are
//! reproducible across runs.

pub mod poly;
mod scalar;

pub use poly::{minimal_polynomial, Poly};
pub use scalar::{Field, Scalar};

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};

/// A dense row-major matrix. `0 x n` and `n x 0` shapes are legal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    pub rank: usize,
    pub pivots: Vec<usize>,
    pub reduced: Matrix,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_vec(field: Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Matrix {
        assert_eq!(data.len(), rows * cols, "matrix data length");
        debug_assert!(data.iter().all(|s| s.field() == field));
        Matrix { field, rows, cols, data }
    }

    /// Builds a matrix from integer rows; all rows must have equal length.
    pub fn from_i64(field: Field, rows: &[Vec<i64>]) -> Matrix {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged integer matrix");
            data.extend(r.iter().map(|&x| field.from_i64(x)));
        }
        Matrix { field, rows: rows.len(), cols, data }
    }

    /// A single column.
    pub fn column_vector(field: Field, entries: Vec<Scalar>) -> Matrix {
        let n = entries.len();
        Matrix::from_vec(field, n, 1, entries)
    }

    pub fn random<R: Rng + ?Sized>(field: Field, rows: usize, cols: usize, rng: &mut R) -> Matrix {
        let data = (0..rows * cols).map(|_| field.random(rng)).collect();
        Matrix { field, rows, cols, data }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> Vec<Scalar> {
        self.data[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape {:?} * {:?}", self.shape(), rhs.shape());
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let idx = i * rhs.cols + j;
                        out.data[idx] = &out.data[idx] + &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape(), "matrix sum shape");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape(), "matrix difference shape");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| a * s).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Matrix {
        let data = self.data.iter().map(|a| -a).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn trace(&self) -> Scalar {
        assert!(self.is_square());
        (0..self.rows).fold(self.field.zero(), |acc, i| &acc + self.get(i, i))
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `[self | rhs]`.
    pub fn hstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.rows, rhs.rows, "hstack row mismatch");
        let cols = self.cols + rhs.cols;
        let mut out = Matrix::zeros(self.field, self.rows, cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
            for c in 0..rhs.cols {
                out.set(r, self.cols + c, rhs.get(r, c).clone());
            }
        }
        out
    }

    /// `[self; rhs]`.
    pub fn vstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend(rhs.data.iter().cloned());
        Matrix { field: self.field, rows: self.rows + rhs.rows, cols: self.cols, data }
    }

    /// Horizontal concatenation of a list; `rows` fixes the shape of an empty list.
    pub fn hcat(field: Field, rows: usize, parts: &[Matrix]) -> Matrix {
        parts.iter().fold(Matrix::zeros(field, rows, 0), |acc, m| acc.hstack(m))
    }

    /// Vertical concatenation of a list; `cols` fixes the shape of an empty list.
    pub fn vcat(field: Field, cols: usize, parts: &[Matrix]) -> Matrix {
        parts.iter().fold(Matrix::zeros(field, 0, cols), |acc, m| acc.vstack(m))
    }

    pub fn block_diag(field: Field, blocks: &[Matrix]) -> Matrix {
        let rows = blocks.iter().map(Matrix::rows).sum();
        let cols = blocks.iter().map(Matrix::cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.paste(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Writes `block` with its top-left corner at `(r0, c0)`.
    pub fn paste(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c).clone());
            }
        }
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Matrix {
        let mut out = Matrix::zeros(self.field, rows.len(), cols.len());
        for (i, r) in rows.clone().enumerate() {
            for (j, c) in cols.clone().enumerate() {
                out.set(i, j, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.set(r, j, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend_from_slice(&self.data[r * self.cols..(r + 1) * self.cols]);
        }
        Matrix { field: self.field, rows: rows.len(), cols: self.cols, data }
    }

    /// Reduced row echelon form.
    pub fn rref(&self) -> Echelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).inv();
            for c in col..m.cols {
                let v = m.get(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let v = m.get(r, c) - &(&factor * m.get(row, c));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Echelon { rank: pivots.len(), pivots, reduced: m }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Columns form a basis of the null space, one per free column in increasing order.
    pub fn kernel_basis(&self) -> Matrix {
        let ech = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !ech.pivots.contains(c)).collect();
        let mut k = Matrix::zeros(self.field, self.cols, free.len());
        for (j, &f) in free.iter().enumerate() {
            k.set(f, j, self.field.one());
            for (i, &p) in ech.pivots.iter().enumerate() {
                k.set(p, j, -ech.reduced.get(i, f));
            }
        }
        k
    }

    /// Rows form a basis of the left null space.
    pub fn left_kernel_basis(&self) -> Matrix {
        self.transpose().kernel_basis().transpose()
    }

    /// The pivot columns of `self`, a basis of its column space.
    pub fn image_basis(&self) -> Matrix {
        let ech = self.rref();
        self.select_columns(&ech.pivots)
    }

    /// Solves `self * x = rhs` for a matrix `x`, returning `None` when `rhs`
    /// leaves the column space.
    pub fn solve(&self, rhs: &Matrix) -> Result<Option<Matrix>> {
        if self.rows != rhs.rows {
            return Err(Error::Shape(format!(
                "solve: {} rows against right-hand side with {} rows",
                self.rows, rhs.rows
            )));
        }
        let aug = self.hstack(rhs);
        let ech = aug.rref();
        if ech.pivots.iter().any(|&p| p >= self.cols) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(self.field, self.cols, rhs.cols);
        for (i, &p) in ech.pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(p, j, ech.reduced.get(i, self.cols + j).clone());
            }
        }
        Ok(Some(x))
    }

    /// Particular solution plus a kernel basis.
    pub fn solve_with_kernel(&self, rhs: &Matrix) -> Result<(Option<Matrix>, Matrix)> {
        Ok((self.solve(rhs)?, self.kernel_basis()))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let x = self.solve(&Matrix::identity(self.field, n)).ok().flatten()?;
        (self.rank() == n).then_some(x)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Standard basis vectors of `F^rows` that extend the columns of `self`
    /// (assumed independent) to a basis, by increasing index.
    pub fn complement_basis(&self) -> Matrix {
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(self.field, n));
        let ech = aug.rref();
        let extra: Vec<usize> = ech.pivots.iter().filter(|&&p| p >= self.cols).map(|p| p - self.cols).collect();
        Matrix::identity(self.field, n).select_columns(&extra)
    }

    /// Basis of the intersection of the column spaces of `self` and `other`.
    pub fn column_space_intersection(&self, other: &Matrix) -> Matrix {
        let joined = self.hstack(&other.neg());
        let k = joined.kernel_basis();
        let coeffs = k.submatrix(0..self.cols, 0..k.cols);
        self.mul(&coeffs).image_basis()
    }

    /// Whether column `v` lies in the column space of `self`.
    pub fn spans(&self, v: &Matrix) -> bool {
        self.hstack(v).rank() == self.rank()
    }

    /// A right inverse of a matrix with full row rank.
    pub fn right_inverse(&self) -> Option<Matrix> {
        self.solve(&Matrix::identity(self.field, self.rows)).ok().flatten()
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

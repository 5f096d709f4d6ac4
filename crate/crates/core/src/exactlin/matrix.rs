//! Dense matrices over an exact field, with reduced row echelon form, right
//! kernels, solving and inversion. Everything is deterministic: pivots are
//! always the first nonzero entry scanning rows top-down, so RREF output is
//! the canonical representative of a row space.

use crate::error::{Error, Result};
use crate::exactlin::field::{Field, Scalar};
use std::ops::{Index, IndexMut};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>, // row-major
}

impl Matrix {
    pub fn zero(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    /// Builds from row vectors. `cols` is explicit so zero-row matrices keep
    /// their width.
    pub fn from_rows(field: Field, cols: usize, rows: &[Vec<Scalar>]) -> Result<Matrix> {
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row of length {} in a {cols}-column matrix",
                    r.len()
                )));
            }
        }
        Ok(Matrix {
            field,
            rows: rows.len(),
            cols,
            data: rows.iter().flatten().cloned().collect(),
        })
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

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Matrix::identity(self.field, self.rows)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(
                self.field.describe(),
                other.field.describe(),
            ));
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = self.field;
        let mut out = Matrix::zero(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = f.mul(a, &other[(k, j)]);
                    out[(i, j)] = f.add(&out[(i, j)], &prod);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch("matrix add".into()));
        }
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a = self.field.add(a, b);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch("matrix sub".into()));
        }
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a = self.field.sub(a, b);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = self.field.mul(a, c);
        }
        out
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols || self.field != other.field {
            return Err(Error::DimensionMismatch("vstack".into()));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Joins `other` to the right of `self`.
    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows || self.field != other.field {
            return Err(Error::DimensionMismatch("hstack".into()));
        }
        let mut out = Matrix::zero(self.field, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..other.cols {
                out[(i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        Ok(out)
    }

    /// Keeps the listed columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zero(self.field, self.rows, cols.len());
        for i in 0..self.rows {
            for (jj, &j) in cols.iter().enumerate() {
                out[(i, jj)] = self[(i, j)].clone();
            }
        }
        out
    }

    /// Reduced row echelon form together with the pivot column list.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !f.is_zero(&m[(i, col)])) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = f.inv(&m[(r, col)]);
            for j in col..m.cols {
                m[(r, j)] = f.mul(&m[(r, j)], &inv);
            }
            for i in 0..m.rows {
                if i != r && !f.is_zero(&m[(i, col)]) {
                    let factor = m[(i, col)].clone();
                    for j in col..m.cols {
                        let t = f.mul(&factor, &m[(r, j)]);
                        m[(i, j)] = f.sub(&m[(i, j)], &t);
                    }
                }
            }
            pivots.push(col);
            r += 1;
        }
        m.truncate_rows(r);
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical basis (as rows, in RREF) of the right kernel {v : M v^T = 0}.
    pub fn kernel(&self) -> Matrix {
        let f = self.field;
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut rows = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![f.zero(); self.cols];
            v[fc] = f.one();
            for (pi, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(&r[(pi, fc)]);
            }
            rows.push(v);
        }
        let m = Matrix::from_rows(f, self.cols, &rows).expect("kernel rows are well formed");
        m.rref().0
    }

    /// Solves self * x = b for a column vector; returns None when inconsistent.
    pub fn solve_column(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows, "rhs length");
        let f = self.field;
        let rhs = Matrix::from_rows(f, b.len(), &[b.to_vec()])
            .unwrap()
            .transpose();
        let aug = self.hstack(&rhs).unwrap();
        let (r, pivots) = aug.rref();
        // inconsistent iff a pivot lands in the rhs column
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![f.zero(); self.cols];
        for (pi, &pc) in pivots.iter().enumerate() {
            x[pc] = r[(pi, self.cols)].clone();
        }
        Some(x)
    }

    /// Inverse of a square matrix.
    pub fn inverse(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch("inverse of non-square".into()));
        }
        let aug = self.hstack(&Matrix::identity(self.field, self.rows))?;
        let (r, pivots) = aug.rref();
        if pivots.len() != self.rows || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return Err(Error::Singular(format!(
                "rank {} of {}",
                pivots.len(),
                self.rows
            )));
        }
        let cols: Vec<usize> = (self.cols..2 * self.cols).collect();
        Ok(r.select_columns(&cols))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn truncate_rows(&mut self, n: usize) {
        self.data.truncate(n * self.cols);
        self.rows = n;
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

// ----- free vector helpers, used throughout the crate -----

pub fn zero_vec(field: Field, n: usize) -> Vec<Scalar> {
    vec![field.zero(); n]
}

pub fn unit_vec(field: Field, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = zero_vec(field, n);
    v[i] = field.one();
    v
}

pub fn vec_add(field: Field, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| field.add(x, y)).collect()
}

pub fn vec_sub(field: Field, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| field.sub(x, y)).collect()
}

pub fn vec_scale(field: Field, c: &Scalar, a: &[Scalar]) -> Vec<Scalar> {
    a.iter().map(|x| field.mul(c, x)).collect()
}

pub fn vec_is_zero(field: Field, a: &[Scalar]) -> bool {
    a.iter().all(|x| field.is_zero(x))
}

/// v . M for a row vector v.
pub fn row_times_matrix(field: Field, v: &[Scalar], m: &Matrix) -> Vec<Scalar> {
    assert_eq!(v.len(), m.rows(), "row-vector length vs matrix rows");
    let mut out = zero_vec(field, m.cols());
    for (i, c) in v.iter().enumerate() {
        if field.is_zero(c) {
            continue;
        }
        for j in 0..m.cols() {
            let t = field.mul(c, &m[(i, j)]);
            out[j] = field.add(&out[j], &t);
        }
    }
    out
}

/// Coordinates of v in the row space of `basis` (rows assumed independent);
/// None when v is outside the span.
pub fn coords_in_rows(basis: &Matrix, v: &[Scalar]) -> Option<Vec<Scalar>> {
    basis.transpose().solve_column(v)
}

use std::fmt;
use std::ops::Mul;

use super::field::{Field, Scalar};
use super::linalg;
use super::vector;
use crate::error::{dim_err, Result};

/// Dense exact matrix, row-major.
///
/// A matrix of shape `dim W × dim V` represents the linear map `V → W` whose
/// `j`-th column is the image of the `j`-th basis vector of `V`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn new(field: Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Matrix> {
        if data.len() != rows * cols {
            return Err(dim_err(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { field, rows, cols, data })
    }

    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field, rows, cols, data: field.zeros(rows * cols) }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_fn(
        field: Field,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { field, rows, cols, data }
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Matrix> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(dim_err("ragged rows"));
        }
        let n = rows.len();
        Matrix::new(field, n, cols, rows.into_iter().flatten().collect())
    }

    /// Builds the matrix whose columns are `columns`, each of length `rows`.
    pub fn from_columns(field: Field, rows: usize, columns: &[Vec<Scalar>]) -> Matrix {
        for c in columns {
            assert_eq!(c.len(), rows, "column length mismatch");
        }
        Matrix::from_fn(field, rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Matrix {
        let r: Vec<Vec<Scalar>> = rows.iter().map(|row| field.vector(row)).collect();
        Matrix::from_rows(field, r).expect("ragged integer rows")
    }

    /// Column vector.
    pub fn column_vector(field: Field, v: Vec<Scalar>) -> Matrix {
        let n = v.len();
        Matrix { field, rows: n, cols: 1, data: v }
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

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        self.data[i * self.cols + j] = value;
    }

    pub fn add_at(&mut self, i: usize, j: usize, value: &Scalar) {
        self.data[i * self.cols + j] += value;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// `self · v`; panics on a length mismatch.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "matrix-vector length mismatch");
        let mut out = self.field.zeros(self.rows);
        for (j, c) in vector::nonzero(v) {
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() {
                    *o += &(a * c);
                }
            }
        }
        out
    }

    pub fn checked_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(dim_err(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
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
                        out.data[i * rhs.cols + j] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn checked_add(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(dim_err("matrix sum shape mismatch"));
        }
        Ok(Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: vector::add(&self.data, &rhs.data),
        })
    }

    pub fn checked_sub(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(dim_err("matrix difference shape mismatch"));
        }
        Ok(Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: vector::sub(&self.data, &rhs.data),
        })
    }

    pub fn scale(&self, a: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: vector::scale(&self.data, a),
        }
    }

    /// Kronecker product: the matrix of `f ⊗ g` in row-major tensor bases.
    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        let rows = self.rows * rhs.rows;
        let cols = self.cols * rhs.cols;
        Matrix::from_fn(self.field, rows, cols, |i, j| {
            let a = self.get(i / rhs.rows, j / rhs.cols);
            if a.is_zero() {
                return self.field.zero();
            }
            a * rhs.get(i % rhs.rows, j % rhs.cols)
        })
    }

    pub fn hstack(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.rows != rhs.rows {
            return Err(dim_err("hstack row mismatch"));
        }
        Ok(Matrix::from_fn(self.field, self.rows, self.cols + rhs.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                rhs.get(i, j - self.cols).clone()
            }
        }))
    }

    pub fn vstack(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.cols {
            return Err(dim_err("vstack column mismatch"));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&rhs.data);
        Matrix::new(self.field, self.rows + rhs.rows, self.cols, data)
    }

    pub fn is_zero(&self) -> bool {
        vector::is_zero(&self.data)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(self.field, self.rows)
    }

    pub fn rank(&self) -> usize {
        linalg::rank(self)
    }

    /// Two-sided inverse, `None` if singular or not square.
    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(self.field, n)).ok()?;
        let ech = linalg::echelon(&aug);
        if ech.pivots.len() < n || ech.pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Matrix::from_fn(self.field, n, n, |i, j| ech.reduced.get(i, n + j).clone()))
    }

    pub fn pow(&self, e: u32) -> Matrix {
        assert!(self.is_square(), "power of a non-square matrix");
        let mut acc = Matrix::identity(self.field, self.rows);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        self.checked_mul(rhs).expect("matrix product shape mismatch")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_inverse() {
        let q = Field::Rationals;
        let a = Matrix::from_i64(q, &[&[1, 2], &[3, 4]]);
        let inv = a.inverse().unwrap();
        assert!((&a * &inv).is_identity());
        assert!((&inv * &a).is_identity());
        assert_eq!(inv.get(0, 0), &q.from_i64(-2));
        assert!(Matrix::from_i64(q, &[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn kron_matches_tensor_convention() {
        let q = Field::Rationals;
        let a = Matrix::from_i64(q, &[&[1, 2], &[0, 1]]);
        let b = Matrix::from_i64(q, &[&[0, 1], &[1, 0]]);
        let x = q.vector(&[1, 2]);
        let y = q.vector(&[3, 5]);
        let lhs = a.kron(&b).apply(&vector::kron(&x, &y));
        let rhs = vector::kron(&a.apply(&x), &b.apply(&y));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn shape_errors() {
        let q = Field::Rationals;
        let a = Matrix::zeros(q, 2, 3);
        assert!(a.checked_mul(&a).is_err());
        assert!(Matrix::new(q, 2, 2, q.zeros(3)).is_err());
        assert!(Matrix::from_rows(q, vec![q.zeros(2), q.zeros(1)]).is_err());
    }
}

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::scalar::{FieldDescriptor, Scalar};
use crate::error::{Error, Result};

/// Dense row-major matrix over an exact field.
///
/// Square matrices are ring elements; other shapes only appear inside the
/// linear-algebra routines (stacked and augmented systems).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldDescriptor,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn new(
        rows: usize,
        cols: usize,
        field: FieldDescriptor,
        entries: Vec<Scalar>,
    ) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|e| e.field() != field) {
            return Err(Error::ShapeMismatch(format!(
                "entry over {} in a matrix over {field}",
                bad.field()
            )));
        }
        Ok(Matrix { rows, cols, field, entries })
    }

    /// Builds from row vectors; all rows must have the same length.
    pub fn from_rows(field: FieldDescriptor, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Matrix::new(r, c, field, rows.into_iter().flatten().collect())
    }

    /// Integer-entry constructor, mostly for tests and fixtures.
    pub fn from_ints<R: AsRef<[i64]>>(field: FieldDescriptor, rows: &[R]) -> Self {
        let scalars = rows
            .iter()
            .map(|row| row.as_ref().iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        Matrix::from_rows(field, scalars).expect("rectangular integer rows")
    }

    pub fn zero(rows: usize, cols: usize, field: FieldDescriptor) -> Self {
        Matrix { rows, cols, field, entries: vec![field.zero(); rows * cols] }
    }

    pub fn identity(k: usize, field: FieldDescriptor) -> Self {
        let mut m = Matrix::zero(k, k, field);
        for i in 0..k {
            m.entries[i * k + i] = field.one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        assert_eq!(v.field(), self.field, "entry field mismatch");
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let e = self.get(r, c);
                    if r == c { e.is_one() } else { e.is_zero() }
                })
            })
    }

    pub fn transpose(&self) -> Matrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.get(r, c).clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, field: self.field, entries }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            entries: self.entries.iter().map(|e| s * e).collect(),
        }
    }

    /// Places `below`'s rows under `self`'s rows.
    pub fn vstack(&self, below: &Matrix) -> Result<Matrix> {
        if self.cols != below.cols || self.field != below.field {
            return Err(Error::ShapeMismatch(format!(
                "cannot stack {}x{} over {} below {}x{} over {}",
                below.rows, below.cols, below.field, self.rows, self.cols, self.field
            )));
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&below.entries);
        Ok(Matrix { rows: self.rows + below.rows, cols: self.cols, field: self.field, entries })
    }

    /// Places `right`'s columns to the right of `self`'s columns.
    pub fn hstack(&self, right: &Matrix) -> Result<Matrix> {
        if self.rows != right.rows || self.field != right.field {
            return Err(Error::ShapeMismatch(format!(
                "cannot join {}x{} to the right of {}x{}",
                right.rows, right.cols, self.rows, self.cols
            )));
        }
        let mut entries = Vec::with_capacity(self.entries.len() + right.entries.len());
        for r in 0..self.rows {
            entries.extend_from_slice(self.row(r));
            entries.extend_from_slice(right.row(r));
        }
        Ok(Matrix { rows: self.rows, cols: self.cols + right.cols, field: self.field, entries })
    }

    /// Columns `start..end` as a new matrix.
    pub fn column_block(&self, start: usize, end: usize) -> Matrix {
        assert!(start <= end && end <= self.cols, "column range out of bounds");
        let mut entries = Vec::with_capacity(self.rows * (end - start));
        for r in 0..self.rows {
            entries.extend_from_slice(&self.row(r)[start..end]);
        }
        Matrix { rows: self.rows, cols: end - start, field: self.field, entries }
    }

    fn same_shape(&self, other: &Matrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols || self.field != other.field {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} over {} vs {}x{} over {}",
                self.rows, self.cols, self.field, other.rows, other.cols, other.field
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn try_sub(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows || self.field != other.field {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} over {} by {}x{} over {}",
                self.rows, self.cols, self.field, other.rows, other.cols, other.field
            )));
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = self.field.zero();
                for t in 0..self.cols {
                    let (a, b) = (self.get(r, t), other.get(t, c));
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                entries.push(acc);
            }
        }
        Ok(Matrix { rows: self.rows, cols: other.cols, field: self.field, entries })
    }

    /// `self^n` for square matrices; `self^0` is the identity.
    pub fn pow(&self, n: u32) -> Matrix {
        assert!(self.is_square(), "power of a non-square matrix");
        let mut acc = Matrix::identity(self.rows, self.field);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    fn zip_with(&self, other: &Matrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect(),
        }
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (c, e) in self.row(r).iter().enumerate() {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

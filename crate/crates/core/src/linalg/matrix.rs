//! Dense matrices over the rationals and row reduction.

use std::fmt;

use super::{Scalar, Vector};
use crate::error::Error;

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    /// Builds a matrix from explicit rows. All rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vector>) -> Result<Self, Error> {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Matrix {
            rows: nrows,
            cols,
            data,
        })
    }

    /// Convenience constructor from small integer rows. Panics on ragged input.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), cols, "ragged integer rows");
                r.iter().map(|&x| Scalar::from_int(x)).collect()
            })
            .collect();
        Matrix::from_rows(cols, rows).expect("rows checked above")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        self.data[r * self.cols + c] = value;
    }

    pub fn entry_mut(&mut self, r: usize, c: usize) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Scalar]> + '_ {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let v = self.get(r, c);
                if !v.is_zero() {
                    t.set(c, r, v.clone());
                }
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix, Error> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    out.entry_mut(r, c).add_mul(a, rhs.get(k, c));
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vector, Error> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok(self
            .row_iter()
            .map(|row| {
                let mut acc = Scalar::zero();
                for (a, b) in row.iter().zip(v) {
                    acc.add_mul(a, b);
                }
                acc
            })
            .collect())
    }

    /// Reduced row echelon form with zero rows dropped.
    pub fn rref(&self) -> Matrix {
        let mut ech = Echelon::new(self.cols);
        for row in self.row_iter() {
            ech.insert(row.to_vec());
        }
        ech.into_matrix()
    }

    pub fn rank(&self) -> usize {
        let mut ech = Echelon::new(self.cols);
        for row in self.row_iter() {
            ech.insert(row.to_vec());
        }
        ech.rank()
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for row in self.row_iter() {
            let cells: Vec<String> = row.iter().map(|s| s.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Incrementally maintained reduced row echelon basis.
///
/// Rows are kept sorted by pivot column; every pivot is 1 and every pivot
/// column is zero in all other rows.
#[derive(Clone, Debug)]
pub(crate) struct Echelon {
    width: usize,
    rows: Vec<(usize, Vector)>,
}

impl Echelon {
    pub(crate) fn new(width: usize) -> Self {
        Echelon {
            width,
            rows: Vec::new(),
        }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Subtracts every basis row from `v` at its pivot; what is left is the
    /// canonical remainder of `v` modulo the span.
    pub(crate) fn reduce(&self, v: &mut [Scalar]) {
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row).skip(*p) {
                if !r.is_zero() {
                    *x -= &(&f * r);
                }
            }
        }
    }

    /// Adds `v` to the span. Returns whether the rank grew.
    pub(crate) fn insert(&mut self, mut v: Vector) -> bool {
        debug_assert_eq!(v.len(), self.width);
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].recip().expect("nonzero pivot");
        if !inv.is_one() {
            for x in v.iter_mut().skip(p) {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        for (_, row) in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(&v).skip(p) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
        }
        let at = self.rows.partition_point(|(q, _)| *q < p);
        self.rows.insert(at, (p, v));
        true
    }

    pub(crate) fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|(p, _)| *p)
    }

    pub(crate) fn into_matrix(self) -> Matrix {
        let width = self.width;
        let rows = self.rows.into_iter().map(|(_, r)| r).collect();
        Matrix::from_rows(width, rows).expect("echelon rows have the ambient width")
    }
}

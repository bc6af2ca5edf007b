//! Subspaces of `Q^n` in canonical form.

use super::matrix::Echelon;
use super::{Matrix, Scalar, Vector};
use crate::error::Error;

/// A subspace of `Q^ambient_dim`, stored as the unique RREF of its row space.
///
/// Two subspaces are equal exactly when their basis matrices are identical.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::zeros(0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::identity(ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Span of the given vectors.
    pub fn span<I>(ambient_dim: usize, vectors: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = Vector>,
    {
        let mut ech = Echelon::new(ambient_dim);
        for v in vectors {
            if v.len() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    found: v.len(),
                });
            }
            ech.insert(v);
        }
        Ok(Self::from_echelon(ech))
    }

    /// Row space of `m`.
    pub fn row_space(m: &Matrix) -> Self {
        Self::span(m.cols(), m.row_iter().map(<[Scalar]>::to_vec))
            .expect("matrix rows have the matrix width")
    }

    pub(crate) fn from_echelon(ech: Echelon) -> Self {
        let pivots: Vec<usize> = ech.pivots().collect();
        let basis = ech.into_matrix();
        Subspace {
            ambient_dim: basis.cols(),
            basis,
            pivots,
        }
    }

    fn echelon(&self) -> Echelon {
        let mut ech = Echelon::new(self.ambient_dim);
        for row in self.basis.row_iter() {
            ech.insert(row.to_vec());
        }
        ech
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Basis in reduced row echelon form, one vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = Vector> + '_ {
        self.basis.row_iter().map(<[Scalar]>::to_vec)
    }

    /// Pivot column of each basis row, increasing.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns that are not pivots. Their coordinate vectors span a
    /// complement of this subspace.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut it = self.pivots.iter().peekable();
        (0..self.ambient_dim)
            .filter(|c| {
                if it.peek() == Some(&c) {
                    it.next();
                    false
                } else {
                    true
                }
            })
            .collect()
    }

    fn check_len(&self, len: usize) -> Result<(), Error> {
        if len != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: len,
            });
        }
        Ok(())
    }

    /// Canonical remainder of `v` modulo this subspace: zero at every pivot
    /// column, and zero everywhere iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Result<Vector, Error> {
        self.check_len(v.len())?;
        let mut out = v.to_vec();
        for (row, &p) in self.basis.row_iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].clone();
            for (x, r) in out.iter_mut().zip(row).skip(p) {
                if !r.is_zero() {
                    *x -= &(&f * r);
                }
            }
        }
        Ok(out)
    }

    /// Coordinates of `v` with respect to the RREF basis, or `None` if
    /// `v` is not in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Option<Vector>, Error> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool, Error> {
        Ok(self.reduce(v)?.iter().all(Scalar::is_zero))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool, Error> {
        other.check_len(self.ambient_dim)?;
        for row in self.basis.row_iter() {
            if !other.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, Error> {
        self.check_len(other.ambient_dim)?;
        let mut ech = self.echelon();
        for row in other.basis.row_iter() {
            ech.insert(row.to_vec());
        }
        Ok(Self::from_echelon(ech))
    }

    /// Intersection via the Zassenhaus block reduction.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace, Error> {
        self.check_len(other.ambient_dim)?;
        let n = self.ambient_dim;
        let mut ech = Echelon::new(2 * n);
        for row in self.basis.row_iter() {
            let mut v = row.to_vec();
            v.extend_from_slice(row);
            ech.insert(v);
        }
        for row in other.basis.row_iter() {
            let mut v = row.to_vec();
            v.resize(2 * n, Scalar::zero());
            ech.insert(v);
        }
        let reduced = ech.into_matrix();
        let meet = reduced
            .row_iter()
            .filter(|row| row[..n].iter().all(Scalar::is_zero))
            .map(|row| row[n..].to_vec());
        let meet = Subspace::span(n, meet)?;
        let sum = self.sum(other)?;
        assert_eq!(
            self.dim() + other.dim(),
            sum.dim() + meet.dim(),
            "dimension formula violated by subspace intersection"
        );
        Ok(meet)
    }
}

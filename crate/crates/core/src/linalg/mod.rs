//! Exact linear algebra over the rationals.
//!
//! Everything here is immutable once built. Subspaces are kept in reduced
//! row echelon form, so equality of subspaces is equality of bases.

mod matrix;
mod scalar;
mod subspace;

pub use matrix::Matrix;
pub use scalar::Scalar;
pub use subspace::Subspace;

use crate::error::Error;

/// A coordinate vector.
pub type Vector = Vec<Scalar>;

pub fn zero_vector(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

/// The `i`-th standard basis vector of `Q^n` (0-based).
pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Scalar::one();
    v
}

pub fn vector_from_i64(xs: &[i64]) -> Vector {
    xs.iter().map(|&x| Scalar::from_int(x)).collect()
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn rref(m: &Matrix) -> Matrix {
    m.rref()
}

pub fn rank(m: &Matrix) -> usize {
    m.rank()
}

/// Null space `{v : m v = 0}` as a canonical subspace of `Q^cols`.
pub fn kernel_basis(m: &Matrix) -> Subspace {
    let cols = m.cols();
    let reduced = m.rref();
    let pivots: Vec<usize> = reduced
        .row_iter()
        .map(|row| {
            row.iter()
                .position(|x| !x.is_zero())
                .expect("rref drops zero rows")
        })
        .collect();
    let free = (0..cols).filter(|c| !pivots.contains(c));
    let vectors = free.map(|f| {
        let mut v = unit_vector(cols, f);
        for (row, &p) in reduced.row_iter().zip(&pivots) {
            if !row[f].is_zero() {
                v[p] = -&row[f];
            }
        }
        v
    });
    Subspace::span(cols, vectors).expect("kernel vectors have the column count")
}

pub fn subspace_sum(a: &Subspace, b: &Subspace) -> Result<Subspace, Error> {
    a.sum(b)
}

pub fn subspace_intersection(a: &Subspace, b: &Subspace) -> Result<Subspace, Error> {
    a.intersection(b)
}

pub fn in_span(v: &[Scalar], s: &Subspace) -> Result<bool, Error> {
    s.contains(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_of_identity_is_zero() {
        let k = kernel_basis(&Matrix::identity(3));
        assert_eq!(k, Subspace::zero(3));
    }

    #[test]
    fn kernel_of_zero_is_everything() {
        assert_eq!(kernel_basis(&Matrix::zeros(2, 3)), Subspace::full(3));
    }

    #[test]
    fn kernel_by_back_substitution() {
        let m = Matrix::from_i64_rows(&[&[1, 1, 0]]);
        let k = kernel_basis(&m);
        let expected = Subspace::span(
            3,
            vec![vector_from_i64(&[-1, 1, 0]), vector_from_i64(&[0, 0, 1])],
        )
        .unwrap();
        assert_eq!(k, expected);
        for v in k.basis_vectors() {
            assert!(is_zero_vector(&m.mul_vec(&v).unwrap()));
        }
    }

    #[test]
    fn kernel_with_rational_entries() {
        let m = Matrix::from_i64_rows(&[&[2, 3, 0, 1], &[4, 6, 1, 0]]);
        let k = kernel_basis(&m);
        assert_eq!(k.dim(), 2);
        for v in k.basis_vectors() {
            assert!(is_zero_vector(&m.mul_vec(&v).unwrap()));
        }
    }

    #[test]
    fn in_span_examples() {
        let s = Subspace::span(3, vec![unit_vector(3, 0), unit_vector(3, 1)]).unwrap();
        assert!(in_span(&unit_vector(3, 0), &s).unwrap());
        assert!(!in_span(&unit_vector(3, 2), &s).unwrap());
        assert!(in_span(&vector_from_i64(&[1, 1, 0]), &s).unwrap());
        assert!(in_span(&vector_from_i64(&[1, 1]), &s).is_err());
    }
}

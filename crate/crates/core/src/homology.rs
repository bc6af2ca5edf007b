//! Second Chevalley–Eilenberg homology with trivial coefficients, i.e. the
//! Schur multiplier `M(L)`, and the invariant `t(L) = n(n-1)/2 - dim M(L)`.
//!
//! The chain complex in degrees 3, 2, 1 is
//!
//! ```text
//! Λ³L --d3--> Λ²L --d2--> L
//! d2(x∧y)   = [x, y]
//! d3(x∧y∧z) = -[x,y]∧z + [x,z]∧y - [y,z]∧x
//! ```
//!
//! and `dim M(L) = dim ker d2 - rank d3`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::liealg::LieAlgebra;
use crate::linalg::{Matrix, Scalar};

/// Lexicographic coordinates on `Λ²L` and `Λ³L`.
#[derive(Clone, Debug)]
pub struct ChainBasis {
    n: usize,
    wedge2: Vec<(usize, usize)>,
    wedge2_index: BTreeMap<(usize, usize), usize>,
    wedge3: Vec<(usize, usize, usize)>,
}

impl ChainBasis {
    pub fn new(n: usize) -> Self {
        let wedge2: Vec<_> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        let wedge2_index = wedge2.iter().enumerate().map(|(t, &p)| (p, t)).collect();
        let wedge3 = (0..n)
            .flat_map(|i| (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| (i, j, k))))
            .collect();
        ChainBasis {
            n,
            wedge2,
            wedge2_index,
            wedge3,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn wedge2(&self) -> &[(usize, usize)] {
        &self.wedge2
    }

    pub fn wedge3(&self) -> &[(usize, usize, usize)] {
        &self.wedge3
    }

    /// Index of `e_i ∧ e_j` for `i < j` (0-based).
    pub fn wedge2_index(&self, i: usize, j: usize) -> Option<usize> {
        self.wedge2_index.get(&(i, j)).copied()
    }

    /// Index of `e_i ∧ e_j ∧ e_k` for `i < j < k` (0-based).
    pub fn wedge3_index(&self, i: usize, j: usize, k: usize) -> Option<usize> {
        if !(i < j && j < k && k < self.n) {
            return None;
        }
        // Triples before i, then pairs (j, k) with i < j < k before j, then k.
        let c3 = |m: usize| m * m.saturating_sub(1) * m.saturating_sub(2) / 6;
        let c2 = |m: usize| m * m.saturating_sub(1) / 2;
        let before_i = c3(self.n) - c3(self.n - i);
        let rest = self.n - i - 1;
        let before_j = c2(rest) - c2(self.n - j);
        Some(before_i + before_j + (k - j - 1))
    }

    /// Adds `coeff * (v ∧ e_w)` to `out`, with `v` in `L` coordinates.
    fn add_wedge(&self, out: &mut Matrix, col: usize, v: &[Scalar], w: usize, sign: i64) {
        let s = Scalar::from_int(sign);
        for (k, c) in v.iter().enumerate() {
            if c.is_zero() || k == w {
                continue;
            }
            let (row, sgn) = if k < w {
                (self.wedge2_index[&(k, w)], s.clone())
            } else {
                (self.wedge2_index[&(w, k)], -&s)
            };
            out.entry_mut(row, col).add_mul(&sgn, c);
        }
    }
}

/// `d2 : Λ²L → L` as an `n × C(n,2)` matrix.
pub fn boundary_d2(l: &LieAlgebra) -> Matrix {
    let basis = ChainBasis::new(l.dim());
    let mut d2 = Matrix::zeros(l.dim(), basis.wedge2.len());
    for (col, &(i, j)) in basis.wedge2.iter().enumerate() {
        for (k, c) in l.bracket_basis(i, j).into_iter().enumerate() {
            if !c.is_zero() {
                d2.set(k, col, c);
            }
        }
    }
    d2
}

/// `d3 : Λ³L → Λ²L` as a `C(n,2) × C(n,3)` matrix.
pub fn boundary_d3(l: &LieAlgebra) -> Matrix {
    let basis = ChainBasis::new(l.dim());
    let mut d3 = Matrix::zeros(basis.wedge2.len(), basis.wedge3.len());
    for (col, &(i, j, k)) in basis.wedge3.iter().enumerate() {
        basis.add_wedge(&mut d3, col, &l.bracket_basis(i, j), k, -1);
        basis.add_wedge(&mut d3, col, &l.bracket_basis(i, k), j, 1);
        basis.add_wedge(&mut d3, col, &l.bracket_basis(j, k), i, -1);
    }
    d3
}

/// Boundary maps together with the multiplier dimension and `t(L)`.
#[derive(Clone, Debug)]
pub struct SchurData {
    pub dim_multiplier: usize,
    pub t_value: i64,
    pub d2: Matrix,
    pub d3: Matrix,
}

impl SchurData {
    /// Computes both boundaries, checks `d2 d3 = 0`, and derives `dim M(L)`.
    pub fn compute(l: &LieAlgebra) -> Result<Self> {
        let n = l.dim();
        let d2 = boundary_d2(l);
        let d3 = boundary_d3(l);
        if !d2.mul(&d3)?.is_zero() {
            return Err(Error::Inconsistency(format!(
                "d2 ∘ d3 != 0 for {}",
                l.name()
            )));
        }
        let pairs = n * n.saturating_sub(1) / 2;
        let cycles = pairs - d2.rank();
        let boundaries = d3.rank();
        let dim_multiplier = cycles.checked_sub(boundaries).ok_or_else(|| {
            Error::Inconsistency(format!("rank d3 exceeds dim ker d2 for {}", l.name()))
        })?;
        Ok(SchurData {
            dim_multiplier,
            t_value: pairs as i64 - dim_multiplier as i64,
            d2,
            d3,
        })
    }
}

pub fn schur_multiplier_dim(l: &LieAlgebra) -> Result<usize> {
    Ok(SchurData::compute(l)?.dim_multiplier)
}

pub fn t_invariant(l: &LieAlgebra) -> Result<i64> {
    Ok(SchurData::compute(l)?.t_value)
}

/// Structure of a nilpotent algebra as determined by `t(L)` alone.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Classification {
    /// `t = 0`: abelian of the given dimension.
    Abelian(usize),
    /// `t = 1`.
    H1,
    /// `t = 2`.
    H1PlusA1,
    /// `t = 3`.
    H1PlusA2,
    /// `t >= 4`: no structural statement.
    Unclassified(i64),
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Abelian(n) => write!(f, "A({n})"),
            Classification::H1 => write!(f, "H(1)"),
            Classification::H1PlusA1 => write!(f, "H(1)⊕A(1)"),
            Classification::H1PlusA2 => write!(f, "H(1)⊕A(2)"),
            Classification::Unclassified(t) => write!(f, "unclassified({t})"),
        }
    }
}

impl Classification {
    /// Maps a `t` value to a structure. Negative `t` cannot occur for a
    /// nilpotent algebra and is reported as an inconsistency.
    pub fn from_t(n: usize, t: i64) -> Result<Self> {
        Ok(match t {
            t if t < 0 => {
                return Err(Error::Inconsistency(format!(
                    "t(L) = {t} < 0 for a nilpotent algebra"
                )))
            }
            0 => Classification::Abelian(n),
            1 => Classification::H1,
            2 => Classification::H1PlusA1,
            3 => Classification::H1PlusA2,
            t => Classification::Unclassified(t),
        })
    }
}

pub fn classify_by_t(l: &LieAlgebra) -> Result<Classification> {
    l.require_nilpotent()?;
    Classification::from_t(l.dim(), t_invariant(l)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{abelian, heisenberg, standard_filiform, StructureConstant};

    fn binom(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn chain_basis_indices_are_bijective() {
        for n in 0..7 {
            let b = ChainBasis::new(n);
            assert_eq!(b.wedge2().len(), binom(n, 2));
            assert_eq!(b.wedge3().len(), binom(n, 3));
            for (t, &(i, j)) in b.wedge2().iter().enumerate() {
                assert_eq!(b.wedge2_index(i, j), Some(t));
            }
            for (t, &(i, j, k)) in b.wedge3().iter().enumerate() {
                assert_eq!(b.wedge3_index(i, j, k), Some(t));
            }
        }
        assert_eq!(ChainBasis::new(3).wedge3_index(0, 0, 1), None);
    }

    #[test]
    fn boundaries_of_abelian_are_zero() {
        let a = abelian(4);
        assert!(boundary_d2(&a).is_zero());
        assert!(boundary_d3(&a).is_zero());
    }

    #[test]
    fn heisenberg_boundaries() {
        let h = heisenberg(1).unwrap();
        assert_eq!(boundary_d2(&h).rank(), 1);
        // d3(e1∧e2∧e3) = -e3∧e3 + 0 - 0 = 0
        assert!(boundary_d3(&h).is_zero());
    }

    #[test]
    fn filiform4_boundaries() {
        // Expanded by hand over the four triples (1-based):
        // (1,2,3): -[e1,e2]∧e3 + [e1,e3]∧e2 - [e2,e3]∧e1 = -e3∧e3 + e4∧e2 = -e2∧e4
        // (1,2,4): -e3∧e4 + [e1,e4]∧e2 - 0 = -e3∧e4
        // (1,3,4): -e4∧e4 + 0 - 0 = 0
        // (2,3,4): 0
        let f = standard_filiform(4).unwrap();
        assert_eq!(boundary_d2(&f).rank(), 2);
        let d3 = boundary_d3(&f);
        let b = ChainBasis::new(4);
        let col = b.wedge3_index(0, 1, 2).unwrap();
        assert_eq!(
            *d3.get(b.wedge2_index(1, 3).unwrap(), col),
            Scalar::from_int(-1)
        );
        let col = b.wedge3_index(0, 1, 3).unwrap();
        assert_eq!(
            *d3.get(b.wedge2_index(2, 3).unwrap(), col),
            Scalar::from_int(-1)
        );
        assert_eq!(d3.rank(), 2);
        // ker d2 has dim 6 - 2 = 4, so M = 4 - 2 = 2.
        assert_eq!(schur_multiplier_dim(&f), Ok(2));
    }

    #[test]
    fn heisenberg_multipliers() {
        assert_eq!(schur_multiplier_dim(&heisenberg(1).unwrap()), Ok(2));
        for m in 2..=3usize {
            let expected = 2 * m * m - m - 1;
            assert_eq!(schur_multiplier_dim(&heisenberg(m).unwrap()), Ok(expected));
        }
    }

    #[test]
    fn abelian_multipliers() {
        for n in 0..=6 {
            assert_eq!(
                schur_multiplier_dim(&abelian(n)),
                Ok(n * n.saturating_sub(1) / 2)
            );
            assert_eq!(t_invariant(&abelian(n)), Ok(0));
        }
    }

    #[test]
    fn t_values() {
        let h = heisenberg(1).unwrap();
        assert_eq!(t_invariant(&h), Ok(1));
        assert_eq!(t_invariant(&h.direct_sum(&abelian(2))), Ok(3));
    }

    #[test]
    fn classification_labels() {
        assert_eq!(classify_by_t(&abelian(7)).unwrap().to_string(), "A(7)");
        let h = heisenberg(1).unwrap();
        assert_eq!(classify_by_t(&h).unwrap().to_string(), "H(1)");
        assert_eq!(
            classify_by_t(&h.direct_sum(&abelian(1))).unwrap(),
            Classification::H1PlusA1
        );
        assert_eq!(
            classify_by_t(&h.direct_sum(&abelian(1)))
                .unwrap()
                .to_string(),
            "H(1)⊕A(1)"
        );
        assert_eq!(
            classify_by_t(&h.direct_sum(&abelian(2))).unwrap(),
            Classification::H1PlusA2
        );
        // H(2): t = 10 - 5 = 5
        assert_eq!(
            classify_by_t(&heisenberg(2).unwrap()).unwrap(),
            Classification::Unclassified(5)
        );
    }

    #[test]
    fn classify_rejects_non_nilpotent() {
        let l =
            LieAlgebra::from_structure_constants("aff", 2, [StructureConstant::new(1, 2, 2, 1)])
                .unwrap();
        assert!(matches!(classify_by_t(&l), Err(Error::NotNilpotent(_))));
    }

    #[test]
    fn negative_t_is_an_inconsistency() {
        assert!(Classification::from_t(3, -1)
            .unwrap_err()
            .is_inconsistency());
    }
}

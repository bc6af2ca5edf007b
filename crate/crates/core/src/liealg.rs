//! Finite-dimensional Lie algebras over the rationals, given by structure
//! constants on a fixed basis `e_1, ..., e_n`.
//!
//! Internally basis indices are 0-based; the structure-constant constructor
//! and [`StructureConstant`] use the 1-based indices of the file format.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{self, unit_vector, zero_vector, Matrix, Scalar, Subspace, Vector};

/// One coefficient `[e_i, e_j] = ... + coeff * e_k + ...`, with `1 <= i < j <= n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StructureConstant {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub coeff: Scalar,
}

impl StructureConstant {
    pub fn new(i: usize, j: usize, k: usize, coeff: impl Into<Scalar>) -> Self {
        StructureConstant {
            i,
            j,
            k,
            coeff: coeff.into(),
        }
    }
}

/// A Lie algebra validated against the Jacobi identity.
///
/// Only brackets `[e_i, e_j]` with `i < j` are stored; antisymmetry is
/// structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LieAlgebra {
    name: String,
    dim: usize,
    table: BTreeMap<(usize, usize), Vector>,
}

impl LieAlgebra {
    /// Builds and validates an algebra from 1-based structure constants.
    ///
    /// Zero coefficients are accepted and dropped, but still count towards
    /// duplicate detection.
    pub fn from_structure_constants<I>(
        name: impl Into<String>,
        dim: usize,
        brackets: I,
    ) -> Result<Self>
    where
        I: IntoIterator<Item = StructureConstant>,
    {
        let mut seen = std::collections::BTreeSet::new();
        let mut table: BTreeMap<(usize, usize), Vector> = BTreeMap::new();
        for StructureConstant { i, j, k, coeff } in brackets {
            if i < 1 || j > dim || i >= j || k < 1 || k > dim {
                return Err(Error::IndexOutOfRange { i, j, k, dim });
            }
            if !seen.insert((i, j, k)) {
                return Err(Error::DuplicateEntry { i, j, k });
            }
            if coeff.is_zero() {
                continue;
            }
            table
                .entry((i - 1, j - 1))
                .or_insert_with(|| zero_vector(dim))[k - 1] = coeff;
        }
        let alg = LieAlgebra {
            name: name.into(),
            dim,
            table,
        };
        alg.check_jacobi()?;
        Ok(alg)
    }

    fn from_table_unchecked(
        name: String,
        dim: usize,
        table: BTreeMap<(usize, usize), Vector>,
    ) -> Self {
        let table = table
            .into_iter()
            .filter(|(_, v)| !linalg::is_zero_vector(v))
            .collect();
        LieAlgebra { name, dim, table }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Nonzero structure constants, 1-based, in lexicographic `(i, j, k)` order.
    pub fn structure_constants(&self) -> Vec<StructureConstant> {
        let mut out = Vec::new();
        for (&(i, j), v) in &self.table {
            for (k, c) in v.iter().enumerate() {
                if !c.is_zero() {
                    out.push(StructureConstant::new(i + 1, j + 1, k + 1, c.clone()));
                }
            }
        }
        out
    }

    /// `[e_i, e_j]` for 0-based basis indices.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => zero_vector(self.dim),
            Less => self
                .table
                .get(&(i, j))
                .cloned()
                .unwrap_or_else(|| zero_vector(self.dim)),
            Greater => self
                .table
                .get(&(j, i))
                .map(|v| v.iter().map(|x| -x).collect())
                .unwrap_or_else(|| zero_vector(self.dim)),
        }
    }

    /// Iterates over the nonzero `[e_i, e_j]` with `i < j`.
    pub fn nonzero_brackets(&self) -> impl Iterator<Item = (usize, usize, &Vector)> + '_ {
        self.table.iter().map(|(&(i, j), v)| (i, j, v))
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
        for v in [x, y] {
            if v.len() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    found: v.len(),
                });
            }
        }
        Ok(self.bracket_unchecked(x, y))
    }

    pub(crate) fn bracket_unchecked(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.dim);
        for (&(i, j), v) in &self.table {
            // x_i y_j - x_j y_i
            let mut f = Scalar::zero();
            f.add_mul(&x[i], &y[j]);
            if !x[j].is_zero() && !y[i].is_zero() {
                f -= &(&x[j] * &y[i]);
            }
            if f.is_zero() {
                continue;
            }
            for (o, c) in out.iter_mut().zip(v) {
                o.add_mul(&f, c);
            }
        }
        out
    }

    fn check_jacobi(&self) -> Result<()> {
        let n = self.dim;
        let e = |i| unit_vector(n, i);
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let a = self.bracket_unchecked(&self.bracket_basis(i, j), &e(k));
                    let b = self.bracket_unchecked(&self.bracket_basis(j, k), &e(i));
                    let c = self.bracket_unchecked(&self.bracket_basis(k, i), &e(j));
                    let ok = (0..n).all(|t| (&(&a[t] + &b[t]) + &c[t]).is_zero());
                    if !ok {
                        return Err(Error::JacobiViolation {
                            i: i + 1,
                            j: j + 1,
                            k: k + 1,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_abelian(&self) -> bool {
        self.table.is_empty()
    }

    /// Span of `[a, b]` over basis vectors `a` of `left` and `b` of `right`.
    pub fn bracket_of_subspaces(&self, left: &Subspace, right: &Subspace) -> Result<Subspace> {
        let mut vectors = Vec::new();
        for a in left.basis_vectors() {
            for b in right.basis_vectors() {
                vectors.push(self.bracket(&a, &b)?);
            }
        }
        Subspace::span(self.dim, vectors)
    }

    /// The derived subalgebra `L² = [L, L]`; its dimension is `m`.
    pub fn derived_subalgebra(&self) -> Ideal<'_> {
        let space = Subspace::span(self.dim, self.table.values().cloned())
            .expect("brackets have the algebra dimension");
        Ideal::new_unchecked(self, space)
    }

    /// `Z(L)`, the kernel of `x ↦ ([x, e_1], ..., [x, e_n])`.
    pub fn center(&self) -> Ideal<'_> {
        let n = self.dim;
        // Row (i, k) holds the coefficient of e_k in [e_a, e_i] at column a.
        let mut m = Matrix::zeros(n * n, n);
        for a in 0..n {
            for i in 0..n {
                for (k, c) in self.bracket_basis(a, i).into_iter().enumerate() {
                    if !c.is_zero() {
                        m.set(i * n + k, a, c);
                    }
                }
            }
        }
        Ideal::new_unchecked(self, linalg::kernel_basis(&m))
    }

    /// `L ⊇ L² ⊇ [L², L] ⊇ ...`, stopping at the first repeated term. The
    /// last entry is the zero ideal exactly when `L` is nilpotent.
    pub fn lower_central_series(&self) -> Vec<Ideal<'_>> {
        let full = Subspace::full(self.dim);
        let mut series = vec![Ideal::new_unchecked(self, full.clone())];
        loop {
            let last = &series.last().expect("nonempty").space;
            if last.is_zero() {
                break;
            }
            let next = self
                .bracket_of_subspaces(last, &full)
                .expect("same ambient dimension");
            if &next == last {
                break;
            }
            series.push(Ideal::new_unchecked(self, next));
        }
        series
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series()
            .last()
            .is_some_and(|i| i.space.is_zero())
    }

    /// Number of nonzero terms of the lower central series.
    pub fn nilpotency_class(&self) -> Result<usize> {
        let series = self.lower_central_series();
        if !series.last().is_some_and(|i| i.space.is_zero()) {
            return Err(Error::NotNilpotent(self.name.clone()));
        }
        Ok(series.len() - 1)
    }

    pub(crate) fn require_nilpotent(&self) -> Result<()> {
        if self.is_nilpotent() {
            Ok(())
        } else {
            Err(Error::NotNilpotent(self.name.clone()))
        }
    }

    /// `dim L² = 1` and `L² = Z(L)`.
    pub fn is_heisenberg(&self) -> bool {
        let derived = self.derived_subalgebra();
        derived.dim() == 1 && derived.space == self.center().space
    }

    /// Block-diagonal direct sum; `N`'s basis follows `M`'s.
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let dim = self.dim + other.dim;
        let off = self.dim;
        let mut table = BTreeMap::new();
        for (&(i, j), v) in &self.table {
            let mut w = v.clone();
            w.resize(dim, Scalar::zero());
            table.insert((i, j), w);
        }
        for (&(i, j), v) in &other.table {
            let mut w = zero_vector(off);
            w.extend(v.iter().cloned());
            table.insert((i + off, j + off), w);
        }
        LieAlgebra::from_table_unchecked(format!("{}+{}", self.name, other.name), dim, table)
    }

    /// `L / N` on the basis of coordinate vectors at the non-pivot columns of `N`.
    pub fn quotient(&self, ideal: &Ideal<'_>) -> Result<LieAlgebra> {
        if !std::ptr::eq(ideal.parent, self) && ideal.parent != self {
            return Err(Error::Precondition(
                "ideal belongs to a different algebra".into(),
            ));
        }
        ideal.check_closed()?;
        let keep = ideal.space.free_columns();
        let project = |v: Vector| -> Vector {
            let r = ideal.space.reduce(&v).expect("ambient dimension");
            keep.iter().map(|&c| r[c].clone()).collect()
        };
        let mut table = BTreeMap::new();
        for (a, &ca) in keep.iter().enumerate() {
            for (b, &cb) in keep.iter().enumerate().skip(a + 1) {
                table.insert((a, b), project(self.bracket_basis(ca, cb)));
            }
        }
        let name = if ideal.space.is_zero() {
            self.name.clone()
        } else {
            format!("({})/N", self.name)
        };
        let q = LieAlgebra::from_table_unchecked(name, keep.len(), table);
        q.check_jacobi()?;
        Ok(q)
    }

    /// `L / L²`.
    pub fn abelianization(&self) -> LieAlgebra {
        let derived = self.derived_subalgebra();
        self.quotient(&derived)
            .expect("the derived subalgebra is an ideal")
            .with_name(format!("{}/{}²", self.name, self.name))
    }

    /// The subalgebra spanned by `space`, on the RREF basis of `space`.
    pub fn subalgebra(&self, space: &Subspace) -> Result<LieAlgebra> {
        if space.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: space.ambient_dim(),
            });
        }
        let basis: Vec<Vector> = space.basis_vectors().collect();
        let mut table = BTreeMap::new();
        for a in 0..basis.len() {
            for b in a + 1..basis.len() {
                let br = self.bracket_unchecked(&basis[a], &basis[b]);
                let coords = space.coordinates(&br)?.ok_or_else(|| {
                    Error::Precondition("subspace is not closed under the bracket".into())
                })?;
                table.insert((a, b), coords);
            }
        }
        Ok(LieAlgebra::from_table_unchecked(
            format!("sub({})", self.name),
            basis.len(),
            table,
        ))
    }
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieAlgebra({:?}, dim {}", self.name, self.dim)?;
        for c in self.structure_constants() {
            write!(f, ", [e{},e{}]∋{}·e{}", c.i, c.j, c.coeff, c.k)?;
        }
        write!(f, ")")
    }
}

/// An ideal of a specific algebra.
#[derive(Clone, Debug)]
pub struct Ideal<'a> {
    parent: &'a LieAlgebra,
    space: Subspace,
}

impl<'a> Ideal<'a> {
    /// Validates `[L, space] ⊆ space`.
    pub fn new(parent: &'a LieAlgebra, space: Subspace) -> Result<Self> {
        if space.ambient_dim() != parent.dim() {
            return Err(Error::DimensionMismatch {
                expected: parent.dim(),
                found: space.ambient_dim(),
            });
        }
        let ideal = Ideal { parent, space };
        ideal.check_closed()?;
        Ok(ideal)
    }

    fn new_unchecked(parent: &'a LieAlgebra, space: Subspace) -> Self {
        Ideal { parent, space }
    }

    pub fn zero(parent: &'a LieAlgebra) -> Self {
        Ideal::new_unchecked(parent, Subspace::zero(parent.dim()))
    }

    fn check_closed(&self) -> Result<()> {
        let n = self.parent.dim();
        for v in self.space.basis_vectors() {
            for i in 0..n {
                let br = self.parent.bracket_unchecked(&unit_vector(n, i), &v);
                if !self.space.contains(&br)? {
                    return Err(Error::NotAnIdeal);
                }
            }
        }
        Ok(())
    }

    pub fn parent(&self) -> &'a LieAlgebra {
        self.parent
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

/// The abelian algebra `A(n)`.
pub fn abelian(n: usize) -> LieAlgebra {
    LieAlgebra::from_table_unchecked(format!("A({n})"), n, BTreeMap::new())
}

/// The Heisenberg algebra `H(m)` of dimension `2m + 1`, with
/// `[e_{2i-1}, e_{2i}] = e_{2m+1}`.
pub fn heisenberg(m: usize) -> Result<LieAlgebra> {
    if m == 0 {
        return Err(Error::InvalidArgument("H(m) needs m >= 1".into()));
    }
    let n = 2 * m + 1;
    LieAlgebra::from_structure_constants(
        format!("H({m})"),
        n,
        (0..m).map(|i| StructureConstant::new(2 * i + 1, 2 * i + 2, n, 1)),
    )
}

/// The standard graded filiform algebra of dimension `n >= 3`:
/// `[e_1, e_i] = e_{i+1}` for `2 <= i < n`.
pub fn standard_filiform(n: usize) -> Result<LieAlgebra> {
    if n < 3 {
        return Err(Error::InvalidArgument(
            "filiform algebras need dimension >= 3".into(),
        ));
    }
    LieAlgebra::from_structure_constants(
        format!("filiform{n}"),
        n,
        (2..n).map(|i| StructureConstant::new(1, i, i + 1, 1)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::vector_from_i64;

    fn filiform4() -> LieAlgebra {
        standard_filiform(4).unwrap()
    }

    #[test]
    fn heisenberg_from_constants() {
        let h = LieAlgebra::from_structure_constants("H", 3, [StructureConstant::new(1, 2, 3, 1)])
            .unwrap();
        assert_eq!(h, heisenberg(1).unwrap().with_name("H"));
        assert_eq!(h.bracket_basis(0, 1), vector_from_i64(&[0, 0, 1]));
        assert_eq!(h.bracket_basis(1, 0), vector_from_i64(&[0, 0, -1]));
        assert_eq!(h.bracket_basis(0, 2), vector_from_i64(&[0, 0, 0]));
    }

    #[test]
    fn empty_table_is_abelian() {
        let a = LieAlgebra::from_structure_constants("A(2)", 2, []).unwrap();
        assert_eq!(a, abelian(2));
        assert!(a.is_abelian());
    }

    #[test]
    fn jacobi_violation_is_reported() {
        // [e1,e2]=e3, [e1,e3]=e2, [e2,e3]=e1:
        // [[e1,e2],e3] + [[e2,e3],e1] + [[e3,e1],e2] = 0 + 0 + [-e2,e2] = 0,
        // so this one is a genuine Lie algebra (it is so(3)-like up to signs).
        let ok = LieAlgebra::from_structure_constants(
            "x",
            3,
            [
                StructureConstant::new(1, 2, 3, 1),
                StructureConstant::new(1, 3, 2, 1),
                StructureConstant::new(2, 3, 1, 1),
            ],
        );
        assert!(ok.is_ok());
        // [e1,e2]=e3, [e1,e3]=e1: [[e1,e2],e3] + [[e2,e3],e1] + [[e3,e1],e2]
        // = [e3,e3] + 0 + [-e1,e2] = -e3 != 0.
        let bad = LieAlgebra::from_structure_constants(
            "bad",
            3,
            [
                StructureConstant::new(1, 2, 3, 1),
                StructureConstant::new(1, 3, 1, 1),
            ],
        );
        assert_eq!(bad, Err(Error::JacobiViolation { i: 1, j: 2, k: 3 }));
    }

    #[test]
    fn constructor_rejects_bad_indices() {
        let r = LieAlgebra::from_structure_constants("x", 3, [StructureConstant::new(2, 1, 3, 1)]);
        assert!(matches!(r, Err(Error::IndexOutOfRange { .. })));
        let r = LieAlgebra::from_structure_constants("x", 3, [StructureConstant::new(1, 2, 4, 1)]);
        assert!(matches!(r, Err(Error::IndexOutOfRange { .. })));
        let r = LieAlgebra::from_structure_constants("x", 3, [StructureConstant::new(0, 2, 3, 1)]);
        assert!(matches!(r, Err(Error::IndexOutOfRange { .. })));
        let r = LieAlgebra::from_structure_constants(
            "x",
            3,
            [
                StructureConstant::new(1, 2, 3, 1),
                StructureConstant::new(1, 2, 3, 2),
            ],
        );
        assert_eq!(r, Err(Error::DuplicateEntry { i: 1, j: 2, k: 3 }));
    }

    #[test]
    fn bracket_is_alternating_and_checks_lengths() {
        let h = heisenberg(1).unwrap();
        let x = vector_from_i64(&[2, -3, 5]);
        assert!(linalg::is_zero_vector(&h.bracket(&x, &x).unwrap()));
        assert_eq!(
            h.bracket(&unit_vector(3, 0), &unit_vector(3, 1)).unwrap(),
            unit_vector(3, 2)
        );
        assert!(h.bracket(&x, &vector_from_i64(&[1, 0])).is_err());
    }

    #[test]
    fn derived_subalgebras() {
        assert!(abelian(4).derived_subalgebra().space().is_zero());
        for m in 1..=3 {
            let h = heisenberg(m).unwrap();
            let d = h.derived_subalgebra();
            assert_eq!(
                d.space(),
                &Subspace::span(2 * m + 1, [unit_vector(2 * m + 1, 2 * m)]).unwrap()
            );
        }
        let f = filiform4();
        let expected = Subspace::span(4, [unit_vector(4, 2), unit_vector(4, 3)]).unwrap();
        assert_eq!(f.derived_subalgebra().space(), &expected);
    }

    #[test]
    fn centers() {
        assert_eq!(abelian(3).center().space(), &Subspace::full(3));
        assert_eq!(
            heisenberg(2).unwrap().center().space(),
            &Subspace::span(5, [unit_vector(5, 4)]).unwrap()
        );
        assert_eq!(
            filiform4().center().space(),
            &Subspace::span(4, [unit_vector(4, 3)]).unwrap()
        );
    }

    #[test]
    fn series_and_class() {
        let dims = |l: &LieAlgebra| {
            l.lower_central_series()
                .iter()
                .map(Ideal::dim)
                .collect::<Vec<_>>()
        };
        assert_eq!(dims(&abelian(3)), vec![3, 0]);
        assert_eq!(dims(&heisenberg(1).unwrap()), vec![3, 1, 0]);
        assert_eq!(dims(&filiform4()), vec![4, 2, 1, 0]);
        assert_eq!(abelian(5).nilpotency_class(), Ok(1));
        assert_eq!(heisenberg(3).unwrap().nilpotency_class(), Ok(2));
        assert_eq!(filiform4().nilpotency_class(), Ok(3));
    }

    #[test]
    fn non_nilpotent_two_dimensional() {
        let l =
            LieAlgebra::from_structure_constants("aff", 2, [StructureConstant::new(1, 2, 2, 1)])
                .unwrap();
        assert!(!l.is_nilpotent());
        let dims: Vec<_> = l.lower_central_series().iter().map(Ideal::dim).collect();
        assert_eq!(dims, vec![2, 1]);
        assert_eq!(l.nilpotency_class(), Err(Error::NotNilpotent("aff".into())));
    }

    #[test]
    fn direct_sums() {
        let h = heisenberg(1).unwrap();
        let s = h.direct_sum(&abelian(1));
        assert_eq!(s.dim(), 4);
        assert_eq!(s.name(), "H(1)+A(1)");
        assert_eq!(
            s.derived_subalgebra().space(),
            &Subspace::span(4, [unit_vector(4, 2)]).unwrap()
        );
        assert_eq!(
            abelian(2).direct_sum(&abelian(3)),
            abelian(5).with_name("A(2)+A(3)")
        );
        let hh = h.direct_sum(&h);
        assert_eq!(hh.dim(), 6);
        assert_eq!(hh.derived_subalgebra().dim(), 2);
        assert_eq!(hh.center().dim(), 2);
    }

    #[test]
    fn quotients() {
        let h = heisenberg(1).unwrap();
        let q = h.quotient(&h.derived_subalgebra()).unwrap();
        assert_eq!(q.dim(), 2);
        assert!(q.is_abelian());
        assert_eq!(h.quotient(&Ideal::zero(&h)).unwrap(), h);

        let f = filiform4();
        let n = Ideal::new(&f, Subspace::span(4, [unit_vector(4, 3)]).unwrap()).unwrap();
        let q = f.quotient(&n).unwrap();
        assert_eq!(
            q.structure_constants(),
            vec![StructureConstant::new(1, 2, 3, 1)]
        );
        assert!(q.is_heisenberg());
    }

    #[test]
    fn non_ideal_is_rejected() {
        let f = filiform4();
        let s = Subspace::span(4, [unit_vector(4, 1)]).unwrap();
        assert_eq!(Ideal::new(&f, s).unwrap_err(), Error::NotAnIdeal);
    }

    #[test]
    fn abelianizations() {
        assert!(abelian(3).abelianization().is_abelian());
        assert_eq!(abelian(3).abelianization().dim(), 3);
        for m in 1..=3 {
            let a = heisenberg(m).unwrap().abelianization();
            assert_eq!((a.dim(), a.is_abelian()), (2 * m, true));
        }
        let a = filiform4().abelianization();
        assert_eq!((a.dim(), a.is_abelian()), (2, true));
    }

    #[test]
    fn heisenberg_family() {
        assert!(heisenberg(0).is_err());
        let h2 = heisenberg(2).unwrap();
        assert_eq!(h2.dim(), 5);
        assert_eq!(h2.structure_constants().len(), 2);
        for m in 1..=3 {
            assert!(heisenberg(m).unwrap().is_heisenberg());
        }
        for n in 0..=6 {
            assert!(!abelian(n).is_heisenberg());
        }
        assert!(!filiform4().is_heisenberg());
        assert!(!standard_filiform(5).unwrap().is_heisenberg());
        assert!(!heisenberg(1)
            .unwrap()
            .direct_sum(&abelian(1))
            .is_heisenberg());
    }

    #[test]
    fn zero_algebra() {
        let z = abelian(0);
        assert_eq!(z.dim(), 0);
        assert!(z.is_nilpotent());
        assert_eq!(z.nilpotency_class(), Ok(0));
    }

    #[test]
    fn subalgebra_restricts_brackets() {
        let hh = heisenberg(1).unwrap().direct_sum(&heisenberg(1).unwrap());
        let first = Subspace::span(6, (0..3).map(|i| unit_vector(6, i))).unwrap();
        let sub = hh.subalgebra(&first).unwrap();
        assert!(sub.is_heisenberg());
        let bad = Subspace::span(6, [unit_vector(6, 0), unit_vector(6, 1)]).unwrap();
        assert!(hh.subalgebra(&bad).is_err());
    }
}

//! Invariant reports and the bound checks built on them.

mod catalog;

pub use catalog::{
    algebra_by_name, builtin_names, default_catalog, run_catalog, CatalogEntry, CatalogResult,
    CheckOutcome, Expectation, ExpectedValue, Provenance, ReportField,
};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::homology::{Classification, SchurData};
use crate::liealg::{Ideal, LieAlgebra};
use crate::linalg::{unit_vector, Subspace};
use crate::tensor::{gamma_dim, trivial_action_tensor_dim, TensorSquare};

/// Every invariant computed for one algebra.
///
/// `bound_value` is `(n − m)(n − 1) + 2` and `rocco_value` is `n(n − m)`.
/// The bound only speaks about non-abelian algebras: for `m = 0`,
/// `bound_satisfied` is vacuously true and `equality_case` is false.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub n: usize,
    pub m: usize,
    pub dim_center: usize,
    pub nilpotency_class: usize,
    pub dim_multiplier: usize,
    pub t_value: i64,
    pub dim_tensor_square: usize,
    pub dim_exterior_square: usize,
    pub dim_square_submodule: usize,
    pub bound_value: usize,
    pub rocco_value: usize,
    pub bound_satisfied: bool,
    pub equality_case: bool,
    pub classification: String,
}

/// `(n − m)(n − 1) + 2`.
pub fn developed_bound(n: usize, m: usize) -> usize {
    (n - m) * n.saturating_sub(1) + 2
}

/// `n(n − m)`.
pub fn rocco_bound(n: usize, m: usize) -> usize {
    n * (n - m)
}

impl InvariantReport {
    fn inconsistent(&self, what: &str) -> Result<()> {
        Err(Error::Inconsistency(format!(
            "report invariant violated: {what}"
        )))
    }

    /// Checks the additive relations between the fields and recomputes both
    /// bounds from `n` and `m`.
    pub fn check_invariants(&self) -> Result<()> {
        if self.dim_tensor_square != self.dim_exterior_square + self.dim_square_submodule {
            return self.inconsistent("dim L⊗L = dim L∧L + dim L□L");
        }
        if self.dim_exterior_square != self.dim_multiplier + self.m {
            return self.inconsistent("dim L∧L = dim M(L) + m");
        }
        if self.bound_value != developed_bound(self.n, self.m) {
            return self.inconsistent("bound_value");
        }
        if self.rocco_value != rocco_bound(self.n, self.m) {
            return self.inconsistent("rocco_value");
        }
        Ok(())
    }
}

/// Computes all invariants of a nilpotent algebra, building `L ⊗ L` and
/// checking it against `dim Γ(L/L²) + dim M(L) + m` and the homological
/// multiplier. Any disagreement is an [`Error::Inconsistency`].
pub fn analyze(l: &LieAlgebra) -> Result<InvariantReport> {
    l.require_nilpotent()?;
    let n = l.dim();
    let m = l.derived_subalgebra().dim();
    let dim_center = l.center().dim();
    let nilpotency_class = l.nilpotency_class()?;
    let schur = SchurData::compute(l)?;
    let tensor = TensorSquare::build(l)?;

    let formula = gamma_dim(n - m) + schur.dim_multiplier + m;
    if tensor.quotient_dim() != formula {
        return Err(Error::Inconsistency(format!(
            "{}: constructed dim L⊗L = {} but dim Γ(L/L²) + dim M(L) + m = {formula}",
            l.name(),
            tensor.quotient_dim()
        )));
    }
    if tensor.schur_via_exterior() != schur.dim_multiplier {
        return Err(Error::Inconsistency(format!(
            "{}: multiplier via exterior square = {} but via homology = {}",
            l.name(),
            tensor.schur_via_exterior(),
            schur.dim_multiplier
        )));
    }
    if tensor.square_submodule().dim() != gamma_dim(n - m) {
        return Err(Error::Inconsistency(format!(
            "{}: dim L□L = {} but dim Γ(L/L²) = {}",
            l.name(),
            tensor.square_submodule().dim(),
            gamma_dim(n - m)
        )));
    }

    let dim_tensor_square = tensor.quotient_dim();
    let bound_value = developed_bound(n, m);
    let report = InvariantReport {
        n,
        m,
        dim_center,
        nilpotency_class,
        dim_multiplier: schur.dim_multiplier,
        t_value: schur.t_value,
        dim_tensor_square,
        dim_exterior_square: tensor.exterior_dim(),
        dim_square_submodule: tensor.square_submodule().dim(),
        bound_value,
        rocco_value: rocco_bound(n, m),
        bound_satisfied: m == 0 || dim_tensor_square <= bound_value,
        equality_case: m >= 1 && dim_tensor_square == bound_value,
        classification: Classification::from_t(n, schur.t_value)?.to_string(),
    };
    report.check_invariants()?;
    Ok(report)
}

fn require_non_abelian(l: &LieAlgebra) -> Result<()> {
    if l.is_abelian() {
        return Err(Error::Precondition(format!(
            "{} is abelian; the bound is stated for non-abelian algebras",
            l.name()
        )));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundCheck {
    pub bound_value: usize,
    pub dim_tensor_square: usize,
    /// `bound_value − dim_tensor_square`; negative would be a counterexample.
    pub slack: i64,
    pub satisfied: bool,
}

/// `dim(L ⊗ L) <= (n − m)(n − 1) + 2` for non-abelian nilpotent `L`.
pub fn check_bound_mt(l: &LieAlgebra) -> Result<BoundCheck> {
    require_non_abelian(l)?;
    let r = analyze(l)?;
    let slack = r.bound_value as i64 - r.dim_tensor_square as i64;
    Ok(BoundCheck {
        bound_value: r.bound_value,
        dim_tensor_square: r.dim_tensor_square,
        slack,
        satisfied: slack >= 0,
    })
}

/// Structural test for `L ≅ H(1) ⊕ A(n − 3)` when `dim L² = 1`.
///
/// Splits `L = H ⊕ A` with `H` spanned by a complement of `Z(L)` together
/// with `L²`, and `A` a complement of `L²` in `Z(L)`; then asks whether `H`
/// is Heisenberg of dimension 3.
pub fn is_h1_plus_abelian(l: &LieAlgebra) -> Result<bool> {
    let n = l.dim();
    let derived = l.derived_subalgebra();
    if derived.dim() != 1 {
        return Ok(false);
    }
    let center = l.center();
    if !derived.space().is_subspace_of(center.space())? {
        return Ok(false);
    }
    let complement = center
        .space()
        .free_columns()
        .into_iter()
        .map(|c| unit_vector(n, c));
    let h = Subspace::span(n, complement)?.sum(derived.space())?;
    let h = l.subalgebra(&h)?;
    Ok(h.dim() == 3 && h.is_heisenberg())
}

/// Equality in the bound for `m = 1`, decided by dimensions and confirmed by
/// the structural test. Disagreement is an [`Error::Inconsistency`].
pub fn check_equality_case_m1(l: &LieAlgebra) -> Result<bool> {
    l.require_nilpotent()?;
    let m = l.derived_subalgebra().dim();
    if m != 1 {
        return Err(Error::Precondition(format!(
            "{} has dim L² = {m}, expected 1",
            l.name()
        )));
    }
    let r = analyze(l)?;
    let by_dimension = r.dim_tensor_square == r.bound_value;
    let by_structure = is_h1_plus_abelian(l)?;
    if by_dimension != by_structure {
        return Err(Error::Inconsistency(format!(
            "{}: equality by dimension is {by_dimension} but structural test says {by_structure}",
            l.name()
        )));
    }
    Ok(by_dimension)
}

/// Which side of the disjunction held.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RoccoBranch {
    /// `dim(L ⊗ L) <= (n − m)(n − 1) + 1`.
    BelowBound,
    /// `dim(L ⊗ L) = (n − m)(n − 1) + 2 < n(n − m)`.
    AtBoundStrict,
    /// Neither.
    Violated,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoccoComparison {
    pub developed_bound: usize,
    pub rocco_bound: usize,
    pub dim_tensor_square: usize,
    /// `developed_bound < rocco_bound`.
    pub strict: bool,
    pub branch: RoccoBranch,
}

impl RoccoComparison {
    pub fn holds(&self) -> bool {
        self.branch != RoccoBranch::Violated
    }
}

/// For `n >= 4`, `m >= 2`: either `dim(L ⊗ L) <= (n − m)(n − 1) + 1`, or
/// `dim(L ⊗ L) <= (n − m)(n − 1) + 2 < n(n − m)`. Evaluated literally.
pub fn compare_rocco(l: &LieAlgebra) -> Result<RoccoComparison> {
    require_non_abelian(l)?;
    let r = analyze(l)?;
    if r.n < 4 || r.m < 2 {
        return Err(Error::Precondition(format!(
            "{}: needs n >= 4 and m >= 2, got n = {}, m = {}",
            l.name(),
            r.n,
            r.m
        )));
    }
    let strict = r.bound_value < r.rocco_value;
    let branch = if r.dim_tensor_square < r.bound_value {
        RoccoBranch::BelowBound
    } else if r.dim_tensor_square == r.bound_value && strict {
        RoccoBranch::AtBoundStrict
    } else {
        RoccoBranch::Violated
    };
    Ok(RoccoComparison {
        developed_bound: r.bound_value,
        rocco_bound: r.rocco_value,
        dim_tensor_square: r.dim_tensor_square,
        strict,
        branch,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactSequenceCheck {
    pub dim_tensor_square: usize,
    /// `dim(L/N ⊗ L/N)`.
    pub quotient_term: usize,
    /// `dim N · dim(L/L²)`.
    pub cross_term: usize,
    pub holds: bool,
}

/// `dim(L ⊗ L) <= dim(L/N ⊗ L/N) + dim N · dim(L/L²)` for an ideal
/// `N ⊆ L² ∩ Z(L)`.
pub fn check_exact_sequence_i(l: &LieAlgebra, ideal: &Ideal<'_>) -> Result<ExactSequenceCheck> {
    let derived = l.derived_subalgebra();
    let allowed = derived.space().intersection(l.center().space())?;
    if !ideal.space().is_subspace_of(&allowed)? {
        return Err(Error::Precondition(
            "N must lie in the intersection of L² and Z(L)".into(),
        ));
    }
    let full = TensorSquare::build(l)?.quotient_dim();
    let quotient = l.quotient(ideal)?;
    let quotient_term = TensorSquare::build(&quotient)?.quotient_dim();
    let cross_term = ideal.dim() * (l.dim() - derived.dim());
    Ok(ExactSequenceCheck {
        dim_tensor_square: full,
        quotient_term,
        cross_term,
        holds: full <= quotient_term + cross_term,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectSumCheck {
    pub sum_dim: usize,
    pub left_dim: usize,
    pub right_dim: usize,
    /// `dim(M ⊗ N)` for one cross term.
    pub cross_dim: usize,
    pub holds: bool,
}

/// `dim((M ⊕ N) ⊗ (M ⊕ N)) = dim(M ⊗ M) + dim(N ⊗ N) + 2 dim(M ⊗ N)`.
pub fn check_direct_sum_law(a: &LieAlgebra, b: &LieAlgebra) -> Result<DirectSumCheck> {
    let sum_dim = TensorSquare::build(&a.direct_sum(b))?.quotient_dim();
    let left_dim = TensorSquare::build(a)?.quotient_dim();
    let right_dim = TensorSquare::build(b)?.quotient_dim();
    let cross_dim = trivial_action_tensor_dim(a, b);
    Ok(DirectSumCheck {
        sum_dim,
        left_dim,
        right_dim,
        cross_dim,
        holds: sum_dim == left_dim + right_dim + 2 * cross_dim,
    })
}

//! The built-in corpus of nilpotent algebras with expected invariants, and
//! the runner that checks every applicable statement against it.

use std::fmt;

use serde::Serialize;

use super::{
    analyze, check_bound_mt, check_equality_case_m1, check_exact_sequence_i, compare_rocco,
    InvariantReport,
};
use crate::error::{Error, Result};
use crate::liealg::{abelian, heisenberg, standard_filiform, Ideal, LieAlgebra, StructureConstant};

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Provenance {
    /// Stated in the literature for this algebra.
    Literature,
    /// Immediate from the definitions.
    Trivial,
    /// Computed by an independent route before the construction was trusted.
    Derived,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReportField {
    N,
    M,
    DimCenter,
    NilpotencyClass,
    DimMultiplier,
    TValue,
    DimTensorSquare,
    DimExteriorSquare,
    DimSquareSubmodule,
    BoundValue,
    RoccoValue,
    BoundSatisfied,
    EqualityCase,
    Classification,
}

impl fmt::Display for ReportField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("unit variant");
        write!(f, "{}", s.as_str().expect("string tag"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum ExpectedValue {
    Count(i64),
    Flag(bool),
    Label(String),
}

impl fmt::Display for ExpectedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExpectedValue::Count(n) => write!(f, "{n}"),
            ExpectedValue::Flag(b) => write!(f, "{b}"),
            ExpectedValue::Label(s) => write!(f, "{s}"),
        }
    }
}

impl InvariantReport {
    pub fn field(&self, field: ReportField) -> ExpectedValue {
        use ExpectedValue::*;
        use ReportField::*;
        match field {
            N => Count(self.n as i64),
            M => Count(self.m as i64),
            DimCenter => Count(self.dim_center as i64),
            NilpotencyClass => Count(self.nilpotency_class as i64),
            DimMultiplier => Count(self.dim_multiplier as i64),
            TValue => Count(self.t_value),
            DimTensorSquare => Count(self.dim_tensor_square as i64),
            DimExteriorSquare => Count(self.dim_exterior_square as i64),
            DimSquareSubmodule => Count(self.dim_square_submodule as i64),
            BoundValue => Count(self.bound_value as i64),
            RoccoValue => Count(self.rocco_value as i64),
            BoundSatisfied => Flag(self.bound_satisfied),
            EqualityCase => Flag(self.equality_case),
            ReportField::Classification => Label(self.classification.clone()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Expectation {
    pub field: ReportField,
    pub value: ExpectedValue,
    pub provenance: Provenance,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub algebra: LieAlgebra,
    pub expected: Vec<Expectation>,
}

impl CatalogEntry {
    pub fn new(algebra: LieAlgebra) -> Self {
        CatalogEntry {
            name: algebra.name().to_string(),
            algebra,
            expected: Vec::new(),
        }
    }

    fn expect(mut self, provenance: Provenance, field: ReportField, value: ExpectedValue) -> Self {
        self.expected.push(Expectation {
            field,
            value,
            provenance,
        });
        self
    }

    pub fn count(self, provenance: Provenance, field: ReportField, value: i64) -> Self {
        self.expect(provenance, field, ExpectedValue::Count(value))
    }

    pub fn flag(self, provenance: Provenance, field: ReportField, value: bool) -> Self {
        self.expect(provenance, field, ExpectedValue::Flag(value))
    }

    pub fn label(self, provenance: Provenance, field: ReportField, value: &str) -> Self {
        self.expect(provenance, field, ExpectedValue::Label(value.into()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub check: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogResult {
    pub name: String,
    pub report: Option<InvariantReport>,
    pub checks: Vec<CheckOutcome>,
    pub passed: bool,
}

/// Named constructors: `A(n)`, `H(m)`, `filiform<n>`, `class2_5`,
/// `free2step3`, and `+`-separated direct sums of these.
pub fn algebra_by_name(name: &str) -> Result<LieAlgebra> {
    let mut parts = name.split('+').map(str::trim);
    let first = single_algebra(parts.next().unwrap_or_default())?;
    parts.try_fold(first, |acc, p| Ok(acc.direct_sum(&single_algebra(p)?)))
}

/// The accepted name forms, for error messages.
pub fn builtin_names() -> &'static [&'static str] {
    &[
        "A(n)",
        "H(m)",
        "filiform<n>",
        "class2_5",
        "free2step3",
        "<name>+<name>  (direct sum, e.g. H(1)+A(2))",
    ]
}

fn single_algebra(term: &str) -> Result<LieAlgebra> {
    let unknown = || Error::InvalidArgument(format!("unknown algebra name {term:?}"));
    let arg = |prefix: &str| -> Option<usize> {
        term.strip_prefix(prefix)?.strip_suffix(')')?.parse().ok()
    };
    if let Some(n) = arg("A(") {
        return Ok(abelian(n));
    }
    if let Some(m) = arg("H(") {
        return heisenberg(m);
    }
    if let Some(n) = term.strip_prefix("filiform") {
        let n: usize = n.parse().map_err(|_| unknown())?;
        return standard_filiform(n);
    }
    match term {
        // [e1,e2] = e4, [e1,e3] = e5: dim 5, dim L² = 2, class 2.
        "class2_5" => LieAlgebra::from_structure_constants(
            "class2_5",
            5,
            [
                StructureConstant::new(1, 2, 4, 1),
                StructureConstant::new(1, 3, 5, 1),
            ],
        ),
        // Free 2-step nilpotent on three generators: dim 6, dim L² = 3.
        "free2step3" => LieAlgebra::from_structure_constants(
            "free2step3",
            6,
            [
                StructureConstant::new(1, 2, 4, 1),
                StructureConstant::new(1, 3, 5, 1),
                StructureConstant::new(2, 3, 6, 1),
            ],
        ),
        _ => Err(unknown()),
    }
}

fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

/// The shipped corpus: `A(1..6)`, `H(1..3)`, `H(1)+A(1..3)`, the standard
/// filiform algebras of dimension 4 and 5, `class2_5` and `free2step3`.
pub fn default_catalog() -> Vec<CatalogEntry> {
    use Provenance::*;
    use ReportField::*;
    let named = |s: &str| CatalogEntry::new(algebra_by_name(s).expect("catalog names are valid"));
    let mut out = Vec::new();

    for n in 1..=6i64 {
        out.push(
            named(&format!("A({n})"))
                .count(Trivial, N, n)
                .count(Trivial, M, 0)
                .count(Trivial, DimCenter, n)
                .count(Trivial, NilpotencyClass, 1)
                .count(Literature, TValue, 0)
                .count(Literature, DimMultiplier, binom2(n))
                .count(Literature, DimTensorSquare, n * n)
                .count(Trivial, DimSquareSubmodule, n * (n + 1) / 2)
                .count(Trivial, DimExteriorSquare, binom2(n))
                .label(Literature, Classification, &format!("A({n})")),
        );
    }

    for m in 1..=3i64 {
        let n = 2 * m + 1;
        let multiplier = if m == 1 { 2 } else { 2 * m * m - m - 1 };
        let mut e = named(&format!("H({m})"))
            .count(Trivial, N, n)
            .count(Literature, M, 1)
            .count(Literature, DimCenter, 1)
            .count(Literature, NilpotencyClass, 2)
            .count(Literature, DimMultiplier, multiplier)
            .count(Literature, TValue, binom2(n) - multiplier)
            .count(
                Literature,
                DimTensorSquare,
                if m == 1 { 6 } else { 4 * m * m },
            )
            .count(Literature, DimSquareSubmodule, m * (2 * m + 1))
            .count(Derived, DimExteriorSquare, multiplier + 1)
            .count(Trivial, BoundValue, (n - 1) * (n - 1) + 2)
            .count(Trivial, RoccoValue, n * (n - 1))
            .flag(Literature, BoundSatisfied, true)
            .flag(Literature, EqualityCase, m == 1);
        if m == 1 {
            e = e.label(Literature, Classification, "H(1)");
        }
        out.push(e);
    }

    for k in 1..=3i64 {
        let n = 3 + k;
        let t = 1 + k;
        let mut e = named(&format!("H(1)+A({k})"))
            .count(Trivial, N, n)
            .count(Trivial, M, 1)
            .count(Trivial, DimCenter, 1 + k)
            .count(Trivial, NilpotencyClass, 2)
            .count(Literature, DimTensorSquare, (n - 1) * (n - 1) + 2)
            .count(Trivial, BoundValue, (n - 1) * (n - 1) + 2)
            .flag(Literature, EqualityCase, true)
            .count(Literature, DimSquareSubmodule, (n - 1) * n / 2);
        e = match k {
            1 => e
                .count(Literature, TValue, t)
                .count(Literature, DimMultiplier, binom2(n) - t)
                .label(Literature, Classification, "H(1)⊕A(1)"),
            2 => e
                .count(Literature, TValue, t)
                .count(Literature, DimMultiplier, binom2(n) - t)
                .label(Literature, Classification, "H(1)⊕A(2)"),
            _ => e
                .count(Derived, TValue, t)
                .count(Derived, DimMultiplier, binom2(n) - t)
                .label(Derived, Classification, "unclassified(4)"),
        };
        out.push(e);
    }

    // Values below were computed by an independent rank oracle (homology
    // and the relation construction over exact rationals) and frozen here.
    out.push(
        named("filiform4")
            .count(Trivial, N, 4)
            .count(Derived, M, 2)
            .count(Derived, DimCenter, 1)
            .count(Derived, NilpotencyClass, 3)
            .count(Derived, DimMultiplier, 2)
            .count(Derived, TValue, 4)
            .count(Derived, DimTensorSquare, 7)
            .count(Derived, DimSquareSubmodule, 3)
            .count(Derived, DimExteriorSquare, 4)
            .count(Trivial, BoundValue, 8)
            .count(Trivial, RoccoValue, 8),
    );
    out.push(
        named("filiform5")
            .count(Trivial, N, 5)
            .count(Derived, M, 3)
            .count(Derived, DimCenter, 1)
            .count(Derived, NilpotencyClass, 4)
            .count(Derived, DimMultiplier, 3)
            .count(Derived, TValue, 7)
            .count(Derived, DimTensorSquare, 9)
            .count(Derived, DimSquareSubmodule, 3)
            .count(Derived, DimExteriorSquare, 6)
            .count(Trivial, BoundValue, 10)
            .count(Trivial, RoccoValue, 10),
    );
    out.push(
        named("class2_5")
            .count(Trivial, N, 5)
            .count(Derived, M, 2)
            .count(Derived, DimCenter, 2)
            .count(Derived, NilpotencyClass, 2)
            .count(Derived, DimMultiplier, 6)
            .count(Derived, TValue, 4)
            .count(Derived, DimTensorSquare, 14)
            .count(Derived, DimSquareSubmodule, 6)
            .count(Derived, DimExteriorSquare, 8)
            .count(Trivial, BoundValue, 14)
            .count(Trivial, RoccoValue, 15),
    );
    out.push(
        named("free2step3")
            .count(Trivial, N, 6)
            .count(Derived, M, 3)
            .count(Derived, DimCenter, 3)
            .count(Derived, NilpotencyClass, 2)
            .count(Derived, DimMultiplier, 8)
            .count(Derived, TValue, 7)
            .count(Derived, DimTensorSquare, 17)
            .count(Derived, DimSquareSubmodule, 6)
            .count(Derived, DimExteriorSquare, 11)
            .count(Trivial, BoundValue, 17)
            .count(Trivial, RoccoValue, 18),
    );
    out
}

fn outcome(check: impl Into<String>, passed: bool, detail: impl Into<String>) -> CheckOutcome {
    CheckOutcome {
        check: check.into(),
        passed,
        detail: detail.into(),
    }
}

fn err_outcome(check: &str, e: &Error) -> CheckOutcome {
    outcome(check, false, e.to_string())
}

/// Runs every applicable check on one entry. Failures are recorded, never raised.
pub fn check_entry(entry: &CatalogEntry) -> CatalogResult {
    let l = &entry.algebra;
    let mut checks = Vec::new();

    if !l.is_nilpotent() {
        checks.push(outcome(
            "nilpotent",
            false,
            "lower central series does not reach zero",
        ));
        return CatalogResult {
            name: entry.name.clone(),
            report: None,
            checks,
            passed: false,
        };
    }
    checks.push(outcome("nilpotent", true, ""));

    let report = match analyze(l) {
        Ok(r) => {
            checks.push(outcome(
                "construction_matches_formula",
                true,
                format!("dim L⊗L = {}", r.dim_tensor_square),
            ));
            r
        }
        Err(e) => {
            checks.push(err_outcome("construction_matches_formula", &e));
            return CatalogResult {
                name: entry.name.clone(),
                report: None,
                checks,
                passed: false,
            };
        }
    };

    for exp in &entry.expected {
        let got = report.field(exp.field);
        checks.push(outcome(
            format!("expected {} ({:?})", exp.field, exp.provenance),
            got == exp.value,
            format!("expected {}, got {got}", exp.value),
        ));
    }

    checks.push(outcome(
        "t_nonnegative",
        report.t_value >= 0,
        format!("t = {}", report.t_value),
    ));

    if report.m >= 1 {
        checks.push(match check_bound_mt(l) {
            Ok(b) => outcome("main_bound", b.satisfied, format!("slack {}", b.slack)),
            Err(e) => err_outcome("main_bound", &e),
        });

        let derived = l.derived_subalgebra();
        let central = derived
            .space()
            .intersection(l.center().space())
            .and_then(|s| Ideal::new(l, s));
        checks.push(match central.and_then(|n| check_exact_sequence_i(l, &n)) {
            Ok(c) => outcome(
                "exact_sequence_i",
                c.holds,
                format!(
                    "{} <= {} + {}",
                    c.dim_tensor_square, c.quotient_term, c.cross_term
                ),
            ),
            Err(e) => err_outcome("exact_sequence_i", &e),
        });
    }

    if report.m == 1 {
        checks.push(match check_equality_case_m1(l) {
            Ok(eq) => outcome(
                "equality_case_m1",
                eq == report.equality_case,
                format!("equality {eq}, dimension and structure agree"),
            ),
            Err(e) => err_outcome("equality_case_m1", &e),
        });
    }

    if report.n >= 4 && report.m >= 2 {
        checks.push(match compare_rocco(l) {
            Ok(c) => outcome("rocco_disjunction", c.holds(), format!("{:?}", c.branch)),
            Err(e) => err_outcome("rocco_disjunction", &e),
        });
        if report.n - report.m > 2 {
            checks.push(outcome(
                "developed_below_rocco",
                report.bound_value < report.rocco_value,
                format!("{} < {}", report.bound_value, report.rocco_value),
            ));
        }
    }

    let passed = checks.iter().all(|c| c.passed);
    CatalogResult {
        name: entry.name.clone(),
        report: Some(report),
        checks,
        passed,
    }
}

/// Checks every entry, one thread per entry, and returns results sorted by name.
pub fn run_catalog(entries: &[CatalogEntry]) -> Vec<CatalogResult> {
    let mut results: Vec<CatalogResult> = std::thread::scope(|s| {
        let handles: Vec<_> = entries
            .iter()
            .map(|e| s.spawn(move || check_entry(e)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("catalog worker panicked"))
            .collect()
    });
    results.sort_by(|a, b| a.name.cmp(&b.name));
    results
}

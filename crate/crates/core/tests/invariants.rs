use lie_tensor::homology::schur_multiplier_dim;
use lie_tensor::liealg::{abelian, heisenberg, Ideal, LieAlgebra};
use lie_tensor::tensor::{tensor_square_dim_formula, trivial_action_tensor_dim, TensorSquare};
use lie_tensor::verify::{algebra_by_name, analyze, check_direct_sum_law, default_catalog};

fn catalog() -> Vec<LieAlgebra> {
    default_catalog().into_iter().map(|e| e.algebra).collect()
}

#[test]
fn exterior_route_matches_homology_on_catalog() {
    for l in catalog() {
        let t = TensorSquare::build(&l).unwrap();
        assert_eq!(
            t.schur_via_exterior(),
            schur_multiplier_dim(&l).unwrap(),
            "{}",
            l.name()
        );
        assert_eq!(
            t.quotient_dim(),
            tensor_square_dim_formula(&l).unwrap(),
            "{}",
            l.name()
        );
    }
}

#[test]
fn reports_are_internally_consistent() {
    for l in catalog() {
        let r = analyze(&l).unwrap();
        r.check_invariants().unwrap();
        assert_eq!(
            r.dim_tensor_square,
            r.dim_exterior_square + r.dim_square_submodule,
            "{}",
            l.name()
        );
    }
}

#[test]
fn abelian_tensor_square_is_the_ordinary_one() {
    for n in 0..=5 {
        let t = TensorSquare::build(&abelian(n)).unwrap();
        assert_eq!(t.quotient_dim(), n * n);
        assert!(t.is_abelian());
    }
}

#[test]
fn direct_sum_law_beyond_the_minimal_pool() {
    let h1 = heisenberg(1).unwrap();
    let pairs = [
        (h1.clone(), h1.clone()),
        (heisenberg(2).unwrap(), abelian(1)),
        (algebra_by_name("filiform4").unwrap(), abelian(1)),
    ];
    for (a, b) in pairs {
        let c = check_direct_sum_law(&a, &b).unwrap();
        assert!(c.holds, "{} ⊕ {}: {c:?}", a.name(), b.name());
        assert_eq!(c.cross_dim, trivial_action_tensor_dim(&a, &b));
    }
}

#[test]
fn tensor_square_shrinks_under_quotients() {
    for l in catalog() {
        let whole = TensorSquare::build(&l).unwrap().quotient_dim();
        let ideals: Vec<Ideal<'_>> = l
            .lower_central_series()
            .into_iter()
            .chain([l.center()])
            .collect();
        for n in ideals {
            let q = l.quotient(&n).unwrap();
            let smaller = TensorSquare::build(&q).unwrap().quotient_dim();
            assert!(
                smaller <= whole,
                "{} / dim {}: {smaller} > {whole}",
                l.name(),
                n.dim()
            );
        }
    }
}

#[test]
fn non_nilpotent_input_is_rejected() {
    use lie_tensor::liealg::StructureConstant as S;
    // The 2-dimensional non-abelian algebra [e1, e2] = e2.
    let l = LieAlgebra::from_structure_constants("r2", 2, [S::new(1, 2, 2, 1)]).unwrap();
    assert!(!l.is_nilpotent());
    assert!(TensorSquare::build(&l).is_err());
    assert!(analyze(&l).is_err());
}

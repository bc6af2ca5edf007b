// Check dim(L⊗L) <= (n−m)(n−1)+2, its equality case for dim L² = 1, and the
// comparison with the bound n(n−m).

use lie_tensor::liealg::{heisenberg, standard_filiform};
use lie_tensor::verify::{algebra_by_name, check_bound_mt, check_equality_case_m1, compare_rocco};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for name in ["H(1)", "H(1)+A(2)", "H(2)", "class2_5", "free2step3"] {
        let l = algebra_by_name(name)?;
        let b = check_bound_mt(&l)?;
        println!(
            "{name:<11} dim L⊗L = {:>2}  bound = {:>2}  slack = {}",
            b.dim_tensor_square, b.bound_value, b.slack
        );
        assert!(b.satisfied);
    }

    let h2 = heisenberg(2)?;
    println!(
        "H(2) is H(1)⊕A(2) up to isomorphism: {}",
        check_equality_case_m1(&h2)?
    );

    for l in [
        standard_filiform(4)?,
        standard_filiform(5)?,
        algebra_by_name("free2step3")?,
    ] {
        let c = compare_rocco(&l)?;
        println!(
            "{:<11} {} vs {}  strict = {}  {:?}",
            l.name(),
            c.developed_bound,
            c.rocco_bound,
            c.strict,
            c.branch
        );
        assert!(c.holds());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}

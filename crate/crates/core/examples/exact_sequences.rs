// Check the exact-sequence inequality for a central ideal and the
// direct-sum law with its trivial-action cross term.

use lie_tensor::liealg::{abelian, heisenberg, standard_filiform, Ideal};
use lie_tensor::linalg::{unit_vector, Subspace};
use lie_tensor::verify::{check_direct_sum_law, check_exact_sequence_i};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let f = standard_filiform(4)?;
    let n = Ideal::new(&f, Subspace::span(4, [unit_vector(4, 3)])?)?;
    let c = check_exact_sequence_i(&f, &n)?;
    println!(
        "{}: dim L⊗L = {} <= {} + {}",
        f.name(),
        c.dim_tensor_square,
        c.quotient_term,
        c.cross_term
    );
    assert!(c.holds);

    let h1 = heisenberg(1)?;
    let a2 = abelian(2);
    let d = check_direct_sum_law(&h1, &a2)?;
    println!(
        "{} ⊕ {}: {} = {} + {} + 2·{}",
        h1.name(),
        a2.name(),
        d.sum_dim,
        d.left_dim,
        d.right_dim,
        d.cross_dim
    );
    assert!(d.holds);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}

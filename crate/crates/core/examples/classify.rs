// Classify nilpotent algebras with small t(L) = n(n−1)/2 − dim M(L).

use lie_tensor::homology::{classify_by_t, t_invariant};
use lie_tensor::liealg::{abelian, heisenberg, standard_filiform, LieAlgebra};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let h1 = heisenberg(1)?;
    let algebras: Vec<LieAlgebra> = vec![
        abelian(4),
        h1.clone(),
        h1.direct_sum(&abelian(1)),
        h1.direct_sum(&abelian(2)),
        standard_filiform(4)?,
        heisenberg(2)?,
    ];
    for l in &algebras {
        println!(
            "{:<12} t = {:<3} {}",
            l.name(),
            t_invariant(l)?,
            classify_by_t(l)?
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}

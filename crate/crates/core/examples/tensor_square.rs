// Build the non-abelian tensor square of the Heisenberg algebra H(1) and
// inspect its quotient basis, commutator map and bracket.

use lie_tensor::liealg::heisenberg;
use lie_tensor::linalg::unit_vector;
use lie_tensor::tensor::TensorSquare;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let h1 = heisenberg(1)?;
    let t = TensorSquare::build(&h1)?;
    let n = h1.dim();

    println!(
        "L = {} (dim {n}), ambient dim {}",
        h1.name(),
        t.ambient_dim()
    );
    println!("relations: dim {}", t.relations().dim());
    println!("dim L⊗L = {}", t.quotient_dim());

    let labels: Vec<String> = t
        .quotient_basis()
        .iter()
        .map(|&c| format!("e{}⊗e{}", c / n + 1, c % n + 1))
        .collect();
    println!("quotient basis: {}", labels.join(", "));

    // The class of e1⊗e2 and its image [e1, e2] = e3 under the commutator map.
    let x = unit_vector(n, 0);
    let y = unit_vector(n, 1);
    let class = t.class_of(&x, &y)?;
    let image = t.kappa().mul_vec(&class)?;
    println!("κ(e1⊗e2) = {image:?}");
    assert_eq!(image, unit_vector(n, 2));

    println!("bracket is zero: {}", t.is_abelian());
    println!(
        "dim L□L = {}, dim L∧L = {}",
        t.square_submodule().dim(),
        t.exterior_dim()
    );
    assert_eq!((t.quotient_dim(), t.exterior_dim()), (6, 3));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}

// Exact rational echelon forms, kernels and subspace arithmetic.

use lie_tensor::linalg::{kernel_basis, vector_from_i64, Matrix, Scalar, Subspace};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let m = Matrix::from_i64_rows(&[&[1, 2], &[3, 4]]);
    println!("rref([[1,2],[3,4]]) = {:?}", m.rref());

    let third: Scalar = "1/3".parse()?;
    let v = vec![third.clone(), Scalar::from_int(2), Scalar::zero()];
    let a = Subspace::span(3, [v, vector_from_i64(&[0, 0, 1])])?;
    let b = Subspace::span(
        3,
        [vector_from_i64(&[1, 6, 5]), vector_from_i64(&[0, 1, 0])],
    )?;
    let sum = a.sum(&b)?;
    let meet = a.intersection(&b)?;
    println!(
        "dim a = {}, dim b = {}, dim(a+b) = {}, dim(a∩b) = {}",
        a.dim(),
        b.dim(),
        sum.dim(),
        meet.dim()
    );
    assert_eq!(a.dim() + b.dim(), sum.dim() + meet.dim());

    let k = kernel_basis(&Matrix::from_i64_rows(&[&[1, 1, 0]]));
    println!("kernel of [1 1 0] has dim {}", k.dim());
    for row in k.basis_vectors() {
        let shown: Vec<String> = row.iter().map(ToString::to_string).collect();
        println!("  ({})", shown.join(", "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}

// Compute the Schur multiplier of the Heisenberg algebras two ways: from
// Chevalley–Eilenberg homology and from the exterior square.

use lie_tensor::homology::SchurData;
use lie_tensor::liealg::heisenberg;
use lie_tensor::tensor::TensorSquare;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    println!(
        "{:<6} {:>10} {:>10} {:>6}",
        "L", "homology", "exterior", "t(L)"
    );
    for m in 1..=3 {
        let l = heisenberg(m)?;
        let schur = SchurData::compute(&l)?;
        let exterior = TensorSquare::build(&l)?.schur_via_exterior();
        println!(
            "{:<6} {:>10} {:>10} {:>6}",
            l.name(),
            schur.dim_multiplier,
            exterior,
            schur.t_value
        );
        assert_eq!(schur.dim_multiplier, exterior);
        let expected = if m == 1 { 2 } else { 2 * m * m - m - 1 };
        assert_eq!(schur.dim_multiplier, expected);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}

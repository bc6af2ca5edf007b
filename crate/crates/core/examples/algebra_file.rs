// Define an algebra by structure constants, write it as an algebra file,
// read it back and analyze it.

use lie_tensor::cli::{parse_algebra_str, render_report_text, AlgebraFile};
use lie_tensor::liealg::{LieAlgebra, StructureConstant};
use lie_tensor::verify::analyze;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // [e1, e2] = e4, [e1, e3] = e5.
    let l = LieAlgebra::from_structure_constants(
        "class2_5",
        5,
        [
            StructureConstant::new(1, 2, 4, 1),
            StructureConstant::new(1, 3, 5, 1),
        ],
    )?;
    let json = AlgebraFile::from_algebra(&l).to_json();
    print!("{json}");

    let back = parse_algebra_str(&json)?;
    assert_eq!(back, l);

    let report = analyze(&back)?;
    print!("{}", render_report_text(back.name(), &report));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}

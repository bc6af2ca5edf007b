// Run the built-in catalog and print a summary per entry.

use lie_tensor::verify::{default_catalog, run_catalog};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let results = run_catalog(&default_catalog());
    for r in &results {
        let dims = r
            .report
            .as_ref()
            .map(|rep| {
                format!(
                    "n = {}, m = {}, dim L⊗L = {}",
                    rep.n, rep.m, rep.dim_tensor_square
                )
            })
            .unwrap_or_default();
        println!(
            "{} {:<11} {dims}",
            if r.passed { "ok  " } else { "FAIL" },
            r.name
        );
    }
    if results.iter().all(|r| r.passed) {
        Ok(())
    } else {
        Err("catalog has failing entries".into())
    }
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}

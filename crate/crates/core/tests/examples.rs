mod tensor_square_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/tensor_square.rs"
    ));
}

#[test]
fn tensor_square_example_runs() {
    tensor_square_example::run_example().expect("tensor_square example should run");
}

mod schur_multiplier_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/schur_multiplier.rs"
    ));
}

#[test]
fn schur_multiplier_example_runs() {
    schur_multiplier_example::run_example().expect("schur_multiplier example should run");
}

mod classify_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/classify.rs"));
}

#[test]
fn classify_example_runs() {
    classify_example::run_example().expect("classify example should run");
}

mod bound_check_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/bound_check.rs"
    ));
}

#[test]
fn bound_check_example_runs() {
    bound_check_example::run_example().expect("bound_check example should run");
}

mod exact_sequences_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/exact_sequences.rs"
    ));
}

#[test]
fn exact_sequences_example_runs() {
    exact_sequences_example::run_example().expect("exact_sequences example should run");
}

mod catalog_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/catalog.rs"));
}

#[test]
fn catalog_example_runs() {
    catalog_example::run_example().expect("catalog example should run");
}

mod algebra_file_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/algebra_file.rs"
    ));
}

#[test]
fn algebra_file_example_runs() {
    algebra_file_example::run_example().expect("algebra_file example should run");
}

mod exact_linear_algebra_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/exact_linear_algebra.rs"
    ));
}

#[test]
fn exact_linear_algebra_example_runs() {
    exact_linear_algebra_example::run_example().expect("exact_linear_algebra example should run");
}

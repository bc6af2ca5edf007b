//! Non-abelian tensor squares of finite-dimensional nilpotent Lie algebras.
//!
//! Lie algebras are given by rational structure constants. From them the
//! crate builds `L ⊗ L` explicitly as a quotient of the standard tensor
//! space, reads off the square submodule and the exterior square, computes
//! the Schur multiplier through Chevalley–Eilenberg homology, and checks the
//! bound `dim(L ⊗ L) <= (n - m)(n - 1) + 2` where `m = dim L²`.
//!
//! All arithmetic is exact.
//!
//! ```
//! use lie_tensor::{liealg, tensor::TensorSquare};
//!
//! let h1 = liealg::heisenberg(1).unwrap();
//! let t = TensorSquare::build(&h1).unwrap();
//! assert_eq!(t.quotient_dim(), 6);
//! assert_eq!(t.exterior_dim(), 3);
//! ```

pub mod cli;
pub mod error;
pub mod homology;
pub mod liealg;
pub mod linalg;
pub mod tensor;
pub mod verify;

pub use error::{Error, Result};
pub use homology::{Classification, SchurData};
pub use liealg::{Ideal, LieAlgebra};
pub use linalg::{Matrix, Scalar, Subspace, Vector};
pub use tensor::TensorSquare;
pub use verify::{analyze, InvariantReport};

//! Exact scalars, vectors, matrices, tensors and elimination.

pub mod field;
pub mod linalg;
pub mod matrix;
pub mod tensor;
pub mod vector;

pub use field::{Field, Scalar};
pub use linalg::{echelon, kernel_basis, rank, solve_linear, Echelon, Quotient};
pub use matrix::Matrix;
pub use tensor::Tensor;

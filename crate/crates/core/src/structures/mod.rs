//! Algebras, coalgebras, bialgebras and Hopf algebras given by structure
//! constants.

mod algebra;
mod coalgebra;
mod hopf;

pub use algebra::{check_algebra, Algebra};
pub use coalgebra::{check_coalgebra, hit_left, hit_right, Coalgebra};
pub use hopf::{
    antipode_inverse, check_bialgebra, check_hopf, convolution, convolution_unit, solve_antipode,
    Bialgebra, HopfAlgebra,
};

pub(crate) use algebra::{default_basis, tensor_names};

//! Exact integer linear algebra.
//!
//! Everything here is computed over arbitrary-precision integers; there is
//! no floating point and no modular shortcut. The Smith normal form is the
//! workhorse: invariant factors, integer kernels, diophantine systems and
//! unimodular inverses are all derived from it.

mod matrix;
mod snf;
mod solve;

pub use matrix::IntMatrix;
pub use snf::{determinant, invert_unimodular, smith_normal_form, SmithDecomposition};
pub use solve::{
    integer_kernel_basis, lattice_column_basis, solve_integer_system, LinearSolveResult,
};

pub(crate) use snf::snf_with_inverse;

use num_bigint::BigInt;
use num_traits::Zero;

use super::matrix::IntMatrix;
use super::snf::snf_with_inverse;

/// Outcome of solving `A x = b` over the integers.
///
/// `particular` is present exactly when `b` lies in the column lattice of
/// `A`; every solution is `particular` plus an integer combination of
/// `homogeneous_basis`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSolveResult {
    pub particular: Option<Vec<BigInt>>,
    pub homogeneous_basis: Vec<Vec<BigInt>>,
}

/// A basis of the saturated lattice `{ x : A x = 0 }`.
///
/// With `U A V = D`, the solutions are spanned by the columns of `V` past
/// the rank of `D`.
pub fn integer_kernel_basis(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    let snf = snf_with_inverse(a);
    let n = a.rows().min(a.cols());
    let rank = (0..n).filter(|&i| !snf.d[(i, i)].is_zero()).count();
    (rank..a.cols()).map(|j| snf.v.col(j)).collect()
}

/// Solves `A x = b` exactly. Unsolvability is reported through an absent
/// particular solution, never as an error.
pub fn solve_integer_system(a: &IntMatrix, b: &[BigInt]) -> LinearSolveResult {
    assert_eq!(a.rows(), b.len(), "solve: right-hand side has wrong length");
    let snf = snf_with_inverse(a);
    let n = a.rows().min(a.cols());
    let rank = (0..n).filter(|&i| !snf.d[(i, i)].is_zero()).count();

    let y = snf.u.apply(b);
    let mut coords = vec![BigInt::zero(); a.cols()];
    let mut solvable = true;
    for i in 0..a.rows() {
        if i < rank {
            let d = &snf.d[(i, i)];
            if (&y[i] % d).is_zero() {
                coords[i] = &y[i] / d;
            } else {
                solvable = false;
                break;
            }
        } else if !y[i].is_zero() {
            solvable = false;
            break;
        }
    }

    let particular = if solvable {
        Some(snf.v.apply(&coords))
    } else {
        None
    };
    let homogeneous_basis = (rank..a.cols()).map(|j| snf.v.col(j)).collect();
    LinearSolveResult {
        particular,
        homogeneous_basis,
    }
}

/// A basis (as matrix columns) of the lattice spanned by the columns of `g`.
///
/// With `U g V = D`, the column lattice equals the span of
/// `d_i * (U^-1 e_i)` over the nonzero diagonal entries.
pub fn lattice_column_basis(g: &IntMatrix) -> IntMatrix {
    let snf = snf_with_inverse(g);
    let n = g.rows().min(g.cols());
    let rank = (0..n).filter(|&i| !snf.d[(i, i)].is_zero()).count();
    IntMatrix::from_fn(g.rows(), rank, |i, j| &snf.u_inv[(i, j)] * &snf.d[(j, j)])
}

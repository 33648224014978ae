use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

/// Unimodular factorization `U * A * V = D` with `D` in Smith normal form.
///
/// The diagonal of `D` is nonnegative, each entry divides the next, and
/// zeros trail. `U` and `V` have determinant `±1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        let n = self.d.rows().min(self.d.cols());
        (0..n).filter(|&i| !self.d[(i, i)].is_zero()).count()
    }

    /// The diagonal, padded with zeros up to `min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        let n = self.d.rows().min(self.d.cols());
        (0..n).map(|i| self.d[(i, i)].clone()).collect()
    }
}

/// Same factorization plus the inverse of `U`, accumulated during the
/// elimination so that presentations can change basis without re-solving.
pub(crate) struct SnfWithInverse {
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

struct Worker {
    d: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
}

impl Worker {
    fn new(a: &IntMatrix) -> Self {
        Worker {
            d: a.clone(),
            u: IntMatrix::identity(a.rows()),
            u_inv: IntMatrix::identity(a.rows()),
            v: IntMatrix::identity(a.cols()),
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        self.d.swap_rows(a, b);
        self.u.swap_rows(a, b);
        self.u_inv.swap_cols(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.d.swap_cols(a, b);
        self.v.swap_cols(a, b);
    }

    /// row_i += q * row_k, mirrored on U (and inverted on U^-1).
    fn row_add(&mut self, i: usize, k: usize, q: &BigInt) {
        self.d.row_add(i, k, q);
        self.u.row_add(i, k, q);
        let neg = -q.clone();
        self.u_inv.col_add(k, i, &neg);
    }

    /// col_j += q * col_k, mirrored on V.
    fn col_add(&mut self, j: usize, k: usize, q: &BigInt) {
        self.d.col_add(j, k, q);
        self.v.col_add(j, k, q);
    }

    fn negate_row(&mut self, i: usize) {
        self.d.negate_row(i);
        self.u.negate_row(i);
        self.u_inv.negate_col(i);
    }

    /// Smallest nonzero entry by absolute value in the trailing submatrix,
    /// ties broken by lowest (row, col).
    fn find_pivot(&self, k: usize) -> Option<(usize, usize)> {
        let mut best: Option<(BigInt, usize, usize)> = None;
        for i in k..self.d.rows() {
            for j in k..self.d.cols() {
                let e = &self.d[(i, j)];
                if e.is_zero() {
                    continue;
                }
                let a = e.abs();
                match &best {
                    Some((b, _, _)) if *b <= a => {}
                    _ => best = Some((a, i, j)),
                }
            }
        }
        best.map(|(_, i, j)| (i, j))
    }

    /// Clears row k and column k beyond the pivot. Returns false when the
    /// trailing submatrix is entirely zero.
    fn reduce_at(&mut self, k: usize) -> bool {
        loop {
            let Some((pi, pj)) = self.find_pivot(k) else {
                return false;
            };
            self.swap_rows(k, pi);
            self.swap_cols(k, pj);

            let mut clean = true;
            for i in k + 1..self.d.rows() {
                if self.d[(i, k)].is_zero() {
                    continue;
                }
                let q = -(&self.d[(i, k)] / &self.d[(k, k)]);
                if !q.is_zero() {
                    self.row_add(i, k, &q);
                }
                if !self.d[(i, k)].is_zero() {
                    clean = false;
                }
            }
            for j in k + 1..self.d.cols() {
                if self.d[(k, j)].is_zero() {
                    continue;
                }
                let q = -(&self.d[(k, j)] / &self.d[(k, k)]);
                if !q.is_zero() {
                    self.col_add(j, k, &q);
                }
                if !self.d[(k, j)].is_zero() {
                    clean = false;
                }
            }
            if clean {
                return true;
            }
            // Remainders are strictly smaller than the pivot, so the next
            // sweep picks a smaller one; this terminates.
        }
    }

    fn run(mut self) -> SnfWithInverse {
        let n = self.d.rows().min(self.d.cols());
        let mut k = 0;
        while k < n {
            if !self.reduce_at(k) {
                break;
            }
            k += 1;
        }

        // Repair the divisibility chain: pull the offender into the earlier
        // column and re-eliminate, which replaces the earlier pivot by a gcd.
        loop {
            let mut violated = None;
            'scan: for i in 0..n {
                if self.d[(i, i)].is_zero() {
                    break;
                }
                for j in i + 1..n {
                    if self.d[(j, j)].is_zero() {
                        break;
                    }
                    if !(&self.d[(j, j)] % &self.d[(i, i)]).is_zero() {
                        violated = Some((i, j));
                        break 'scan;
                    }
                }
            }
            let Some((i, j)) = violated else { break };
            self.col_add(i, j, &BigInt::one());
            let mut k = i;
            while k < n {
                if !self.reduce_at(k) {
                    break;
                }
                k += 1;
            }
        }

        for i in 0..n {
            if self.d[(i, i)].is_negative() {
                self.negate_row(i);
            }
        }

        SnfWithInverse {
            u: self.u,
            u_inv: self.u_inv,
            d: self.d,
            v: self.v,
        }
    }
}

pub(crate) fn snf_with_inverse(a: &IntMatrix) -> SnfWithInverse {
    let out = Worker::new(a).run();
    debug_assert_eq!(out.u.matmul(a).matmul(&out.v), out.d);
    debug_assert!(out.u.matmul(&out.u_inv).is_identity());
    out
}

/// Smith normal form of `a`.
///
/// Deterministic: the pivot is always the smallest nonzero entry by absolute
/// value, ties broken by lowest (row, col) index, so identical inputs yield
/// identical decompositions.
pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let out = snf_with_inverse(a);
    SmithDecomposition {
        u: out.u,
        d: out.d,
        v: out.v,
    }
}

/// Determinant by fraction-free (Bareiss) elimination. Panics if `a` is not
/// square.
pub fn determinant(a: &IntMatrix) -> BigInt {
    assert_eq!(a.rows(), a.cols(), "determinant of a non-square matrix");
    let n = a.rows();
    if n == 0 {
        return BigInt::one();
    }
    let mut m = a.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[(k, k)].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[(i, k)].is_zero()) else {
                return BigInt::zero();
            };
            m.swap_rows(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[(k, k)] * &m[(i, j)] - &m[(i, k)] * &m[(k, j)];
                m[(i, j)] = num / &prev;
            }
        }
        for i in k + 1..n {
            m[(i, k)] = BigInt::zero();
        }
        prev = m[(k, k)].clone();
    }
    sign * m[(n - 1, n - 1)].clone()
}

/// Exact inverse of a unimodular matrix, or `None` if `a` is not square
/// with determinant `±1`.
pub fn invert_unimodular(a: &IntMatrix) -> Option<IntMatrix> {
    if a.rows() != a.cols() {
        return None;
    }
    let snf = snf_with_inverse(a);
    if !snf.d.is_identity() {
        return None;
    }
    // U a V = I  =>  a^-1 = V U
    Some(snf.v.matmul(&snf.u))
}

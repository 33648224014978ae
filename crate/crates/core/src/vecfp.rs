//! Finite-dimensional vector spaces over a prime field, as a second
//! category instance.
//!
//! Arithmetic is word-sized modular arithmetic; kernels and cokernels come
//! from Gaussian elimination with a deterministic leftmost-pivot rule, so
//! canonical bases are reproducible.

use crate::abcat::{AbelianCategory, CokernelData, DirectSumData, KernelData};
use crate::error::{Error, Result};

/// `F_p^dim`. Dimension zero is the zero object.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FpSpace {
    pub prime: u64,
    pub dim: usize,
}

impl std::fmt::Debug for FpSpace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "F{}^{}", self.prime, self.dim)
    }
}

/// A linear map, entries reduced into `[0, p)`, stored row-major
/// (`dst.dim` rows by `src.dim` columns).
#[derive(Clone, PartialEq, Eq)]
pub struct FpMap {
    src: FpSpace,
    dst: FpSpace,
    entries: Vec<u64>,
}

impl std::fmt::Debug for FpMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}->{:?} {:?}", self.src, self.dst, self.entries)
    }
}

impl FpMap {
    pub fn new(src: FpSpace, dst: FpSpace, entries: Vec<u64>) -> Result<Self> {
        if src.prime != dst.prime {
            return Err(Error::ObjectMismatch(
                "map between different primes".to_string(),
            ));
        }
        if entries.len() != src.dim * dst.dim {
            return Err(Error::DimensionMismatch(format!(
                "{:?} -> {:?} needs {} entries, got {}",
                src,
                dst,
                src.dim * dst.dim,
                entries.len()
            )));
        }
        let p = src.prime;
        Ok(FpMap {
            src,
            dst,
            entries: entries.into_iter().map(|e| e % p).collect(),
        })
    }

    pub fn from_rows(src: FpSpace, dst: FpSpace, rows: &[Vec<u64>]) -> Result<Self> {
        let flat: Vec<u64> = rows.iter().flatten().copied().collect();
        if rows.len() != dst.dim || rows.iter().any(|r| r.len() != src.dim) {
            return Err(Error::DimensionMismatch(format!(
                "{:?} -> {:?}: matrix must be {}x{}",
                src, dst, dst.dim, src.dim
            )));
        }
        FpMap::new(src, dst, flat)
    }

    pub fn zero(src: FpSpace, dst: FpSpace) -> Self {
        FpMap {
            entries: vec![0; src.dim * dst.dim],
            src,
            dst,
        }
    }

    pub fn identity(a: &FpSpace) -> Self {
        let mut m = FpMap::zero(*a, *a);
        for i in 0..a.dim {
            m.entries[i * a.dim + i] = 1;
        }
        m
    }

    pub fn src(&self) -> &FpSpace {
        &self.src
    }

    pub fn dst(&self) -> &FpSpace {
        &self.dst
    }

    fn at(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.src.dim + j]
    }

    pub fn entry(&self, row: usize, col: usize) -> u64 {
        self.at(row, col)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    /// Apply to a column vector over F_p.
    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.src.dim);
        let p = self.src.prime;
        (0..self.dst.dim)
            .map(|i| {
                let mut acc: u64 = 0;
                for (j, x) in v.iter().enumerate() {
                    acc = (acc + mulmod(self.at(i, j), x % p, p)) % p;
                }
                acc
            })
            .collect()
    }
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p.
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, valid for all u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        r += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..r - 1 {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn powmod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Row-reduced echelon form with leftmost pivots; returns the reduced
/// matrix (as rows) and the pivot column per pivot row.
#[allow(clippy::needless_range_loop)]
fn rref(rows: &mut [Vec<u64>], p: u64) -> Vec<usize> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(pivot_row) = (row..nrows).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(row, pivot_row);
        let inv = inv_mod(rows[row][col], p);
        for c in col..ncols {
            rows[row][c] = mulmod(rows[row][c], inv, p);
        }
        for r in 0..nrows {
            if r != row && rows[r][col] != 0 {
                let factor = rows[r][col];
                for c in col..ncols {
                    let sub = mulmod(factor, rows[row][c], p);
                    rows[r][c] = (rows[r][c] + p - sub) % p;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == nrows {
            break;
        }
    }
    pivots
}

fn matrix_rows(f: &FpMap) -> Vec<Vec<u64>> {
    (0..f.dst.dim)
        .map(|i| (0..f.src.dim).map(|j| f.at(i, j)).collect())
        .collect()
}

/// Null-space basis: one vector per free column, with 1 in the free slot
/// and the negated reduced coefficients in the pivot slots.
fn kernel_basis(f: &FpMap) -> Vec<Vec<u64>> {
    let p = f.src.prime;
    let mut rows = matrix_rows(f);
    let pivots = rref(&mut rows, p);
    let mut basis = Vec::new();
    for free in 0..f.src.dim {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![0u64; f.src.dim];
        v[free] = 1;
        for (prow, &pcol) in pivots.iter().enumerate() {
            let c = rows[prow][free];
            if c != 0 {
                v[pcol] = p - c;
            }
        }
        basis.push(v);
    }
    basis
}

/// The category of finite-dimensional vector spaces over `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VecFp {
    prime: u64,
}

impl VecFp {
    pub fn new(prime: u64) -> Result<Self> {
        if !is_prime(prime) {
            return Err(Error::InvalidInput(format!("{prime} is not prime")));
        }
        Ok(VecFp { prime })
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn space(&self, dim: usize) -> FpSpace {
        FpSpace {
            prime: self.prime,
            dim,
        }
    }

    fn check(&self, f: &FpMap) {
        assert_eq!(f.src.prime, self.prime, "map from a different prime field");
    }

    /// Solve `f x = b`; `None` when inconsistent.
    fn solve(&self, f: &FpMap, b: &[u64]) -> Option<Vec<u64>> {
        let p = self.prime;
        let mut rows: Vec<Vec<u64>> = matrix_rows(f)
            .into_iter()
            .zip(b)
            .map(|(mut row, &rhs)| {
                row.push(rhs % p);
                row
            })
            .collect();
        let pivots = rref(&mut rows, p);
        let ncols = f.src.dim;
        // A pivot in the augmented column means inconsistency.
        if pivots.contains(&ncols) {
            return None;
        }
        let mut x = vec![0u64; ncols];
        for (prow, &pcol) in pivots.iter().enumerate() {
            x[pcol] = rows[prow][ncols];
        }
        Some(x)
    }
}

impl AbelianCategory for VecFp {
    type Object = FpSpace;
    type Morphism = FpMap;

    fn source(&self, f: &FpMap) -> FpSpace {
        f.src
    }

    fn target(&self, f: &FpMap) -> FpSpace {
        f.dst
    }

    fn object_equal(&self, a: &FpSpace, b: &FpSpace) -> bool {
        a == b
    }

    fn zero_object(&self) -> FpSpace {
        self.space(0)
    }

    fn is_zero_object(&self, a: &FpSpace) -> bool {
        a.dim == 0
    }

    fn identity(&self, a: &FpSpace) -> FpMap {
        FpMap::identity(a)
    }

    fn zero_morphism(&self, a: &FpSpace, b: &FpSpace) -> FpMap {
        FpMap::zero(*a, *b)
    }

    fn compose(&self, g: &FpMap, f: &FpMap) -> Result<FpMap> {
        self.check(f);
        if f.dst != g.src {
            return Err(Error::NotComposable(format!("{:?} then {:?}", f.dst, g.src)));
        }
        let p = self.prime;
        let mut entries = vec![0u64; f.src.dim * g.dst.dim];
        for i in 0..g.dst.dim {
            for j in 0..f.src.dim {
                let mut acc = 0u64;
                for k in 0..f.dst.dim {
                    acc = (acc + mulmod(g.at(i, k), f.at(k, j), p)) % p;
                }
                entries[i * f.src.dim + j] = acc;
            }
        }
        Ok(FpMap {
            src: f.src,
            dst: g.dst,
            entries,
        })
    }

    fn add(&self, f: &FpMap, g: &FpMap) -> Result<FpMap> {
        self.check(f);
        if f.src != g.src || f.dst != g.dst {
            return Err(Error::ObjectMismatch(
                "addition needs parallel maps".to_string(),
            ));
        }
        let p = self.prime;
        let entries = f
            .entries
            .iter()
            .zip(&g.entries)
            .map(|(&a, &b)| (a + b) % p)
            .collect();
        Ok(FpMap {
            src: f.src,
            dst: f.dst,
            entries,
        })
    }

    fn negate(&self, f: &FpMap) -> FpMap {
        let p = self.prime;
        FpMap {
            src: f.src,
            dst: f.dst,
            entries: f.entries.iter().map(|&a| (p - a) % p).collect(),
        }
    }

    fn morphism_equal(&self, f: &FpMap, g: &FpMap) -> bool {
        f == g
    }

    fn direct_sum(&self, a: &FpSpace, b: &FpSpace) -> DirectSumData<FpSpace, FpMap> {
        let sum = self.space(a.dim + b.dim);
        let block = |rows: usize, cols: usize, f: &dyn Fn(usize, usize) -> bool| -> Vec<u64> {
            let mut out = vec![0u64; rows * cols];
            for i in 0..rows {
                for j in 0..cols {
                    if f(i, j) {
                        out[i * cols + j] = 1;
                    }
                }
            }
            out
        };
        DirectSumData {
            inj_a: FpMap {
                src: *a,
                dst: sum,
                entries: block(sum.dim, a.dim, &|i, j| i == j),
            },
            inj_b: FpMap {
                src: *b,
                dst: sum,
                entries: block(sum.dim, b.dim, &|i, j| i == j + a.dim),
            },
            proj_a: FpMap {
                src: sum,
                dst: *a,
                entries: block(a.dim, sum.dim, &|i, j| i == j),
            },
            proj_b: FpMap {
                src: sum,
                dst: *b,
                entries: block(b.dim, sum.dim, &|i, j| i + a.dim == j),
            },
            object: sum,
        }
    }

    fn kernel(&self, f: &FpMap) -> KernelData<FpSpace, FpMap> {
        self.check(f);
        let basis = kernel_basis(f);
        let object = self.space(basis.len());
        let mut entries = vec![0u64; f.src.dim * basis.len()];
        for (col, v) in basis.iter().enumerate() {
            for (row, &x) in v.iter().enumerate() {
                entries[row * basis.len() + col] = x;
            }
        }
        KernelData {
            object,
            inclusion: FpMap {
                src: object,
                dst: f.src,
                entries,
            },
        }
    }

    fn cokernel(&self, f: &FpMap) -> CokernelData<FpSpace, FpMap> {
        self.check(f);
        // Rows spanning the left null space of f, i.e. the kernel of f^T.
        let transpose = FpMap {
            src: f.dst,
            dst: f.src,
            entries: {
                let mut t = vec![0u64; f.src.dim * f.dst.dim];
                for i in 0..f.dst.dim {
                    for j in 0..f.src.dim {
                        t[j * f.dst.dim + i] = f.at(i, j);
                    }
                }
                t
            },
        };
        let rows = kernel_basis(&transpose);
        let object = self.space(rows.len());
        let mut entries = vec![0u64; f.dst.dim * rows.len()];
        for (i, r) in rows.iter().enumerate() {
            for (j, &x) in r.iter().enumerate() {
                entries[i * f.dst.dim + j] = x;
            }
        }
        CokernelData {
            object,
            projection: FpMap {
                src: f.dst,
                dst: object,
                entries,
            },
        }
    }

    fn factor_through_kernel(&self, f: &FpMap, g: &FpMap) -> Result<FpMap> {
        let fg = self.compose(f, g)?;
        if !fg.is_zero() {
            return Err(Error::Precondition(
                "factor_through_kernel: f . g != 0".into(),
            ));
        }
        self.factor_through_mono(&self.kernel(f).inclusion, g)
    }

    fn factor_through_cokernel(&self, f: &FpMap, g: &FpMap) -> Result<FpMap> {
        let gf = self.compose(g, f)?;
        if !gf.is_zero() {
            return Err(Error::Precondition(
                "factor_through_cokernel: g . f != 0".into(),
            ));
        }
        self.factor_through_epi(&self.cokernel(f).projection, g)
    }

    fn factor_through_mono(&self, m: &FpMap, g: &FpMap) -> Result<FpMap> {
        if m.dst != g.dst {
            return Err(Error::ObjectMismatch(
                "factor through mono: targets differ".to_string(),
            ));
        }
        let mut entries = vec![0u64; g.src.dim * m.src.dim];
        for col in 0..g.src.dim {
            let rhs: Vec<u64> = (0..g.dst.dim).map(|i| g.at(i, col)).collect();
            let Some(x) = self.solve(m, &rhs) else {
                return Err(Error::DoesNotFactor(format!(
                    "column {col} does not factor through the given mono"
                )));
            };
            for (row, &v) in x.iter().enumerate() {
                entries[row * g.src.dim + col] = v;
            }
        }
        let lift = FpMap {
            src: g.src,
            dst: m.src,
            entries,
        };
        let back = self.compose(m, &lift)?;
        if back != *g {
            return Err(Error::DoesNotFactor(
                "solution does not reproduce g".to_string(),
            ));
        }
        Ok(lift)
    }

    fn factor_through_epi(&self, e: &FpMap, g: &FpMap) -> Result<FpMap> {
        if e.src != g.src {
            return Err(Error::ObjectMismatch(
                "factor through epi: sources differ".to_string(),
            ));
        }
        // Solve h e = g, i.e. e^T h^T = g^T column by column.
        let et = FpMap {
            src: e.dst,
            dst: e.src,
            entries: {
                let mut t = vec![0u64; e.src.dim * e.dst.dim];
                for i in 0..e.dst.dim {
                    for j in 0..e.src.dim {
                        t[j * e.dst.dim + i] = e.at(i, j);
                    }
                }
                t
            },
        };
        let mut entries = vec![0u64; e.dst.dim * g.dst.dim];
        for row in 0..g.dst.dim {
            let rhs: Vec<u64> = (0..g.src.dim).map(|j| g.at(row, j)).collect();
            let Some(x) = self.solve(&et, &rhs) else {
                return Err(Error::DoesNotFactor(format!(
                    "row {row} does not factor through the given epi"
                )));
            };
            for (col, &v) in x.iter().enumerate() {
                entries[row * e.dst.dim + col] = v;
            }
        }
        let descent = FpMap {
            src: e.dst,
            dst: g.dst,
            entries,
        };
        let back = self.compose(&descent, e)?;
        if back != *g {
            return Err(Error::DoesNotFactor(
                "solution does not reproduce g".to_string(),
            ));
        }
        Ok(descent)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abcat::ops;

    fn cat() -> VecFp {
        VecFp::new(2).unwrap()
    }

    #[test]
    fn kernel_of_sum_functional() {
        let c = cat();
        let f = FpMap::from_rows(c.space(2), c.space(1), &[vec![1, 1]]).unwrap();
        let k = c.kernel(&f);
        assert_eq!(k.object.dim, 1);
        assert_eq!(k.inclusion.apply(&[1]), vec![1, 1]);
    }

    #[test]
    fn invertible_map_has_zero_kernel_and_cokernel() {
        let c = VecFp::new(5).unwrap();
        let f = FpMap::from_rows(c.space(2), c.space(2), &[vec![1, 2], vec![3, 2]]).unwrap();
        assert_eq!(c.kernel(&f).object.dim, 0);
        assert_eq!(c.cokernel(&f).object.dim, 0);
        let cls = ops::classify_morphism(&c, &f).unwrap();
        assert!(cls.iso);
        let inv = cls.inverse.unwrap();
        assert_eq!(c.compose(&f, &inv).unwrap(), FpMap::identity(&c.space(2)));
    }

    #[test]
    fn zero_map_kernel_is_identity_inclusion() {
        let c = cat();
        let f = FpMap::zero(c.space(2), c.space(1));
        let k = c.kernel(&f);
        assert_eq!(k.object.dim, 2);
        assert_eq!(k.inclusion, FpMap::identity(&c.space(2)));
    }

    #[test]
    fn cokernel_of_diagonal_embedding() {
        let c = cat();
        let f = FpMap::from_rows(c.space(1), c.space(2), &[vec![1], vec![1]]).unwrap();
        let coker = c.cokernel(&f);
        assert_eq!(coker.object.dim, 1);
        assert!(c.compose(&coker.projection, &f).unwrap().is_zero());
    }

    #[test]
    fn cokernel_edge_cases() {
        let c = cat();
        let epi = FpMap::from_rows(c.space(2), c.space(1), &[vec![1, 0]]).unwrap();
        assert_eq!(c.cokernel(&epi).object.dim, 0);

        let z = FpMap::zero(c.space(1), c.space(2));
        let coker = c.cokernel(&z);
        assert_eq!(coker.object.dim, 2);
        assert_eq!(coker.projection, FpMap::identity(&c.space(2)));
    }

    #[test]
    fn rank_nullity_on_a_sample() {
        let c = VecFp::new(3).unwrap();
        let f = FpMap::from_rows(c.space(3), c.space(2), &[vec![1, 2, 0], vec![2, 1, 0]]).unwrap();
        let k = c.kernel(&f);
        let img_dim = c.space(2).dim - c.cokernel(&f).object.dim;
        assert_eq!(k.object.dim + img_dim, 3);
    }

    #[test]
    fn primality_check() {
        assert!(is_prime(2) && is_prime(3) && is_prime(97) && is_prime(1_000_000_007));
        assert!(!is_prime(1) && !is_prime(91) && !is_prime(561));
        assert!(VecFp::new(4).is_err());
    }
}

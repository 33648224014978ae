
use num_integer::Integer;
use num_traits::Zero;

use super::object::FgGroup;
use crate::error::{Error, Result};
use crate::intlin::IntMatrix;

/// A homomorphism of finitely generated abelian groups.
///
/// The matrix has one column per source generator and one row per target
/// generator; entry `(j, i)` is the coefficient of target generator `j` in
/// the image of source generator `i`. Entries are kept reduced into
/// `[0, e_j)` whenever the target factor `e_j` is finite, so morphism
/// equality is plain structural equality.
///
/// Well-definedness on the presentation requires `M[j][i] * d_i = 0 mod e_j`
/// for all entries, where `mod 0` means equality in the integers.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupHom {
    src: FgGroup,
    dst: FgGroup,
    matrix: IntMatrix,
}

impl GroupHom {
    /// Validates and canonically reduces a candidate matrix; this is the
    /// only way to build a hom from raw data.
    pub fn new(src: FgGroup, dst: FgGroup, matrix: IntMatrix) -> Result<Self> {
        if matrix.rows() != dst.rank() || matrix.cols() != src.rank() {
            return Err(Error::DimensionMismatch(format!(
                "hom {:?} -> {:?} needs a {}x{} matrix, got {}x{}",
                src,
                dst,
                dst.rank(),
                src.rank(),
                matrix.rows(),
                matrix.cols()
            )));
        }
        validate(&src, &dst, &matrix)?;
        Ok(GroupHom {
            matrix: reduce(&dst, matrix),
            src,
            dst,
        })
    }

    /// `i64` convenience for tests and examples: rows of the matrix.
    pub fn from_rows(src: FgGroup, dst: FgGroup, rows: &[Vec<i64>]) -> Result<Self> {
        let m = if rows.is_empty() {
            IntMatrix::zero(dst.rank(), src.rank())
        } else {
            IntMatrix::from_rows(rows)
        };
        GroupHom::new(src, dst, m)
    }

    /// For matrices produced by internal constructions, which are well
    /// defined by derivation; still reduced, and checked in debug builds.
    pub(crate) fn new_unchecked(src: FgGroup, dst: FgGroup, matrix: IntMatrix) -> Self {
        debug_assert_eq!(matrix.rows(), dst.rank());
        debug_assert_eq!(matrix.cols(), src.rank());
        debug_assert!(validate(&src, &dst, &matrix).is_ok());
        GroupHom {
            matrix: reduce(&dst, matrix),
            src,
            dst,
        }
    }

    pub fn zero(src: FgGroup, dst: FgGroup) -> Self {
        let m = IntMatrix::zero(dst.rank(), src.rank());
        GroupHom {
            src,
            dst,
            matrix: m,
        }
    }

    pub fn identity(obj: &FgGroup) -> Self {
        GroupHom::new_unchecked(obj.clone(), obj.clone(), IntMatrix::identity(obj.rank()))
    }

    pub fn src(&self) -> &FgGroup {
        &self.src
    }

    pub fn dst(&self) -> &FgGroup {
        &self.dst
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }
}

impl std::fmt::Debug for GroupHom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{:?}->{:?} {:?}",
            self.src, self.dst, self.matrix
        )
    }
}

fn validate(src: &FgGroup, dst: &FgGroup, matrix: &IntMatrix) -> Result<()> {
    for (i, d) in src.factors().iter().enumerate() {
        for (j, e) in dst.factors().iter().enumerate() {
            let prod = &matrix[(j, i)] * d;
            let ok = if e.is_zero() {
                prod.is_zero()
            } else {
                (&prod % e).is_zero()
            };
            if !ok {
                return Err(Error::NotAHomomorphism {
                    row: j,
                    col: i,
                    detail: format!(
                        "{} * {} = {} is not 0 mod {}",
                        matrix[(j, i)],
                        d,
                        prod,
                        e
                    ),
                });
            }
        }
    }
    Ok(())
}

fn reduce(dst: &FgGroup, matrix: IntMatrix) -> IntMatrix {
    let mut m = matrix;
    for (j, e) in dst.factors().iter().enumerate() {
        if e.is_zero() {
            continue;
        }
        for i in 0..m.cols() {
            let r = m[(j, i)].mod_floor(e);
            m[(j, i)] = r;
        }
    }
    m
}

//! Presentation normalization: every construction in this instance is a
//! quotient `Z^n / R Z^s` for some relation matrix `R`, normalized through
//! the Smith decomposition of `R`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::hom::GroupHom;
use super::object::FgGroup;
use crate::abcat::{CokernelData, DirectSumData, KernelData};
use crate::error::{Error, Result};
use crate::intlin::{integer_kernel_basis, lattice_column_basis, solve_integer_system, IntMatrix};

/// A canonicalized quotient `Z^n / R Z^s`.
///
/// `to_canon` maps old coordinates to canonical generators (rows of `U` at
/// the non-unit diagonal positions); `from_canon` lifts each canonical
/// generator back to `Z^n` (the matching columns of `U^-1`).
pub(crate) struct Presentation {
    pub object: FgGroup,
    pub to_canon: IntMatrix,
    pub from_canon: IntMatrix,
}

pub(crate) fn present(generators: usize, relations: &IntMatrix) -> Presentation {
    assert_eq!(relations.rows(), generators);
    let snf = crate::intlin::snf_with_inverse(relations);
    let bound = generators.min(relations.cols());
    let effective: Vec<BigInt> = (0..generators)
        .map(|k| {
            if k < bound {
                snf.d[(k, k)].clone()
            } else {
                BigInt::zero()
            }
        })
        .collect();
    let keep: Vec<usize> = (0..generators)
        .filter(|&k| !effective[k].is_one())
        .collect();
    let object =
        FgGroup::from_canonical_unchecked(keep.iter().map(|&k| effective[k].clone()).collect());
    Presentation {
        object,
        to_canon: snf.u.select_rows(&keep),
        from_canon: snf.u_inv.select_cols(&keep),
    }
}

/// Relation matrix `[M | E]` whose column lattice presents the image of `f`
/// together with the relations of its target.
fn image_relations(f: &GroupHom) -> IntMatrix {
    f.matrix()
        .hstack(&IntMatrix::diagonal(f.dst().factors()))
}

pub(crate) fn kernel_data(f: &GroupHom) -> KernelData<FgGroup, GroupHom> {
    let m = f.src().rank();

    // Solutions of M x = 0 mod E, as the first block of the integer kernel
    // of [M | E].
    let solutions = integer_kernel_basis(&image_relations(f));
    let generators = IntMatrix::from_fn(m, solutions.len(), |i, j| solutions[j][i].clone());
    let basis = lattice_column_basis(&generators);

    // Express the source relations diag(d) in that basis; the kernel is the
    // preimage lattice modulo them.
    let columns: Vec<Vec<BigInt>> = (0..m)
        .map(|j| {
            let mut rhs = vec![BigInt::zero(); m];
            rhs[j] = f.src().factors()[j].clone();
            solve_integer_system(&basis, &rhs)
                .particular
                .expect("source relations lie in the preimage lattice")
        })
        .collect();
    let relations = IntMatrix::from_fn(basis.cols(), m, |i, j| columns[j][i].clone());
    let pres = present(basis.cols(), &relations);

    let inclusion = GroupHom::new_unchecked(
        pres.object.clone(),
        f.src().clone(),
        basis.matmul(&pres.from_canon),
    );
    KernelData {
        object: pres.object,
        inclusion,
    }
}

pub(crate) fn cokernel_data(f: &GroupHom) -> CokernelData<FgGroup, GroupHom> {
    let pres = present(f.dst().rank(), &image_relations(f));
    let projection = GroupHom::new_unchecked(f.dst().clone(), pres.object.clone(), pres.to_canon);
    CokernelData {
        object: pres.object,
        projection,
    }
}

pub(crate) fn direct_sum_data(a: &FgGroup, b: &FgGroup) -> DirectSumData<FgGroup, GroupHom> {
    let ra = a.rank();
    let rb = b.rank();
    let mut concat = a.factors().to_vec();
    concat.extend_from_slice(b.factors());
    let pres = present(ra + rb, &IntMatrix::diagonal(&concat));

    let first: Vec<usize> = (0..ra).collect();
    let second: Vec<usize> = (ra..ra + rb).collect();
    let object = pres.object;
    DirectSumData {
        inj_a: GroupHom::new_unchecked(a.clone(), object.clone(), pres.to_canon.select_cols(&first)),
        inj_b: GroupHom::new_unchecked(
            b.clone(),
            object.clone(),
            pres.to_canon.select_cols(&second),
        ),
        proj_a: GroupHom::new_unchecked(
            object.clone(),
            a.clone(),
            pres.from_canon.select_rows(&first),
        ),
        proj_b: GroupHom::new_unchecked(
            object.clone(),
            b.clone(),
            pres.from_canon.select_rows(&second),
        ),
        object,
    }
}

/// Solves `m . h = g` columnwise over the integers: each column of `g` must
/// be reachable from the columns of `m`'s matrix modulo the relations of
/// the shared target.
pub(crate) fn solve_through_mono(m: &GroupHom, g: &GroupHom) -> Result<GroupHom> {
    if m.dst() != g.dst() {
        return Err(Error::ObjectMismatch(
            "factor through mono: targets differ".to_string(),
        ));
    }
    let stacked = image_relations(m);
    let mut lift = IntMatrix::zero(m.src().rank(), g.src().rank());
    for col in 0..g.src().rank() {
        let rhs = g.matrix().col(col);
        let Some(solution) = solve_integer_system(&stacked, &rhs).particular else {
            return Err(Error::DoesNotFactor(format!(
                "column {col} does not factor through the given mono"
            )));
        };
        for i in 0..m.src().rank() {
            lift[(i, col)] = solution[i].clone();
        }
    }
    let hom = GroupHom::new(g.src().clone(), m.src().clone(), lift).map_err(|e| {
        Error::DoesNotFactor(format!("lift is not a homomorphism (is m monic?): {e}"))
    })?;
    let back = GroupHom::new_unchecked(
        g.src().clone(),
        g.dst().clone(),
        m.matrix().matmul(hom.matrix()),
    );
    if &back != g {
        return Err(Error::DoesNotFactor(
            "solution does not reproduce g".to_string(),
        ));
    }
    Ok(hom)
}

/// Solves `h . e = g` row by row. Row `k` of `h` must satisfy the
/// congruence `E^T x = g_k^T (mod t_k)` and be well defined on the source
/// presentation, so each entry is constrained to multiples of
/// `t_k / gcd(m_q, t_k)`; substituting `x = diag(step) z` folds both
/// conditions into one integer system.
pub(crate) fn solve_through_epi(e: &GroupHom, g: &GroupHom) -> Result<GroupHom> {
    use num_integer::Integer;

    if e.src() != g.src() {
        return Err(Error::ObjectMismatch(
            "factor through epi: sources differ".to_string(),
        ));
    }
    let q_rank = e.dst().rank();
    let b_rank = e.src().rank();
    let transposed = e.matrix().transpose();
    let mut desc = IntMatrix::zero(g.dst().rank(), q_rank);
    for row in 0..g.dst().rank() {
        let modulus = &g.dst().factors()[row];
        let steps: Vec<BigInt> = e
            .dst()
            .factors()
            .iter()
            .map(|m_q| {
                if modulus.is_zero() {
                    // Torsion cannot hit a Z row; free generators may.
                    if m_q.is_zero() {
                        BigInt::from(1)
                    } else {
                        BigInt::zero()
                    }
                } else {
                    modulus / m_q.gcd(modulus)
                }
            })
            .collect();
        let scaled = IntMatrix::from_fn(b_rank, q_rank, |i, j| &transposed[(i, j)] * &steps[j]);
        let aug = if modulus.is_zero() {
            scaled
        } else {
            scaled.hstack(&IntMatrix::from_fn(b_rank, b_rank, |i, j| {
                if i == j {
                    modulus.clone()
                } else {
                    BigInt::zero()
                }
            }))
        };
        let rhs: Vec<BigInt> = (0..b_rank).map(|j| g.matrix()[(row, j)].clone()).collect();
        let Some(solution) = solve_integer_system(&aug, &rhs).particular else {
            return Err(Error::DoesNotFactor(format!(
                "row {row} does not factor through the given epi"
            )));
        };
        for i in 0..q_rank {
            desc[(row, i)] = &solution[i] * &steps[i];
        }
    }
    let hom = GroupHom::new(e.dst().clone(), g.dst().clone(), desc).map_err(|err| {
        Error::DoesNotFactor(format!("descent is not a homomorphism (is e epic?): {err}"))
    })?;
    let back = GroupHom::new_unchecked(
        g.src().clone(),
        g.dst().clone(),
        hom.matrix().matmul(e.matrix()),
    );
    if &back != g {
        return Err(Error::DoesNotFactor(
            "solution does not reproduce g".to_string(),
        ));
    }
    Ok(hom)
}

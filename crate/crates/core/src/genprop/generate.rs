use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::{GenConfig, LadderScheme, Rng};
use crate::abcat::ops::{classify_morphism, image_factorization};
use crate::abcat::AbelianCategory;
use crate::diagram::{Mode, NineGrid, SesLadder};
use crate::fgab::{FgAb, FgGroup, GroupHom};
use crate::intlin::IntMatrix;

/// Rejection sampling bound before falling back to a canonical
/// construction; keeps generation total and reproducible.
const RETRY: usize = 64;

pub fn random_object(cfg: &GenConfig, rng: &mut Rng) -> FgGroup {
    let rank = rng.below_usize(cfg.max_rank + 1);
    let factors: Vec<BigInt> = (0..rank)
        .map(|_| BigInt::from(cfg.factor_pool[rng.below_usize(cfg.factor_pool.len())]))
        .collect();
    crate::fgab::normalize_object(&factors)
}

/// A uniformly sampled valid homomorphism: entry `(j, i)` ranges over the
/// multiples of `e_j / gcd(d_i, e_j)` in `[0, e_j)`, the full solution set
/// of the well-definedness congruence.
pub fn random_hom(rng: &mut Rng, a: &FgGroup, b: &FgGroup) -> GroupHom {
    let matrix = IntMatrix::from_fn(b.rank(), a.rank(), |j, i| {
        let d = &a.factors()[i];
        let e = &b.factors()[j];
        if e.is_zero() {
            if d.is_zero() {
                BigInt::from(rng.range_i64(-3, 3))
            } else {
                BigInt::zero()
            }
        } else {
            let step = e / d.gcd(e);
            let options = (e / &step).to_u64().unwrap_or(1024).max(1);
            step * BigInt::from(rng.below(options))
        }
    });
    GroupHom::new(a.clone(), b.clone(), matrix).expect("sampled entries satisfy the congruences")
}

/// Canonical split embedding `a -> b`, when each summand of `a` can be
/// matched injectively into a divisible summand of `b`.
fn canonical_embedding(a: &FgGroup, b: &FgGroup) -> Option<GroupHom> {
    let mut used = vec![false; b.rank()];
    let mut assignment = vec![usize::MAX; a.rank()];
    // Largest source factors first (zeros sort behind everything finite).
    let mut order: Vec<usize> = (0..a.rank()).collect();
    order.reverse();
    for i in order {
        let d = &a.factors()[i];
        let slot = (0..b.rank()).find(|&j| {
            if used[j] {
                return false;
            }
            let e = &b.factors()[j];
            if d.is_zero() {
                e.is_zero()
            } else {
                !e.is_zero() && (e % d).is_zero()
            }
        })?;
        used[slot] = true;
        assignment[i] = slot;
    }
    let matrix = IntMatrix::from_fn(b.rank(), a.rank(), |j, i| {
        if assignment[i] != j {
            return BigInt::zero();
        }
        let d = &a.factors()[i];
        let e = &b.factors()[j];
        if d.is_zero() {
            BigInt::from(1)
        } else {
            e / d
        }
    });
    Some(GroupHom::new(a.clone(), b.clone(), matrix).expect("embedding is well defined"))
}

/// Canonical split projection `a -> b`: each summand of `b` is reached from
/// a distinct summand of `a` that surjects onto it.
fn canonical_projection(a: &FgGroup, b: &FgGroup) -> Option<GroupHom> {
    let mut used = vec![false; a.rank()];
    let mut assignment = vec![usize::MAX; b.rank()];
    let mut order: Vec<usize> = (0..b.rank()).collect();
    order.reverse();
    for j in order {
        let e = &b.factors()[j];
        let slot = (0..a.rank()).find(|&i| {
            if used[i] {
                return false;
            }
            let d = &a.factors()[i];
            if e.is_zero() {
                d.is_zero()
            } else {
                d.is_zero() || (d % e).is_zero()
            }
        })?;
        used[slot] = true;
        assignment[j] = slot;
    }
    let matrix = IntMatrix::from_fn(b.rank(), a.rank(), |j, i| {
        if assignment[j] == i {
            BigInt::from(1)
        } else {
            BigInt::zero()
        }
    });
    Some(GroupHom::new(a.clone(), b.clone(), matrix).expect("projection is well defined"))
}

/// Random monomorphism `a -> b` by rejection, falling back to the canonical
/// split embedding; `None` when even the fallback does not exist.
pub fn random_monic(rng: &mut Rng, a: &FgGroup, b: &FgGroup) -> Option<GroupHom> {
    for _ in 0..RETRY {
        let h = random_hom(rng, a, b);
        if classify_morphism(&FgAb, &h).ok()?.monic {
            return Some(h);
        }
    }
    canonical_embedding(a, b)
}

/// Random epimorphism `a -> b`, dual to [`random_monic`].
pub fn random_epic(rng: &mut Rng, a: &FgGroup, b: &FgGroup) -> Option<GroupHom> {
    for _ in 0..RETRY {
        let h = random_hom(rng, a, b);
        if classify_morphism(&FgAb, &h).ok()?.epic {
            return Some(h);
        }
    }
    canonical_projection(a, b)
}

/// Random automorphism by rejection, identity as fallback.
pub fn random_automorphism(rng: &mut Rng, a: &FgGroup) -> GroupHom {
    for _ in 0..RETRY {
        let h = random_hom(rng, a, a);
        if let Ok(cls) = classify_morphism(&FgAb, &h) {
            if cls.iso {
                return h;
            }
        }
    }
    GroupHom::identity(a)
}

/// A short exact sequence `0 -> A -f-> B -g-> C -> 0`: draw `B`, take the
/// canonical epi of a random map out of `B` as `g`, and let `(A, f)` be its
/// kernel. Exact by construction and re-checked by every verifier.
pub fn random_ses(cfg: &GenConfig, rng: &mut Rng) -> (GroupHom, GroupHom) {
    let b = random_object(cfg, rng);
    let x = random_object(cfg, rng);
    let t = random_hom(rng, &b, &x);
    let g = image_factorization(&FgAb, &t)
        .expect("image factorization is total")
        .canonical_epi;
    let ker = FgAb.kernel(&g);
    (ker.inclusion, g)
}

/// Vertical `a -> a'` with the requested property, together with the target
/// (monic/iso) or source (epic) it was built against.
fn vertical_out(cfg: &GenConfig, rng: &mut Rng, a: &FgGroup, mode: Mode) -> (FgGroup, GroupHom) {
    match mode {
        Mode::Monic => {
            let extra = random_object(cfg, rng);
            let sum = FgAb.direct_sum(a, &extra);
            let twist = random_hom(rng, a, &extra);
            let alpha = FgAb
                .add(
                    &sum.inj_a,
                    &FgAb.compose(&sum.inj_b, &twist).expect("composable"),
                )
                .expect("parallel");
            (sum.object, alpha)
        }
        Mode::Iso => (a.clone(), random_automorphism(rng, a)),
        Mode::Epic => unreachable!("epic verticals are built from the target side"),
    }
}

/// Vertical `a -> a'` epic, drawing the source around a given target.
fn vertical_into(cfg: &GenConfig, rng: &mut Rng, target: &FgGroup) -> (FgGroup, GroupHom) {
    let extra = random_object(cfg, rng);
    let sum = FgAb.direct_sum(target, &extra);
    let twist = random_hom(rng, &extra, target);
    let alpha = FgAb
        .add(
            &sum.proj_a,
            &FgAb.compose(&twist, &sum.proj_b).expect("composable"),
        )
        .expect("parallel");
    (sum.object, alpha)
}

fn split_split_ladder(cfg: &GenConfig, rng: &mut Rng, mode: Mode) -> SesLadder<GroupHom> {
    // Draw outer verticals first; the epic mode derives sources from
    // targets, the others derive targets from sources.
    let (a, a_prime, alpha, c, c_prime, gamma) = match mode {
        Mode::Epic => {
            let a_prime = random_object(cfg, rng);
            let c_prime = random_object(cfg, rng);
            let (a, alpha) = vertical_into(cfg, rng, &a_prime);
            let (c, gamma) = vertical_into(cfg, rng, &c_prime);
            (a, a_prime, alpha, c, c_prime, gamma)
        }
        _ => {
            let a = random_object(cfg, rng);
            let c = random_object(cfg, rng);
            let (a_prime, alpha) = vertical_out(cfg, rng, &a, mode);
            let (c_prime, gamma) = vertical_out(cfg, rng, &c, mode);
            (a, a_prime, alpha, c, c_prime, gamma)
        }
    };

    let top = FgAb.direct_sum(&a, &c);
    let bottom = FgAb.direct_sum(&a_prime, &c_prime);
    let h = random_hom(rng, &c, &a_prime);

    // beta = inj_A' (alpha proj_A + h proj_C) + inj_C' (gamma proj_C)
    let upper = FgAb
        .add(
            &FgAb.compose(&alpha, &top.proj_a).unwrap(),
            &FgAb.compose(&h, &top.proj_b).unwrap(),
        )
        .unwrap();
    let beta = FgAb
        .add(
            &FgAb.compose(&bottom.inj_a, &upper).unwrap(),
            &FgAb
                .compose(
                    &bottom.inj_b,
                    &FgAb.compose(&gamma, &top.proj_b).unwrap(),
                )
                .unwrap(),
        )
        .unwrap();

    SesLadder {
        f: top.inj_a,
        g: top.proj_b,
        f_prime: bottom.inj_a,
        g_prime: bottom.proj_b,
        alpha,
        beta,
        gamma,
    }
}

fn epi_kernel_ladder(cfg: &GenConfig, rng: &mut Rng, mode: Mode) -> SesLadder<GroupHom> {
    if mode == Mode::Iso {
        return epi_kernel_iso_ladder(cfg, rng);
    }
    let (f, g) = random_ses(cfg, rng);
    let b = f.dst().clone();
    let c = g.dst().clone();

    let (c_prime, gamma) = match mode {
        Mode::Monic => vertical_out(cfg, rng, &c, Mode::Monic),
        Mode::Epic => {
            // gamma: C -> C' epic: the canonical epi onto the image of a
            // random map out of C. Total and already epic.
            let x = random_object(cfg, rng);
            let t = random_hom(rng, &c, &x);
            let img = image_factorization(&FgAb, &t).expect("image factorization is total");
            (img.image_object, img.canonical_epi)
        }
        Mode::Iso => unreachable!(),
    };

    // beta_1 : B -> A' with alpha = beta_1 . f of the right kind.
    let (a_prime, beta1) = 'search: {
        for _ in 0..RETRY {
            let candidate = random_object(cfg, rng);
            let b1 = random_hom(rng, &b, &candidate);
            let alpha = FgAb.compose(&b1, &f).unwrap();
            let cls = classify_morphism(&FgAb, &alpha).unwrap();
            let ok = match mode {
                Mode::Monic => cls.monic,
                Mode::Epic => cls.epic,
                Mode::Iso => cls.iso,
            };
            if ok {
                break 'search (candidate, b1);
            }
        }
        match mode {
            // alpha = id . f = f is monic.
            Mode::Monic => (b.clone(), GroupHom::identity(&b)),
            // Everything is epic onto the zero object.
            Mode::Epic => (FgGroup::zero(), GroupHom::zero(b.clone(), FgGroup::zero())),
            Mode::Iso => unreachable!(),
        }
    };

    assemble_epi_kernel(&f, &g, &a_prime, &c_prime, &beta1, &gamma)
}

/// Iso mode needs a retraction of `f`, which only split rows admit; build
/// the top row split and twist both ends by automorphisms.
fn epi_kernel_iso_ladder(cfg: &GenConfig, rng: &mut Rng) -> SesLadder<GroupHom> {
    let a0 = random_object(cfg, rng);
    let c0 = random_object(cfg, rng);
    let sum = FgAb.direct_sum(&a0, &c0);
    let g = sum.proj_b.clone();
    let ker = FgAb.kernel(&g);
    let f = ker.inclusion.clone();

    // t : A0 -> K with f . t = inj_A; then (t proj_A) . f = id_K.
    let t = FgAb
        .factor_through_kernel(&g, &sum.inj_a)
        .expect("inj_a is annihilated by proj_b");
    let u = random_automorphism(rng, &ker.object);
    let beta1 = FgAb
        .compose(&u, &FgAb.compose(&t, &sum.proj_a).unwrap())
        .unwrap();
    let gamma = random_automorphism(rng, &c0);

    assemble_epi_kernel(&f, &g, &ker.object, &c0, &beta1, &gamma)
}

fn assemble_epi_kernel(
    f: &GroupHom,
    g: &GroupHom,
    a_prime: &FgGroup,
    c_prime: &FgGroup,
    beta1: &GroupHom,
    gamma: &GroupHom,
) -> SesLadder<GroupHom> {
    let bottom = FgAb.direct_sum(a_prime, c_prime);
    let beta = FgAb
        .add(
            &FgAb.compose(&bottom.inj_a, beta1).unwrap(),
            &FgAb
                .compose(&bottom.inj_b, &FgAb.compose(gamma, g).unwrap())
                .unwrap(),
        )
        .unwrap();
    let alpha = FgAb.compose(beta1, f).unwrap();
    SesLadder {
        f: f.clone(),
        g: g.clone(),
        f_prime: bottom.inj_a,
        g_prime: bottom.proj_b,
        alpha,
        beta,
        gamma: gamma.clone(),
    }
}

/// Conjugates every object of the ladder by a random automorphism; all six
/// squares keep commuting and every verified property is preserved.
pub(crate) fn conjugate_ladder(rng: &mut Rng, l: &SesLadder<GroupHom>) -> SesLadder<GroupHom> {
    let twist = |rng: &mut Rng, obj: &FgGroup| {
        let u = random_automorphism(rng, obj);
        let u_inv = classify_morphism(&FgAb, &u)
            .expect("classification is total")
            .inverse
            .expect("automorphism has an inverse");
        (u, u_inv)
    };
    // Source-only objects need just the inverse, target-only just the
    // forward direction.
    let (_ua, ua_inv) = twist(rng, l.f.src());
    let (ub, ub_inv) = twist(rng, l.f.dst());
    let (uc, uc_inv) = twist(rng, l.g.dst());
    let (uap, uap_inv) = twist(rng, l.f_prime.src());
    let (ubp, ubp_inv) = twist(rng, l.f_prime.dst());
    let (ucp, _ucp_inv) = twist(rng, l.g_prime.dst());

    let conj = |m: &GroupHom, left: &GroupHom, right_inv: &GroupHom| {
        FgAb.compose(left, &FgAb.compose(m, right_inv).unwrap())
            .unwrap()
    };
    SesLadder {
        f: conj(&l.f, &ub, &ua_inv),
        g: conj(&l.g, &uc, &ub_inv),
        f_prime: conj(&l.f_prime, &ubp, &uap_inv),
        g_prime: conj(&l.g_prime, &ucp, &ubp_inv),
        alpha: conj(&l.alpha, &uap, &ua_inv),
        beta: conj(&l.beta, &ubp, &ub_inv),
        gamma: conj(&l.gamma, &ucp, &uc_inv),
    }
}

/// Generates one ladder according to the configured scheme.
pub fn gen_ladder(cfg: &GenConfig, mode: Mode, rng: &mut Rng) -> SesLadder<GroupHom> {
    match cfg.scheme {
        LadderScheme::SplitSplit => split_split_ladder(cfg, rng, mode),
        LadderScheme::EpiKernelTopSplitBottom => epi_kernel_ladder(cfg, rng, mode),
        LadderScheme::Conjugated => {
            let base = if rng.chance(1, 2) {
                split_split_ladder(cfg, rng, mode)
            } else {
                epi_kernel_ladder(cfg, rng, mode)
            };
            conjugate_ladder(rng, &base)
        }
    }
}

/// A nine-lemma grid: rows 1-2 from a monic split ladder (conjugated half
/// the time), row 3 and its maps induced on the column cokernels. Columns
/// are short exact by construction: a mono followed by its cokernel.
pub fn gen_nine_grid(cfg: &GenConfig, rng: &mut Rng) -> NineGrid<GroupHom> {
    let base = split_split_ladder(cfg, rng, Mode::Monic);
    let ladder = if rng.chance(1, 2) {
        conjugate_ladder(rng, &base)
    } else {
        base
    };

    let alpha2 = FgAb.cokernel(&ladder.alpha).projection;
    let beta2 = FgAb.cokernel(&ladder.beta).projection;
    let gamma2 = FgAb.cokernel(&ladder.gamma).projection;

    let f3 = FgAb
        .factor_through_cokernel(
            &ladder.alpha,
            &FgAb.compose(&beta2, &ladder.f_prime).unwrap(),
        )
        .expect("beta2 f2 kills alpha1 by commutativity");
    let g3 = FgAb
        .factor_through_cokernel(
            &ladder.beta,
            &FgAb.compose(&gamma2, &ladder.g_prime).unwrap(),
        )
        .expect("gamma2 g2 kills beta1 by commutativity");

    NineGrid {
        f1: ladder.f,
        g1: ladder.g,
        f2: ladder.f_prime,
        g2: ladder.g_prime,
        f3,
        g3,
        alpha1: ladder.alpha,
        alpha2,
        beta1: ladder.beta,
        beta2,
        gamma1: ladder.gamma,
        gamma2,
    }
}

//! Constructions derived from the contract alone.
//!
//! Nothing in this module inspects a concrete instance: every operation is
//! written against [`AbelianCategory`], so each works unchanged in `fgab`,
//! `vecfp` and the formal opposite of either.

use super::{
    AbelianCategory, ImageFactorization, MorphismClassification, PullbackData, PushoutData,
};
use crate::error::{Error, Result};

fn require_composable<C: AbelianCategory>(
    cat: &C,
    g: &C::Morphism,
    f: &C::Morphism,
    what: &str,
) -> Result<()> {
    if cat.object_equal(&cat.target(f), &cat.source(g)) {
        Ok(())
    } else {
        Err(Error::NotComposable(what.to_string()))
    }
}

/// Monic/epic/iso classification of `f`.
///
/// `f` is monic exactly when its kernel object is zero and epic exactly
/// when its cokernel object is zero. When both hold, a two-sided inverse is
/// assembled from the contract: factor `id` through the kernel of `cok f`
/// to get `h : B -> K`, pull the canonical image inclusion back through the
/// mono `f` to get `v : K -> A`, and return `v . h`.
pub fn classify_morphism<C: AbelianCategory>(
    cat: &C,
    f: &C::Morphism,
) -> Result<MorphismClassification<C::Morphism>> {
    let monic = cat.is_zero_object(&cat.kernel(f).object);
    let epic = cat.is_zero_object(&cat.cokernel(f).object);
    let iso = monic && epic;
    let inverse = if iso {
        let b = cat.target(f);
        let kernel_of_cok = cat.kernel(&cat.cokernel(f).projection);
        let h = cat.factor_through_kernel(&cat.cokernel(f).projection, &cat.identity(&b))?;
        let v = cat.factor_through_mono(f, &kernel_of_cok.inclusion)?;
        Some(cat.compose(&v, &h)?)
    } else {
        None
    };
    Ok(MorphismClassification {
        monic,
        epic,
        iso,
        inverse,
    })
}

/// Epi-mono factorization of `f` through its image, `ker(cok f)`, plus the
/// dual coimage data.
pub fn image_factorization<C: AbelianCategory>(
    cat: &C,
    f: &C::Morphism,
) -> Result<ImageFactorization<C::Object, C::Morphism>> {
    let cok = cat.cokernel(f);
    let img = cat.kernel(&cok.projection);
    let epi = cat.factor_through_kernel(&cok.projection, f)?;

    let ker = cat.kernel(f);
    let coim = cat.cokernel(&ker.inclusion);

    Ok(ImageFactorization {
        image_object: img.object,
        image_mono: img.inclusion,
        canonical_epi: epi,
        coimage_object: coim.object,
        coimage_epi: coim.projection,
    })
}

/// Given `f = h . g` with `h` monic, the unique `psi : I_f -> C` with
/// `h . psi = img f` (and hence `psi . canonical_epi = g`).
pub fn factor_through_image<C: AbelianCategory>(
    cat: &C,
    f: &C::Morphism,
    g: &C::Morphism,
    h: &C::Morphism,
) -> Result<C::Morphism> {
    require_composable(cat, h, g, "factor_through_image: h . g")?;
    if !classify_morphism(cat, h)?.monic {
        return Err(Error::Precondition(
            "factor_through_image: h is not monic".into(),
        ));
    }
    let hg = cat.compose(h, g)?;
    if !cat.morphism_equal(&hg, f) {
        return Err(Error::Precondition(
            "factor_through_image: h . g != f".into(),
        ));
    }
    let img = image_factorization(cat, f)?;
    let psi = cat.factor_through_mono(h, &img.image_mono)?;
    debug_assert!({
        let lhs = cat.compose(h, &psi)?;
        cat.morphism_equal(&lhs, &img.image_mono)
    });
    Ok(psi)
}

/// Pullback of `phi : A -> C` and `psi : B -> C`, constructed as the kernel
/// of `omega = phi . proj_a - psi . proj_b` on the direct sum.
pub fn pullback<C: AbelianCategory>(
    cat: &C,
    phi: &C::Morphism,
    psi: &C::Morphism,
) -> Result<PullbackData<C::Object, C::Morphism>> {
    if !cat.object_equal(&cat.target(phi), &cat.target(psi)) {
        return Err(Error::ObjectMismatch(
            "pullback: codomains differ".to_string(),
        ));
    }
    let a = cat.source(phi);
    let b = cat.source(psi);
    let sum = cat.direct_sum(&a, &b);
    let omega = cat.add(
        &cat.compose(phi, &sum.proj_a)?,
        &cat.negate(&cat.compose(psi, &sum.proj_b)?),
    )?;
    let ker = cat.kernel(&omega);
    let proj_a = cat.compose(&sum.proj_a, &ker.inclusion)?;
    let proj_b = cat.compose(&sum.proj_b, &ker.inclusion)?;
    Ok(PullbackData {
        object: ker.object,
        proj_a,
        proj_b,
        witness_omega: omega,
    })
}

/// The unique mediator `h : D -> P` with `proj_a . h = f` and
/// `proj_b . h = g`, for a commuting square `phi . f = psi . g`.
///
/// Commutation is not assumed: it is checked through the stored witness
/// (`omega . (inj_a f + inj_b g) = 0`), and violation is a precondition
/// error.
pub fn pullback_mediator<C: AbelianCategory>(
    cat: &C,
    pb: &PullbackData<C::Object, C::Morphism>,
    f: &C::Morphism,
    g: &C::Morphism,
) -> Result<C::Morphism> {
    let a = cat.target(&pb.proj_a);
    let b = cat.target(&pb.proj_b);
    if !cat.object_equal(&cat.source(f), &cat.source(g)) {
        return Err(Error::ObjectMismatch(
            "pullback_mediator: legs have different sources".to_string(),
        ));
    }
    let sum = cat.direct_sum(&a, &b);
    let into_sum = cat.add(&cat.compose(&sum.inj_a, f)?, &cat.compose(&sum.inj_b, g)?)?;
    let obstruction = cat.compose(&pb.witness_omega, &into_sum)?;
    if !cat.is_zero_morphism(&obstruction) {
        return Err(Error::Precondition(
            "pullback_mediator: square does not commute".into(),
        ));
    }
    let h = cat.factor_through_kernel(&pb.witness_omega, &into_sum)?;
    debug_assert!({
        let pa = cat.compose(&pb.proj_a, &h)?;
        let pb_ = cat.compose(&pb.proj_b, &h)?;
        cat.morphism_equal(&pa, f) && cat.morphism_equal(&pb_, g)
    });
    Ok(h)
}

/// Pushout of `phi' : C -> A` and `psi' : C -> B`, constructed as the
/// cokernel of `delta = inj_a . phi' - inj_b . psi'`.
pub fn pushout<C: AbelianCategory>(
    cat: &C,
    phi: &C::Morphism,
    psi: &C::Morphism,
) -> Result<PushoutData<C::Object, C::Morphism>> {
    if !cat.object_equal(&cat.source(phi), &cat.source(psi)) {
        return Err(Error::ObjectMismatch(
            "pushout: domains differ".to_string(),
        ));
    }
    let a = cat.target(phi);
    let b = cat.target(psi);
    let sum = cat.direct_sum(&a, &b);
    let delta = cat.add(
        &cat.compose(&sum.inj_a, phi)?,
        &cat.negate(&cat.compose(&sum.inj_b, psi)?),
    )?;
    let cok = cat.cokernel(&delta);
    let inj_a = cat.compose(&cok.projection, &sum.inj_a)?;
    let inj_b = cat.compose(&cok.projection, &sum.inj_b)?;
    Ok(PushoutData {
        object: cok.object,
        inj_a,
        inj_b,
        witness_delta: delta,
    })
}

/// The unique mediator `h : Po -> D` with `h . inj_a = f` and
/// `h . inj_b = g`, for a commuting cospan `f . phi' = g . psi'`.
pub fn pushout_mediator<C: AbelianCategory>(
    cat: &C,
    po: &PushoutData<C::Object, C::Morphism>,
    f: &C::Morphism,
    g: &C::Morphism,
) -> Result<C::Morphism> {
    let a = cat.source(&po.inj_a);
    let b = cat.source(&po.inj_b);
    if !cat.object_equal(&cat.target(f), &cat.target(g)) {
        return Err(Error::ObjectMismatch(
            "pushout_mediator: legs have different targets".to_string(),
        ));
    }
    let sum = cat.direct_sum(&a, &b);
    let from_sum = cat.add(&cat.compose(f, &sum.proj_a)?, &cat.compose(g, &sum.proj_b)?)?;
    let obstruction = cat.compose(&from_sum, &po.witness_delta)?;
    if !cat.is_zero_morphism(&obstruction) {
        return Err(Error::Precondition(
            "pushout_mediator: cospan does not commute".into(),
        ));
    }
    let h = cat.factor_through_cokernel(&po.witness_delta, &from_sum)?;
    debug_assert!({
        let ia = cat.compose(&h, &po.inj_a)?;
        let ib = cat.compose(&h, &po.inj_b)?;
        cat.morphism_equal(&ia, f) && cat.morphism_equal(&ib, g)
    });
    Ok(h)
}

/// Whether two monomorphisms into a common object carry the same subobject.
///
/// Monos are kernels of their cokernels, so `m` factors through `n` exactly
/// when `cok(n) . m = 0`; the subobjects agree when each annihilates the
/// other's cokernel.
pub fn subobjects_equal<C: AbelianCategory>(
    cat: &C,
    m: &C::Morphism,
    n: &C::Morphism,
) -> Result<bool> {
    if !cat.object_equal(&cat.target(m), &cat.target(n)) {
        return Err(Error::ObjectMismatch(
            "subobjects_equal: codomains differ".to_string(),
        ));
    }
    if !classify_morphism(cat, m)?.monic || !classify_morphism(cat, n)?.monic {
        return Err(Error::Precondition(
            "subobjects_equal: both morphisms must be monic".into(),
        ));
    }
    let cok_n = cat.cokernel(n).projection;
    let cok_m = cat.cokernel(m).projection;
    Ok(cat.is_zero_morphism(&cat.compose(&cok_n, m)?)
        && cat.is_zero_morphism(&cat.compose(&cok_m, n)?))
}

/// Dual of [`subobjects_equal`]: whether two epimorphisms out of a common
/// object present the same quotient.
pub fn quotients_equal<C: AbelianCategory>(
    cat: &C,
    e: &C::Morphism,
    q: &C::Morphism,
) -> Result<bool> {
    if !cat.object_equal(&cat.source(e), &cat.source(q)) {
        return Err(Error::ObjectMismatch(
            "quotients_equal: domains differ".to_string(),
        ));
    }
    if !classify_morphism(cat, e)?.epic || !classify_morphism(cat, q)?.epic {
        return Err(Error::Precondition(
            "quotients_equal: both morphisms must be epic".into(),
        ));
    }
    let ker_e = cat.kernel(e).inclusion;
    let ker_q = cat.kernel(q).inclusion;
    Ok(cat.is_zero_morphism(&cat.compose(e, &ker_q)?)
        && cat.is_zero_morphism(&cat.compose(q, &ker_e)?))
}

/// Exactness at the middle object of `A -f-> B -g-> C`.
///
/// Evaluates the subobject form `g f = 0` and `img f = ker g`, computes the
/// annihilation form `(cok f)(ker g) = 0` alongside it, and insists the two
/// agree — a disagreement would be an instance bug, not a property of the
/// input.
pub fn is_exact_at<C: AbelianCategory>(
    cat: &C,
    f: &C::Morphism,
    g: &C::Morphism,
) -> Result<bool> {
    require_composable(cat, g, f, "is_exact_at: g . f")?;
    let gf_zero = cat.is_zero_morphism(&cat.compose(g, f)?);

    let image_form = if gf_zero {
        let img = image_factorization(cat, f)?;
        let ker_g = cat.kernel(g);
        subobjects_equal(cat, &img.image_mono, &ker_g.inclusion)?
    } else {
        false
    };

    let annihilation_form = gf_zero && {
        let cok_f = cat.cokernel(f).projection;
        let ker_g = cat.kernel(g).inclusion;
        cat.is_zero_morphism(&cat.compose(&cok_f, &ker_g)?)
    };

    assert_eq!(
        image_form, annihilation_form,
        "exactness criteria disagree; category instance is inconsistent"
    );
    Ok(image_form)
}

/// Short-exactness verdict with the first failing condition named.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortExactVerdict {
    pub exact: bool,
    /// First failing clause, e.g. `"f not monic"`; `None` when exact.
    pub diagnostic: Option<String>,
}

/// Whether `0 -> A -f-> B -g-> C -> 0` is short exact: `f` monic, `g` epic,
/// `g f = 0` and `(cok f)(ker g) = 0`.
///
/// The equivalent characterization — `f = ker g` as a subobject and
/// `g = cok f` as a quotient — is evaluated as a cross-check and must
/// agree.
pub fn is_short_exact<C: AbelianCategory>(
    cat: &C,
    f: &C::Morphism,
    g: &C::Morphism,
) -> Result<ShortExactVerdict> {
    require_composable(cat, g, f, "is_short_exact: g . f")?;

    let mut diagnostic = None;
    if !classify_morphism(cat, f)?.monic {
        diagnostic = Some("f not monic".to_string());
    } else if !classify_morphism(cat, g)?.epic {
        diagnostic = Some("g not epic".to_string());
    } else if !cat.is_zero_morphism(&cat.compose(g, f)?) {
        diagnostic = Some("g . f != 0".to_string());
    } else {
        let cok_f = cat.cokernel(f).projection;
        let ker_g = cat.kernel(g).inclusion;
        if !cat.is_zero_morphism(&cat.compose(&cok_f, &ker_g)?) {
            diagnostic = Some("(cok f)(ker g) != 0".to_string());
        }
    }
    let exact = diagnostic.is_none();

    // Cross-check against the kernel/cokernel characterization whenever the
    // morphisms have the right variance for it to be posed.
    if classify_morphism(cat, f)?.monic && classify_morphism(cat, g)?.epic {
        let ker_g = cat.kernel(g).inclusion;
        let cok_f = cat.cokernel(f).projection;
        let alt = subobjects_equal(cat, f, &ker_g)? && quotients_equal(cat, g, &cok_f)?;
        assert_eq!(
            alt, exact,
            "short-exactness criteria disagree; category instance is inconsistent"
        );
    }

    Ok(ShortExactVerdict { exact, diagnostic })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abcat::AbelianCategory;
    use crate::fgab::{FgAb, FgGroup, GroupHom};

    fn fg(v: &[i64]) -> FgGroup {
        FgGroup::from_invariant_factors(v).unwrap()
    }

    fn hom(src: &[i64], dst: &[i64], rows: &[Vec<i64>]) -> GroupHom {
        GroupHom::from_rows(fg(src), fg(dst), rows).unwrap()
    }

    #[test]
    fn pullback_of_reduction_against_identity() {
        // phi: Z/4 -> Z/2 reduction, psi = id: pairs (a, b) with a mod 2 = b
        // form a Z/4, and pulling back the epi phi keeps proj_b epic.
        let phi = hom(&[4], &[2], &[vec![1]]);
        let psi = GroupHom::identity(&fg(&[2]));
        let pb = pullback(&FgAb, &phi, &psi).unwrap();
        assert_eq!(pb.object, fg(&[4]));
        assert!(classify_morphism(&FgAb, &pb.proj_b).unwrap().epic);
        let left = FgAb.compose(&phi, &pb.proj_a).unwrap();
        let right = FgAb.compose(&psi, &pb.proj_b).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn pullback_against_zero_is_kernel_times_source() {
        // psi = 0: Z/2 -> Z/2 forces the first coordinate into ker phi, so
        // P = K_phi (+) B = Z/2 (+) Z/2.
        let phi = hom(&[4], &[2], &[vec![1]]);
        let psi = GroupHom::zero(fg(&[2]), fg(&[2]));
        let pb = pullback(&FgAb, &phi, &psi).unwrap();
        assert_eq!(pb.object, fg(&[2, 2]));
    }

    #[test]
    fn pullback_along_identity_is_the_other_source() {
        let phi = GroupHom::identity(&fg(&[2]));
        let psi = hom(&[4], &[2], &[vec![1]]);
        let pb = pullback(&FgAb, &phi, &psi).unwrap();
        assert_eq!(pb.object, fg(&[4]));
        // proj_b is iso and proj_a = psi . proj_b.
        assert!(classify_morphism(&FgAb, &pb.proj_b).unwrap().iso);
        let via = FgAb.compose(&psi, &pb.proj_b).unwrap();
        assert_eq!(pb.proj_a, via);
    }

    #[test]
    fn pullback_mediator_examples() {
        let phi = hom(&[4], &[2], &[vec![1]]);
        let psi = GroupHom::identity(&fg(&[2]));
        let pb = pullback(&FgAb, &phi, &psi).unwrap();

        // The projections themselves mediate to the identity.
        let h = pullback_mediator(&FgAb, &pb, &pb.proj_a, &pb.proj_b).unwrap();
        assert_eq!(h, GroupHom::identity(&pb.object));

        // The zero object mediates to zero.
        let z = FgGroup::zero();
        let h0 = pullback_mediator(
            &FgAb,
            &pb,
            &GroupHom::zero(z.clone(), fg(&[4])),
            &GroupHom::zero(z, fg(&[2])),
        )
        .unwrap();
        assert!(h0.is_zero());

        // D = Z/4 with (id, phi) mediates through the canonical iso.
        let h2 = pullback_mediator(&FgAb, &pb, &GroupHom::identity(&fg(&[4])), &phi).unwrap();
        assert!(classify_morphism(&FgAb, &h2).unwrap().iso);
        assert_eq!(
            FgAb.compose(&pb.proj_a, &h2).unwrap(),
            GroupHom::identity(&fg(&[4]))
        );
        assert_eq!(FgAb.compose(&pb.proj_b, &h2).unwrap(), phi);

        // A non-commuting square is a precondition error.
        let bad = pullback_mediator(
            &FgAb,
            &pb,
            &GroupHom::identity(&fg(&[4])),
            &GroupHom::zero(fg(&[4]), fg(&[2])),
        );
        assert!(matches!(bad, Err(Error::Precondition(_))));
    }

    #[test]
    fn pushout_examples() {
        // Along identities the pushout is the object itself.
        let id = GroupHom::identity(&fg(&[4]));
        let po = pushout(&FgAb, &id, &id).unwrap();
        assert_eq!(po.object, fg(&[4]));

        // From the zero object it is the direct sum.
        let z = FgGroup::zero();
        let po2 = pushout(
            &FgAb,
            &GroupHom::zero(z.clone(), fg(&[2])),
            &GroupHom::zero(z, fg(&[3])),
        )
        .unwrap();
        assert_eq!(po2.object, fg(&[6]));

        // Z/2 pushed into Z/4 by doubling against the identity glues to Z/4.
        let phi = hom(&[2], &[4], &[vec![2]]);
        let psi = GroupHom::identity(&fg(&[2]));
        let po3 = pushout(&FgAb, &phi, &psi).unwrap();
        assert_eq!(po3.object, fg(&[4]));
        let left = FgAb.compose(&po3.inj_a, &phi).unwrap();
        let right = FgAb.compose(&po3.inj_b, &psi).unwrap();
        assert_eq!(left, right);

        // Initiality: the mediator rebuilt from a cospan through the pushout
        // is recovered exactly.
        let w = hom(&[4], &[8], &[vec![2]]);
        let f = FgAb.compose(&w, &po3.inj_a).unwrap();
        let g = FgAb.compose(&w, &po3.inj_b).unwrap();
        let m = pushout_mediator(&FgAb, &po3, &f, &g).unwrap();
        assert_eq!(m, w);
    }

    #[test]
    fn exactness_worked_examples() {
        // f = ker g is always exact at the middle.
        let g = hom(&[4], &[2], &[vec![1]]);
        let ker = FgAb.kernel(&g);
        assert!(is_exact_at(&FgAb, &ker.inclusion, &g).unwrap());

        let f = hom(&[2], &[4], &[vec![2]]);
        assert!(is_exact_at(&FgAb, &f, &g).unwrap());

        let id = GroupHom::identity(&fg(&[2]));
        assert!(!is_exact_at(&FgAb, &id, &id).unwrap());

        let verdict = is_short_exact(&FgAb, &f, &g).unwrap();
        assert!(verdict.exact && verdict.diagnostic.is_none());
        let broken = is_short_exact(&FgAb, &GroupHom::zero(fg(&[2]), fg(&[4])), &g).unwrap();
        assert!(!broken.exact);
        assert_eq!(broken.diagnostic.as_deref(), Some("f not monic"));
    }

    #[test]
    fn composability_violations_are_input_errors() {
        let f = hom(&[2], &[4], &[vec![2]]);
        assert!(matches!(
            is_exact_at(&FgAb, &f, &f),
            Err(Error::NotComposable(_))
        ));
        let psi = GroupHom::identity(&fg(&[2]));
        let phi = hom(&[4], &[8], &[vec![2]]);
        assert!(matches!(
            pullback(&FgAb, &phi, &psi),
            Err(Error::ObjectMismatch(_))
        ));
    }
}

//! Executable law suite for category instances.
//!
//! Each law turns one of the contract's obligations into a runnable check
//! over sampled morphisms. Uniqueness clauses are exercised by round trips:
//! a mediator rebuilt from its own legs must come back unchanged, and a
//! factorization of `inclusion . w` must return `w` itself.

use super::ops::{
    classify_morphism, image_factorization, pullback, pullback_mediator, subobjects_equal,
};
use super::AbelianCategory;

/// Outcome of running a law suite: how many checks ran and which failed.
#[derive(Clone, Debug, Default)]
pub struct LawReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, law: &str, ok: bool) {
        self.checked += 1;
        if !ok {
            self.failures.push(law.to_string());
        }
    }
}

/// Runs the full instance suite over the given morphisms.
///
/// `hom_sampler(a, b, salt)` must return some morphism `a -> b`; it is used
/// to draw competing triples for the universal-property round trips,
/// `competing` many per construction.
pub fn check_contract_instance<C, S>(
    cat: &C,
    morphisms: &[C::Morphism],
    mut hom_sampler: S,
    competing: usize,
) -> LawReport
where
    C: AbelianCategory,
    S: FnMut(&C::Object, &C::Object, u64) -> C::Morphism,
{
    let mut report = LawReport::default();
    let mut salt = 0u64;
    let mut next_salt = || {
        salt += 1;
        salt
    };

    for f in morphisms {
        let label = |law: &str| format!("{law} [{f:?}]");
        let src = cat.source(f);
        let tgt = cat.target(f);
        let ker = cat.kernel(f);
        let cok = cat.cokernel(f);

        // Kernel morphisms are monic, cokernel morphisms are epic, and they
        // annihilate / are annihilated by f.
        let mut run = || -> crate::Result<()> {
            let fk = cat.compose(f, &ker.inclusion)?;
            report.check(&label("kernel annihilates"), cat.is_zero_morphism(&fk));
            let cf = cat.compose(&cok.projection, f)?;
            report.check(&label("cokernel annihilates"), cat.is_zero_morphism(&cf));
            report.check(
                &label("kernel inclusion monic"),
                classify_morphism(cat, &ker.inclusion)?.monic,
            );
            report.check(
                &label("cokernel projection epic"),
                classify_morphism(cat, &cok.projection)?.epic,
            );

            // Factoring inclusion . w back through the kernel returns w, the
            // unique mediator; dually for the cokernel.
            for _ in 0..competing.max(1) {
                let w = hom_sampler(&src, &ker.object, next_salt());
                let g = cat.compose(&ker.inclusion, &w)?;
                let h = cat.factor_through_kernel(f, &g)?;
                report.check(&label("kernel factorization unique"), {
                    cat.morphism_equal(&h, &w)
                });

                let w2 = hom_sampler(&cok.object, &tgt, next_salt());
                let g2 = cat.compose(&w2, &cok.projection)?;
                let h2 = cat.factor_through_cokernel(f, &g2)?;
                report.check(&label("cokernel factorization unique"), {
                    cat.morphism_equal(&h2, &w2)
                });
            }

            let cls = classify_morphism(cat, f)?;
            report.check(
                &label("monic iff kernel zero"),
                cls.monic == cat.is_zero_object(&ker.object),
            );
            report.check(
                &label("epic iff cokernel zero"),
                cls.epic == cat.is_zero_object(&cok.object),
            );
            if !cat.is_zero_object(&ker.object) {
                // A nonzero kernel witnesses non-cancellability concretely.
                report.check(
                    &label("nonzero kernel witness"),
                    !cat.is_zero_morphism(&ker.inclusion),
                );
            }

            // A mono is the kernel of its cokernel.
            if cls.monic {
                let ker_of_cok = cat.kernel(&cok.projection);
                report.check(
                    &label("mono equals ker(cok)"),
                    subobjects_equal(cat, f, &ker_of_cok.inclusion)?,
                );
            }

            // Mono + epi yields a verified two-sided inverse.
            if cls.iso {
                let inv = cls.inverse.clone().expect("iso must carry an inverse");
                let fi = cat.compose(f, &inv)?;
                let if_ = cat.compose(&inv, f)?;
                report.check(
                    &label("inverse right"),
                    cat.morphism_equal(&fi, &cat.identity(&tgt)),
                );
                report.check(
                    &label("inverse left"),
                    cat.morphism_equal(&if_, &cat.identity(&src)),
                );
            } else {
                report.check(&label("no inverse unless iso"), cls.inverse.is_none());
            }

            // Image factorization: f = mono . epi with the advertised
            // variances.
            let img = image_factorization(cat, f)?;
            let recomposed = cat.compose(&img.image_mono, &img.canonical_epi)?;
            report.check(
                &label("image recomposes"),
                cat.morphism_equal(&recomposed, f),
            );
            report.check(
                &label("image mono"),
                classify_morphism(cat, &img.image_mono)?.monic,
            );
            report.check(
                &label("canonical epi onto image"),
                classify_morphism(cat, &img.canonical_epi)?.epic,
            );
            report.check(
                &label("coimage epi"),
                classify_morphism(cat, &img.coimage_epi)?.epic,
            );

            // Direct sum of the endpoints: the five biproduct identities and
            // both universal properties.
            let sum = cat.direct_sum(&src, &tgt);
            let id_a = cat.identity(&src);
            let id_b = cat.identity(&tgt);
            let pa_ia = cat.compose(&sum.proj_a, &sum.inj_a)?;
            let pb_ib = cat.compose(&sum.proj_b, &sum.inj_b)?;
            let pa_ib = cat.compose(&sum.proj_a, &sum.inj_b)?;
            let pb_ia = cat.compose(&sum.proj_b, &sum.inj_a)?;
            report.check(&label("sum: pa ia = id"), cat.morphism_equal(&pa_ia, &id_a));
            report.check(&label("sum: pb ib = id"), cat.morphism_equal(&pb_ib, &id_b));
            report.check(&label("sum: pa ib = 0"), cat.is_zero_morphism(&pa_ib));
            report.check(&label("sum: pb ia = 0"), cat.is_zero_morphism(&pb_ia));
            let resolution = cat.add(
                &cat.compose(&sum.inj_a, &sum.proj_a)?,
                &cat.compose(&sum.inj_b, &sum.proj_b)?,
            )?;
            report.check(
                &label("sum: identity resolution"),
                cat.morphism_equal(&resolution, &cat.identity(&sum.object)),
            );

            for _ in 0..competing.max(1) {
                // Product: a competing triple has exactly one mediator.
                let phi = hom_sampler(&src, &src, next_salt());
                let psi = hom_sampler(&src, &tgt, next_salt());
                let h = cat.add(
                    &cat.compose(&sum.inj_a, &phi)?,
                    &cat.compose(&sum.inj_b, &psi)?,
                )?;
                let leg_a = cat.compose(&sum.proj_a, &h)?;
                let leg_b = cat.compose(&sum.proj_b, &h)?;
                report.check(&label("product mediator legs"), {
                    cat.morphism_equal(&leg_a, &phi) && cat.morphism_equal(&leg_b, &psi)
                });
                // Uniqueness: any map into the sum is recovered from its legs.
                let w = hom_sampler(&src, &sum.object, next_salt());
                let rebuilt = cat.add(
                    &cat.compose(&sum.inj_a, &cat.compose(&sum.proj_a, &w)?)?,
                    &cat.compose(&sum.inj_b, &cat.compose(&sum.proj_b, &w)?)?,
                )?;
                report.check(
                    &label("product mediator unique"),
                    cat.morphism_equal(&rebuilt, &w),
                );

                // Coproduct, dually.
                let phi2 = hom_sampler(&src, &tgt, next_salt());
                let psi2 = hom_sampler(&tgt, &tgt, next_salt());
                let h2 = cat.add(
                    &cat.compose(&phi2, &sum.proj_a)?,
                    &cat.compose(&psi2, &sum.proj_b)?,
                )?;
                let leg_a2 = cat.compose(&h2, &sum.inj_a)?;
                let leg_b2 = cat.compose(&h2, &sum.inj_b)?;
                report.check(&label("coproduct mediator legs"), {
                    cat.morphism_equal(&leg_a2, &phi2) && cat.morphism_equal(&leg_b2, &psi2)
                });
                let w2 = hom_sampler(&sum.object, &tgt, next_salt());
                let rebuilt2 = cat.add(
                    &cat.compose(&cat.compose(&w2, &sum.inj_a)?, &sum.proj_a)?,
                    &cat.compose(&cat.compose(&w2, &sum.inj_b)?, &sum.proj_b)?,
                )?;
                report.check(
                    &label("coproduct mediator unique"),
                    cat.morphism_equal(&rebuilt2, &w2),
                );
            }
            Ok(())
        };
        if let Err(e) = run() {
            report
                .failures
                .push(format!("contract suite error on {f:?}: {e}"));
        }
    }
    report
}

/// Pullback law suite over pairs with a common codomain: the square
/// commutes, mediators of competing squares exist and are unique, and
/// pulling back along an epi preserves epiness of the opposite leg.
pub fn check_pullback_laws<C, S>(
    cat: &C,
    cospans: &[(C::Morphism, C::Morphism)],
    mut hom_sampler: S,
    competing: usize,
) -> LawReport
where
    C: AbelianCategory,
    S: FnMut(&C::Object, &C::Object, u64) -> C::Morphism,
{
    let mut report = LawReport::default();
    let mut salt = 0u64;
    for (phi, psi) in cospans {
        let label = |law: &str| format!("{law} [{phi:?}, {psi:?}]");
        let mut run = || -> crate::Result<()> {
            let pb = pullback(cat, phi, psi)?;
            let left = cat.compose(phi, &pb.proj_a)?;
            let right = cat.compose(psi, &pb.proj_b)?;
            report.check(
                &label("pullback square commutes"),
                cat.morphism_equal(&left, &right),
            );

            for _ in 0..competing.max(1) {
                salt += 1;
                // Any map into the pullback yields a commuting square whose
                // unique mediator must be that map again.
                let w = hom_sampler(&cat.source(phi), &pb.object, salt);
                let f = cat.compose(&pb.proj_a, &w)?;
                let g = cat.compose(&pb.proj_b, &w)?;
                let m = pullback_mediator(cat, &pb, &f, &g)?;
                report.check(&label("pullback mediator unique"), {
                    cat.morphism_equal(&m, &w)
                });
            }

            if classify_morphism(cat, phi)?.epic {
                report.check(
                    &label("pullback of epi is epi"),
                    classify_morphism(cat, &pb.proj_b)?.epic,
                );
            }
            Ok(())
        };
        if let Err(e) = run() {
            report
                .failures
                .push(format!("pullback suite error on {phi:?}/{psi:?}: {e}"));
        }
    }
    report
}

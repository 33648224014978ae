use super::report::{Check, TraceStep, VerificationReport};
use super::Mode;
use crate::abcat::ops::{classify_morphism, image_factorization, is_short_exact, pullback};
use crate::abcat::{AbelianCategory, Opposite};
use crate::error::{Error, Result};

/// A commutative ladder of two short exact sequences:
///
/// ```text
/// 0 -> A  -f->  B  -g->  C  -> 0
///      |alpha  |beta    |gamma
/// 0 -> A' -f'-> B' -g'-> C' -> 0
/// ```
///
/// Nothing about the ladder is trusted: row exactness and square
/// commutativity are hypotheses the verifiers check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SesLadder<M> {
    pub f: M,
    pub g: M,
    pub f_prime: M,
    pub g_prime: M,
    pub alpha: M,
    pub beta: M,
    pub gamma: M,
}

impl<M: Clone> SesLadder<M> {
    /// The formally reversed ladder read in the opposite category: rows swap
    /// and reverse, the verticals point the other way.
    pub fn reversed(&self) -> SesLadder<M> {
        SesLadder {
            f: self.g_prime.clone(),
            g: self.f_prime.clone(),
            f_prime: self.g.clone(),
            g_prime: self.f.clone(),
            alpha: self.gamma.clone(),
            beta: self.beta.clone(),
            gamma: self.alpha.clone(),
        }
    }
}

fn check_endpoints<C: AbelianCategory>(cat: &C, l: &SesLadder<C::Morphism>) -> Result<()> {
    let eq = |x: &C::Object, y: &C::Object, what: &str| -> Result<()> {
        if cat.object_equal(x, y) {
            Ok(())
        } else {
            Err(Error::ObjectMismatch(format!(
                "ladder endpoints inconsistent at {what}"
            )))
        }
    };
    eq(&cat.target(&l.f), &cat.source(&l.g), "B")?;
    eq(&cat.target(&l.f_prime), &cat.source(&l.g_prime), "B'")?;
    eq(&cat.source(&l.alpha), &cat.source(&l.f), "A")?;
    eq(&cat.target(&l.alpha), &cat.source(&l.f_prime), "A'")?;
    eq(&cat.source(&l.beta), &cat.target(&l.f), "B")?;
    eq(&cat.target(&l.beta), &cat.target(&l.f_prime), "B'")?;
    eq(&cat.source(&l.gamma), &cat.target(&l.g), "C")?;
    eq(&cat.target(&l.gamma), &cat.target(&l.g_prime), "C'")?;
    Ok(())
}

fn property_holds<C: AbelianCategory>(cat: &C, f: &C::Morphism, mode: Mode) -> Result<bool> {
    let cls = classify_morphism(cat, f)?;
    Ok(match mode {
        Mode::Monic => cls.monic,
        Mode::Epic => cls.epic,
        Mode::Iso => cls.iso,
    })
}

fn run_hypotheses<C: AbelianCategory>(
    cat: &C,
    l: &SesLadder<C::Morphism>,
    mode: Mode,
) -> Result<VerificationReport> {
    check_endpoints(cat, l)?;
    let mut report = VerificationReport::default();

    let top = is_short_exact(cat, &l.f, &l.g)?;
    report.push_hypothesis(Check::with_detail(
        "top row short exact",
        top.exact,
        top.diagnostic,
    ));
    let bottom = is_short_exact(cat, &l.f_prime, &l.g_prime)?;
    report.push_hypothesis(Check::with_detail(
        "bottom row short exact",
        bottom.exact,
        bottom.diagnostic,
    ));

    let left_a = cat.compose(&l.f_prime, &l.alpha)?;
    let left_b = cat.compose(&l.beta, &l.f)?;
    report.push_hypothesis(Check::new(
        "left square commutes",
        cat.morphism_equal(&left_a, &left_b),
    ));
    let right_a = cat.compose(&l.g_prime, &l.beta)?;
    let right_b = cat.compose(&l.gamma, &l.g)?;
    report.push_hypothesis(Check::new(
        "right square commutes",
        cat.morphism_equal(&right_a, &right_b),
    ));

    report.push_hypothesis(Check::new(
        format!("alpha {}", mode.as_str()),
        property_holds(cat, &l.alpha, mode)?,
    ));
    report.push_hypothesis(Check::new(
        format!("gamma {}", mode.as_str()),
        property_holds(cat, &l.gamma, mode)?,
    ));
    Ok(report)
}

/// Short five lemma verification: checks the hypotheses of the stated mode
/// and, when they all hold, whether `beta` has the same property.
pub fn verify_short_five<C: AbelianCategory>(
    cat: &C,
    l: &SesLadder<C::Morphism>,
    mode: Mode,
) -> Result<VerificationReport> {
    let mut report = run_hypotheses(cat, l, mode)?;
    if report.hypotheses_hold() {
        let concluded = property_holds(cat, &l.beta, mode)?;
        report.push_conclusion(Check::new(format!("beta {}", mode.as_str()), concluded));
    }
    Ok(report)
}

/// The epic case through the opposite category: reverse the ladder, verify
/// the monic case there. The verdict must coincide with running
/// [`verify_short_five`] in epic mode directly.
pub fn verify_short_five_dual<C: AbelianCategory + Clone>(
    cat: &C,
    l: &SesLadder<C::Morphism>,
) -> Result<VerificationReport> {
    let op = Opposite(cat.clone());
    verify_short_five(&op, &l.reversed(), Mode::Monic)
}

/// Executable trace of the pullback proof of the monic case.
///
/// After the monic-mode hypotheses pass, each computation of the proof is
/// performed on the instance and every asserted equation becomes a trace
/// step: the kernel of `beta` factors through `img f`, the pullback of the
/// canonical epi `phi` and that factorization `psi` has a zero projection to
/// `A`, its other projection is epic, and therefore `ker beta = 0`.
pub fn short_five_trace<C: AbelianCategory>(
    cat: &C,
    l: &SesLadder<C::Morphism>,
) -> Result<VerificationReport> {
    let mut report = run_hypotheses(cat, l, Mode::Monic)?;
    if !report.hypotheses_hold() {
        return Ok(report);
    }

    let kb = cat.kernel(&l.beta);
    let kappa = &kb.inclusion;

    // (1) gamma . g . ker(beta) = 0
    let g_kappa = cat.compose(&l.g, kappa)?;
    let step1 = cat.is_zero_morphism(&cat.compose(&l.gamma, &g_kappa)?);
    report.trace.push(TraceStep {
        step: 1,
        claim: "gamma . g . ker(beta) = 0".into(),
        passed: step1,
    });

    // (2) g . ker(beta) = 0, by gamma monic
    let step2 = cat.is_zero_morphism(&g_kappa);
    report.trace.push(TraceStep {
        step: 2,
        claim: "g . ker(beta) = 0".into(),
        passed: step2,
    });

    // (3) ker(beta) factors through img f: (cok f) . ker(beta) = 0 by row
    // exactness, so psi with (img f) . psi = ker(beta) exists.
    let img = image_factorization(cat, &l.f)?;
    let cok_f = cat.cokernel(&l.f).projection;
    let obstruction = cat.compose(&cok_f, kappa)?;
    let mut step3 = cat.is_zero_morphism(&obstruction);
    let psi = if step3 {
        // img f is the canonical kernel of cok f, so the factorization of
        // ker(beta) through it is a kernel factorization.
        let psi = cat.factor_through_kernel(&cok_f, kappa)?;
        let recomposed = cat.compose(&img.image_mono, &psi)?;
        step3 = cat.morphism_equal(&recomposed, kappa);
        Some(psi)
    } else {
        None
    };
    report.trace.push(TraceStep {
        step: 3,
        claim: "(img f) . psi = ker(beta)".into(),
        passed: step3,
    });
    let Some(psi) = psi else {
        return Ok(report);
    };

    // (4) (img f) . phi = f for the canonical epi phi.
    let phi = &img.canonical_epi;
    let recomposed_f = cat.compose(&img.image_mono, phi)?;
    let step4 = cat.morphism_equal(&recomposed_f, &l.f);
    report.trace.push(TraceStep {
        step: 4,
        claim: "(img f) . phi = f".into(),
        passed: step4,
    });

    // (5) P = pullback(phi, psi) with a commuting square.
    let pb = pullback(cat, phi, &psi)?;
    let pi_a = &pb.proj_a;
    let pi_k = &pb.proj_b;
    let square_l = cat.compose(phi, pi_a)?;
    let square_r = cat.compose(&psi, pi_k)?;
    let step5 = cat.morphism_equal(&square_l, &square_r);
    report.trace.push(TraceStep {
        step: 5,
        claim: "pullback square commutes: phi . pi_A = psi . pi_K".into(),
        passed: step5,
    });

    // (6) f' . alpha . pi_A = 0, hence pi_A = 0 since f' and alpha are monic.
    let f_alpha_pia = cat.compose(&cat.compose(&l.f_prime, &l.alpha)?, pi_a)?;
    let step6 = cat.is_zero_morphism(&f_alpha_pia) && cat.is_zero_morphism(pi_a);
    report.trace.push(TraceStep {
        step: 6,
        claim: "f' . alpha . pi_A = 0 and pi_A = 0".into(),
        passed: step6,
    });

    // (7) ker(beta) . pi_K = (img f) . psi . pi_K = (img f) . phi . pi_A = 0.
    let lhs = cat.compose(kappa, pi_k)?;
    let mid = cat.compose(&cat.compose(&img.image_mono, &psi)?, pi_k)?;
    let rhs = cat.compose(&cat.compose(&img.image_mono, phi)?, pi_a)?;
    let step7 = cat.morphism_equal(&lhs, &mid)
        && cat.morphism_equal(&mid, &rhs)
        && cat.is_zero_morphism(&rhs);
    report.trace.push(TraceStep {
        step: 7,
        claim: "ker(beta) . pi_K = (img f) . psi . pi_K = (img f) . phi . pi_A = 0".into(),
        passed: step7,
    });

    // (8) pi_K is epic (pullback of the epi phi), so ker(beta) = 0 and beta
    // is monic.
    let pik_epic = classify_morphism(cat, pi_k)?.epic;
    let kappa_zero = cat.is_zero_morphism(kappa);
    let beta_monic = classify_morphism(cat, &l.beta)?.monic;
    let step8 = pik_epic && kappa_zero && beta_monic;
    report.trace.push(TraceStep {
        step: 8,
        claim: "pi_K epic, hence ker(beta) = 0 and beta monic".into(),
        passed: step8,
    });

    Ok(report)
}

//! Acceptance suite: the project's exit criteria, run at full scale with
//! fixed seeds. Each test prints one pass/fail line (visible with
//! `cargo test --test acceptance -- --nocapture`).

use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use abchase::abcat::laws::{check_contract_instance, check_pullback_laws};
use abchase::abcat::ops::{
    classify_morphism, image_factorization, is_exact_at, is_short_exact, quotients_equal,
    subobjects_equal,
};
use abchase::abcat::AbelianCategory;
use abchase::diagram::{
    short_five_trace, verify_nine_lemma, verify_short_five, verify_short_five_dual, Mode,
    NineDirection,
};
use abchase::fgab::{FgAb, FgGroup, GroupHom};
use abchase::genprop::{self, oracle, GenConfig, LadderScheme, Rng};
use abchase::intlin::{determinant, smith_normal_form, IntMatrix};
use abchase::vecfp::{FpMap, VecFp};

fn verdict(criterion: &str, passed: bool, detail: &str) {
    println!(
        "{criterion}: {} — {detail}",
        if passed { "PASS" } else { "FAIL" }
    );
    assert!(passed, "{criterion} failed: {detail}");
}

#[test]
fn criterion_1_snf_suite() {
    let start = Instant::now();
    let mut rng = Rng::new(0x5153_4e46);
    let total = 10_000;
    let mut failures = 0;
    for _ in 0..total {
        let rows = 1 + rng.below_usize(8);
        let cols = 1 + rng.below_usize(8);
        let a = IntMatrix::from_fn(rows, cols, |_, _| BigInt::from(rng.range_i64(-100, 100)));
        let snf = smith_normal_form(&a);
        let mut ok = snf.u.matmul(&a).matmul(&snf.v) == snf.d;
        ok &= determinant(&snf.u).abs().is_one();
        ok &= determinant(&snf.v).abs().is_one();
        let diag = snf.diagonal();
        for w in diag.windows(2) {
            if !w[1].is_zero() {
                ok &= !w[0].is_zero() && (&w[1] % &w[0]).is_zero();
            }
        }
        ok &= diag.iter().all(|d| !d.is_negative());
        if !ok {
            failures += 1;
        }
    }
    let elapsed = start.elapsed();
    verdict(
        "criterion 1 (SNF suite)",
        failures == 0 && elapsed.as_secs_f64() < 30.0,
        &format!("{total} matrices, {failures} failures, {:.1}s", elapsed.as_secs_f64()),
    );
}

#[test]
fn criterion_2_contract_conformance() {
    let start = Instant::now();

    // fgab: 1000 random morphisms, sampler keyed by salt for competing
    // triples.
    let cfg = GenConfig::new(0xC0_47AC7, LadderScheme::SplitSplit);
    let mut rng = cfg.rng();
    let morphisms: Vec<GroupHom> = (0..1000)
        .map(|_| {
            let a = genprop::random_object(&cfg, &mut rng);
            let b = genprop::random_object(&cfg, &mut rng);
            genprop::random_hom(&mut rng, &a, &b)
        })
        .collect();
    let fgab_report = check_contract_instance(
        &FgAb,
        &morphisms,
        |a, b, salt| {
            let mut r = Rng::new(0x517 ^ salt.wrapping_mul(0x9E37_79B9));
            genprop::random_hom(&mut r, a, b)
        },
        10,
    );

    // vecfp over two primes, 500 maps each.
    let mut vec_failures = Vec::new();
    let mut vec_checked = 0;
    for p in [2u64, 5] {
        let cat = VecFp::new(p).unwrap();
        let mut rng = Rng::new(0xF9 + p);
        let maps: Vec<FpMap> = (0..500)
            .map(|_| {
                let a = cat.space(rng.below_usize(4));
                let b = cat.space(rng.below_usize(4));
                let entries = (0..a.dim * b.dim).map(|_| rng.below(p)).collect();
                FpMap::new(a, b, entries).unwrap()
            })
            .collect();
        let report = check_contract_instance(
            &cat,
            &maps,
            |a, b, salt| {
                let mut r = Rng::new(salt.wrapping_mul(0x2545_F491_4F6C_DD1D) + p);
                let entries = (0..a.dim * b.dim).map(|_| r.below(p)).collect();
                FpMap::new(*a, *b, entries).unwrap()
            },
            10,
        );
        vec_checked += report.checked;
        vec_failures.extend(report.failures);
    }

    let all_ok = fgab_report.passed() && vec_failures.is_empty();
    let detail = format!(
        "fgab: {} checks ({} failures), vecfp: {} checks ({} failures), {:.1}s",
        fgab_report.checked,
        fgab_report.failures.len(),
        vec_checked,
        vec_failures.len(),
        start.elapsed().as_secs_f64()
    );
    if !fgab_report.failures.is_empty() {
        eprintln!("fgab failures: {:?}", &fgab_report.failures[..fgab_report.failures.len().min(5)]);
    }
    if !vec_failures.is_empty() {
        eprintln!("vecfp failures: {:?}", &vec_failures[..vec_failures.len().min(5)]);
    }
    verdict("criterion 2 (contract conformance)", all_ok, &detail);
}

fn factor_list(g: &FgGroup) -> Vec<u64> {
    g.factors().iter().map(|f| f.to_u64().unwrap()).collect()
}

#[test]
fn criterion_3_oracle_equivalence() {
    let start = Instant::now();
    let pool: Vec<FgGroup> = [
        vec![],
        vec![2],
        vec![3],
        vec![4],
        vec![2, 2],
        vec![5],
        vec![6],
        vec![8],
        vec![2, 4],
        vec![2, 2, 2],
        vec![9],
        vec![3, 3],
        vec![12],
        vec![16],
        vec![2, 8],
        vec![4, 4],
        vec![2, 2, 4],
        vec![7],
    ]
    .iter()
    .map(|v| FgGroup::normalized(&v.iter().map(|&x| x as i64).collect::<Vec<_>>()))
    .collect();
    for g in &pool {
        assert!(g.order().unwrap() <= BigInt::from(64));
    }

    let mut rng = Rng::new(0x0_2AC1E);
    let mut checked = 0usize;
    let mut mismatches = Vec::new();
    for a in &pool {
        for b in &pool {
            for _ in 0..50 {
                let f = genprop::random_hom(&mut rng, a, b);

                // Kernel: same invariant factors, same element set.
                let ker = FgAb.kernel(&f);
                let oracle_kernel = oracle::kernel_elements(&f).unwrap();
                let kernel_factors =
                    oracle::subgroup_invariant_factors(a, &oracle_kernel).unwrap();
                if factor_list(&ker.object) != kernel_factors {
                    mismatches.push(format!("kernel factors of {f:?}"));
                }
                let kt = oracle::ElementTable::new(&ker.object).unwrap();
                let included: BTreeSet<_> = kt
                    .elements()
                    .iter()
                    .map(|x| oracle::apply(&ker.inclusion, x).unwrap())
                    .collect();
                if included != oracle_kernel || included.len() != kt.len() {
                    mismatches.push(format!("kernel elements of {f:?}"));
                }

                // Image: same story.
                let img = image_factorization(&FgAb, &f).unwrap();
                let oracle_image = oracle::image_elements(&f).unwrap();
                let image_factors = oracle::subgroup_invariant_factors(b, &oracle_image).unwrap();
                if factor_list(&img.image_object) != image_factors {
                    mismatches.push(format!("image factors of {f:?}"));
                }
                let it = oracle::ElementTable::new(&img.image_object).unwrap();
                let image_set: BTreeSet<_> = it
                    .elements()
                    .iter()
                    .map(|x| oracle::apply(&img.image_mono, x).unwrap())
                    .collect();
                if image_set != oracle_image || image_set.len() != it.len() {
                    mismatches.push(format!("image elements of {f:?}"));
                }

                // Cokernel: quotient factors, surjectivity, fibers.
                let cok = FgAb.cokernel(&f);
                let quotient_factors =
                    oracle::quotient_invariant_factors(b, &oracle_image).unwrap();
                if factor_list(&cok.object) != quotient_factors {
                    mismatches.push(format!("cokernel factors of {f:?}"));
                }
                if !oracle::is_surjective(&cok.projection).unwrap() {
                    mismatches.push(format!("cokernel projection not onto for {f:?}"));
                }
                if oracle::kernel_elements(&cok.projection).unwrap() != oracle_image {
                    mismatches.push(format!("cokernel fibers of {f:?}"));
                }

                // Classification agrees with element counting.
                let cls = classify_morphism(&FgAb, &f).unwrap();
                if cls.monic != oracle::is_injective(&f).unwrap()
                    || cls.epic != oracle::is_surjective(&f).unwrap()
                {
                    mismatches.push(format!("classification of {f:?}"));
                }

                checked += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    if !mismatches.is_empty() {
        eprintln!("first mismatches: {:?}", &mismatches[..mismatches.len().min(5)]);
    }
    verdict(
        "criterion 3 (oracle equivalence)",
        mismatches.is_empty() && elapsed.as_secs_f64() < 120.0,
        &format!(
            "{} pairs x 50 homs = {checked} homs, {} mismatches, {:.1}s",
            pool.len() * pool.len(),
            mismatches.len(),
            elapsed.as_secs_f64()
        ),
    );
}

#[test]
fn criterion_4_short_five_lemma() {
    let start = Instant::now();
    let schemes = [
        LadderScheme::SplitSplit,
        LadderScheme::EpiKernelTopSplitBottom,
        LadderScheme::Conjugated,
    ];
    let modes = [Mode::Monic, Mode::Epic, Mode::Iso];
    let per_combination = 1000;
    let mut counterexamples = 0usize;
    let mut hypothesis_failures = 0usize;
    let mut dual_disagreements = 0usize;
    let mut total = 0usize;
    for scheme in schemes {
        for mode in modes {
            let cfg = GenConfig::new(0x5F1 + scheme.as_str().len() as u64 * 131, scheme);
            let mut rng = Rng::new(cfg.seed ^ (mode.as_str().len() as u64) << 17);
            for _ in 0..per_combination {
                let ladder = genprop::gen_ladder(&cfg, mode, &mut rng);
                let report = verify_short_five(&FgAb, &ladder, mode).unwrap();
                if !report.hypotheses_hold() {
                    hypothesis_failures += 1;
                } else if !report.conclusions_hold() {
                    counterexamples += 1;
                }
                if mode == Mode::Epic {
                    let dual = verify_short_five_dual(&FgAb, &ladder).unwrap();
                    if dual.hypotheses_hold() != report.hypotheses_hold()
                        || dual.passed() != report.passed()
                    {
                        dual_disagreements += 1;
                    }
                }
                total += 1;
            }
        }
    }
    verdict(
        "criterion 4 (short five lemma)",
        counterexamples == 0 && hypothesis_failures == 0 && dual_disagreements == 0,
        &format!(
            "{total} ladders (3 schemes x 3 modes), {counterexamples} counterexamples, \
             {hypothesis_failures} generator hypothesis failures, \
             {dual_disagreements} dual-path disagreements, {:.1}s",
            start.elapsed().as_secs_f64()
        ),
    );
}

#[test]
fn criterion_5_proof_trace() {
    let start = Instant::now();
    let schemes = [
        LadderScheme::SplitSplit,
        LadderScheme::EpiKernelTopSplitBottom,
        LadderScheme::Conjugated,
    ];
    let mut total = 0usize;
    let mut incomplete = 0usize;
    let mut disagreements = 0usize;
    for scheme in schemes {
        let cfg = GenConfig::new(0x7_12ACE ^ scheme.as_str().len() as u64, scheme);
        let mut rng = cfg.rng();
        for _ in 0..167 {
            let ladder = genprop::gen_ladder(&cfg, Mode::Monic, &mut rng);
            let trace = short_five_trace(&FgAb, &ladder).unwrap();
            let direct = verify_short_five(&FgAb, &ladder, Mode::Monic).unwrap();
            if trace.hypotheses_hold() && trace.trace.len() != 8 {
                incomplete += 1;
            }
            if trace.passed() != direct.passed() {
                disagreements += 1;
            }
            total += 1;
        }
    }
    verdict(
        "criterion 5 (pullback proof trace)",
        total >= 500 && incomplete == 0 && disagreements == 0,
        &format!(
            "{total} monic ladders, {incomplete} incomplete traces, \
             {disagreements} disagreements with the direct verifier, {:.1}s",
            start.elapsed().as_secs_f64()
        ),
    );
}

#[test]
fn criterion_6_pullback_suite() {
    let start = Instant::now();
    let cfg = GenConfig::new(0x9_B11A, LadderScheme::SplitSplit);
    let mut rng = cfg.rng();
    let mut cospans = Vec::new();
    let mut epi_legs = 0usize;
    while cospans.len() < 1000 {
        let c = genprop::random_object(&cfg, &mut rng);
        let a = genprop::random_object(&cfg, &mut rng);
        let b = genprop::random_object(&cfg, &mut rng);
        let phi = if rng.chance(1, 2) {
            match genprop::random_epic(&mut rng, &a, &c) {
                Some(e) => e,
                None => genprop::random_hom(&mut rng, &a, &c),
            }
        } else {
            genprop::random_hom(&mut rng, &a, &c)
        };
        if classify_morphism(&FgAb, &phi).unwrap().epic {
            epi_legs += 1;
        }
        let psi = genprop::random_hom(&mut rng, &b, &c);
        cospans.push((phi, psi));
    }
    let report = check_pullback_laws(
        &FgAb,
        &cospans,
        |a, b, salt| {
            let mut r = Rng::new(salt.wrapping_mul(0xD134_2543_DE82_EF95) + 7);
            genprop::random_hom(&mut r, a, b)
        },
        10,
    );
    if !report.failures.is_empty() {
        eprintln!("failures: {:?}", &report.failures[..report.failures.len().min(5)]);
    }
    verdict(
        "criterion 6 (pullback suite)",
        report.passed() && epi_legs > 100,
        &format!(
            "{} cospans ({} with epic first leg), {} checks, {} failures, {:.1}s",
            cospans.len(),
            epi_legs,
            report.checked,
            report.failures.len(),
            start.elapsed().as_secs_f64()
        ),
    );
}

#[test]
fn criterion_7_exactness_tri_equivalence() {
    let start = Instant::now();
    let cfg = GenConfig::new(0xE_4AC7, LadderScheme::SplitSplit);
    let mut rng = cfg.rng();
    let mut disagreements = 0usize;
    let mut exact_count = 0usize;
    let total = 1000;
    for i in 0..total {
        let (f, g) = match i % 3 {
            // Genuine short exact sequence.
            0 => genprop::random_ses(&cfg, &mut rng),
            // Corrupted: post-compose f with a non-injective self-map.
            1 => {
                let (f, g) = genprop::random_ses(&cfg, &mut rng);
                let twist = genprop::random_hom(&mut rng, f.src(), f.src());
                (FgAb.compose(&f, &twist).unwrap(), g)
            }
            // Arbitrary composable pair.
            _ => {
                let a = genprop::random_object(&cfg, &mut rng);
                let b = genprop::random_object(&cfg, &mut rng);
                let c = genprop::random_object(&cfg, &mut rng);
                (
                    genprop::random_hom(&mut rng, &a, &b),
                    genprop::random_hom(&mut rng, &b, &c),
                )
            }
        };

        let f_monic = classify_morphism(&FgAb, &f).unwrap().monic;
        let g_epic = classify_morphism(&FgAb, &g).unwrap().epic;
        let def51 = f_monic && g_epic && {
            FgAb.is_zero_morphism(&FgAb.compose(&g, &f).unwrap())
                && FgAb.is_zero_morphism(
                    &FgAb
                        .compose(&FgAb.cokernel(&f).projection, &FgAb.kernel(&g).inclusion)
                        .unwrap(),
                )
        };
        let prop52 = f_monic
            && g_epic
            && subobjects_equal(&FgAb, &f, &FgAb.kernel(&g).inclusion).unwrap()
            && quotients_equal(&FgAb, &g, &FgAb.cokernel(&f).projection).unwrap();
        let ex75 = f_monic && g_epic && is_exact_at(&FgAb, &f, &g).unwrap();

        if def51 != prop52 || def51 != ex75 {
            disagreements += 1;
        }
        if def51 {
            exact_count += 1;
        }
        // The packaged verdict must be the same thing.
        if is_short_exact(&FgAb, &f, &g).unwrap().exact != def51 {
            disagreements += 1;
        }
    }
    verdict(
        "criterion 7 (exactness tri-equivalence)",
        disagreements == 0 && exact_count > 100 && exact_count < total - 100,
        &format!(
            "{total} pairs ({exact_count} exact, {} non-exact), {disagreements} disagreements, {:.1}s",
            total - exact_count,
            start.elapsed().as_secs_f64()
        ),
    );
}

#[test]
fn criterion_8_nine_lemma() {
    let start = Instant::now();
    let cfg = GenConfig::new(0x91E, LadderScheme::SplitSplit);
    let mut rng = cfg.rng();
    let total = 500;
    let mut hypothesis_failures = 0usize;
    let mut conclusion_failures = 0usize;
    for _ in 0..total {
        let grid = genprop::gen_nine_grid(&cfg, &mut rng);
        for direction in [NineDirection::BottomFromTop, NineDirection::TopFromBottom] {
            let report = verify_nine_lemma(&FgAb, &grid, direction).unwrap();
            if !report.hypotheses_hold() {
                hypothesis_failures += 1;
            } else if !report.conclusions_hold() {
                conclusion_failures += 1;
            }
        }
    }
    verdict(
        "criterion 8 (nine lemma)",
        hypothesis_failures == 0 && conclusion_failures == 0,
        &format!(
            "{total} grids x 2 directions, {hypothesis_failures} hypothesis failures, \
             {conclusion_failures} conclusion failures, {:.1}s",
            start.elapsed().as_secs_f64()
        ),
    );
}

//! Executes a parsed diagram file: category-level validation first, then
//! the assertions in order.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;

use abchase::abcat::ops::{is_exact_at, is_short_exact};
use abchase::abcat::AbelianCategory;
use abchase::diagram::{
    check_commutes, short_five_trace, verify_nine_lemma, verify_short_five, Check, Diagram,
    NineGrid, SesLadder, VerificationReport,
};
use abchase::fgab::{FgAb, FgGroup, GroupHom};
use abchase::intlin::IntMatrix;
use abchase::vecfp::{FpMap, VecFp};
use abchase::Error;

use crate::model::{Assertion, CategoryTag, DiagramFile, GridRefs, LadderRefs, ObjectSpec};

/// Exit status of a run, mapped to the process exit code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RunStatus {
    AllPassed,     // exit 0
    AssertionFailed, // exit 1
}

#[derive(Clone, Debug, Serialize)]
pub struct AssertionReport {
    pub index: usize,
    pub kind: String,
    pub passed: bool,
    pub report: VerificationReport,
}

/// The full, deterministic report for one input file.
#[derive(Clone, Debug, Serialize)]
pub struct ReportDocument {
    pub tool: String,
    pub input_digest: String,
    pub category: String,
    pub assertions: Vec<AssertionReport>,
    pub overall: String,
}

impl ReportDocument {
    pub fn status(&self) -> RunStatus {
        if self.overall == "pass" {
            RunStatus::AllPassed
        } else {
            RunStatus::AssertionFailed
        }
    }
}

/// FNV-1a64 of the input bytes; stable change-detection tag for reports.
pub fn input_digest(text: &str) -> String {
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    for b in text.as_bytes() {
        hash ^= u64::from(*b);
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    format!("{hash:016x}")
}

pub fn tool_version() -> String {
    format!("abchase {}", env!("CARGO_PKG_VERSION"))
}

/// Runs every assertion of the file. `Err` means an input error (exit 2);
/// assertion failures are data, not errors.
pub fn run_file(df: &DiagramFile, input_text: &str, jobs: usize) -> Result<ReportDocument, Error> {
    let assertions = match df.category {
        CategoryTag::Fgab => {
            let cat = FgAb;
            let (morphisms, diagram) = build_fgab(df, &cat)?;
            execute(&cat, &morphisms, &diagram, &df.assertions, jobs)?
        }
        CategoryTag::VecFp { prime } => {
            let cat = VecFp::new(prime)
                .map_err(|e| Error::InvalidInput(format!("category vecfp: {e}")))?;
            let (morphisms, diagram) = build_vecfp(df, &cat)?;
            execute(&cat, &morphisms, &diagram, &df.assertions, jobs)?
        }
    };
    let overall = if assertions.iter().all(|a| a.passed) {
        "pass"
    } else {
        "fail"
    };
    Ok(ReportDocument {
        tool: tool_version(),
        input_digest: input_digest(input_text),
        category: df.category.describe(),
        assertions,
        overall: overall.to_string(),
    })
}

fn build_fgab(
    df: &DiagramFile,
    cat: &FgAb,
) -> Result<(BTreeMap<String, GroupHom>, Diagram<FgAb>), Error> {
    let mut objects: BTreeMap<String, FgGroup> = BTreeMap::new();
    let mut diagram = Diagram::new();
    for (name, spec) in &df.objects {
        let ObjectSpec::Factors(factors) = spec else {
            return Err(Error::InvalidInput(format!(
                "object \"{name}\": expected invariant factors"
            )));
        };
        let group = FgGroup::from_invariant_factors(factors)
            .map_err(|e| Error::InvalidInput(format!("object \"{name}\": {e}")))?;
        diagram.add_object(name.clone(), group.clone())?;
        objects.insert(name.clone(), group);
    }
    let mut morphisms = BTreeMap::new();
    for spec in &df.morphisms {
        let src = &objects[&spec.src];
        let dst = &objects[&spec.dst];
        let rows = dst.rank();
        let cols = src.rank();
        let flat: Vec<i64> = spec.matrix.iter().flatten().copied().collect();
        if spec.matrix.len() != rows || flat.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "morphism \"{}\": {}x{} matrix required for {} -> {}, got {}x{}",
                spec.name,
                rows,
                cols,
                spec.src,
                spec.dst,
                spec.matrix.len(),
                spec.matrix.first().map_or(0, Vec::len),
            )));
        }
        let matrix = IntMatrix::from_fn(rows, cols, |i, j| BigInt::from(spec.matrix[i][j]));
        let hom = GroupHom::new(src.clone(), dst.clone(), matrix)
            .map_err(|e| Error::InvalidInput(format!("morphism \"{}\": {e}", spec.name)))?;
        diagram.add_arrow(cat, spec.name.clone(), &spec.src, &spec.dst, hom.clone())?;
        morphisms.insert(spec.name.clone(), hom);
    }
    Ok((morphisms, diagram))
}

fn build_vecfp(
    df: &DiagramFile,
    cat: &VecFp,
) -> Result<(BTreeMap<String, FpMap>, Diagram<VecFp>), Error> {
    let mut objects = BTreeMap::new();
    let mut diagram = Diagram::new();
    for (name, spec) in &df.objects {
        let ObjectSpec::Dimension(dim) = spec else {
            return Err(Error::InvalidInput(format!(
                "object \"{name}\": expected a dimension"
            )));
        };
        let space = cat.space(*dim);
        diagram.add_object(name.clone(), space)?;
        objects.insert(name.clone(), space);
    }
    let mut morphisms = BTreeMap::new();
    for spec in &df.morphisms {
        let src = objects[&spec.src];
        let dst = objects[&spec.dst];
        if spec.matrix.len() != dst.dim
            || spec.matrix.iter().any(|row| row.len() != src.dim)
        {
            return Err(Error::DimensionMismatch(format!(
                "morphism \"{}\": {}x{} matrix required for {} -> {}",
                spec.name, dst.dim, src.dim, spec.src, spec.dst,
            )));
        }
        let p = cat.prime() as i64;
        let entries: Vec<u64> = spec
            .matrix
            .iter()
            .flatten()
            .map(|&e| e.rem_euclid(p) as u64)
            .collect();
        let map = FpMap::new(src, dst, entries)
            .map_err(|e| Error::InvalidInput(format!("morphism \"{}\": {e}", spec.name)))?;
        diagram.add_arrow(cat, spec.name.clone(), &spec.src, &spec.dst, map.clone())?;
        morphisms.insert(spec.name.clone(), map);
    }
    Ok((morphisms, diagram))
}

fn lookup<'a, M>(morphisms: &'a BTreeMap<String, M>, name: &str) -> Result<&'a M, Error> {
    morphisms
        .get(name)
        .ok_or_else(|| Error::UnknownReference(format!("morphism \"{name}\"")))
}

fn ladder_of<M: Clone>(
    morphisms: &BTreeMap<String, M>,
    refs: &LadderRefs,
) -> Result<SesLadder<M>, Error> {
    Ok(SesLadder {
        f: lookup(morphisms, &refs.f)?.clone(),
        g: lookup(morphisms, &refs.g)?.clone(),
        f_prime: lookup(morphisms, &refs.fp)?.clone(),
        g_prime: lookup(morphisms, &refs.gp)?.clone(),
        alpha: lookup(morphisms, &refs.alpha)?.clone(),
        beta: lookup(morphisms, &refs.beta)?.clone(),
        gamma: lookup(morphisms, &refs.gamma)?.clone(),
    })
}

fn grid_of<M: Clone>(
    morphisms: &BTreeMap<String, M>,
    refs: &GridRefs,
) -> Result<NineGrid<M>, Error> {
    Ok(NineGrid {
        f1: lookup(morphisms, &refs.f1)?.clone(),
        g1: lookup(morphisms, &refs.g1)?.clone(),
        f2: lookup(morphisms, &refs.f2)?.clone(),
        g2: lookup(morphisms, &refs.g2)?.clone(),
        f3: lookup(morphisms, &refs.f3)?.clone(),
        g3: lookup(morphisms, &refs.g3)?.clone(),
        alpha1: lookup(morphisms, &refs.alpha1)?.clone(),
        alpha2: lookup(morphisms, &refs.alpha2)?.clone(),
        beta1: lookup(morphisms, &refs.beta1)?.clone(),
        beta2: lookup(morphisms, &refs.beta2)?.clone(),
        gamma1: lookup(morphisms, &refs.gamma1)?.clone(),
        gamma2: lookup(morphisms, &refs.gamma2)?.clone(),
    })
}

fn run_assertion<C>(
    cat: &C,
    morphisms: &BTreeMap<String, C::Morphism>,
    diagram: &Diagram<C>,
    assertion: &Assertion,
) -> Result<VerificationReport, Error>
where
    C: AbelianCategory + Clone,
{
    match assertion {
        Assertion::Commutes => check_commutes(cat, diagram),
        Assertion::ExactAt { f, g } => {
            let f = lookup(morphisms, f)?;
            let g = lookup(morphisms, g)?;
            let holds = is_exact_at(cat, f, g)?;
            let mut report = VerificationReport::default();
            report
                .conclusions
                .push(Check::new("exact at middle object", holds));
            Ok(report)
        }
        Assertion::ShortExact { f, g } => {
            let f = lookup(morphisms, f)?;
            let g = lookup(morphisms, g)?;
            let verdict = is_short_exact(cat, f, g)?;
            let mut report = VerificationReport::default();
            report.conclusions.push(Check::with_detail(
                "short exact",
                verdict.exact,
                verdict.diagnostic,
            ));
            Ok(report)
        }
        Assertion::ShortFive { mode, ladder } => {
            let l = ladder_of(morphisms, ladder)?;
            verify_short_five(cat, &l, *mode)
        }
        Assertion::ShortFiveTrace { ladder } => {
            let l = ladder_of(morphisms, ladder)?;
            short_five_trace(cat, &l)
        }
        Assertion::NineLemma { direction, grid } => {
            let g = grid_of(morphisms, grid)?;
            verify_nine_lemma(cat, &g, *direction)
        }
    }
}

fn execute<C>(
    cat: &C,
    morphisms: &BTreeMap<String, C::Morphism>,
    diagram: &Diagram<C>,
    assertions: &[Assertion],
    jobs: usize,
) -> Result<Vec<AssertionReport>, Error>
where
    C: AbelianCategory + Clone + Sync,
    C::Morphism: Send + Sync,
    C::Object: Send + Sync,
{
    let indexed: Vec<(usize, &Assertion)> = assertions.iter().enumerate().collect();
    let results: Vec<(usize, Result<VerificationReport, Error>)> = if jobs > 1 {
        std::thread::scope(|scope| {
            let mut handles = Vec::new();
            for chunk in indexed.chunks(assertions.len().div_ceil(jobs).max(1)) {
                handles.push(scope.spawn(move || {
                    chunk
                        .iter()
                        .map(|(i, a)| (*i, run_assertion(cat, morphisms, diagram, a)))
                        .collect::<Vec<_>>()
                }));
            }
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("assertion worker panicked"))
                .collect()
        })
    } else {
        indexed
            .iter()
            .map(|(i, a)| (*i, run_assertion(cat, morphisms, diagram, a)))
            .collect()
    };

    let mut sorted = results;
    sorted.sort_by_key(|(i, _)| *i);
    let mut out = Vec::new();
    for ((index, result), assertion) in sorted.into_iter().zip(assertions) {
        let report = result?;
        out.push(AssertionReport {
            index: index + 1,
            kind: assertion.describe(),
            passed: report.passed(),
            report,
        });
    }
    Ok(out)
}

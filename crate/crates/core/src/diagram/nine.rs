use serde::{Deserialize, Serialize};

use super::report::{Check, VerificationReport};
use crate::abcat::ops::is_short_exact;
use crate::abcat::AbelianCategory;
use crate::error::{Error, Result};

/// A 3x3 grid of short exact rows and columns:
///
/// ```text
/// 0 -> A1 -f1-> B1 -g1-> C1 -> 0
///      |alpha1  |beta1   |gamma1
/// 0 -> A2 -f2-> B2 -g2-> C2 -> 0
///      |alpha2  |beta2   |gamma2
/// 0 -> A3 -f3-> B3 -g3-> C3 -> 0
/// ```
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NineGrid<M> {
    pub f1: M,
    pub g1: M,
    pub f2: M,
    pub g2: M,
    pub f3: M,
    pub g3: M,
    pub alpha1: M,
    pub alpha2: M,
    pub beta1: M,
    pub beta2: M,
    pub gamma1: M,
    pub gamma2: M,
}

/// Which row is concluded from the other two.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NineDirection {
    /// Rows 2 and 3 are hypotheses; row 1 is the conclusion.
    TopFromBottom,
    /// Rows 1 and 2 are hypotheses; row 3 is the conclusion.
    BottomFromTop,
}

impl std::str::FromStr for NineDirection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "top_from_bottom" => Ok(NineDirection::TopFromBottom),
            "bottom_from_top" => Ok(NineDirection::BottomFromTop),
            other => Err(Error::InvalidInput(format!(
                "unknown direction '{other}' (expected top_from_bottom|bottom_from_top)"
            ))),
        }
    }
}

fn check_endpoints<C: AbelianCategory>(cat: &C, g: &NineGrid<C::Morphism>) -> Result<()> {
    let eq = |x: &C::Object, y: &C::Object, what: &str| -> Result<()> {
        if cat.object_equal(x, y) {
            Ok(())
        } else {
            Err(Error::ObjectMismatch(format!(
                "grid endpoints inconsistent at {what}"
            )))
        }
    };
    // Rows chain through the Bs; columns chain through rows.
    eq(&cat.target(&g.f1), &cat.source(&g.g1), "B1")?;
    eq(&cat.target(&g.f2), &cat.source(&g.g2), "B2")?;
    eq(&cat.target(&g.f3), &cat.source(&g.g3), "B3")?;
    eq(&cat.source(&g.alpha1), &cat.source(&g.f1), "A1")?;
    eq(&cat.target(&g.alpha1), &cat.source(&g.f2), "A2")?;
    eq(&cat.source(&g.alpha2), &cat.source(&g.f2), "A2")?;
    eq(&cat.target(&g.alpha2), &cat.source(&g.f3), "A3")?;
    eq(&cat.source(&g.beta1), &cat.target(&g.f1), "B1")?;
    eq(&cat.target(&g.beta1), &cat.target(&g.f2), "B2")?;
    eq(&cat.source(&g.beta2), &cat.target(&g.f2), "B2")?;
    eq(&cat.target(&g.beta2), &cat.target(&g.f3), "B3")?;
    eq(&cat.source(&g.gamma1), &cat.target(&g.g1), "C1")?;
    eq(&cat.target(&g.gamma1), &cat.target(&g.g2), "C2")?;
    eq(&cat.source(&g.gamma2), &cat.target(&g.g2), "C2")?;
    eq(&cat.target(&g.gamma2), &cat.target(&g.g3), "C3")?;
    Ok(())
}

/// Nine lemma verification: all three columns short exact, all four squares
/// commutative and the two hypothesis rows short exact; the conclusion is
/// short-exactness of the remaining row.
pub fn verify_nine_lemma<C: AbelianCategory>(
    cat: &C,
    grid: &NineGrid<C::Morphism>,
    direction: NineDirection,
) -> Result<VerificationReport> {
    check_endpoints(cat, grid)?;
    let mut report = VerificationReport::default();

    let ses_hypothesis =
        |report: &mut VerificationReport, name: &str, f: &C::Morphism, g: &C::Morphism| -> Result<()> {
            let v = is_short_exact(cat, f, g)?;
            report.push_hypothesis(Check::with_detail(name, v.exact, v.diagnostic));
            Ok(())
        };

    ses_hypothesis(&mut report, "left column short exact", &grid.alpha1, &grid.alpha2)?;
    ses_hypothesis(&mut report, "middle column short exact", &grid.beta1, &grid.beta2)?;
    ses_hypothesis(&mut report, "right column short exact", &grid.gamma1, &grid.gamma2)?;

    // A square with top edge t, verticals l (source side) and r (target
    // side) and bottom edge b commutes when r . t = b . l.
    let square = |name: &str, t: &C::Morphism, l: &C::Morphism, r: &C::Morphism, b: &C::Morphism| -> Result<Check> {
        let via_top = cat.compose(r, t)?;
        let via_bottom = cat.compose(b, l)?;
        Ok(Check::new(name, cat.morphism_equal(&via_top, &via_bottom)))
    };
    report.push_hypothesis(square("top left square commutes", &grid.f1, &grid.alpha1, &grid.beta1, &grid.f2)?);
    report.push_hypothesis(square("top right square commutes", &grid.g1, &grid.beta1, &grid.gamma1, &grid.g2)?);
    report.push_hypothesis(square("bottom left square commutes", &grid.f2, &grid.alpha2, &grid.beta2, &grid.f3)?);
    report.push_hypothesis(square("bottom right square commutes", &grid.g2, &grid.beta2, &grid.gamma2, &grid.g3)?);

    type Row<'a, M> = (&'a str, &'a M, &'a M);
    let (hyp_rows, conclusion_row): ([Row<'_, C::Morphism>; 2], Row<'_, C::Morphism>) =
        match direction {
            NineDirection::TopFromBottom => (
                [
                    ("middle row short exact", &grid.f2, &grid.g2),
                    ("bottom row short exact", &grid.f3, &grid.g3),
                ],
                ("top row short exact", &grid.f1, &grid.g1),
            ),
            NineDirection::BottomFromTop => (
                [
                    ("top row short exact", &grid.f1, &grid.g1),
                    ("middle row short exact", &grid.f2, &grid.g2),
                ],
                ("bottom row short exact", &grid.f3, &grid.g3),
            ),
        };
    for (name, f, g) in hyp_rows {
        ses_hypothesis(&mut report, name, f, g)?;
    }

    if report.hypotheses_hold() {
        let (name, f, g) = conclusion_row;
        let v = is_short_exact(cat, f, g)?;
        report.push_conclusion(Check::with_detail(name, v.exact, v.diagnostic));
    }
    Ok(report)
}

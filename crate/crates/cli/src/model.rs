//! Parsed representation of a diagram file.

use abchase::diagram::{Mode, NineDirection};

/// Which concrete category the file works in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CategoryTag {
    Fgab,
    VecFp { prime: u64 },
}

impl CategoryTag {
    pub fn describe(&self) -> String {
        match self {
            CategoryTag::Fgab => "fgab".to_string(),
            CategoryTag::VecFp { prime } => format!("vecfp({prime})"),
        }
    }
}

/// An object declaration: invariant factors for `fgab`, a dimension for
/// `vecfp`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ObjectSpec {
    Factors(Vec<i64>),
    Dimension(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismSpec {
    pub name: String,
    pub src: String,
    pub dst: String,
    pub matrix: Vec<Vec<i64>>,
}

/// The references of a short-five ladder, by morphism name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LadderRefs {
    pub f: String,
    pub g: String,
    pub fp: String,
    pub gp: String,
    pub alpha: String,
    pub beta: String,
    pub gamma: String,
}

/// The references of a nine-lemma grid, by morphism name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridRefs {
    pub f1: String,
    pub g1: String,
    pub f2: String,
    pub g2: String,
    pub f3: String,
    pub g3: String,
    pub alpha1: String,
    pub alpha2: String,
    pub beta1: String,
    pub beta2: String,
    pub gamma1: String,
    pub gamma2: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Assertion {
    Commutes,
    ExactAt { f: String, g: String },
    ShortExact { f: String, g: String },
    ShortFive { mode: Mode, ladder: LadderRefs },
    ShortFiveTrace { ladder: LadderRefs },
    NineLemma { direction: NineDirection, grid: GridRefs },
}

impl Assertion {
    /// Stable label used in rendered reports.
    pub fn describe(&self) -> String {
        match self {
            Assertion::Commutes => "commutes".to_string(),
            Assertion::ExactAt { f, g } => format!("exact_at({f}, {g})"),
            Assertion::ShortExact { f, g } => format!("short_exact({f}, {g})"),
            Assertion::ShortFive { mode, .. } => format!("short_five({})", mode.as_str()),
            Assertion::ShortFiveTrace { .. } => "short_five_trace".to_string(),
            Assertion::NineLemma { direction, .. } => format!(
                "nine_lemma({})",
                match direction {
                    NineDirection::TopFromBottom => "top_from_bottom",
                    NineDirection::BottomFromTop => "bottom_from_top",
                }
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramFile {
    pub category: CategoryTag,
    pub objects: Vec<(String, ObjectSpec)>,
    pub morphisms: Vec<MorphismSpec>,
    pub assertions: Vec<Assertion>,
}

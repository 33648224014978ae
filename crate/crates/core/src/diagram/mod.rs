//! Diagram data model, commutativity checking and the lemma verifiers.
//!
//! Verifiers never assume their hypotheses: every input condition (row
//! exactness, square commutativity, the properties of the outer verticals)
//! is checked and reported, and the conclusion is only evaluated once all
//! hypotheses hold. A report asserts facts about one concrete instance,
//! never the lemma itself.

mod commute;
mod ladder;
mod nine;
mod report;

pub use commute::{check_commutes, Diagram};
pub use ladder::{short_five_trace, verify_short_five, verify_short_five_dual, SesLadder};
pub use nine::{verify_nine_lemma, NineDirection, NineGrid};
pub use report::{Check, TraceStep, VerificationReport};

use serde::{Deserialize, Serialize};

/// Which property of the outer verticals a ladder verification assumes and
/// concludes for the middle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Monic,
    Epic,
    Iso,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Monic => "monic",
            Mode::Epic => "epic",
            Mode::Iso => "iso",
        }
    }
}

impl std::str::FromStr for Mode {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "monic" => Ok(Mode::Monic),
            "epic" => Ok(Mode::Epic),
            "iso" => Ok(Mode::Iso),
            other => Err(crate::Error::InvalidInput(format!(
                "unknown mode '{other}' (expected monic|epic|iso)"
            ))),
        }
    }
}

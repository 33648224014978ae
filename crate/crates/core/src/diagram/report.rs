use serde::{Deserialize, Serialize};

/// One named check with its verdict and an optional diagnostic detail.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: None,
        }
    }

    pub fn with_detail(name: impl Into<String>, passed: bool, detail: Option<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail,
        }
    }
}

/// One asserted equation of an executable proof trace.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub step: usize,
    pub claim: String,
    pub passed: bool,
}

/// Structured verdicts for a verification run.
///
/// Conclusions (and trace steps) are only present when every hypothesis
/// passed; a failed hypothesis short-circuits and names the culprit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct VerificationReport {
    pub hypotheses: Vec<Check>,
    pub conclusions: Vec<Check>,
    pub trace: Vec<TraceStep>,
}

impl VerificationReport {
    pub fn hypotheses_hold(&self) -> bool {
        self.hypotheses.iter().all(|c| c.passed)
    }

    pub fn conclusions_hold(&self) -> bool {
        self.conclusions.iter().all(|c| c.passed)
    }

    pub fn trace_holds(&self) -> bool {
        self.trace.iter().all(|s| s.passed)
    }

    /// Overall verdict: everything checked passed.
    pub fn passed(&self) -> bool {
        self.hypotheses_hold() && self.conclusions_hold() && self.trace_holds()
    }

    /// Name of the first failing hypothesis, if any.
    pub fn failed_hypothesis(&self) -> Option<&str> {
        self.hypotheses
            .iter()
            .find(|c| !c.passed)
            .map(|c| c.name.as_str())
    }

    pub(crate) fn push_hypothesis(&mut self, check: Check) {
        self.hypotheses.push(check);
    }

    pub(crate) fn push_conclusion(&mut self, check: Check) {
        debug_assert!(self.hypotheses_hold());
        self.conclusions.push(check);
    }
}

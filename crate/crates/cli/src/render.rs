//! Deterministic report renderers: canonical text and structured JSON.
//! No timestamps, fixed field order, byte-stable for identical inputs.

use std::fmt::Write as _;

use crate::run::ReportDocument;

pub fn render_text(doc: &ReportDocument) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", doc.tool);
    let _ = writeln!(out, "input fnv1a64: {}", doc.input_digest);
    let _ = writeln!(out, "category: {}", doc.category);
    for assertion in &doc.assertions {
        let _ = writeln!(out, "assertion {}: {}", assertion.index, assertion.kind);
        for check in &assertion.report.hypotheses {
            let _ = writeln!(out, "  hypothesis {} — {}", check.name, pass_fail(check.passed));
            if let Some(detail) = &check.detail {
                let _ = writeln!(out, "    detail: {detail}");
            }
        }
        for check in &assertion.report.conclusions {
            let _ = writeln!(out, "  conclusion {} — {}", check.name, pass_fail(check.passed));
            if let Some(detail) = &check.detail {
                let _ = writeln!(out, "    detail: {detail}");
            }
        }
        for step in &assertion.report.trace {
            let _ = writeln!(
                out,
                "  step {} {} — {}",
                step.step,
                step.claim,
                pass_fail(step.passed)
            );
        }
        let _ = writeln!(out, "  verdict: {}", pass_fail(assertion.passed));
    }
    let _ = writeln!(out, "overall: {}", doc.overall);
    out
}

pub fn render_structured(doc: &ReportDocument) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("report serializes");
    s.push('\n');
    s
}

fn pass_fail(passed: bool) -> &'static str {
    if passed {
        "pass"
    } else {
        "fail"
    }
}

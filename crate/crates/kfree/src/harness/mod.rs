//! Executable audits: every claim the generated families and the small-graph
//! scans can falsify is run as a check producing a structured, deterministic
//! report with verified counterexamples on any failure.

mod audits;
mod lemma;
mod psi_report;
mod report;
mod suite;
mod theorems;

pub use audits::{audit_example, audit_graph, tightness_check};
pub use lemma::check_lemma;
pub use psi_report::psi_bounds_report;
pub use report::{AuditReport, Counterexample, FormulaRow, Verdict};
pub use suite::{
    default_config, parse_config, run_check, run_default_suite, run_suite, CheckSpec, SuiteConfig,
    SuiteEnvelope, SuiteReport, REPORT_SCHEMA,
};
pub use theorems::{
    check_theorem, threshold_aes, threshold_base, threshold_jin, threshold_thm_a, Mode, TheoremId,
    TheoremParams,
};

use crate::error::Result;
use crate::generators::{
    andrasfai, andrasfai_blowup_example, haggkvist, haggkvist_extended, hajnal, hajnal_extended,
    mycielski,
};
use crate::graph::Graph;

/// Structured instances for the generated-instances scan mode: family
/// members whose order fits in `n_max`. Never a claim of exhaustiveness.
pub(crate) fn generated_battery(r: usize, n_max: usize) -> Result<Vec<(String, Graph)>> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    let mut push = |name: String, g: Graph| {
        if g.order() <= n_max {
            out.push((name, g));
        }
    };
    if r == 2 {
        for k in 1..=6 {
            push(format!("andrasfai:k={k}"), andrasfai(k)?);
            for t in 2..=3 {
                push(format!("andrasfai:k={k} blown up by {t}"), andrasfai(k)?.blow_up(t)?);
            }
        }
        for i in 1..=4 {
            push(format!("mycielski:i={i}"), mycielski(i)?);
        }
        for k in 1..=3 {
            push(format!("haggkvist:k={k}"), haggkvist(k)?);
        }
        for n in [17, 24, 31] {
            if let Ok(g) = hajnal(n, 2, 1) {
                push(format!("hajnal:n={n},m=2,h=1"), g);
            }
        }
    } else {
        for n in (19 * r - 9)..=n_max.min(3 * (19 * r - 9)) {
            if let Ok(g) = haggkvist_extended(r, n) {
                push(format!("haggkvist-ext:r={r},n={n}"), g);
            }
        }
        for k in 1..=3 {
            let d = (2 * k - 1) * r - k + 1;
            for n in d..=n_max.min(4 * d) {
                if let Ok(g) = andrasfai_blowup_example(r, k, n) {
                    push(format!("andrasfai-blowup:r={r},k={k},n={n}"), g);
                }
            }
        }
        // h = r+1 keeps m = 2 above the h-r side condition
        for n in [40, 60, 80] {
            if n <= n_max {
                if let Ok(g) = hajnal_extended(r, n, 2, r + 1) {
                    push(format!("hajnal-ext:r={r},n={n},m=2,h={}", r + 1), g);
                }
            }
        }
    }
    Ok(out)
}

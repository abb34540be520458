//! Structured audit reports. Reports are deterministic: stable field and row
//! ordering, no timestamps in the body (the envelope carries those), and
//! every counterexample re-validates from its serialized graph alone.

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::graph6::{from_graph6, to_graph6};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    /// The hypothesis was never satisfied in the scanned range; reported
    /// distinctly so a desk-scale limit is never mistaken for evidence.
    Vacuous,
}

/// One predicted-versus-measured comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaRow {
    pub instance: String,
    pub quantity: String,
    pub predicted: String,
    pub measured: String,
    pub ok: bool,
}

/// A hypothesis instance that violated its conclusion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub graph6: String,
    pub detail: String,
}

impl Counterexample {
    /// Builds a counterexample and closes the loop: the graph must decode
    /// from its serialized form back to the witness, and the supplied
    /// re-check must still report the violation on the decoded graph.
    pub fn verified(g: &Graph, detail: impl Into<String>, still_violates: impl Fn(&Graph) -> bool) -> Counterexample {
        let graph6 = to_graph6(g);
        let decoded = from_graph6(&graph6).expect("counterexample must re-decode");
        assert_eq!(&decoded, g, "counterexample decode mismatch");
        assert!(
            still_violates(&decoded),
            "counterexample does not re-validate from its graph6"
        );
        Counterexample {
            graph6,
            detail: detail.into(),
        }
    }
}

/// Per-check record: what was scanned, what was measured, and the verdict.
/// `verdict` is `Fail` exactly when `counterexamples` is nonempty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub claim: String,
    pub scanned: u64,
    pub hypothesis_instances: u64,
    pub verdict: Verdict,
    pub rows: Vec<FormulaRow>,
    pub counterexamples: Vec<Counterexample>,
    /// graph6 of instances whose solver budget ran out; never folded into
    /// pass or fail.
    pub budget_exhausted: Vec<String>,
    pub notes: Vec<String>,
}

impl AuditReport {
    pub fn finish(
        claim: impl Into<String>,
        scanned: u64,
        hypothesis_instances: u64,
        rows: Vec<FormulaRow>,
        counterexamples: Vec<Counterexample>,
        budget_exhausted: Vec<String>,
        notes: Vec<String>,
    ) -> AuditReport {
        let verdict = if !counterexamples.is_empty() {
            Verdict::Fail
        } else if hypothesis_instances == 0 {
            Verdict::Vacuous
        } else {
            Verdict::Pass
        };
        AuditReport {
            claim: claim.into(),
            scanned,
            hypothesis_instances,
            verdict,
            rows,
            counterexamples,
            budget_exhausted,
            notes,
        }
    }
}

/// Running tally used while building a report.
#[derive(Default)]
pub(crate) struct Tally {
    pub rows: Vec<FormulaRow>,
    pub counterexamples: Vec<Counterexample>,
    pub budget_exhausted: Vec<String>,
    pub notes: Vec<String>,
}

impl Tally {
    /// Records a comparison row; on failure also records a verified
    /// counterexample for `g`.
    pub fn row(
        &mut self,
        g: &Graph,
        instance: &str,
        quantity: &str,
        predicted: impl ToString,
        measured: impl ToString,
        ok: bool,
    ) {
        self.rows.push(FormulaRow {
            instance: instance.to_string(),
            quantity: quantity.to_string(),
            predicted: predicted.to_string(),
            measured: measured.to_string(),
            ok,
        });
        if !ok {
            let detail = format!(
                "{instance}: {quantity} predicted {} measured {}",
                predicted.to_string(),
                measured.to_string()
            );
            // measurements are pure functions of the graph, so decode
            // equality is what re-establishes the violation
            self.counterexamples
                .push(Counterexample::verified(g, detail, |_| true));
        }
    }

    /// Records an informational row that cannot fail.
    pub fn info(&mut self, instance: &str, quantity: &str, predicted: impl ToString, measured: impl ToString) {
        self.rows.push(FormulaRow {
            instance: instance.to_string(),
            quantity: quantity.to_string(),
            predicted: predicted.to_string(),
            measured: measured.to_string(),
            ok: true,
        });
    }

    pub fn out_of_budget(&mut self, g: &Graph) {
        self.budget_exhausted.push(to_graph6(g));
    }
}

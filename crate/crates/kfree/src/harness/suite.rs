//! Suite runner: a JSON config lists checks with their parameters, modes and
//! budgets; the aggregated report is deterministic (byte-identical for the
//! same config and build) and versioned.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::audits::{audit_example, tightness_check};
use super::lemma::check_lemma;
use super::psi_report::psi_bounds_report;
use super::report::{AuditReport, Verdict};
use super::theorems::{check_theorem, Mode, TheoremId, TheoremParams};
use crate::error::{Error, Result};
use crate::generators::FamilySpec;
use crate::solve::DEFAULT_NODE_BUDGET;

pub const REPORT_SCHEMA: u32 = 1;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct SuiteConfig {
    pub checks: Vec<CheckSpec>,
}

/// One entry of the suite config: `{id, params, mode, budget}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct CheckSpec {
    pub id: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<Mode>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budget: Option<u64>,
}

impl CheckSpec {
    fn new(id: &str, params: &[(&str, Value)], mode: Option<Mode>) -> CheckSpec {
        CheckSpec {
            id: id.into(),
            params: params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            mode,
            budget: None,
        }
    }

    fn usize_param(&self, key: &str) -> Result<Option<usize>> {
        match self.params.get(key) {
            None => Ok(None),
            Some(v) => v
                .as_u64()
                .map(|u| Some(u as usize))
                .ok_or_else(|| Error::Config(format!("check {:?}: {key} must be an integer", self.id))),
        }
    }

    fn require_usize(&self, key: &str) -> Result<usize> {
        self.usize_param(key)?
            .ok_or_else(|| Error::Config(format!("check {:?}: missing parameter {key}", self.id)))
    }

    fn str_param(&self, key: &str) -> Result<Option<&str>> {
        match self.params.get(key) {
            None => Ok(None),
            Some(Value::String(s)) => Ok(Some(s)),
            Some(_) => Err(Error::Config(format!("check {:?}: {key} must be a string", self.id))),
        }
    }
}

/// Aggregated suite result. `passed` is false exactly when some check
/// verdict is `Fail`; vacuous checks do not fail the suite.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct SuiteReport {
    pub schema: u32,
    pub checks: Vec<AuditReport>,
    pub passed: bool,
}

impl SuiteReport {
    pub fn any_budget_exhausted(&self) -> bool {
        self.checks.iter().any(|c| !c.budget_exhausted.is_empty())
    }
}

/// Envelope around the report; only the envelope carries volatile fields
/// such as the timestamp, so the `report` body stays byte-stable.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SuiteEnvelope {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generated_at: Option<u64>,
    pub report: SuiteReport,
}

pub fn parse_config(json: &str) -> Result<SuiteConfig> {
    serde_json::from_str(json).map_err(|e| Error::Config(e.to_string()))
}

/// The default battery: the exhaustive theorem scans at desk scale, the
/// family audits, the tightness checks, and the ψ bounds table.
pub fn default_config() -> SuiteConfig {
    let u = |n: usize| Value::from(n as u64);
    SuiteConfig {
        checks: vec![
            CheckSpec::new("thm-c", &[("n_max", u(7))], Some(Mode::Exhaustive)),
            CheckSpec::new("ext-bt", &[("r", u(3)), ("n_max", u(7))], Some(Mode::Exhaustive)),
            CheckSpec::new(
                "ext-jin",
                &[("r", u(3)), ("k", u(1)), ("n_max", u(7))],
                Some(Mode::Exhaustive),
            ),
            CheckSpec::new("lemma-redu", &[("r", u(3)), ("n_max", u(7))], Some(Mode::Exhaustive)),
            CheckSpec::new("audit", &[("family", "haggkvist:k=1".into())], None),
            CheckSpec::new("audit", &[("family", "haggkvist-ext:r=3,n=48".into())], None),
            CheckSpec::new("audit", &[("family", "andrasfai-blowup:r=3,k=2,n=16".into())], None),
            CheckSpec::new("audit", &[("family", "hajnal:n=24,m=2,h=1".into())], None),
            // h = r+1 keeps the m > h-r side condition; the factor stays
            // triangle-free
            CheckSpec::new("audit", &[("family", "hajnal-ext:r=3,n=60,m=2,h=4".into())], None),
            CheckSpec::new("tightness", &[], None),
            CheckSpec::new("psi-bounds", &[("r", u(2)), ("n_max", u(8))], None),
        ],
    }
}

pub fn run_check(check: &CheckSpec, default_budget: u64) -> Result<AuditReport> {
    let budget = check.budget.unwrap_or(default_budget);
    let mode = check.mode.unwrap_or(Mode::Exhaustive);
    match check.id.as_str() {
        "lemma-redu" => {
            let r = check.require_usize("r")?;
            let n_max = check.require_usize("n_max")?;
            check_lemma(r, n_max, mode, budget)
        }
        "audit" => {
            let family = check
                .str_param("family")?
                .ok_or_else(|| Error::Config("audit check: missing parameter family".into()))?;
            let spec: FamilySpec = family.parse()?;
            audit_example(&spec, budget)
        }
        "tightness" => tightness_check(budget),
        "psi-bounds" => {
            let r = check.require_usize("r")?;
            let n_max = check.require_usize("n_max")?;
            psi_bounds_report(r, n_max, budget)
        }
        id => {
            let theorem = TheoremId::parse(id)?;
            let default_r = if matches!(theorem, TheoremId::ThmA | TheoremId::ThmB | TheoremId::ThmC) {
                2
            } else {
                3
            };
            let params = TheoremParams {
                theorem,
                r: check.usize_param("r")?.unwrap_or(default_r),
                k: check.usize_param("k")?.unwrap_or(1),
                n_max: check.require_usize("n_max")?,
                mode,
                budget,
            };
            check_theorem(&params)
        }
    }
}

/// Runs every configured check in order. Config errors abort; measured
/// failures land in the report with their counterexamples.
pub fn run_suite(config: &SuiteConfig, default_budget: u64) -> Result<SuiteReport> {
    let mut checks = Vec::with_capacity(config.checks.len());
    for check in &config.checks {
        checks.push(run_check(check, default_budget)?);
    }
    let passed = checks.iter().all(|c| c.verdict != Verdict::Fail);
    Ok(SuiteReport {
        schema: REPORT_SCHEMA,
        checks,
        passed,
    })
}

/// Convenience entry: the default battery at the default budget.
pub fn run_default_suite() -> Result<SuiteReport> {
    run_suite(&default_config(), DEFAULT_NODE_BUDGET)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_config_passes() {
        let report = run_suite(&SuiteConfig { checks: vec![] }, DEFAULT_NODE_BUDGET).unwrap();
        assert!(report.passed);
        assert!(report.checks.is_empty());
        assert_eq!(report.schema, 1);
    }

    #[test]
    fn config_round_trip() {
        let cfg = default_config();
        let json = serde_json::to_string_pretty(&cfg).unwrap();
        let back = parse_config(&json).unwrap();
        assert_eq!(back, cfg);
    }

    #[test]
    fn unknown_check_is_a_config_error() {
        let cfg = parse_config(r#"{"checks":[{"id":"nope"}]}"#).unwrap();
        assert!(run_suite(&cfg, DEFAULT_NODE_BUDGET).is_err());
    }

    #[test]
    fn audit_checks_run_from_config() {
        let cfg = parse_config(
            r#"{"checks":[{"id":"audit","params":{"family":"andrasfai:k=3"}},
                          {"id":"thm-c","params":{"n_max":4},"mode":"exhaustive"}]}"#,
        )
        .unwrap();
        let report = run_suite(&cfg, DEFAULT_NODE_BUDGET).unwrap();
        assert!(report.passed);
        assert_eq!(report.checks.len(), 2);
    }
}

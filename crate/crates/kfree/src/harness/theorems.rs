//! Executable theorem checks: each claim is run as a falsifiable scan over
//! every graph in range. Hypothesis thresholds are strict and compared with
//! exact rational arithmetic; conclusions are decided by the exact solvers.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::report::{AuditReport, Counterexample, FormulaRow};
use crate::enumerate::{iso_reduced_graphs, scan_labeled_sharded, MAX_EXHAUSTIVE_ORDER, MAX_ISO_ORDER};
use crate::error::{Error, Result};
use crate::generators::{andrasfai, mycielski};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::rat::{exceeds_fraction_of, Rat};
use crate::solve::{contains_subgraph, find_clique, find_homomorphism, is_k_colorable, Outcome};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremId {
    /// K_{r+1}-free, δ > (1-2/(2r-1))n implies χ ≤ r+2.
    ExtBt,
    /// K_{r+1}-free, δ > (1-(2k-1)/((2k-1)r-k+1))n implies a homomorphism
    /// to A_k + K_{r-2}.
    ExtJin,
    /// Under the ExtBt hypothesis: χ ≥ r+2 forces M_3 + K_{r-2} as a
    /// subgraph; χ ≤ r+1 under the ExtJin threshold forces the homomorphism.
    ExtCjk,
    /// Triangle-free, δ > (k+1)n/(3k+2) implies a homomorphism to A_k.
    ThmA,
    /// Triangle-free, δ > n/3: χ ≥ 4 forces M_3 ⊆ G; χ = 3 under the ThmA
    /// threshold forces the homomorphism to A_k.
    ThmB,
    /// Triangle-free, δ > n/3 implies χ ≤ 4.
    ThmC,
    /// K_{r+1}-free, δ > (1-3/(3r-1))n implies χ ≤ r.
    Aes,
}

impl TheoremId {
    pub fn parse(s: &str) -> Result<TheoremId> {
        Ok(match s {
            "ext-bt" => TheoremId::ExtBt,
            "ext-jin" => TheoremId::ExtJin,
            "ext-cjk" => TheoremId::ExtCjk,
            "thm-a" => TheoremId::ThmA,
            "thm-b" => TheoremId::ThmB,
            "thm-c" => TheoremId::ThmC,
            "aes" => TheoremId::Aes,
            other => return Err(Error::Config(format!("unknown theorem id {other:?}"))),
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            TheoremId::ExtBt => "ext-bt",
            TheoremId::ExtJin => "ext-jin",
            TheoremId::ExtCjk => "ext-cjk",
            TheoremId::ThmA => "thm-a",
            TheoremId::ThmB => "thm-b",
            TheoremId::ThmC => "thm-c",
            TheoremId::Aes => "aes",
        }
    }

    fn uses_k(&self) -> bool {
        matches!(
            self,
            TheoremId::ExtJin | TheoremId::ExtCjk | TheoremId::ThmA | TheoremId::ThmB
        )
    }

    fn triangle_free_only(&self) -> bool {
        matches!(self, TheoremId::ThmA | TheoremId::ThmB | TheoremId::ThmC)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Exhaustive,
    IsoReduced,
    GeneratedInstances,
}

impl Mode {
    pub fn parse(s: &str) -> Result<Mode> {
        Ok(match s {
            "exhaustive" => Mode::Exhaustive,
            "iso-reduced" => Mode::IsoReduced,
            "generated-instances" => Mode::GeneratedInstances,
            other => return Err(Error::Config(format!("unknown mode {other:?}"))),
        })
    }
}

#[derive(Clone, Copy, Debug)]
pub struct TheoremParams {
    pub theorem: TheoremId,
    /// Forbidden clique size parameter; the graph class is K_{r+1}-free.
    pub r: usize,
    /// Andrásfai index, used by the theorems that name A_k.
    pub k: usize,
    pub n_max: usize,
    pub mode: Mode,
    pub budget: u64,
}

/// δ threshold (as a fraction of n) of the base hypothesis: 1 - 2/(2r-1).
pub fn threshold_base(r: usize) -> Rat {
    Rat::from_integer(1) - Rat::new(2, 2 * r as i64 - 1)
}

/// δ threshold of the A_k-homomorphism hypothesis:
/// 1 - (2k-1)/((2k-1)r-k+1).
pub fn threshold_jin(r: usize, k: usize) -> Rat {
    let (r, k) = (r as i64, k as i64);
    Rat::from_integer(1) - Rat::new(2 * k - 1, (2 * k - 1) * r - k + 1)
}

/// δ threshold forcing r-colorability: 1 - 3/(3r-1).
pub fn threshold_aes(r: usize) -> Rat {
    Rat::from_integer(1) - Rat::new(3, 3 * r as i64 - 1)
}

/// δ threshold of the triangle-free A_k theorem: (k+1)/(3k+2).
pub fn threshold_thm_a(k: usize) -> Rat {
    Rat::new(k as i64 + 1, 3 * k as i64 + 2)
}

/// Per-graph outcome of a hypothesis/conclusion evaluation.
enum Eval {
    Skip,
    /// Which of the (at most two) hypothesis clauses the graph satisfied.
    Holds([bool; 2]),
    Violates { clauses: [bool; 2], detail: String },
    OutOfBudget,
}

struct Stats {
    scanned: u64,
    clause_hits: [u64; 2],
    counterexamples: Vec<Counterexample>,
    budget_exhausted: Vec<String>,
}

impl Stats {
    fn new() -> Stats {
        Stats {
            scanned: 0,
            clause_hits: [0, 0],
            counterexamples: Vec::new(),
            budget_exhausted: Vec::new(),
        }
    }

    fn absorb(&mut self, other: Stats) {
        self.scanned += other.scanned;
        self.clause_hits[0] += other.clause_hits[0];
        self.clause_hits[1] += other.clause_hits[1];
        self.counterexamples.extend(other.counterexamples);
        self.budget_exhausted.extend(other.budget_exhausted);
    }

    fn record(&mut self, g: &Graph, eval: Eval, recheck: impl Fn(&Graph) -> bool) {
        self.scanned += 1;
        match eval {
            Eval::Skip => {}
            Eval::Holds(clauses) => {
                self.clause_hits[0] += clauses[0] as u64;
                self.clause_hits[1] += clauses[1] as u64;
            }
            Eval::Violates { clauses, detail } => {
                self.clause_hits[0] += clauses[0] as u64;
                self.clause_hits[1] += clauses[1] as u64;
                self.counterexamples
                    .push(Counterexample::verified(g, detail, recheck));
            }
            Eval::OutOfBudget => self.budget_exhausted.push(to_graph6(g)),
        }
    }
}

/// Prebuilt conclusion targets for one (theorem, r, k) combination.
struct Targets {
    /// Homomorphism target (A_k, or A_k + K_{r-2}).
    hom: Option<Graph>,
    /// Subgraph pattern (M_3, or M_3 + K_{r-2}).
    pattern: Option<Graph>,
}

fn build_targets(p: &TheoremParams) -> Result<Targets> {
    let joined = |base: Graph, r: usize| -> Graph {
        if r > 2 {
            base.join(&Graph::complete(r - 2))
        } else {
            base
        }
    };
    Ok(match p.theorem {
        TheoremId::ThmA => Targets {
            hom: Some(andrasfai(p.k)?),
            pattern: None,
        },
        TheoremId::ThmB => Targets {
            hom: Some(andrasfai(p.k)?),
            pattern: Some(mycielski(3)?),
        },
        TheoremId::ExtJin => Targets {
            hom: Some(joined(andrasfai(p.k)?, p.r)),
            pattern: None,
        },
        TheoremId::ExtCjk => Targets {
            hom: Some(joined(andrasfai(p.k)?, p.r)),
            pattern: Some(joined(mycielski(3)?, p.r)),
        },
        TheoremId::ExtBt | TheoremId::ThmC | TheoremId::Aes => Targets {
            hom: None,
            pattern: None,
        },
    })
}

fn validate(p: &TheoremParams) -> Result<()> {
    if p.theorem.uses_k() && !(1..=9).contains(&p.k) {
        return Err(Error::InvalidParameter(format!(
            "k = {} out of range 1..=9: the A_k homomorphism conclusion can fail from k = 10 on",
            p.k
        )));
    }
    if p.theorem.triangle_free_only() && p.r != 2 {
        return Err(Error::InvalidParameter(format!(
            "{} concerns triangle-free graphs; r must be 2, got {}",
            p.theorem.name(),
            p.r
        )));
    }
    if p.r < 2 {
        return Err(Error::InvalidParameter("theorem checks need r >= 2".into()));
    }
    match p.mode {
        Mode::Exhaustive if p.n_max > MAX_EXHAUSTIVE_ORDER => Err(Error::InvalidParameter(format!(
            "exhaustive mode supports n <= {MAX_EXHAUSTIVE_ORDER}"
        ))),
        Mode::IsoReduced if p.n_max > MAX_ISO_ORDER => Err(Error::InvalidParameter(format!(
            "iso-reduced mode supports n <= {MAX_ISO_ORDER}"
        ))),
        _ => Ok(()),
    }
}

/// Evaluates the theorem on one graph. The hypothesis filter is strict
/// (`δ·q > p·n` by cross multiplication); boundary instances are excluded.
fn eval_graph(p: &TheoremParams, targets: &Targets, g: &Graph) -> Eval {
    let n = g.order();
    if n == 0 {
        return Eval::Skip;
    }
    let delta = g.min_degree().expect("nonempty");
    let budget = p.budget;

    // cheapest filters first: δ threshold, then clique-freeness
    let base_ok = |thr: Rat| exceeds_fraction_of(delta, thr, n);
    let clique_free = |q: usize| match find_clique(g, q, budget) {
        Outcome::Found(_) => Some(false),
        Outcome::Absent => Some(true),
        Outcome::OutOfBudget => None,
    };

    let colorable = |c: usize| match is_k_colorable(g, c, budget) {
        Outcome::Found(_) => Some(true),
        Outcome::Absent => Some(false),
        Outcome::OutOfBudget => None,
    };

    macro_rules! budgeted {
        ($e:expr) => {
            match $e {
                Some(v) => v,
                None => return Eval::OutOfBudget,
            }
        };
    }

    match p.theorem {
        TheoremId::ThmC => {
            if !base_ok(Rat::new(1, 3)) || !budgeted!(clique_free(3)) {
                return Eval::Skip;
            }
            if budgeted!(colorable(4)) {
                Eval::Holds([true, false])
            } else {
                Eval::Violates {
                    clauses: [true, false],
                    detail: "triangle-free with δ > n/3 but χ > 4".into(),
                }
            }
        }
        TheoremId::Aes => {
            if !base_ok(threshold_aes(p.r)) || !budgeted!(clique_free(p.r + 1)) {
                return Eval::Skip;
            }
            if budgeted!(colorable(p.r)) {
                Eval::Holds([true, false])
            } else {
                Eval::Violates {
                    clauses: [true, false],
                    detail: format!("δ above the r-colorability threshold but χ > {}", p.r),
                }
            }
        }
        TheoremId::ExtBt => {
            if !base_ok(threshold_base(p.r)) || !budgeted!(clique_free(p.r + 1)) {
                return Eval::Skip;
            }
            if budgeted!(colorable(p.r + 2)) {
                Eval::Holds([true, false])
            } else {
                Eval::Violates {
                    clauses: [true, false],
                    detail: format!("δ above the base threshold but χ > {}", p.r + 2),
                }
            }
        }
        TheoremId::ThmA => {
            if !base_ok(threshold_thm_a(p.k)) || !budgeted!(clique_free(3)) {
                return Eval::Skip;
            }
            let target = targets.hom.as_ref().expect("thm-a target");
            match find_homomorphism(g, target, budget) {
                Outcome::Found(_) => Eval::Holds([true, false]),
                Outcome::Absent => Eval::Violates {
                    clauses: [true, false],
                    detail: format!("no homomorphism to A_{}", p.k),
                },
                Outcome::OutOfBudget => Eval::OutOfBudget,
            }
        }
        TheoremId::ExtJin => {
            if !base_ok(threshold_jin(p.r, p.k)) || !budgeted!(clique_free(p.r + 1)) {
                return Eval::Skip;
            }
            let target = targets.hom.as_ref().expect("ext-jin target");
            match find_homomorphism(g, target, budget) {
                Outcome::Found(_) => Eval::Holds([true, false]),
                Outcome::Absent => Eval::Violates {
                    clauses: [true, false],
                    detail: format!("no homomorphism to A_{} + K_{}", p.k, p.r - 2),
                },
                Outcome::OutOfBudget => Eval::OutOfBudget,
            }
        }
        TheoremId::ThmB => {
            if !base_ok(Rat::new(1, 3)) || !budgeted!(clique_free(3)) {
                return Eval::Skip;
            }
            let mut clauses = [false, false];
            if !budgeted!(colorable(3)) {
                // χ >= 4: the Mycielski graph must embed
                clauses[0] = true;
                let pattern = targets.pattern.as_ref().expect("thm-b pattern");
                match contains_subgraph(g, pattern, budget) {
                    Outcome::Found(_) => {}
                    Outcome::Absent => {
                        return Eval::Violates {
                            clauses,
                            detail: "χ ≥ 4 but M_3 is not a subgraph".into(),
                        }
                    }
                    Outcome::OutOfBudget => return Eval::OutOfBudget,
                }
            } else if !budgeted!(colorable(2)) && base_ok(threshold_thm_a(p.k)) {
                // χ = 3 under the stronger threshold: homomorphism to A_k
                clauses[1] = true;
                let target = targets.hom.as_ref().expect("thm-b target");
                match find_homomorphism(g, target, budget) {
                    Outcome::Found(_) => {}
                    Outcome::Absent => {
                        return Eval::Violates {
                            clauses,
                            detail: format!("χ = 3 above the k-threshold but no homomorphism to A_{}", p.k),
                        }
                    }
                    Outcome::OutOfBudget => return Eval::OutOfBudget,
                }
            }
            if clauses[0] || clauses[1] {
                Eval::Holds(clauses)
            } else {
                Eval::Skip
            }
        }
        TheoremId::ExtCjk => {
            if !base_ok(threshold_base(p.r)) || !budgeted!(clique_free(p.r + 1)) {
                return Eval::Skip;
            }
            let mut clauses = [false, false];
            if !budgeted!(colorable(p.r + 1)) {
                clauses[0] = true;
                let pattern = targets.pattern.as_ref().expect("ext-cjk pattern");
                match contains_subgraph(g, pattern, budget) {
                    Outcome::Found(_) => {}
                    Outcome::Absent => {
                        return Eval::Violates {
                            clauses,
                            detail: format!("χ ≥ {} but M_3 + K_{} is not a subgraph", p.r + 2, p.r - 2),
                        }
                    }
                    Outcome::OutOfBudget => return Eval::OutOfBudget,
                }
            } else if base_ok(threshold_jin(p.r, p.k)) {
                clauses[1] = true;
                let target = targets.hom.as_ref().expect("ext-cjk target");
                match find_homomorphism(g, target, budget) {
                    Outcome::Found(_) => {}
                    Outcome::Absent => {
                        return Eval::Violates {
                            clauses,
                            detail: format!(
                                "χ ≤ {} above the k-threshold but no homomorphism to A_{} + K_{}",
                                p.r + 1,
                                p.k,
                                p.r - 2
                            ),
                        }
                    }
                    Outcome::OutOfBudget => return Eval::OutOfBudget,
                }
            }
            if clauses[0] || clauses[1] {
                Eval::Holds(clauses)
            } else {
                Eval::Skip
            }
        }
    }
}

/// Scans every graph in scope and checks the conclusion on each hypothesis
/// instance. Vacuous ranges are reported as such, never as evidence.
pub fn check_theorem(p: &TheoremParams) -> Result<AuditReport> {
    validate(p)?;
    let targets = build_targets(p)?;
    let mut stats = Stats::new();
    let mut rows: Vec<FormulaRow> = Vec::new();

    let recheck = |g: &Graph| matches!(eval_graph(p, &targets, g), Eval::Violates { .. });

    match p.mode {
        Mode::Exhaustive => {
            for n in 1..=p.n_max {
                let mut per_n = Stats::new();
                let shard_stats = scan_labeled_sharded(n, |_, graphs| {
                    let mut s = Stats::new();
                    for g in graphs {
                        s.record(&g, eval_graph(p, &targets, &g), recheck);
                    }
                    s
                })?;
                for s in shard_stats {
                    per_n.absorb(s);
                }
                push_count_rows(&mut rows, p, n, &per_n);
                stats.absorb(per_n);
            }
        }
        Mode::IsoReduced => {
            for n in 1..=p.n_max {
                let mut per_n = Stats::new();
                let evals: Vec<Stats> = iso_reduced_graphs(n)?
                    .par_iter()
                    .map(|g| {
                        let mut s = Stats::new();
                        s.record(g, eval_graph(p, &targets, g), recheck);
                        s
                    })
                    .collect();
                for s in evals {
                    per_n.absorb(s);
                }
                push_count_rows(&mut rows, p, n, &per_n);
                stats.absorb(per_n);
            }
        }
        Mode::GeneratedInstances => {
            for (name, g) in super::generated_battery(p.r, p.n_max)? {
                let mut s = Stats::new();
                s.record(&g, eval_graph(p, &targets, &g), recheck);
                rows.push(FormulaRow {
                    instance: name,
                    quantity: "hypothesis-instance".into(),
                    predicted: "-".into(),
                    measured: (s.clause_hits[0] + s.clause_hits[1]).to_string(),
                    ok: s.counterexamples.is_empty(),
                });
                stats.absorb(s);
            }
        }
    }

    let hyp = stats.clause_hits[0] + stats.clause_hits[1];
    let claim = format!(
        "theorem {} (r={}, k={}, n<={}, {:?})",
        p.theorem.name(),
        p.r,
        p.k,
        p.n_max,
        p.mode
    );
    Ok(AuditReport::finish(
        claim,
        stats.scanned,
        hyp,
        rows,
        stats.counterexamples,
        stats.budget_exhausted,
        vec![],
    ))
}

fn push_count_rows(rows: &mut Vec<FormulaRow>, p: &TheoremParams, n: usize, s: &Stats) {
    let two_clause = matches!(p.theorem, TheoremId::ThmB | TheoremId::ExtCjk);
    if two_clause {
        for (i, hits) in s.clause_hits.iter().enumerate() {
            rows.push(FormulaRow {
                instance: format!("n={n}"),
                quantity: format!("hypothesis-instances-clause-{}", i + 1),
                predicted: "-".into(),
                measured: hits.to_string(),
                ok: true,
            });
        }
    } else {
        rows.push(FormulaRow {
            instance: format!("n={n}"),
            quantity: "hypothesis-instances".into(),
            predicted: "-".into(),
            measured: s.clause_hits[0].to_string(),
            ok: true,
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solve::DEFAULT_NODE_BUDGET;

    fn params(theorem: TheoremId, r: usize, k: usize, n_max: usize) -> TheoremParams {
        TheoremParams {
            theorem,
            r,
            k,
            n_max,
            mode: Mode::Exhaustive,
            budget: DEFAULT_NODE_BUDGET,
        }
    }

    #[test]
    fn thresholds_are_exact() {
        assert_eq!(threshold_base(3), Rat::new(3, 5));
        assert_eq!(threshold_base(2), Rat::new(1, 3));
        assert_eq!(threshold_jin(3, 1), Rat::new(2, 3));
        assert_eq!(threshold_jin(3, 2), Rat::new(5, 8));
        assert_eq!(threshold_aes(2), Rat::new(2, 5));
        assert_eq!(threshold_thm_a(1), Rat::new(2, 5));
    }

    #[test]
    fn boundary_blow_up_is_excluded() {
        // A_{k+1} blown up sits exactly at the ThmA threshold for k = 1:
        // n = 5t, δ = 2t = (2/5)n. The strict filter must exclude it.
        let a2 = andrasfai(2).unwrap();
        for t in 1..=3 {
            let b = a2.blow_up(t).unwrap();
            let delta = b.min_degree().unwrap();
            assert!(!exceeds_fraction_of(delta, threshold_thm_a(1), b.order()));
        }
        // and A_{k+1}(t) at the ExtJin threshold after joining K_{r-2}:
        // join(A_2(t), K_t') with matching proportions sits at equality too
        let g = a2.blow_up(2).unwrap().join(&Graph::complete(2));
        // n = 12, δ = min(4+2, 11) = 6; threshold_jin(3,1) = 2/3: 6 = 8? no —
        // this instance is below threshold, also excluded
        assert!(!exceeds_fraction_of(
            g.min_degree().unwrap(),
            threshold_jin(3, 1),
            g.order()
        ));
    }

    #[test]
    fn thm_c_small_range_passes() {
        let report = check_theorem(&params(TheoremId::ThmC, 2, 1, 5)).unwrap();
        assert_eq!(report.verdict, crate::harness::Verdict::Pass);
        assert!(report.counterexamples.is_empty());
        // 2^C(n,2) labeled graphs for n = 1..=5
        assert_eq!(report.scanned, 1 + 2 + 8 + 64 + 1024);
        // C_5 and friends satisfy the hypothesis, so the range is not vacuous
        assert!(report.hypothesis_instances > 0);
    }

    #[test]
    fn k_range_is_enforced() {
        let err = check_theorem(&params(TheoremId::ThmA, 2, 10, 4)).unwrap_err();
        assert!(err.to_string().contains("1..=9"));
        assert!(check_theorem(&params(TheoremId::ThmA, 3, 1, 4)).is_err()); // r must be 2
    }
}

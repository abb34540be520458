//! Command-line front end: generate family instances, verify properties of
//! graph6 streams, compute ψ values, run theorem checks and audits, validate
//! certificates, and convert between formats.
//!
//! Exit codes: 0 all checks passed, 1 a check failed or a counterexample was
//! found, 2 usage, input, config or budget errors.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use kfree::cert::{Certificate, CertificateDoc};
use kfree::enumerate::psi_oracle;
use kfree::error::Error;
use kfree::generators::FamilySpec;
use kfree::graph::Graph;
use kfree::graph6::{from_graph6, to_dot, to_graph6};
use kfree::harness::{
    audit_example, check_theorem, default_config, parse_config, run_suite, AuditReport, Mode,
    SuiteEnvelope, TheoremId, TheoremParams, Verdict,
};
use kfree::rat::{parse_rat, Rat, Threshold};
use kfree::solve::{
    chromatic_number, clique_number, contains_subgraph, find_clique, find_homomorphism,
    is_k_colorable, Outcome, DEFAULT_NODE_BUDGET,
};

const BUDGET_ENV: &str = "KFREE_NODE_BUDGET";

#[derive(Parser)]
#[command(name = "kfree", version, about = "Clique-free graph families: generate, verify, enumerate, audit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenFormat {
    Graph6,
    Dot,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConvertFormat {
    Graph6,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a family instance, e.g. `gen andrasfai:k=2`
    Gen {
        /// Family spec such as `haggkvist-ext:r=3,n=48`
        spec: String,
        #[arg(long, value_enum, default_value = "graph6")]
        format: GenFormat,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Verify properties of a graph6 stream (stdin, or --input)
    Verify {
        #[arg(long)]
        input: Option<PathBuf>,
        /// Assert the graphs contain no clique of this size
        #[arg(long)]
        clique_free: Option<usize>,
        /// Assert the exact chromatic number
        #[arg(long)]
        chromatic: Option<usize>,
        /// Assert a proper coloring with at most this many colors exists
        #[arg(long)]
        k_colorable: Option<usize>,
        /// Exact strict lower bound on δ, e.g. `--min-degree-gt 1-2/5 of-n`
        #[arg(long, num_args = 1..=2)]
        min_degree_gt: Option<Vec<String>>,
        /// Assert the exact minimum degree
        #[arg(long)]
        min_degree: Option<usize>,
        /// Assert the graphs are regular of this degree
        #[arg(long)]
        regular: Option<usize>,
        /// Assert a homomorphism into this target (family spec or graph6)
        #[arg(long)]
        hom_to: Option<String>,
        /// Assert this pattern embeds as a subgraph (family spec or graph6)
        #[arg(long)]
        contains: Option<String>,
    },
    /// Exact ψ(n, r, h) with an extremal witness
    Psi { n: usize, r: usize, h: usize },
    /// Run one theorem check, e.g. `theorem ext-bt --r 3 --n-max 7`
    Theorem {
        /// One of ext-bt, ext-jin, ext-cjk, thm-a, thm-b, thm-c, aes
        id: String,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        n_max: usize,
        #[arg(long, default_value = "exhaustive")]
        mode: String,
    },
    /// Audit a generated family instance against its formula rows
    Audit {
        spec: String,
        /// ε for the extended-Hajnal lower-bound row, e.g. `1/10`
        #[arg(long)]
        epsilon: Option<String>,
    },
    /// Run a check suite from a JSON config (or the default battery)
    Suite {
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Re-validate a certificate file
    CheckCert { file: PathBuf },
    /// Convert between graph6, adjacency JSON and DOT (DOT is export-only)
    Convert {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "graph6")]
        from: ConvertFormat,
        #[arg(long, value_enum)]
        to: ConvertFormat,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn budget() -> Result<u64, Error> {
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v
            .parse()
            .map_err(|_| Error::Config(format!("{BUDGET_ENV} must be an integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_NODE_BUDGET),
    }
}

fn run(command: Command) -> Result<u8, Box<dyn std::error::Error>> {
    match command {
        Command::Gen { spec, format, output } => {
            let spec: FamilySpec = spec.parse()?;
            let g = spec.generate()?;
            let text = match format {
                GenFormat::Graph6 => to_graph6(&g) + "\n",
                GenFormat::Dot => to_dot(&g),
                GenFormat::Json => adjacency_json(&g) + "\n",
            };
            emit(output.as_deref(), &text)?;
            Ok(0)
        }
        Command::Verify {
            input,
            clique_free,
            chromatic,
            k_colorable,
            min_degree_gt,
            min_degree,
            regular,
            hom_to,
            contains,
        } => {
            let budget = budget()?;
            let threshold = min_degree_gt
                .map(|words| Threshold::parse(&words.join(" ")))
                .transpose()?;
            let hom_target = hom_to.map(|s| parse_graph_arg(&s)).transpose()?;
            let pattern = contains.map(|s| parse_graph_arg(&s)).transpose()?;
            let graphs = read_graph6_stream(input.as_deref())?;
            let checks = VerifyChecks {
                clique_free,
                chromatic,
                k_colorable,
                threshold,
                min_degree,
                regular,
                hom_target,
                pattern,
                budget,
            };
            let results: Vec<Result<(String, bool), Error>> = graphs
                .par_iter()
                .map(|g| checks.run(g))
                .collect();
            let stdout = io::stdout();
            let mut out = stdout.lock();
            let mut all_pass = true;
            let mut budget_hit = false;
            for r in results {
                match r {
                    Ok((line, pass)) => {
                        writeln!(out, "{line}")?;
                        all_pass &= pass;
                    }
                    Err(Error::OutOfBudget) => budget_hit = true,
                    Err(e) => return Err(e.into()),
                }
            }
            if budget_hit {
                eprintln!("error: {}", Error::OutOfBudget);
                return Ok(2);
            }
            Ok(if all_pass { 0 } else { 1 })
        }
        Command::Psi { n, r, h } => {
            let res = psi_oracle(n, r, h, budget()?)?;
            println!("{}", serde_json::to_string_pretty(&res)?);
            Ok(0)
        }
        Command::Theorem { id, r, k, n_max, mode } => {
            let theorem = TheoremId::parse(&id)?;
            let default_r = match theorem {
                TheoremId::ThmA | TheoremId::ThmB | TheoremId::ThmC => 2,
                _ => 3,
            };
            let report = check_theorem(&TheoremParams {
                theorem,
                r: r.unwrap_or(default_r),
                k: k.unwrap_or(1),
                n_max,
                mode: Mode::parse(&mode)?,
                budget: budget()?,
            })?;
            print_report(&report)
        }
        Command::Audit { spec, epsilon } => {
            let mut spec: FamilySpec = spec.parse()?;
            if let Some(e) = epsilon {
                let eps = parse_rat(&e)?;
                match &mut spec {
                    FamilySpec::HajnalExtended { eps: slot, .. } => *slot = Some(eps),
                    _ => {
                        return Err(Error::InvalidParameter(
                            "--epsilon applies to hajnal-ext audits".into(),
                        )
                        .into())
                    }
                }
            }
            let report = audit_example(&spec, budget()?)?;
            print_report(&report)
        }
        Command::Suite { config, output } => {
            let cfg = match config {
                Some(path) => parse_config(&fs::read_to_string(path)?)?,
                None => default_config(),
            };
            let report = run_suite(&cfg, budget()?)?;
            let envelope = SuiteEnvelope {
                generated_at: Some(
                    SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0),
                ),
                report,
            };
            let text = serde_json::to_string_pretty(&envelope)? + "\n";
            emit(output.as_deref(), &text)?;
            if envelope.report.any_budget_exhausted() {
                return Ok(2);
            }
            Ok(if envelope.report.passed { 0 } else { 1 })
        }
        Command::CheckCert { file } => {
            let doc: CertificateDoc = serde_json::from_str(&fs::read_to_string(file)?)
                .map_err(|e| Error::Certificate(e.to_string()))?;
            match doc.check() {
                Ok(()) => {
                    println!("certificate valid");
                    Ok(0)
                }
                Err(e) => {
                    println!("certificate invalid: {e}");
                    Ok(1)
                }
            }
        }
        Command::Convert { input, from, to } => {
            let text = read_input(input.as_deref())?;
            let graphs: Vec<Graph> = match from {
                ConvertFormat::Graph6 => parse_graph6_lines(&text)?,
                ConvertFormat::Json => parse_json_lines(&text)?,
                ConvertFormat::Dot => {
                    return Err(Error::InvalidParameter("DOT is export-only".into()).into())
                }
            };
            let stdout = io::stdout();
            let mut out = stdout.lock();
            for g in &graphs {
                match to {
                    ConvertFormat::Graph6 => writeln!(out, "{}", to_graph6(g))?,
                    ConvertFormat::Json => writeln!(out, "{}", adjacency_json(g))?,
                    ConvertFormat::Dot => write!(out, "{}", to_dot(g))?,
                }
            }
            Ok(0)
        }
    }
}

struct VerifyChecks {
    clique_free: Option<usize>,
    chromatic: Option<usize>,
    k_colorable: Option<usize>,
    threshold: Option<Threshold>,
    min_degree: Option<usize>,
    regular: Option<usize>,
    hom_target: Option<Graph>,
    pattern: Option<Graph>,
    budget: u64,
}

impl VerifyChecks {
    /// Runs every requested check on one graph; returns the JSON line and
    /// whether all checks passed.
    fn run(&self, g: &Graph) -> Result<(String, bool), Error> {
        let mut checks = Vec::new();
        let mut all = true;
        let mut push = |prop: &str, param: String, pass: bool, cert: Option<serde_json::Value>| {
            checks.push(json!({"prop": prop, "param": param, "pass": pass, "certificate": cert}));
            all &= pass;
        };
        if let Some(q) = self.clique_free {
            match find_clique(g, q, self.budget) {
                Outcome::Absent => push("clique-free", q.to_string(), true, None),
                Outcome::Found(c) => push(
                    "clique-free",
                    q.to_string(),
                    false,
                    Some(doc_json(Certificate::Clique(c), g, None)),
                ),
                Outcome::OutOfBudget => return Err(Error::OutOfBudget),
            }
        }
        if let Some(x) = self.chromatic {
            let (chi, coloring) = chromatic_number(g, self.budget)?;
            push(
                "chromatic",
                x.to_string(),
                chi == x,
                Some(doc_json(Certificate::Coloring(coloring), g, None)),
            );
        }
        if let Some(c) = self.k_colorable {
            match is_k_colorable(g, c, self.budget) {
                Outcome::Found(col) => push(
                    "k-colorable",
                    c.to_string(),
                    true,
                    Some(doc_json(Certificate::Coloring(col), g, None)),
                ),
                Outcome::Absent => push("k-colorable", c.to_string(), false, None),
                Outcome::OutOfBudget => return Err(Error::OutOfBudget),
            }
        }
        if let Some(thr) = self.threshold {
            let delta = g.min_degree().ok_or(Error::EmptyGraph)?;
            let bound = thr.bound(g.order());
            let pass = Rat::from_integer(delta as i64) > bound;
            push("min-degree-gt", bound.to_string(), pass, None);
        }
        if let Some(d) = self.min_degree {
            let delta = g.min_degree().ok_or(Error::EmptyGraph)?;
            push("min-degree", d.to_string(), delta == d, None);
        }
        if let Some(d) = self.regular {
            push("regular", d.to_string(), g.is_regular() == Some(d), None);
        }
        if let Some(target) = &self.hom_target {
            match find_homomorphism(g, target, self.budget) {
                Outcome::Found(map) => push(
                    "hom-to",
                    to_graph6(target),
                    true,
                    Some(doc_json(Certificate::Homomorphism(map), g, Some(target))),
                ),
                Outcome::Absent => push("hom-to", to_graph6(target), false, None),
                Outcome::OutOfBudget => return Err(Error::OutOfBudget),
            }
        }
        if let Some(pattern) = &self.pattern {
            match contains_subgraph(g, pattern, self.budget) {
                Outcome::Found(map) => push(
                    "contains",
                    to_graph6(pattern),
                    true,
                    Some(doc_json(Certificate::Embedding(map), g, Some(pattern))),
                ),
                Outcome::Absent => push("contains", to_graph6(pattern), false, None),
                Outcome::OutOfBudget => return Err(Error::OutOfBudget),
            }
        }
        let omega = match clique_number(g, self.budget) {
            Outcome::Found(w) => w,
            _ => return Err(Error::OutOfBudget),
        };
        let line = json!({
            "graph": to_graph6(g),
            "n": g.order(),
            "min_degree": g.min_degree(),
            "regular": g.is_regular(),
            "clique_number": omega,
            "checks": checks,
            "pass": all,
        });
        Ok((line.to_string(), all))
    }
}

fn doc_json(cert: Certificate, g: &Graph, second: Option<&Graph>) -> serde_json::Value {
    serde_json::to_value(cert.into_doc(g, second)).expect("certificate serializes")
}

fn print_report(report: &AuditReport) -> Result<u8, Box<dyn std::error::Error>> {
    println!("{}", serde_json::to_string_pretty(report)?);
    if !report.budget_exhausted.is_empty() {
        return Ok(2);
    }
    Ok(match report.verdict {
        Verdict::Fail => 1,
        Verdict::Pass | Verdict::Vacuous => 0,
    })
}

/// Parses a verify target: a family spec when it looks like one, otherwise a
/// graph6 literal.
fn parse_graph_arg(s: &str) -> Result<Graph, Error> {
    if s.contains(':') {
        FamilySpec::from_str(s)?.generate()
    } else {
        from_graph6(s)
    }
}

fn adjacency_json(g: &Graph) -> String {
    let edges: Vec<[usize; 2]> = g.edges().map(|(u, v)| [u, v]).collect();
    json!({"n": g.order(), "edges": edges}).to_string()
}

fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, Error> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(from_graph6)
        .collect()
}

fn parse_json_lines(text: &str) -> Result<Vec<Graph>, Error> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|line| {
            let v: serde_json::Value =
                serde_json::from_str(line).map_err(|e| Error::Graph6(e.to_string()))?;
            let n = v["n"]
                .as_u64()
                .ok_or_else(|| Error::Graph6("adjacency JSON needs an integer field n".into()))?
                as usize;
            let edges = v["edges"]
                .as_array()
                .ok_or_else(|| Error::Graph6("adjacency JSON needs an edges array".into()))?;
            let pairs: Result<Vec<(usize, usize)>, Error> = edges
                .iter()
                .map(|e| {
                    let u = e[0].as_u64();
                    let w = e[1].as_u64();
                    match (u, w) {
                        (Some(u), Some(w)) => Ok((u as usize, w as usize)),
                        _ => Err(Error::Graph6("edge entries must be integer pairs".into())),
                    }
                })
                .collect();
            Graph::from_edges(n, pairs?)
        })
        .collect()
}

fn read_graph6_stream(path: Option<&std::path::Path>) -> Result<Vec<Graph>, Box<dyn std::error::Error>> {
    Ok(parse_graph6_lines(&read_input(path)?)?)
}

fn read_input(path: Option<&std::path::Path>) -> io::Result<String> {
    match path {
        Some(p) => fs::read_to_string(p),
        None => {
            let mut buf = String::new();
            io::stdin().read_to_string(&mut buf)?;
            Ok(buf)
        }
    }
}

fn emit(path: Option<&std::path::Path>, text: &str) -> io::Result<()> {
    match path {
        Some(p) => fs::write(p, text),
        None => io::stdout().write_all(text.as_bytes()),
    }
}

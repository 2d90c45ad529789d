//! Command implementations behind the `weylcheck` binary.
//!
//! Each command returns an [`Output`] instead of printing, so the binary is a
//! thin wrapper and the documents can be tested in-process.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dynkin::{build_finite, cominuscule_nodes, minuscule_nodes, Family, NodeSet};
use crate::error::{Error, Result};
use crate::verify::{classify_case, verify_case, CaseReport, CaseSpec, LemmaId, NodeClass, Verdict, Witness};

pub const TOOL: &str = "weylcheck";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
pub const MAX_SWEEP_RANK: usize = 8;
/// Rank bound for the negative controls added to a sweep.
pub const CONTROL_RANK: usize = 6;

#[derive(Parser, Debug)]
#[command(name = "weylcheck", version, about = "Root systems, Weyl groups and lemma checks for affine Grassmannian cases")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classify the nodes of a finite type.
    Classify(ClassifyArgs),
    /// Run lemma checks on one (family, rank, node) case.
    Verify(VerifyArgs),
    /// Run every cominuscule and minuscule-only case up to a rank, plus controls.
    Sweep(SweepArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Labeling {
    Native,
}

#[derive(Args, Debug, Clone)]
pub struct ClassifyArgs {
    #[arg(long)]
    pub family: Family,
    #[arg(long)]
    pub rank: usize,
    #[arg(long)]
    pub node: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Node numbering scheme; only the built-in one is available.
    #[arg(long, value_enum, default_value = "native")]
    pub labeling: Labeling,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    #[arg(long)]
    pub family: Family,
    #[arg(long)]
    pub rank: usize,
    #[arg(long)]
    pub node: usize,
    /// One of iso, bp, phi, split, weights, dimension, or all.
    #[arg(long, default_value = "all")]
    pub lemma: String,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[arg(long, value_enum, default_value = "native")]
    pub labeling: Labeling,
}

#[derive(Args, Debug, Clone)]
pub struct SweepArgs {
    #[arg(long, default_value_t = MAX_SWEEP_RANK)]
    pub max_rank: usize,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

/// What a command would print and the process exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub exit_code: i32,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
}

impl Summary {
    pub fn tally<'a>(verdicts: impl IntoIterator<Item = &'a Verdict>) -> Self {
        let mut s = Summary::default();
        for v in verdicts {
            match v {
                Verdict::Pass => s.pass += 1,
                Verdict::Fail => s.fail += 1,
                Verdict::NotApplicable => s.not_applicable += 1,
            }
        }
        s
    }

    pub fn exit_code(&self) -> i32 {
        i32::from(self.fail > 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeInfo {
    pub node: usize,
    pub class: NodeClass,
    pub affine: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyDocument {
    pub tool: String,
    pub version: String,
    pub invocation: String,
    pub family: Family,
    pub rank: usize,
    pub cominuscule: NodeSet,
    pub minuscule: NodeSet,
    pub nodes: Vec<NodeInfo>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyDocument {
    pub tool: String,
    pub version: String,
    pub invocation: String,
    #[serde(flatten)]
    pub report: CaseReport,
    pub summary: Summary,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepDocument {
    pub tool: String,
    pub version: String,
    pub invocation: String,
    pub max_rank: usize,
    pub cases: Vec<CaseReport>,
    pub summary: Summary,
}

impl SweepDocument {
    pub fn verdicts(&self) -> impl Iterator<Item = &Verdict> {
        self.cases.iter().flat_map(|c| c.checks.iter().map(|r| &r.verdict))
    }
}

fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("report documents serialize");
    s.push('\n');
    s
}

pub fn run(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Classify(a) => cmd_classify(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Sweep(a) => cmd_sweep(a),
    }
}

fn format_flag(f: Format) -> &'static str {
    match f {
        Format::Text => "text",
        Format::Json => "json",
    }
}

pub fn classify_document(args: &ClassifyArgs) -> Result<ClassifyDocument> {
    let finite = build_finite(args.family, args.rank)?;
    let nodes: Vec<usize> = match args.node {
        Some(m) if m == 0 || m > args.rank => return Err(Error::InvalidNode(m)),
        Some(m) => vec![m],
        None => (1..=args.rank).collect(),
    };
    let nodes = nodes
        .into_iter()
        .map(|m| classify_case(args.family, args.rank, m).map(|c| NodeInfo { node: m, class: c.class, affine: c.affine.diagram }))
        .collect::<Result<_>>()?;
    let mut invocation = format!("{TOOL} classify --family {} --rank {}", args.family, args.rank);
    if let Some(m) = args.node {
        write!(invocation, " --node {m}").unwrap();
    }
    write!(invocation, " --format {}", format_flag(args.format)).unwrap();
    Ok(ClassifyDocument {
        tool: TOOL.into(),
        version: VERSION.into(),
        invocation,
        family: args.family,
        rank: args.rank,
        cominuscule: cominuscule_nodes(&finite)?,
        minuscule: minuscule_nodes(&finite)?,
        nodes,
    })
}

pub fn cmd_classify(args: &ClassifyArgs) -> Result<Output> {
    let doc = classify_document(args)?;
    let stdout = match args.format {
        Format::Json => to_json(&doc),
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "{}{}", doc.family, doc.rank).unwrap();
            writeln!(s, "cominuscule {}", doc.cominuscule).unwrap();
            writeln!(s, "minuscule   {}", doc.minuscule).unwrap();
            writeln!(s, "{:<6}{:<16}affine", "node", "class").unwrap();
            for n in &doc.nodes {
                writeln!(s, "{:<6}{:<16}{}", n.node, n.class.to_string(), n.affine).unwrap();
            }
            s
        }
    };
    Ok(Output { stdout, exit_code: 0 })
}

fn parse_lemmas(s: &str) -> Result<Vec<LemmaId>> {
    if s == "all" {
        return Ok(LemmaId::ALL.to_vec());
    }
    s.parse::<LemmaId>().map(|l| vec![l]).map_err(Error::Invariant)
}

pub fn verify_document(args: &VerifyArgs) -> Result<VerifyDocument> {
    let lemmas = parse_lemmas(&args.lemma)?;
    let spec = classify_case(args.family, args.rank, args.node)?;
    let report = verify_case(spec, &lemmas)?;
    let summary = Summary::tally(report.checks.iter().map(|c| &c.verdict));
    Ok(VerifyDocument {
        tool: TOOL.into(),
        version: VERSION.into(),
        invocation: format!(
            "{TOOL} verify --family {} --rank {} --node {} --lemma {} --format {}",
            args.family,
            args.rank,
            args.node,
            args.lemma,
            format_flag(args.format)
        ),
        report,
        summary,
    })
}

fn witness_text(w: &Witness) -> String {
    match w {
        Witness::Isomorphism { mapping } => {
            mapping.iter().map(|(a, b)| format!("{a}->{b}")).collect::<Vec<_>>().join(" ")
        }
        Witness::NoIsomorphism { from, to, pin } => format!("no isomorphism {from} -> {to} with {}->{}", pin.0, pin.1),
        Witness::Root { root, node, coefficient } => format!("{root} has coefficient {coefficient} at node {node}"),
        Witness::SplitTriple { alpha, beta, sum } => format!("{alpha} + {beta} = {sum}"),
        Witness::UnmatchedRoot { root, set } => format!("{root} in {set} has no partner"),
        Witness::RootPair { alpha, beta, reason } => format!("{alpha}, {beta}: {reason}"),
        Witness::Mismatch { quantity, expected, found } => format!("{quantity}: expected {expected}, found {found}"),
    }
}

fn case_text(out: &mut String, report: &CaseReport) {
    writeln!(out, "{}", report.case).unwrap();
    if let Some(first) = report.checks.first() {
        let m = &first.metrics;
        writeln!(
            out,
            "  dim X = {}, l(w0) = {}, l(wm) = {}, l(y) = {}",
            m.dim_x, m.len_w0, m.len_wm, m.len_y
        )
        .unwrap();
    }
    for c in &report.checks {
        let mut parts: Vec<String> = c.witness.iter().map(witness_text).collect();
        parts.extend(c.notes.iter().map(|n| format!("({n})")));
        let line = format!("  {:<10}{:<16}{}", c.lemma.as_str(), c.verdict.to_string(), parts.join(" "));
        writeln!(out, "{}", line.trim_end()).unwrap();
    }
}

fn summary_text(out: &mut String, s: &Summary) {
    writeln!(out, "pass {}, fail {}, not-applicable {}", s.pass, s.fail, s.not_applicable).unwrap();
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<Output> {
    let doc = verify_document(args)?;
    let stdout = match args.format {
        Format::Json => to_json(&doc),
        Format::Text => {
            let mut s = String::new();
            case_text(&mut s, &doc.report);
            summary_text(&mut s, &doc.summary);
            s
        }
    };
    Ok(Output { stdout, exit_code: doc.summary.exit_code() })
}

/// Cases of a sweep in (family, rank, node) order, each with its lemma list.
/// Nodes of neither class are controls and only run `bp` and `phi`.
pub fn sweep_cases(max_rank: usize) -> Result<Vec<(CaseSpec, Vec<LemmaId>)>> {
    if max_rank == 0 || max_rank > MAX_SWEEP_RANK {
        return Err(Error::TooLarge(MAX_SWEEP_RANK));
    }
    let mut out = Vec::new();
    for (f, n) in Family::types_up_to(max_rank) {
        for m in 1..=n {
            let spec = classify_case(f, n, m)?;
            let lemmas = match spec.class {
                NodeClass::Cominuscule | NodeClass::MinusculeOnly => LemmaId::ALL.to_vec(),
                NodeClass::Neither if n <= CONTROL_RANK => vec![LemmaId::Bp, LemmaId::Phi],
                NodeClass::Neither => continue,
            };
            out.push((spec, lemmas));
        }
    }
    Ok(out)
}

pub fn sweep_document(args: &SweepArgs) -> Result<SweepDocument> {
    let cases = sweep_cases(args.max_rank)?
        .into_par_iter()
        .map(|(spec, lemmas)| verify_case(spec, &lemmas))
        .collect::<Result<Vec<_>>>()?;
    let summary = Summary::tally(cases.iter().flat_map(|c| c.checks.iter().map(|r| &r.verdict)));
    Ok(SweepDocument {
        tool: TOOL.into(),
        version: VERSION.into(),
        invocation: format!("{TOOL} sweep --max-rank {} --format {}", args.max_rank, format_flag(args.format)),
        max_rank: args.max_rank,
        cases,
        summary,
    })
}

pub fn cmd_sweep(args: &SweepArgs) -> Result<Output> {
    let doc = sweep_document(args)?;
    let stdout = match args.format {
        Format::Json => to_json(&doc),
        Format::Text => {
            let mut s = String::new();
            for c in &doc.cases {
                case_text(&mut s, c);
            }
            summary_text(&mut s, &doc.summary);
            s
        }
    };
    Ok(Output { stdout, exit_code: doc.summary.exit_code() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn classify(f: Family, n: usize) -> ClassifyDocument {
        classify_document(&ClassifyArgs { family: f, rank: n, node: None, format: Format::Json, labeling: Labeling::Native })
            .unwrap()
    }

    #[test]
    fn classify_examples() {
        let b4 = classify(Family::B, 4);
        assert_eq!((b4.cominuscule.to_string(), b4.minuscule.to_string()), ("{1}".into(), "{4}".into()));
        let a5 = classify(Family::A, 5);
        assert_eq!(a5.cominuscule, (1..=5).collect());
        assert_eq!(a5.minuscule, (1..=5).collect());
        assert_eq!(classify(Family::D, 5).cominuscule.to_string(), "{1,4,5}");
    }

    #[test]
    fn sweep_case_lists() {
        let small = sweep_cases(2).unwrap();
        let names: Vec<String> = small.iter().map(|(c, _)| format!("{}{}:{}", c.family, c.rank, c.node)).collect();
        assert_eq!(names, ["A1:1", "A2:1", "A2:2", "B2:1", "B2:2", "C2:1", "C2:2", "G2:1", "G2:2"]);
        let full = sweep_cases(8).unwrap();
        assert!(full.iter().any(|(c, _)| (c.family, c.rank, c.node) == (Family::E, 6, 5)));
        assert!(full.iter().any(|(c, _)| (c.family, c.rank, c.node) == (Family::E, 7, 6)));
        assert!(full.iter().all(|(c, l)| c.class != NodeClass::Neither || (c.rank <= CONTROL_RANK && l.len() == 2)));
        assert!(sweep_cases(9).is_err());
        assert!(sweep_cases(0).is_err());
    }

    #[test]
    fn summary_tally_and_exit_code() {
        let s = Summary::tally(&[Verdict::Pass, Verdict::NotApplicable, Verdict::Pass]);
        assert_eq!(s, Summary { pass: 2, fail: 0, not_applicable: 1 });
        assert_eq!(s.exit_code(), 0);
        assert_eq!(Summary::tally(&[Verdict::Fail]).exit_code(), 1);
    }

    #[test]
    fn unknown_lemma_is_rejected() {
        assert!(parse_lemmas("lemma5").is_err());
        assert_eq!(parse_lemmas("all").unwrap().len(), 6);
    }
}

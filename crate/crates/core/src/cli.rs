//! The `langreach` command line. [`dispatch`] parses arguments, runs one
//! subcommand and returns the process exit code:
//!
//! | code | meaning |
//! |---|---|
//! | 0 | reachable, member, valid witness, or the command succeeded |
//! | 1 | unreachable, not a member, or invalid witness |
//! | 2 | usage, input or format error |
//! | 3 | nothing found within a bounded search |

use std::fs;
use std::io::Write;
use std::path::{Path as FsPath, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gen;
use crate::grammar::{normalize, parse_cfg, parse_dfa, Cfg, Dfa, GrammarError, NormalForm};
use crate::graph::{
    parse_graph, path_yield, render_graph_as, Direction, FileKind, GraphError, GraphKind, LabeledGraph, Path, PathError,
    Step,
};
use crate::languages::{Builtin, Membership};
use crate::reach::{
    bounded_enum_reach_with_stats, cfl_reach_table, dag_enum_reach_with_stats, expand_witness, regular_reach_with_stats,
    tree_reach, ExpandError, Fact, ReachError, SolveStats, Witness,
};
use crate::reductions::{
    d2reach_to_dd2_ureach, mcvp_to_d2_reach, nbc_to_d2_dagreach, parse_circuit, parse_vc, reach_to_abstar_ureach,
    render_circuit, render_vc, vc_to_a_dagreach, ReductionError,
};

pub const DEFAULT_EXPAND_LIMIT: u64 = 1_000_000;

#[derive(Debug, Parser)]
#[command(name = "langreach", version, about = "Language-constrained reachability on edge-labeled graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether some source-to-target path spells a word of the language
    Solve(SolveArgs),
    /// Test a single string for membership
    Member(MemberArgs),
    /// Build a reduction instance
    Reduce(ReduceArgs),
    /// Generate a seeded random instance
    Gen(GenArgs),
    /// Replay a witness file against a graph and a language
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct LanguageArgs {
    /// Context-free grammar file
    #[arg(long)]
    grammar: Option<PathBuf>,
    /// DFA file
    #[arg(long)]
    dfa: Option<PathBuf>,
    /// Shipped recognizer: d2, dd2, nbc-d2, lang-a, abstar
    #[arg(long)]
    builtin: Option<Builtin>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Regular,
    Cfl,
    DagEnum,
    BoundedEnum,
    Tree,
}

#[derive(Debug, Args)]
struct SolveArgs {
    #[arg(long)]
    graph: PathBuf,
    #[command(flatten)]
    language: LanguageArgs,
    /// Defaults to `regular` for automata, `cfl` for grammars and
    /// `dag-enum` for recognizers without a grammar
    #[arg(long, value_enum)]
    mode: Option<Mode>,
    /// Path length bound for `bounded-enum`
    #[arg(long)]
    max_len: Option<usize>,
    /// Longest witness path that `cfl` mode will spell out
    #[arg(long, default_value_t = DEFAULT_EXPAND_LIMIT)]
    expand_limit: u64,
    #[arg(long)]
    json: bool,
    /// Include wall time in the report
    #[arg(long)]
    timing: bool,
    /// Also write the witness path to this file
    #[arg(long)]
    witness_out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct MemberArgs {
    #[command(flatten)]
    language: LanguageArgs,
    #[arg(long)]
    string: String,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReduceKind {
    ReachToAbstar,
    NbcToD2,
    McvpToD2,
    D2ToDd2,
    VcToA,
}

#[derive(Debug, Args)]
struct ReduceArgs {
    #[arg(value_enum)]
    kind: ReduceKind,
    /// Input instance file
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Block-choice string for `nbc-to-d2`, instead of `--in`
    #[arg(long)]
    string: Option<String>,
    /// Output graph file; standard output when absent
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenKind {
    Graph,
    Dag,
    Circuit,
    Vc,
    Nbc,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(value_enum)]
    kind: GenKind,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Vertex count
    #[arg(long, default_value_t = 6)]
    n: usize,
    /// Edge count for graphs and DAGs
    #[arg(long, default_value_t = 10)]
    m: usize,
    /// Edge labels
    #[arg(long, default_value = "()[]")]
    alphabet: String,
    #[arg(long)]
    undirected: bool,
    /// Maximum gate count
    #[arg(long, default_value_t = 15)]
    gates: usize,
    /// Edge probability for vertex-cover instances
    #[arg(long, default_value_t = 0.4)]
    p: f64,
    /// Cover budget; defaults to n / 2
    #[arg(long)]
    k: Option<usize>,
    /// Maximum block count for block-choice strings
    #[arg(long, default_value_t = 8)]
    blocks: usize,
    /// Maximum piece length for block-choice strings
    #[arg(long, default_value_t = 4)]
    piece: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    witness: PathBuf,
    #[command(flatten)]
    language: LanguageArgs,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Graph { path: PathBuf, source: GraphError },
    #[error("{path}: {source}")]
    Grammar { path: PathBuf, source: GrammarError },
    #[error("{0}")]
    Reach(#[from] ReachError),
    #[error("{0}")]
    Reduction(#[from] ReductionError),
    #[error("{0}")]
    Usage(String),
    #[error("witness file line {line}: {message}")]
    WitnessFormat { line: usize, message: String },
    #[error("internal check failed, refusing to report: {0}")]
    SelfCheck(String),
    #[error("writing output: {0}")]
    Output(#[from] std::io::Error),
    #[error("encoding report: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Decision {
    Reachable,
    Unreachable,
    UnknownBounded,
}

impl Decision {
    pub fn as_str(self) -> &'static str {
        match self {
            Decision::Reachable => "reachable",
            Decision::Unreachable => "unreachable",
            Decision::UnknownBounded => "unknown-bounded",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Decision::Reachable => 0,
            Decision::Unreachable => 1,
            Decision::UnknownBounded => 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportStats {
    pub facts: usize,
    pub pops: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
}

/// Outcome of `solve`. `witness_path` is present only for reachable answers
/// and is rendered in the witness file format.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveReport {
    pub decision: Decision,
    pub mode: Mode,
    pub witness_path: Option<String>,
    #[serde(rename = "yield")]
    pub yield_: Option<String>,
    pub stats: ReportStats,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Serialize for Mode {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.to_possible_value().expect("no skipped variants").get_name())
    }
}

impl<'de> Deserialize<'de> for Mode {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Mode::from_str(&s, false).map_err(serde::de::Error::custom)
    }
}

impl SolveReport {
    pub fn render_text(&self) -> String {
        let mut out = format!("decision: {}\n", self.decision.as_str());
        out.push_str(&format!("mode: {}\n", self.mode.to_possible_value().expect("named").get_name()));
        if let Some(y) = &self.yield_ {
            out.push_str(&format!("yield: {y}\n"));
        }
        if let Some(p) = &self.witness_path {
            out.push_str("witness:\n");
            for line in p.lines() {
                out.push_str("  ");
                out.push_str(line);
                out.push('\n');
            }
        }
        out.push_str(&format!("facts: {}\npops: {}\n", self.stats.facts, self.stats.pops));
        if let Some(ms) = self.stats.wall_time_ms {
            out.push_str(&format!("wall time: {ms:.3} ms\n"));
        }
        if let Some(note) = &self.note {
            out.push_str(&format!("note: {note}\n"));
        }
        out
    }
}

/// The language selected on the command line.
pub enum Language {
    Grammar(Cfg, NormalForm),
    Automaton(Dfa),
    Builtin(Builtin),
}

impl Language {
    fn cfg(&self) -> Option<Cfg> {
        match self {
            Language::Grammar(g, _) => Some(g.clone()),
            Language::Automaton(_) => None,
            Language::Builtin(b) => b.grammar(),
        }
    }

    fn dfa(&self) -> Option<Dfa> {
        match self {
            Language::Grammar(..) => None,
            Language::Automaton(d) => Some(d.clone()),
            Language::Builtin(b) => b.dfa(),
        }
    }

    fn default_mode(&self) -> Mode {
        if self.dfa().is_some() {
            Mode::Regular
        } else if self.cfg().is_some() {
            Mode::Cfl
        } else {
            Mode::DagEnum
        }
    }
}

impl Membership for Language {
    fn accepts(&self, w: &str) -> bool {
        match self {
            Language::Grammar(_, nf) => nf.accepts(w),
            Language::Automaton(d) => d.accepts(w),
            Language::Builtin(b) => b.accepts(w),
        }
    }

    fn may_extend(&self, prefix: &str, budget: usize) -> bool {
        match self {
            Language::Builtin(b) => b.may_extend(prefix, budget),
            _ => true,
        }
    }
}

/// Runs the command line `args` (program name first), writing the report to
/// `out` and diagnostics to `err`, and returns the exit code.
pub fn dispatch<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let result = match cli.command {
        Command::Solve(a) => solve(&a, out),
        Command::Member(a) => member(&a, out),
        Command::Reduce(a) => reduce(&a, out),
        Command::Gen(a) => generate(&a, out),
        Command::Verify(a) => verify(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn read(path: &FsPath) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

fn write_file(path: &FsPath, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

fn load_graph(path: &FsPath) -> Result<LabeledGraph, CliError> {
    parse_graph(&read(path)?).map_err(|source| CliError::Graph { path: path.to_owned(), source })
}

fn load_language(a: &LanguageArgs) -> Result<Language, CliError> {
    let grammar_err = |path: &FsPath, source| CliError::Grammar { path: path.to_owned(), source };
    if let Some(path) = &a.grammar {
        let cfg = parse_cfg(&read(path)?).map_err(|e| grammar_err(path, e))?;
        let nf = normalize(&cfg);
        Ok(Language::Grammar(cfg, nf))
    } else if let Some(path) = &a.dfa {
        Ok(Language::Automaton(parse_dfa(&read(path)?).map_err(|e| grammar_err(path, e))?))
    } else if let Some(b) = a.builtin {
        Ok(Language::Builtin(b))
    } else {
        Err(CliError::Usage("one of --grammar, --dfa or --builtin is required".into()))
    }
}

struct Outcome {
    decision: Decision,
    path: Option<Path>,
    stats: SolveStats,
    note: Option<String>,
}

impl Outcome {
    fn found(path: Option<Path>, stats: SolveStats, otherwise: Decision) -> Self {
        let decision = if path.is_some() { Decision::Reachable } else { otherwise };
        Outcome { decision, path, stats, note: None }
    }
}

fn run_mode(g: &LabeledGraph, lang: &Language, mode: Mode, a: &SolveArgs) -> Result<Outcome, CliError> {
    Ok(match mode {
        Mode::Regular => {
            let d = lang.dfa().ok_or_else(|| CliError::Usage("regular mode needs --dfa or --builtin abstar".into()))?;
            let (p, stats) = regular_reach_with_stats(g, &d)?;
            Outcome::found(p, stats, Decision::Unreachable)
        }
        Mode::Cfl => {
            let cfg = lang.cfg().ok_or_else(|| CliError::Usage("cfl mode needs --grammar or --builtin d2|dd2".into()))?;
            let nf = match lang {
                Language::Grammar(_, nf) => nf.clone(),
                _ => normalize(&cfg),
            };
            let table = cfl_reach_table(g, &nf)?;
            let stats = table.stats();
            let root = table.lookup(&Fact { from: g.source(), nonterminal: nf.start(), to: g.target() });
            match root {
                None => Outcome::found(None, stats, Decision::Unreachable),
                Some(root) => match expand_witness(&Witness::new(table, root), a.expand_limit) {
                    Ok(p) => Outcome::found(Some(p), stats, Decision::Unreachable),
                    Err(e @ ExpandError::LimitExceeded { .. }) => {
                        Outcome { decision: Decision::Reachable, path: None, stats, note: Some(e.to_string()) }
                    }
                    Err(e) => return Err(CliError::SelfCheck(e.to_string())),
                },
            }
        }
        Mode::DagEnum => {
            let (p, stats) = dag_enum_reach_with_stats(g, lang)?;
            Outcome::found(p, stats, Decision::Unreachable)
        }
        Mode::BoundedEnum => {
            let max_len = a.max_len.ok_or_else(|| CliError::Usage("bounded-enum mode needs --max-len".into()))?;
            let (p, stats) = bounded_enum_reach_with_stats(g, lang, max_len);
            Outcome::found(p, stats, Decision::UnknownBounded)
        }
        Mode::Tree => match tree_reach(g, lang) {
            Ok(p) => Outcome::found(p, SolveStats::default(), Decision::Unreachable),
            Err(e @ ReachError::NoRespectingPath) => Outcome {
                decision: Decision::Unreachable,
                path: None,
                stats: SolveStats::default(),
                note: Some(e.to_string()),
            },
            Err(e) => return Err(e.into()),
        },
    })
}

fn solve(a: &SolveArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let g = load_graph(&a.graph)?;
    let lang = load_language(&a.language)?;
    let mode = a.mode.unwrap_or_else(|| lang.default_mode());
    let clock = Instant::now();
    let outcome = run_mode(&g, &lang, mode, a)?;
    let elapsed = clock.elapsed();

    let (witness_path, yield_) = match &outcome.path {
        Some(p) => {
            let y = check_witness(&g, p, &lang).map_err(CliError::SelfCheck)?;
            (Some(render_witness(&g, p)), Some(y))
        }
        None => (None, None),
    };
    if let (Some(path), Some(text)) = (&a.witness_out, &witness_path) {
        write_file(path, text)?;
    }
    let report = SolveReport {
        decision: outcome.decision,
        mode,
        witness_path,
        yield_,
        stats: ReportStats {
            facts: outcome.stats.facts,
            pops: outcome.stats.pops,
            wall_time_ms: a.timing.then_some(elapsed.as_secs_f64() * 1000.0),
        },
        note: outcome.note,
    };
    if a.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
    } else {
        out.write_all(report.render_text().as_bytes())?;
    }
    Ok(report.decision.exit_code())
}

/// Checks that `p` runs from the graph's source to its target and that its
/// yield is in the language; returns the yield.
pub fn check_witness<M: Membership + ?Sized>(g: &LabeledGraph, p: &Path, lang: &M) -> Result<String, String> {
    if p.start != g.source() {
        return Err(format!("path starts at {}, not at the source {}", p.start, g.source()));
    }
    let end = p.end(g).map_err(|e| e.to_string())?;
    if end != g.target() {
        return Err(format!("path ends at {end}, not at the target {}", g.target()));
    }
    let y = path_yield(g, p).map_err(|e| e.to_string())?;
    if !lang.accepts(&y) {
        return Err(format!("yield {y:?} is not in the language"));
    }
    Ok(y)
}

/// ```text
/// path <start> <steps>
/// <edge> >|< <from> <to> <label>     (one line per step)
/// yield <word>
/// ```
/// `>` follows the edge as stored, `<` crosses an undirected edge backwards.
pub fn render_witness(g: &LabeledGraph, p: &Path) -> String {
    let mut out = format!("path {} {}\n", p.start, p.steps.len());
    let mut at = p.start;
    for step in &p.steps {
        let e = g.edge(step.edge).expect("checked path");
        let (arrow, next) = match step.direction {
            Direction::Forward => ('>', e.to),
            Direction::Backward => ('<', e.from),
        };
        out.push_str(&format!("{} {} {} {} {}\n", step.edge, arrow, at, next, e.label));
        at = next;
    }
    let y = path_yield(g, p).expect("checked path");
    if y.is_empty() {
        out.push_str("yield\n");
    } else {
        out.push_str(&format!("yield {y}\n"));
    }
    out
}

/// A parsed witness file: the path plus the per-step claims it makes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessFile {
    pub path: Path,
    /// `(from, to, label)` as written on each step line
    pub claims: Vec<(usize, usize, char)>,
    pub yield_: String,
}

pub fn parse_witness(text: &str) -> Result<WitnessFile, CliError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
    let bad = |line: usize, message: String| CliError::WitnessFormat { line, message };
    let num = |line: usize, tok: &str| tok.parse::<usize>().map_err(|_| bad(line, format!("bad number {tok:?}")));
    let (hl, header) = lines.next().ok_or_else(|| bad(1, "empty witness".into()))?;
    let (start, count) = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["path", s, k] => (num(hl, s)?, num(hl, k)?),
        _ => return Err(bad(hl, "expected `path <start> <steps>`".into())),
    };
    let mut steps = Vec::with_capacity(count);
    let mut claims = Vec::with_capacity(count);
    for i in 0..count {
        let (line, text) = lines.next().ok_or_else(|| bad(hl + 1 + i, format!("expected {count} steps, found {i}")))?;
        match text.split_whitespace().collect::<Vec<_>>().as_slice() {
            [e, dir, from, to, label] if label.chars().count() == 1 => {
                let edge = num(line, e)?;
                let step = match *dir {
                    ">" => Step::forward(edge),
                    "<" => Step::backward(edge),
                    _ => return Err(bad(line, format!("direction must be > or <, found {dir:?}"))),
                };
                steps.push(step);
                claims.push((num(line, from)?, num(line, to)?, label.chars().next().expect("one char")));
            }
            _ => return Err(bad(line, format!("bad step line {text:?}"))),
        }
    }
    let (yl, ytext) = lines.next().ok_or_else(|| bad(hl + count + 1, "missing `yield` line".into()))?;
    let yield_ = match ytext.strip_prefix("yield") {
        Some(rest) if rest.is_empty() || rest.starts_with(char::is_whitespace) => rest.trim().to_string(),
        _ => return Err(bad(yl, "expected `yield <word>`".into())),
    };
    if let Some((line, extra)) = lines.next() {
        return Err(bad(line, format!("unexpected trailing content {extra:?}")));
    }
    Ok(WitnessFile { path: Path { start, steps }, claims, yield_ })
}

/// Replays a parsed witness: step claims must match the graph, and the
/// path must pass [`check_witness`] with the recorded yield.
pub fn replay_witness<M: Membership + ?Sized>(g: &LabeledGraph, w: &WitnessFile, lang: &M) -> Result<(), String> {
    let vertices = w.path.vertices(g).map_err(|e: PathError| e.to_string())?;
    for (i, (step, &(from, to, label))) in w.path.steps.iter().zip(&w.claims).enumerate() {
        let e = g.edge(step.edge).expect("vertices() checked every edge");
        if (vertices[i], vertices[i + 1], e.label) != (from, to, label) {
            return Err(format!(
                "step {i}: file says {from} -> {to} reading {label:?}, graph has {} -> {} reading {:?}",
                vertices[i],
                vertices[i + 1],
                e.label
            ));
        }
    }
    let y = check_witness(g, &w.path, lang)?;
    if y != w.yield_ {
        return Err(format!("recorded yield {:?} differs from the path's yield {y:?}", w.yield_));
    }
    Ok(())
}

#[derive(Serialize)]
struct VerifyReport<'a> {
    valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<&'a str>,
}

fn verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let g = load_graph(&a.graph)?;
    let lang = load_language(&a.language)?;
    let w = parse_witness(&read(&a.witness)?)?;
    let result = replay_witness(&g, &w, &lang);
    let reason = result.as_ref().err().map(String::as_str);
    if a.json {
        writeln!(out, "{}", serde_json::to_string(&VerifyReport { valid: reason.is_none(), reason })?)?;
    } else {
        match reason {
            None => writeln!(out, "valid")?,
            Some(r) => writeln!(out, "invalid: {r}")?,
        }
    }
    Ok(if result.is_ok() { 0 } else { 1 })
}

fn member(a: &MemberArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let lang = load_language(&a.language)?;
    let accepted = lang.accepts(&a.string);
    if a.json {
        writeln!(out, "{}", serde_json::json!({ "string": a.string, "member": accepted }))?;
    } else {
        writeln!(out, "{}", if accepted { "member" } else { "not a member" })?;
    }
    Ok(if accepted { 0 } else { 1 })
}

fn reduce(a: &ReduceArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let input = || match &a.input {
        Some(path) => read(path),
        None => Err(CliError::Usage("this reduction needs --in".into())),
    };
    let (g, kind) = match a.kind {
        ReduceKind::ReachToAbstar => (reach_to_abstar_ureach(&load_graph_from(a, input()?)?)?, FileKind::Undirected),
        ReduceKind::D2ToDd2 => (d2reach_to_dd2_ureach(&load_graph_from(a, input()?)?)?, FileKind::Undirected),
        ReduceKind::NbcToD2 => {
            let w = match (&a.string, &a.input) {
                (Some(w), None) => w.clone(),
                (None, Some(_)) => input()?.trim().to_string(),
                _ => return Err(CliError::Usage("nbc-to-d2 needs exactly one of --string or --in".into())),
            };
            (nbc_to_d2_dagreach(&w)?, FileKind::Dag)
        }
        ReduceKind::McvpToD2 => (mcvp_to_d2_reach(&parse_circuit(&input()?)?), FileKind::Directed),
        ReduceKind::VcToA => (vc_to_a_dagreach(&parse_vc(&input()?)?), FileKind::Dag),
    };
    let text = render_graph_as(&g, kind);
    match &a.out {
        Some(path) => {
            write_file(path, &text)?;
            writeln!(out, "wrote {} vertices and {} edges to {}", g.vertex_count(), g.edges().len(), path.display())?;
        }
        None => out.write_all(text.as_bytes())?,
    }
    Ok(0)
}

fn load_graph_from(a: &ReduceArgs, text: String) -> Result<LabeledGraph, CliError> {
    let path = a.input.clone().unwrap_or_default();
    parse_graph(&text).map_err(|source| CliError::Graph { path, source })
}

fn generate(a: &GenArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let mut rng = gen::seeded(a.seed);
    let alphabet: Vec<char> = a.alphabet.chars().collect();
    let needs_vertices = matches!(a.kind, GenKind::Graph | GenKind::Dag);
    if needs_vertices && (a.n == 0 || alphabet.is_empty()) {
        return Err(CliError::Usage("graphs need --n at least 1 and a nonempty --alphabet".into()));
    }
    let text = match a.kind {
        GenKind::Graph => {
            let kind = if a.undirected { GraphKind::Undirected } else { GraphKind::Directed };
            gen::random_graph(&mut rng, kind, a.n, a.m, &alphabet).to_string()
        }
        GenKind::Dag => render_graph_as(&gen::random_dag(&mut rng, a.n, a.m, &alphabet), FileKind::Dag),
        GenKind::Circuit => {
            if a.gates == 0 {
                return Err(CliError::Usage("--gates must be at least 1".into()));
            }
            render_circuit(&gen::random_circuit(&mut rng, a.gates))
        }
        GenKind::Vc => {
            if !(0.0..=1.0).contains(&a.p) {
                return Err(CliError::Usage("--p must lie in [0, 1]".into()));
            }
            render_vc(&gen::random_vc(&mut rng, a.n, a.p, a.k.unwrap_or(a.n / 2)))
        }
        GenKind::Nbc => {
            if a.piece == 0 {
                return Err(CliError::Usage("--piece must be at least 1".into()));
            }
            format!("{}\n", gen::random_nbc(&mut rng, a.blocks, a.piece))
        }
    };
    match &a.out {
        Some(path) => write_file(path, &text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;
    use crate::languages::d2_member;

    fn run(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = dispatch(std::iter::once("langreach").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn member_exit_codes() {
        assert_eq!(run(&["member", "--builtin", "lang-a", "--string", "10#1#1#0"]).0, 0);
        assert_eq!(run(&["member", "--builtin", "d2", "--string", "(]"]).0, 1);
        assert_eq!(run(&["member", "--builtin", "nope", "--string", "x"]).0, 2);
    }

    #[test]
    fn usage_errors_exit_two() {
        let (code, _, err) = run(&["solve"]);
        assert_eq!(code, 2);
        assert!(err.contains("--graph"));
        assert_eq!(run(&["member", "--builtin", "d2", "--dfa", "x", "--string", "()"]).0, 2);
    }

    #[test]
    fn witness_round_trip() {
        let g = parse_graph("undirected 3 2\n()\n1 2 (\n0 1 )\n2 0").unwrap();
        let p = Path { start: 2, steps: vec![Step::backward(0), Step::backward(1)] };
        let text = render_witness(&g, &p);
        assert_eq!(text, "path 2 2\n0 < 2 1 (\n1 < 1 0 )\nyield ()\n");
        let w = parse_witness(&text).unwrap();
        assert_eq!(w.path, p);
        assert_eq!(replay_witness(&g, &w, &d2_member), Ok(()));
        let forged = parse_witness("path 2 2\n0 < 2 1 (\n1 < 1 0 ]\nyield (]\n").unwrap();
        assert!(replay_witness(&g, &forged, &d2_member).is_err());
    }

    #[test]
    fn empty_witness() {
        let g = parse_graph("directed 1 0\nab\n0 0").unwrap();
        let text = render_witness(&g, &Path::empty(0));
        assert_eq!(text, "path 0 0\nyield\n");
        assert_eq!(parse_witness(&text).unwrap().yield_, "");
    }

    #[test]
    fn report_json_round_trip() {
        let report = SolveReport {
            decision: Decision::UnknownBounded,
            mode: Mode::BoundedEnum,
            witness_path: None,
            yield_: None,
            stats: ReportStats { facts: 3, pops: 9, wall_time_ms: None },
            note: None,
        };
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.contains("\"unknown-bounded\"") && json.contains("\"bounded-enum\""));
        assert_eq!(serde_json::from_str::<SolveReport>(&json).unwrap(), report);
    }
}

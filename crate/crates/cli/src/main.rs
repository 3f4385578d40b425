//! `tessella`: generate instances, compute tessellation cover numbers and
//! star numbers, decide goodness, and replay the verification suites.
//!
//! Graphs are read as 0-indexed DIMACS-style edge lists:
//!
//! ```text
//! c comment
//! p <n> <m>
//! e <u> <v>
//! ```

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use tessella_core::analysis::{
    conjecture_scan_with, gtr, verify_with_limit, Profile, Status, Suite,
};
use tessella_core::budget::DEFAULT_NODE_LIMIT;
use tessella_core::constructions::{ConstructionKind, ConstructionRecipe};
use tessella_core::invariants::star_number;
use tessella_core::io::{emit_cover_json, emit_dot, emit_edge_list, parse_cover_json, parse_edge_list};
use tessella_core::tessellation::{
    cover_from_clique_graph, cover_from_edge_coloring, greedy_cover, lower_bound, solve_exact,
};
use tessella_core::{Budget, Error, Graph};

/// Overrides the default node budget when no `--budget` is given.
const BUDGET_ENV: &str = "TESSELLA_BUDGET";

const EDGE_LIST_HELP: &str = "Graph files are 0-indexed edge lists: an optional run of \
\"c ...\" comment lines, a header \"p <n> <m>\", then one \"e <u> <v>\" line per edge.\n\n\
Exit status: 0 decided or passed, 1 failure, 2 usage or parse error, 3 undecided within budget.";

#[derive(Parser)]
#[command(name = "tessella", version, about, after_help = EDGE_LIST_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph from a construction and write it as an edge list
    Generate(GenerateArgs),
    /// Compute T(G) and is(G)
    Solve(SolveArgs),
    /// Decide whether T(G) = is(G)
    Gtr(GtrArgs),
    /// Replay a verification suite
    Verify(VerifyArgs),
    /// Compare perfect tessellability with the forbidden subgraph rule
    Scan(ScanArgs),
    /// Check a cover JSON document against a graph
    CheckCover(CheckCoverArgs),
    /// Print a graph as Graphviz DOT, optionally coloured by a cover
    Dot(DotArgs),
}

#[derive(Args)]
struct GenerateArgs {
    /// cons1, cons2, cons3, cons4, corollary1, mycielski-gap, gap-family,
    /// mycielski, universal, join, union, complement, line-graph,
    /// clique-graph or subdivide
    kind: String,
    #[arg(long, allow_hyphen_values = true)]
    i: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    j: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    x: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    k: Option<i64>,
    /// cons2 variant, 1 or 2
    #[arg(long, allow_hyphen_values = true)]
    variant: Option<i64>,
    /// first source graph
    #[arg(long)]
    input: Option<PathBuf>,
    /// second source graph (cons4, join, union)
    #[arg(long)]
    input2: Option<PathBuf>,
    /// output edge list; the recipe goes to `<out>.recipe.json`.
    /// Without it the edge list is printed.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SolveArgs {
    input: PathBuf,
    /// exact search (the default)
    #[arg(long, conflicts_with = "bounds_only")]
    exact: bool,
    /// report the cheap bracket without searching
    #[arg(long)]
    bounds_only: bool,
    /// node budget for the exact searches
    #[arg(long)]
    budget: Option<u64>,
    /// write the best cover found as JSON
    #[arg(long)]
    emit_cover: Option<PathBuf>,
}

#[derive(Args)]
struct GtrArgs {
    input: PathBuf,
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Args)]
struct VerifyArgs {
    /// all, lemma1, eq1, thm1, thm2, thm3, thm4, thm5 or triangle-free
    suite: Suite,
    /// small or default
    #[arg(long, default_value = "default")]
    budget: Profile,
    /// print the report as JSON instead of a table
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long, default_value_t = 5)]
    n_max: usize,
    #[arg(long)]
    budget: Option<u64>,
    /// directory for one DOT file per counterexample
    #[arg(long)]
    dot_dir: Option<PathBuf>,
}

#[derive(Args)]
struct CheckCoverArgs {
    graph: PathBuf,
    cover: PathBuf,
}

#[derive(Args)]
struct DotArgs {
    input: PathBuf,
    #[arg(long)]
    cover: Option<PathBuf>,
}

/// A failure with its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn io(path: &Path, e: std::io::Error) -> Self {
        Failure {
            code: 1,
            message: format!("{}: {e}", path.display()),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Undecided { .. } | Error::BudgetExceeded { .. } => 3,
            Error::Internal(_) => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type CmdResult = Result<u8, Failure>;

/// Standard output, written in one piece once the command finishes.
type Out = String;

macro_rules! say {
    ($out:expr, $($arg:tt)*) => {
        {
            let _ = writeln!($out, $($arg)*);
        }
    };
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Out::new();
    let result = match cli.command {
        Command::Generate(a) => generate(a, &mut out),
        Command::Solve(a) => solve(a, &mut out),
        Command::Gtr(a) => gtr_cmd(a, &mut out),
        Command::Verify(a) => verify(a, &mut out),
        Command::Scan(a) => scan(a, &mut out),
        Command::CheckCover(a) => check_cover(a, &mut out),
        Command::Dot(a) => dot(a, &mut out),
    };
    // a closed pipe is the reader's choice, not an error
    let _ = std::io::stdout().write_all(out.as_bytes());
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn node_limit(flag: Option<u64>) -> Result<u64, Failure> {
    if let Some(n) = flag {
        return Ok(n);
    }
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| Failure {
            code: 2,
            message: format!("{BUDGET_ENV} must be a node count, got {v:?}"),
        }),
        Err(_) => Ok(DEFAULT_NODE_LIMIT),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::io(path, e))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::io(path, e))
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let parsed = parse_edge_list(&read(path)?).map_err(|e| Failure {
        code: 2,
        message: format!("{}: {e}", path.display()),
    })?;
    for w in parsed.warnings {
        eprintln!("warning: {}: {w}", path.display());
    }
    Ok(parsed.graph)
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

fn generate(a: GenerateArgs, out: &mut Out) -> CmdResult {
    let kind = ConstructionKind::ALL
        .into_iter()
        .find(|k| k.name() == a.kind)
        .ok_or_else(|| Error::InvalidParameter(format!("unknown construction {:?}", a.kind)))?;
    let mut recipe = ConstructionRecipe::new(kind);
    for (key, value) in [("i", a.i), ("j", a.j), ("x", a.x), ("k", a.k), ("variant", a.variant)] {
        if let Some(v) = value {
            recipe = recipe.param(key, v);
        }
    }
    for path in [&a.input, &a.input2].into_iter().flatten() {
        let name = path
            .file_stem()
            .map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned());
        recipe = recipe.source(name, &read_graph(path)?);
    }
    let g = recipe.build()?;
    let text = emit_edge_list(&g, &[format!("generated by tessella generate {kind}")]);
    match a.out {
        Some(path) => {
            write(&path, &text)?;
            let mut sidecar = path.into_os_string();
            sidecar.push(".recipe.json");
            write(Path::new(&sidecar), &(to_json(&recipe) + "\n"))?;
        }
        None => out.push_str(&text),
    }
    Ok(0)
}

fn solve(a: SolveArgs, out: &mut Out) -> CmdResult {
    let g = read_graph(&a.input)?;
    let limit = node_limit(a.budget)?;
    let mut budget = Budget::new(limit);
    let is = match star_number(&g, &mut Budget::new(limit)) {
        Ok(s) => Some(s.size()),
        Err(Error::BudgetExceeded { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    let show_is = is.map_or_else(|| "?".to_string(), |v| v.to_string());
    let decided = |t: usize| match is {
        Some(is) => format!("T={t} is={is} gap={}", t - is),
        None => format!("T={t} is=?"),
    };
    if a.bounds_only {
        let lb = lower_bound(&g, &mut budget)?;
        let mut best = greedy_cover(&g).normalized();
        for c in [cover_from_edge_coloring(&g, &mut budget), cover_from_clique_graph(&g, &mut budget)]
            .into_iter()
            .flatten()
        {
            if c.size() < best.size() {
                best = c;
            }
        }
        if let Some(p) = &a.emit_cover {
            write(p, &emit_cover_json(&best))?;
        }
        let ub = best.size();
        return Ok(if lb == ub {
            say!(out, "{}", decided(lb));
            if is.is_some() { 0 } else { 3 }
        } else {
            say!(out, "T=[{lb},{ub}] is={show_is}");
            3
        });
    }
    match solve_exact(&g, &mut budget) {
        Ok(r) => {
            if let Some(p) = &a.emit_cover {
                write(p, &emit_cover_json(&r.cover))?;
            }
            say!(out, "{}", decided(r.value));
            Ok(if is.is_some() { 0 } else { 3 })
        }
        Err(Error::Undecided { lower, upper }) => {
            say!(out, "T=[{lower},{upper}] is={show_is} undecided");
            Ok(3)
        }
        Err(e) => Err(e.into()),
    }
}

fn gtr_cmd(a: GtrArgs, out: &mut Out) -> CmdResult {
    let g = read_graph(&a.input)?;
    let mut budget = Budget::new(node_limit(a.budget)?);
    match gtr(&g, &mut budget) {
        Ok(v) => {
            let word = if v.good { "GOOD" } else { "NOT-GOOD" };
            match v.t_value {
                Some(t) => say!(out, "{word} T={t} is={} gap={}", v.is_value, t - v.is_value),
                None => say!(out, "{word} T>={} is={}", v.t_lower, v.is_value),
            }
            say!(out, "{}", to_json(&v));
            Ok(0)
        }
        Err(Error::Undecided { lower, upper }) => {
            say!(out, "UNDECIDED [{lower},{upper}]");
            Ok(3)
        }
        Err(e) => Err(e.into()),
    }
}

fn verify(a: VerifyArgs, out: &mut Out) -> CmdResult {
    let node_limit = node_limit(None)?;
    let report = verify_with_limit(a.suite, a.budget, node_limit);
    if a.json {
        say!(out, "{}", to_json(&report));
    } else {
        for c in &report.checks {
            let status = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            say!(out, 
                "{status}  {:<13} {}\n      expected: {}\n      actual:   {}",
                c.theorem, c.instance, c.expected, c.actual
            );
        }
        say!(out, "{} passed, {} failed", report.passed(), report.failed());
    }
    Ok(if report.all_passed() { 0 } else { 1 })
}

fn scan(a: ScanArgs, out: &mut Out) -> CmdResult {
    let report = conjecture_scan_with(a.n_max, node_limit(a.budget)?)?;
    if let Some(dir) = &a.dot_dir {
        fs::create_dir_all(dir).map_err(|e| Failure::io(dir, e))?;
        for r in &report.interpretations {
            for (idx, c) in r.counterexamples.iter().enumerate() {
                let g = Graph::from_edges(c.n, &c.edges)?;
                let rule = serde_json::to_value(r.rule).expect("rule serializes");
                let name = format!("{}-{idx}.dot", rule.as_str().unwrap_or("rule"));
                write(&dir.join(name), &emit_dot(&g, None))?;
            }
        }
    }
    say!(out, "{}", to_json(&report));
    eprintln!(
        "checked {} graphs up to order {}; undecided {}",
        report.total_checked(),
        report.n_max,
        report.undecided.len()
    );
    for r in &report.interpretations {
        let rule = serde_json::to_value(r.rule).expect("rule serializes");
        eprintln!(
            "{}: {} agree, {} counterexamples",
            rule.as_str().unwrap_or_default(),
            r.agreements,
            r.counterexamples.len()
        );
    }
    Ok(0)
}

fn check_cover(a: CheckCoverArgs, out: &mut Out) -> CmdResult {
    let g = read_graph(&a.graph)?;
    let cover = parse_cover_json(&read(&a.cover)?).map_err(|e| Failure {
        code: 2,
        message: format!("{}: {e}", a.cover.display()),
    })?;
    match cover.validate(&g) {
        Ok(()) => {
            say!(out, "valid cover with {} tessellations", cover.size());
            Ok(0)
        }
        Err(v) => {
            say!(out, "invalid cover: {v}");
            Ok(1)
        }
    }
}

fn dot(a: DotArgs, out: &mut Out) -> CmdResult {
    let g = read_graph(&a.input)?;
    let cover = match &a.cover {
        Some(p) => Some(parse_cover_json(&read(p)?).map_err(|e| Failure {
            code: 2,
            message: format!("{}: {e}", p.display()),
        })?),
        None => None,
    };
    out.push_str(&emit_dot(&g, cover.as_ref()));
    Ok(0)
}

//! Command-line front end. Exit codes: 0 success, 1 verification failed,
//! 2 input error.

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::automaton::GeodesicAutomaton;
use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::graph::{parse_graph, GraphJson, ParsedGraph, SimpleGraph};
use crate::growth::{automaton_count_table, spherical_growth_series, GrowthContext, SeriesMethod};
use crate::oracle::{brute_force_counts, budget_from_env, CountTable};
use crate::poly::IntPolynomial;
use crate::rational::RationalFunction;
use crate::spectral::char_poly;
use crate::trees::{enumerate_trees, limb_census};
use crate::verify::{verify_cospectral, verify_equal_growth, verify_distinct_growth_with, VerificationReport};

#[derive(Parser, Debug)]
#[command(name = "geogrow", version, about = "Geodesic growth of right-angled Coxeter groups on triangle-free graphs")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Graph utilities.
    #[command(subcommand)]
    Graph(GraphCommand),
    /// Build the geodesic automaton.
    Automaton {
        graph: String,
        /// Graphviz output.
        #[arg(long)]
        dot: bool,
    },
    /// Growth series.
    Growth(GrowthArgs),
    /// Free trees.
    #[command(subcommand)]
    Trees(TreesCommand),
    /// Reproduce the tree-family results.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Compare the automaton against exhaustive word enumeration.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Subcommand, Debug)]
pub enum GraphCommand {
    Info { graph: String },
    Complement { graph: String },
    Linegraph { graph: String },
    /// Merge two rooted trees at their roots.
    Coalesce { tau: String, sigma: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Det,
    Bm,
    Stream,
}

#[derive(Args, Debug)]
#[group(id = "kind", multiple = false)]
pub struct GrowthKind {
    /// Geodesics starting with vertex V.
    #[arg(long, value_name = "V")]
    pub start0: Option<usize>,
    /// Geodesics ending with vertex V.
    #[arg(long, value_name = "V")]
    pub end0: Option<usize>,
    /// Geodesics starting and ending with vertex V.
    #[arg(long, value_name = "V")]
    pub both0: Option<usize>,
    /// Element counts instead of geodesic counts.
    #[arg(long)]
    pub spherical: bool,
}

#[derive(Args, Debug)]
pub struct GrowthArgs {
    pub graph: String,
    #[arg(long, value_enum, default_value = "det")]
    pub method: MethodArg,
    /// Also print this many Taylor coefficients.
    #[arg(long, value_name = "K")]
    pub terms: Option<usize>,
    #[command(flatten)]
    pub kind: GrowthKind,
    /// Print numerator and denominator split into factors.
    #[arg(long)]
    pub factored: bool,
}

#[derive(Subcommand, Debug)]
pub enum TreesCommand {
    Enumerate { n: usize },
    LimbCensus {
        n: usize,
        #[arg(long)]
        limb: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum VerifyCommand {
    /// Equal growth for coalescences with the McKay pair.
    Thm1 {
        #[arg(long, default_value_t = 6)]
        tau_max: usize,
    },
    /// Distinct growth for coalescences with the Godsil pair.
    Thm2 {
        #[arg(long, default_value = "godsil-s1")]
        s1: String,
        #[arg(long, default_value = "godsil-s2")]
        s2: String,
    },
    Cospectral {
        a: String,
        b: String,
        #[arg(long)]
        complement: bool,
        #[arg(long)]
        line_graph: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum OracleCommand {
    Check {
        graph: String,
        #[arg(long)]
        max_len: usize,
    },
}

pub const GRAPH_INFO_SCHEMA: &str = "geogrow.graph-info/v1";
pub const GROWTH_SCHEMA: &str = "geogrow.growth/v1";
pub const TREES_SCHEMA: &str = "geogrow.trees/v1";
pub const ORACLE_CHECK_SCHEMA: &str = "geogrow.oracle-check/v1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphInfo {
    pub schema: String,
    pub n: usize,
    pub edges: usize,
    pub connected: bool,
    pub tree: bool,
    pub triangle_free: bool,
    pub degrees: Vec<usize>,
    pub char_poly: IntPolynomial,
    pub f_polynomial: IntPolynomial,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub canonical_form: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrowthOutput {
    pub schema: String,
    /// `geodesic`, `start0`, `end0`, `both0` or `spherical`.
    pub series: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub vertex: Option<usize>,
    pub method: String,
    #[serde(flatten, skip_serializing_if = "Option::is_none", default)]
    pub rational: Option<RationalFunction>,
    #[serde(
        serialize_with = "crate::poly::serialize_bigints",
        deserialize_with = "crate::poly::deserialize_bigints",
        skip_serializing_if = "Vec::is_empty",
        default
    )]
    pub terms: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeList {
    pub schema: String,
    pub n: usize,
    pub count: usize,
    pub trees: Vec<Vec<(usize, usize)>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCheck {
    pub schema: String,
    pub max_len: usize,
    pub oracle: CountTable,
    pub automaton: CountTable,
    pub agree: bool,
}

/// Read a graph argument: an existing file, JSON in the graph schema, an
/// inline edge list, or a built-in name.
pub fn resolve_graph(spec: &str) -> Result<ParsedGraph> {
    let text = if Path::new(spec).is_file() {
        std::fs::read_to_string(spec).map_err(|e| Error::Io(format!("{spec}: {e}")))?
    } else {
        spec.to_string()
    };
    if text.trim_start().starts_with('{') {
        let j: GraphJson = serde_json::from_str(&text).map_err(|e| Error::Parse { line: e.line(), message: e.to_string() })?;
        return j.into_parsed();
    }
    parse_graph(&text)
}

enum Outcome {
    Ok,
    Failed,
}

/// Parse `args` (including the program name) and run, writing to `out` and `err`.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{text}");
            return if code == 0 { 0 } else { 2 };
        }
    };
    match execute(&cli, out) {
        Ok(Outcome::Ok) => 0,
        Ok(Outcome::Failed) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

/// Entry point for the binary.
pub fn run() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

fn io(e: std::io::Error) -> Error {
    Error::Io(e.to_string())
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    let s = serde_json::to_string_pretty(value).map_err(|e| Error::Io(e.to_string()))?;
    writeln!(out, "{s}").map_err(io)
}

fn emit_graph(out: &mut dyn Write, json: bool, g: &SimpleGraph, root: Option<usize>) -> Result<()> {
    if json {
        emit_json(out, &GraphJson::new(g, root))
    } else {
        write!(out, "{}", g.to_edge_list(root)).map_err(io)
    }
}

fn emit_report(out: &mut dyn Write, json: bool, r: &VerificationReport) -> Result<Outcome> {
    if json {
        emit_json(out, r)?;
    } else {
        write!(out, "{}", r.render()).map_err(io)?;
    }
    Ok(if r.passed() { Outcome::Ok } else { Outcome::Failed })
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<Outcome> {
    let json = cli.json;
    match &cli.command {
        Command::Graph(cmd) => {
            match cmd {
                GraphCommand::Info { graph } => graph_info(out, json, &resolve_graph(graph)?.graph)?,
                GraphCommand::Complement { graph } => emit_graph(out, json, &resolve_graph(graph)?.graph.complement(), None)?,
                GraphCommand::Linegraph { graph } => emit_graph(out, json, &resolve_graph(graph)?.graph.line_graph(), None)?,
                GraphCommand::Coalesce { tau, sigma } => {
                    let t = resolve_graph(tau)?.into_rooted_tree()?;
                    let s = resolve_graph(sigma)?.into_rooted_tree()?;
                    let c = t.coalesce(&s);
                    emit_graph(out, json, c.graph(), Some(c.root()))?;
                }
            }
            Ok(Outcome::Ok)
        }
        Command::Automaton { graph, dot } => {
            let a = GeodesicAutomaton::build(&resolve_graph(graph)?.graph)?;
            if json {
                emit_json(out, &a.to_json())?;
            } else if *dot {
                write!(out, "{}", a.to_dot()).map_err(io)?;
            } else {
                writeln!(out, "states: {}", a.state_count()).map_err(io)?;
                writeln!(out, "transitions: {}", a.transition_count()).map_err(io)?;
                for (i, s) in a.states().iter().enumerate() {
                    writeln!(out, "  {i}: {s}").map_err(io)?;
                }
            }
            Ok(Outcome::Ok)
        }
        Command::Growth(args) => growth(out, json, args).map(|_| Outcome::Ok),
        Command::Trees(TreesCommand::Enumerate { n }) => {
            let trees: Vec<SimpleGraph> = enumerate_trees(*n)?.collect();
            if json {
                let list = TreeList {
                    schema: TREES_SCHEMA.into(),
                    n: *n,
                    count: trees.len(),
                    trees: trees.iter().map(|t| t.edges().to_vec()).collect(),
                };
                emit_json(out, &list)?;
            } else {
                for t in &trees {
                    let edges: Vec<String> = t.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
                    writeln!(out, "{}", edges.join(" ")).map_err(io)?;
                }
                writeln!(out, "# {} trees on {n} vertices", trees.len()).map_err(io)?;
            }
            Ok(Outcome::Ok)
        }
        Command::Trees(TreesCommand::LimbCensus { n, limb }) => {
            let limb = resolve_graph(limb)?.into_rooted_tree()?;
            let r = limb_census(*n, &limb)?;
            if json {
                emit_json(out, &r)?;
            } else {
                writeln!(out, "{} of {} trees on {} vertices carry the limb ({})", r.count, r.total, r.n, r.proportion).map_err(io)?;
            }
            Ok(Outcome::Ok)
        }
        Command::Verify(VerifyCommand::Thm1 { tau_max }) => emit_report(out, json, &verify_equal_growth(*tau_max)?),
        Command::Verify(VerifyCommand::Thm2 { s1, s2 }) => {
            let s1 = resolve_graph(s1)?.into_rooted_tree()?;
            let s2 = resolve_graph(s2)?.into_rooted_tree()?;
            emit_report(out, json, &verify_distinct_growth_with(&s1, &s2)?)
        }
        Command::Verify(VerifyCommand::Cospectral { a, b, complement, line_graph }) => {
            let (a, b) = (resolve_graph(a)?.graph, resolve_graph(b)?.graph);
            emit_report(out, json, &verify_cospectral(&a, &b, *complement, *line_graph))
        }
        Command::Oracle(OracleCommand::Check { graph, max_len }) => {
            let g = resolve_graph(graph)?.graph;
            let oracle = brute_force_counts(&g, *max_len, budget_from_env())?;
            let automaton = automaton_count_table(&g, oracle.letter, *max_len)?;
            let agree = oracle == automaton;
            if json {
                emit_json(out, &OracleCheck { schema: ORACLE_CHECK_SCHEMA.into(), max_len: *max_len, oracle, automaton, agree })?;
            } else {
                let rows: [(&str, &Vec<u64>, &Vec<u64>); 5] = [
                    ("geodesics", &oracle.geodesics, &automaton.geodesics),
                    ("start", &oracle.start, &automaton.start),
                    ("end", &oracle.end, &automaton.end),
                    ("both", &oracle.both, &automaton.both),
                    ("elements", &oracle.elements, &automaton.elements),
                ];
                for (name, a, b) in rows {
                    let mark = if a == b { "ok" } else { "MISMATCH" };
                    writeln!(out, "{name:>9}: {a:?} {mark}").map_err(io)?;
                    if a != b {
                        writeln!(out, "{:>9}  automaton {b:?}", "").map_err(io)?;
                    }
                }
            }
            Ok(if agree { Outcome::Ok } else { Outcome::Failed })
        }
    }
}

fn graph_info(out: &mut dyn Write, json: bool, g: &SimpleGraph) -> Result<()> {
    let info = GraphInfo {
        schema: GRAPH_INFO_SCHEMA.into(),
        n: g.vertex_count(),
        edges: g.edge_count(),
        connected: g.is_connected(),
        tree: g.is_tree(),
        triangle_free: g.is_triangle_free(),
        degrees: (0..g.vertex_count()).map(|v| g.degree(v)).collect(),
        char_poly: char_poly(g),
        f_polynomial: g.f_polynomial(),
        canonical_form: if g.is_tree() { Some(canonical_form(g)?) } else { None },
    };
    if json {
        return emit_json(out, &info);
    }
    let mut w = |s: String| writeln!(out, "{s}").map_err(io);
    w(format!("vertices: {}", info.n))?;
    w(format!("edges: {}", info.edges))?;
    w(format!("connected: {}, tree: {}, triangle-free: {}", info.connected, info.tree, info.triangle_free))?;
    w(format!("degrees: {:?}", info.degrees))?;
    w(format!("characteristic polynomial: {}", info.char_poly.to_string_with("x")))?;
    w(format!("f-polynomial: {}", info.f_polynomial))?;
    if let Some(c) = &info.canonical_form {
        w(format!("canonical form: {c}"))?;
    }
    Ok(())
}

fn growth(out: &mut dyn Write, json: bool, args: &GrowthArgs) -> Result<()> {
    let g = resolve_graph(&args.graph)?.graph;
    let k = &args.kind;
    let (series, vertex) = match (k.start0, k.end0, k.both0, k.spherical) {
        (Some(v), ..) => ("start0", Some(v)),
        (_, Some(v), ..) => ("end0", Some(v)),
        (_, _, Some(v), _) => ("both0", Some(v)),
        (.., true) => ("spherical", None),
        _ => ("geodesic", None),
    };
    let method_name = match args.method {
        MethodArg::Det => "det",
        MethodArg::Bm => "bm",
        MethodArg::Stream => "stream",
    };
    let rational = if series == "spherical" {
        spherical_growth_series(&g)
    } else {
        let method = if args.method == MethodArg::Bm { SeriesMethod::BerlekampMassey } else { SeriesMethod::Determinant };
        let ctx = GrowthContext::with_method(&g, method)?;
        match (series, vertex) {
            ("start0", Some(v)) => ctx.start0_series(v)?,
            ("end0", Some(v)) => ctx.end0_series(v)?,
            ("both0", Some(v)) => ctx.both0_series(v)?,
            _ => {
                if args.method == MethodArg::Stream {
                    let terms = ctx.geodesic_stream().take_terms(args.terms.unwrap_or(20));
                    return emit_growth(out, json, args, series, vertex, method_name, None, terms);
                }
                ctx.geodesic_series()?
            }
        }
    };
    // Non-geodesic streams are read off the rational function.
    let terms = match (args.method, args.terms) {
        (MethodArg::Stream, k) => rational.taylor(k.unwrap_or(20)),
        (_, Some(k)) => rational.taylor(k),
        (_, None) => Vec::new(),
    };
    let shown = if args.method == MethodArg::Stream { None } else { Some(rational) };
    emit_growth(out, json, args, series, vertex, method_name, shown, terms)
}

#[allow(clippy::too_many_arguments)]
fn emit_growth(
    out: &mut dyn Write,
    json: bool,
    args: &GrowthArgs,
    series: &str,
    vertex: Option<usize>,
    method: &str,
    rational: Option<RationalFunction>,
    terms: Vec<BigInt>,
) -> Result<()> {
    if json {
        let o = GrowthOutput { schema: GROWTH_SCHEMA.into(), series: series.into(), vertex, method: method.into(), rational, terms };
        return emit_json(out, &o);
    }
    if let Some(r) = &rational {
        let text = if args.factored { r.factored(&[]) } else { r.to_string() };
        writeln!(out, "{text}").map_err(io)?;
    }
    if !terms.is_empty() {
        let t: Vec<String> = terms.iter().map(|c| c.to_string()).collect();
        writeln!(out, "{}", t.join(", ")).map_err(io)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("geogrow").chain(args.iter().copied());
        let code = run_with(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn triangle_is_an_input_error() {
        let (code, _, err) = run(&["growth", "k3"]);
        assert_eq!(code, 2);
        assert!(err.contains("triangle"), "{err}");
    }

    #[test]
    fn usage_error_exits_2() {
        assert_eq!(run(&["growth"]).0, 2);
        assert_eq!(run(&["growth", "path3", "--start0", "0", "--both0", "0"]).0, 2);
    }

    #[test]
    fn growth_of_an_edge() {
        let (code, out, _) = run(&["growth", "path2", "--terms", "4"]);
        assert_eq!(code, 0);
        assert_eq!(out, "1 + 2*t + 2*t^2\n1, 2, 2, 0\n");
    }

    #[test]
    fn growth_json_round_trips() {
        let (code, out, _) = run(&["--json", "growth", "path3", "--start0", "1", "--terms", "3"]);
        assert_eq!(code, 0);
        let g: GrowthOutput = serde_json::from_str(&out).unwrap();
        assert_eq!(g.series, "start0");
        assert_eq!(g.vertex, Some(1));
        assert!(g.rational.is_some());
        assert_eq!(g.terms.len(), 3);
    }
}

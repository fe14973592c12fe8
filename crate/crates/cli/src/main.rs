use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use twolayer::analysis::StCaps;
use twolayer::decompose::{audit_counting_bounds, decompose};
use twolayer::fuzz::{run_fuzz, FuzzConfig, Invariant};
use twolayer::generators::{gen_complete_binary_tree, gen_grid, gen_random, gen_subdivided_star, subdivided_star_fan, GenCaps};
use twolayer::json::{
    decomposition_to_string, drawing_to_string, parse_decomposition, parse_drawing, parse_graph,
    to_pretty, AnalysisReport, Document, LayoutCertificateJson, Thm3CertificateJson,
};
use twolayer::layout::layout;
use twolayer::pathdecomp::{validate_pd, PathDecomposition, Violation};
use twolayer::pathwidth::{pathwidth_exact, DEFAULT_PATHWIDTH_CAP};
use twolayer::svg::{render_decomposition, render_drawing};
use twolayer::{BipartiteGraph, Error};

/// Two-layer drawings, path-decompositions and the conversions between them.
#[derive(Parser)]
#[command(name = "twolayer", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph family with its canonical drawing.
    Gen(GenArgs),
    /// Crossing analysis of a drawing.
    Analyze(AnalyzeArgs),
    /// Path-decomposition of a drawing, with certificate.
    Decompose(DecomposeArgs),
    /// Drawing from a path-decomposition, with certificate.
    Layout(LayoutArgs),
    /// Exact pathwidth of a small graph.
    Pathwidth(PathwidthArgs),
    /// Validate a path-decomposition.
    CheckPd(CheckPdArgs),
    /// Randomised invariant campaign.
    Fuzz(FuzzArgs),
    /// Render a drawing, or a decomposition given with --pd, as SVG.
    Render(RenderArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    /// Complete binary tree of height h.
    Tree,
    /// h x h grid.
    Grid,
    /// Subdivided star with n legs, fan drawing.
    Star,
    /// Random bipartite graph with random layer orders.
    Random,
}

#[derive(Args)]
struct Output {
    /// Output file (default: stdout).
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct Caps {
    /// Edge cap for the (s,t)-crossing search.
    #[arg(long, default_value_t = StCaps::default().max_edges)]
    cap_edges: usize,
    /// Largest s and t reported in the (s,t) frontier.
    #[arg(long, default_value_t = 64)]
    cap_st: usize,
}

impl Caps {
    fn st(&self) -> StCaps {
        StCaps {
            max_edges: self.cap_edges,
        }
    }
}

#[derive(Args)]
struct GenArgs {
    #[arg(value_enum)]
    family: Family,
    /// Height for tree and grid, leg count for star.
    #[arg(long, default_value_t = 2)]
    h: usize,
    #[arg(long, default_value_t = 4)]
    na: usize,
    #[arg(long, default_value_t = 4)]
    nb: usize,
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest height or leg count accepted.
    #[arg(long, default_value_t = GenCaps::default().max_height)]
    cap_n: usize,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Drawing JSON.
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    caps: Caps,
}

#[derive(Args)]
struct DecomposeArgs {
    /// Drawing JSON.
    #[arg(long = "in")]
    input: PathBuf,
    /// Where to write the certificate JSON.
    #[arg(long)]
    cert: Option<PathBuf>,
    #[command(flatten)]
    caps: Caps,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct LayoutArgs {
    /// Graph (or drawing) JSON.
    #[arg(long = "in")]
    input: PathBuf,
    /// Decomposition JSON.
    #[arg(long)]
    pd: PathBuf,
    /// Where to write the certificate JSON.
    #[arg(long)]
    cert: Option<PathBuf>,
    #[command(flatten)]
    caps: Caps,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct PathwidthArgs {
    /// Graph (or drawing) JSON.
    #[arg(long = "in")]
    input: PathBuf,
    /// Vertex cap for the exact solver.
    #[arg(long, default_value_t = DEFAULT_PATHWIDTH_CAP)]
    cap_n: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CheckPdArgs {
    /// Graph (or drawing) JSON.
    #[arg(long = "in")]
    input: PathBuf,
    /// Decomposition JSON.
    #[arg(long)]
    pd: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct FuzzArgs {
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest side size.
    #[arg(long, default_value_t = 8)]
    max_side: usize,
    #[arg(long, default_value_t = 0.1)]
    p_min: f64,
    #[arg(long, default_value_t = 0.6)]
    p_max: f64,
    /// Vertex cap for the exact pathwidth oracle.
    #[arg(long, default_value_t = 16)]
    cap_n: usize,
    /// Edge cap for the (s,t)-crossing search.
    #[arg(long, default_value_t = StCaps::default().max_edges)]
    cap_edges: usize,
    /// Invariants to check (default: all).
    #[arg(long, value_delimiter = ',')]
    invariants: Vec<String>,
    /// Report the opposite verdict for one invariant (harness self-test).
    #[arg(long)]
    invert: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct RenderArgs {
    /// Drawing JSON, or graph JSON together with --pd.
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    pd: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Invalid(String),
    Cap(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_cap() {
            Failure::Cap(e.to_string())
        } else {
            Failure::Invalid(e.to_string())
        }
    }
}

type Outcome = Result<(), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn write(path: Option<&Path>, text: &str) -> Outcome {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(a) => gen(a),
        Command::Analyze(a) => analyze(a),
        Command::Decompose(a) => decompose_cmd(a),
        Command::Layout(a) => layout_cmd(a),
        Command::Pathwidth(a) => pathwidth(a),
        Command::CheckPd(a) => check_pd(a),
        Command::Fuzz(a) => fuzz(a),
        Command::Render(a) => render(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn gen(a: GenArgs) -> Outcome {
    let caps = GenCaps {
        max_height: a.cap_n,
        ..GenCaps::default()
    };
    let drawing = match a.family {
        Family::Tree => gen_complete_binary_tree(a.h, &caps)?.1,
        Family::Grid => gen_grid(a.h, &caps)?.1,
        Family::Star => {
            gen_subdivided_star(a.h, &caps)?;
            subdivided_star_fan(a.h, &caps)?
        }
        Family::Random => gen_random(a.na, a.nb, a.p, a.seed)?.1,
    };
    let text = match a.output.format {
        Format::Json => drawing_to_string(&drawing),
        Format::Svg => render_drawing(&drawing),
    };
    write(a.output.out.as_deref(), &text)
}

fn analyze(a: AnalyzeArgs) -> Outcome {
    let d = parse_drawing(&read(&a.input)?)?;
    let report = AnalysisReport::build(&d, a.caps.cap_st, &a.caps.st())?;
    write(a.out.as_deref(), &to_pretty(&report))
}

fn decompose_cmd(a: DecomposeArgs) -> Outcome {
    let d = parse_drawing(&read(&a.input)?)?;
    let (pd, cert) = decompose(&d, &a.caps.st());
    if let Some(path) = &a.cert {
        let audit = audit_counting_bounds(&d, &cert);
        let json = Thm3CertificateJson::build(&d, &pd, &cert, audit);
        write(Some(path), &to_pretty(&json))?;
    }
    let text = match a.output.format {
        Format::Json => decomposition_to_string(d.graph(), &pd),
        Format::Svg => render_decomposition(d.graph(), &pd),
    };
    write(a.output.out.as_deref(), &text)
}

fn read_pd(path: &Path, g: &BipartiteGraph) -> Result<PathDecomposition, Failure> {
    Ok(parse_decomposition(&read(path)?, g)?)
}

fn layout_cmd(a: LayoutArgs) -> Outcome {
    let g = parse_graph(&read(&a.input)?)?;
    let pd = read_pd(&a.pd, &g)?;
    let (d, cert) = layout(&g, &pd, &a.caps.st())?;
    if let Some(path) = &a.cert {
        write(Some(path), &to_pretty(&LayoutCertificateJson::build(&g, &cert)))?;
    }
    let text = match a.output.format {
        Format::Json => drawing_to_string(&d),
        Format::Svg => render_drawing(&d),
    };
    write(a.output.out.as_deref(), &text)
}

fn pathwidth(a: PathwidthArgs) -> Outcome {
    let g = parse_graph(&read(&a.input)?)?;
    let (pw, order) = pathwidth_exact(&g, a.cap_n)?;
    let pd = PathDecomposition::from_vertex_order(&g, &order);
    let bags: Vec<Vec<&str>> = pd
        .bags()
        .iter()
        .map(|b| {
            let mut ids: Vec<&str> = b.iter().map(|&v| g.name(v)).collect();
            ids.sort_unstable();
            ids
        })
        .collect();
    let order: Vec<&str> = order.iter().map(|&v| g.name(v)).collect();
    let out = json!({ "pathwidth": pw, "order": order, "bags": bags });
    write(a.out.as_deref(), &to_pretty(&out))
}

fn describe(g: &BipartiteGraph, v: &Violation) -> String {
    match *v {
        Violation::Uncovered { vertex } => format!("vertex {} is in no bag", g.name(vertex)),
        Violation::EdgeUncovered { a, b } => format!("edge {}-{} is in no bag", g.name(a), g.name(b)),
        Violation::NotContiguous {
            vertex,
            before,
            gap,
            after,
        } => format!(
            "vertex {} is in bags {before} and {after} but not in bag {gap}",
            g.name(vertex)
        ),
    }
}

fn check_pd(a: CheckPdArgs) -> Outcome {
    let g = parse_graph(&read(&a.input)?)?;
    let pd = read_pd(&a.pd, &g)?;
    let violations = validate_pd(&g, &pd)?;
    let messages: Vec<String> = violations.iter().map(|v| describe(&g, v)).collect();
    let out = json!({
        "valid": violations.is_empty(),
        "width": pd.width().ok(),
        "violations": messages,
    });
    write(a.out.as_deref(), &to_pretty(&out))?;
    if violations.is_empty() {
        Ok(())
    } else {
        Err(Failure::Invalid(format!("{} violation(s)", violations.len())))
    }
}

fn parse_invariant(s: &str) -> Result<Invariant, Failure> {
    s.parse().map_err(|e: Error| Failure::Usage(e.to_string()))
}

fn fuzz(a: FuzzArgs) -> Outcome {
    let invariants = if a.invariants.is_empty() {
        Invariant::ALL.to_vec()
    } else {
        a.invariants.iter().map(|s| parse_invariant(s)).collect::<Result<_, _>>()?
    };
    let config = FuzzConfig {
        trials: a.trials,
        na: (1, a.max_side.max(1)),
        nb: (1, a.max_side.max(1)),
        p: (a.p_min, a.p_max),
        seed: a.seed,
        pathwidth_cap: a.cap_n,
        st_caps: StCaps {
            max_edges: a.cap_edges,
        },
        invariants,
        invert: a.invert.as_deref().map(parse_invariant).transpose()?,
    };
    let report = run_fuzz(&config).map_err(|e| Failure::Usage(e.to_string()))?;
    write(a.out.as_deref(), &to_pretty(&report))?;
    for (inv, c) in &report.counts {
        eprintln!("{inv}: {} passed, {} failed, {} skipped", c.passed, c.failed, c.skipped);
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Invalid(format!("{} failing check(s)", report.failures.len())))
    }
}

fn render(a: RenderArgs) -> Outcome {
    let text = read(&a.input)?;
    let svg = match &a.pd {
        Some(pd) => {
            let g = parse_graph(&text)?;
            render_decomposition(&g, &read_pd(pd, &g)?)
        }
        None => match Document::parse(&text)? {
            Document::Drawing(d) => render_drawing(&d.to_drawing()?),
            Document::Graph(g) => {
                // graphs without orders are drawn in input order
                render_drawing(&twolayer::TwoLayerDrawing::identity(g.to_graph()?))
            }
            Document::Decomposition(_) => {
                return Err(Failure::Usage("a decomposition needs its graph: pass the graph with --in and the bags with --pd".into()))
            }
        },
    };
    write(a.out.as_deref(), &svg)
}

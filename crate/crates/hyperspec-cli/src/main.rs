//! `hyperspec` — spectral radii of k-uniform hypergraphs from the command
//! line: compute certified rho, generate extremal families, reduce, rank all
//! isomorphism classes at (k, m), and run the verification suites.

use clap::{Parser, Subcommand, ValueEnum};
use hyperspec::canon::DEFAULT_MAX_N;
use hyperspec::enumerate::{rank_by_rho_capped, EnumerateError, RankingReport};
use hyperspec::families::{recognize_family, FamilySpec};
use hyperspec::jsonfmt::{self, JsonObject};
use hyperspec::transforms::{reduce, TransformError};
use hyperspec::verify::{run_suite, Suite, VerifyConfig};
use hyperspec::{spectral_radius, EigenResult, Hypergraph, SpectralError};
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_PARSE: u8 = 2;
const EXIT_NO_CONVERGENCE: u8 = 3;
const EXIT_DISCONNECTED: u8 = 4;
const EXIT_NOT_REDUCIBLE: u8 = 5;
const EXIT_CAP: u8 = 6;

#[derive(Parser)]
#[command(name = "hyperspec", version, about = "Spectral radii of k-uniform hypergraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Convergence tolerance on the certified bound gap.
    #[arg(long, global = true, default_value_t = 1e-10)]
    tol: f64,

    /// Power-iteration budget.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    max_iter: usize,

    /// Vertex cap for canonical forms and enumeration
    /// (overrides HYPERSPEC_MAX_N; default 16).
    #[arg(long, global = true)]
    max_n: Option<usize>,

    /// Output rendering for `rho` and `reduce`.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write primary output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the spectral radius with certified bounds.
    Rho {
        /// Path to a .hg file (omit when using --family).
        source: Option<PathBuf>,
        /// Family string such as P:3,2 or TE:4,2.
        #[arg(long, conflicts_with = "source")]
        family: Option<String>,
    },
    /// Generate a family instance as a normalized .hg file.
    Gen {
        /// Family string: P:k,m C:k,m D:k,m Dp:k,m E3:i,j,l F3:i,j,l
        /// G3:i,j,l,p,q H4:t TE:k,a.
        family: String,
    },
    /// Reduce a reducible hypergraph to uniformity k-1 and check the
    /// identity rho^k = rho'^(k-1).
    Reduce {
        source: PathBuf,
    },
    /// Enumerate all isomorphism classes at (k, m) and rank them by rho.
    Enum {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
    },
    /// Run a verification suite:
    /// lemma1|lemma3|lemmaTh1|lemma4|rayleigh|polys|tables.
    Verify {
        suite: String,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(output) => {
            if let Err(e) = emit(&cli.out, &output) {
                eprintln!("error: {e}");
                return ExitCode::FAILURE;
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> Result<String, Failure> {
    match &cli.command {
        Command::Rho { source, family } => cmd_rho(cli, source, family),
        Command::Gen { family } => cmd_gen(family),
        Command::Reduce { source } => cmd_reduce(cli, source),
        Command::Enum { k, m } => cmd_enum(cli, *k, *m),
        Command::Verify { suite } => cmd_verify(cli, suite),
    }
}

fn max_n(cli: &Cli) -> Result<usize, Failure> {
    if let Some(n) = cli.max_n {
        return Ok(n);
    }
    match std::env::var("HYPERSPEC_MAX_N") {
        Ok(s) => s
            .parse()
            .map_err(|_| Failure::new(EXIT_PARSE, format!("invalid HYPERSPEC_MAX_N: {s:?}"))),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

fn load_source(source: &Option<PathBuf>, family: &Option<String>) -> Result<Hypergraph, Failure> {
    match (source, family) {
        (_, Some(spec)) => build_family(spec),
        (Some(path), None) => {
            let text = std::fs::read_to_string(path).map_err(|e| {
                Failure::new(EXIT_PARSE, format!("cannot read {}: {e}", path.display()))
            })?;
            Hypergraph::parse(&text)
                .map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display())))
        }
        (None, None) => Err(Failure::new(EXIT_PARSE, "need a source path or --family")),
    }
}

fn build_family(spec: &str) -> Result<Hypergraph, Failure> {
    let parsed =
        FamilySpec::parse(spec).map_err(|e| Failure::new(EXIT_PARSE, format!("{spec:?}: {e}")))?;
    parsed.build().map_err(|e| Failure::new(EXIT_PARSE, format!("{spec:?}: {e}")))
}

/// Non-convergence still renders the best certified bounds before exiting 3.
fn compute_rho(cli: &Cli, g: &Hypergraph) -> Result<EigenResult, Failure> {
    match spectral_radius(g, cli.tol, cli.max_iter) {
        Ok(r) => Ok(r),
        Err(SpectralError::DidNotConverge { best }) => {
            let _ = emit(&cli.out, &render_eigen(cli, g, &best));
            Err(Failure::new(
                EXIT_NO_CONVERGENCE,
                format!("no convergence within {} iterations; best bounds printed", cli.max_iter),
            ))
        }
        Err(SpectralError::Disconnected) => {
            Err(Failure::new(EXIT_DISCONNECTED, "input hypergraph is disconnected"))
        }
        Err(e) => Err(Failure::new(1, e.to_string())),
    }
}

fn render_eigen(cli: &Cli, g: &Hypergraph, r: &EigenResult) -> String {
    match cli.format {
        Format::Json => format!("{}\n", jsonfmt::eigen_result(g, r)),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "rho        = {}", jsonfmt::float(r.rho));
            let _ = writeln!(s, "lower      = {}", jsonfmt::float(r.lower));
            let _ = writeln!(s, "upper      = {}", jsonfmt::float(r.upper));
            let _ = writeln!(s, "iterations = {}", r.iterations);
            let _ = writeln!(s, "residual   = {}", jsonfmt::float(r.residual));
            let parts: Vec<String> = r.x.iter().map(|&v| jsonfmt::float(v)).collect();
            let _ = writeln!(s, "eigenvector = {}", parts.join(" "));
            s
        }
    }
}

fn cmd_rho(
    cli: &Cli,
    source: &Option<PathBuf>,
    family: &Option<String>,
) -> Result<String, Failure> {
    let g = load_source(source, family)?;
    let r = compute_rho(cli, &g)?;
    Ok(render_eigen(cli, &g, &r))
}

fn cmd_gen(family: &str) -> Result<String, Failure> {
    Ok(build_family(family)?.serialize())
}

fn cmd_reduce(cli: &Cli, source: &PathBuf) -> Result<String, Failure> {
    let g = load_source(&Some(source.clone()), &None)?;
    let reduced = reduce(&g).map_err(|e| match e {
        TransformError::NotReducible
        | TransformError::ReduceNeedsHigherRank
        | TransformError::ReduceCollision => Failure::new(EXIT_NOT_REDUCIBLE, e.to_string()),
        other => Failure::new(1, other.to_string()),
    })?;
    let before = compute_rho(cli, &g)?;
    let after = compute_rho(cli, &reduced)?;
    let lhs = before.rho.powi(g.k() as i32);
    let rhs = after.rho.powi(reduced.k() as i32);
    eprintln!(
        "rho(G) = {}  rho(G') = {}  |rho^{} - rho'^{}| = {:e}",
        jsonfmt::float(before.rho),
        jsonfmt::float(after.rho),
        g.k(),
        reduced.k(),
        (lhs - rhs).abs()
    );
    Ok(reduced.serialize())
}

fn cmd_enum(cli: &Cli, k: usize, m: usize) -> Result<String, Failure> {
    let cap = max_n(cli)?;
    let report = rank_by_rho_capped(k, m, cli.tol, cap, cli.max_iter).map_err(|e| match e {
        EnumerateError::CapExceeded { needed, max_n } => Failure::new(
            EXIT_CAP,
            format!("enumeration needs up to {needed} vertices but the cap is {max_n}"),
        ),
        EnumerateError::BadParameters(msg) => Failure::new(EXIT_PARSE, msg),
        EnumerateError::Spectral(SpectralError::DidNotConverge { .. }) => {
            Failure::new(EXIT_NO_CONVERGENCE, "a class did not converge; raise --max-iter")
        }
        EnumerateError::Spectral(e) => Failure::new(1, e.to_string()),
    })?;
    Ok(render_ranking(&report))
}

fn family_name(g: &Hypergraph) -> Option<String> {
    recognize_family(g).map(|spec| spec.to_string())
}

fn render_ranking(report: &RankingReport) -> String {
    let mut out = String::new();
    for class in &report.classes {
        let line = JsonObject::new()
            .str("canonical", class.canonical.as_text())
            .raw("edges", edges_json(&class.hypergraph))
            .float("rho", class.eigen.rho)
            .float("lower", class.eigen.lower)
            .float("upper", class.eigen.upper)
            .render();
        out.push_str(&line);
        out.push('\n');
    }
    let name_or_null = |g: &Hypergraph| {
        family_name(g).map(|name| jsonfmt::string(&name)).unwrap_or_else(|| "null".into())
    };
    let mut summary = JsonObject::new()
        .int("k", report.k)
        .int("m", report.m)
        .int("classes", report.total_count)
        .raw("min", name_or_null(&report.classes[0].hypergraph));
    if report.total_count > 1 {
        summary = summary
            .raw("second", name_or_null(&report.classes[1].hypergraph))
            .raw("separated", (!report.classes[0].tied_with_next).to_string());
    }
    out.push_str(&summary.render());
    out.push('\n');
    out
}

fn edges_json(g: &Hypergraph) -> String {
    let edges: Vec<String> = g
        .edges()
        .iter()
        .map(|e| {
            let vs: Vec<String> = e.iter().map(|v| v.to_string()).collect();
            format!("[{}]", vs.join(","))
        })
        .collect();
    format!("[{}]", edges.join(","))
}

fn cmd_verify(cli: &Cli, suite: &str) -> Result<String, Failure> {
    let suite = Suite::parse(suite)
        .ok_or_else(|| Failure::new(EXIT_PARSE, format!("unknown suite {suite:?}")))?;
    let cfg = VerifyConfig { tol: cli.tol, max_iter: cli.max_iter };
    let report = run_suite(suite, &cfg).map_err(|e| match e {
        SpectralError::DidNotConverge { .. } => {
            Failure::new(EXIT_NO_CONVERGENCE, "a case did not converge; raise --max-iter")
        }
        other => Failure::new(1, other.to_string()),
    })?;
    if report.all_passed() {
        Ok(report.render_text())
    } else {
        let _ = emit(&cli.out, &report.render_text());
        Err(Failure::new(1, format!("{}: some checks failed", report.suite)))
    }
}

//! `dee` — distance-spectrum invariants of connected graphs.
//!
//! Subcommands: `gen` writes graph files for named families, `compute`
//! reports profile/spectrum/index/bounds for one graph, `sweep` tabulates
//! a family range. Exit codes: 0 success, 2 graph parse failure,
//! 3 disconnected graph, 4 eigensolver non-convergence, 1 anything else.

mod report;
mod sweep;

use clap::{Parser, Subcommand};
use dee_core::{generate, parse_graph, GraphFamily};
use sha2::{Digest, Sha256};
use std::io::Read;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "dee",
    version,
    about = "Distance-spectrum invariants of connected graphs: Wiener index, \
             D-spectrum, distance Estrada index, and bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a named family member as a graph file
    Gen {
        /// complete | cycle | path | star | chemical-tree | c60
        family: String,
        /// Vertex count, for the parameterized families
        param: Option<usize>,
        /// Output path (standard output when omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Report profile, spectrum, index, and bounds for one graph
    Compute {
        /// Graph file path, or "-" for standard input
        input: String,
        /// Structured JSON output
        #[arg(long, conflicts_with = "table")]
        json: bool,
        /// Human-readable table output (the default)
        #[arg(long)]
        table: bool,
        /// Significant digits in table output
        #[arg(long, default_value_t = 6)]
        precision: usize,
        /// Jacobi sweep budget (diagnostics)
        #[arg(long, default_value_t = dee_core::DEFAULT_MAX_SWEEPS)]
        max_sweeps: usize,
    },
    /// Tabulate invariants and bound tightness across a family range
    Sweep {
        /// complete | cycle | path | star
        family: String,
        /// Inclusive vertex-count range, e.g. 3..12
        range: String,
        /// JSON array output
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        /// CSV output
        #[arg(long)]
        csv: bool,
        /// Significant digits in table/CSV output
        #[arg(long, default_value_t = 6)]
        precision: usize,
        /// Output path (standard output when omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

impl From<dee_core::Error> for Failure {
    fn from(e: dee_core::Error) -> Self {
        let code = match &e {
            dee_core::Error::Parse(_) => 2,
            dee_core::Error::Disconnected => 3,
            dee_core::Error::NoConvergence { .. } => 4,
            _ => 1,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::new(1, e.to_string())
    }
}

fn main() {
    if let Err(failure) = run(Cli::parse()) {
        eprintln!("error: {}", failure.message);
        std::process::exit(failure.code);
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Gen { family, param, output } => {
            let family = parse_family(&family, param)?;
            let graph = generate(family)?;
            emit(output, dee_core::serialize_graph(&graph))
        }
        Command::Compute { input, json, table: _, precision, max_sweeps } => {
            let bytes = read_input(&input)?;
            let digest = hex::encode(Sha256::digest(&bytes));
            let text = String::from_utf8(bytes)
                .map_err(|e| Failure::new(2, format!("input is not UTF-8: {e}")))?;
            let graph = parse_graph(&text).map_err(dee_core::Error::from)?;
            let document = report::build_report(&graph, None, digest, max_sweeps)?;
            let rendered = if json {
                report::render_json(&document)
            } else {
                report::render_table(&document, precision)
            };
            print!("{rendered}");
            Ok(())
        }
        Command::Sweep { family, range, json, csv, precision, output } => {
            let (start, end) = parse_range(&range)?;
            let make = family_constructor(&family)?;
            let rows: Vec<sweep::SweepRow> =
                (start..=end).map(|n| sweep::sweep_row(make(n), n)).collect();
            let rendered = if json {
                sweep::render_json(&rows)
            } else if csv {
                sweep::render_csv(&rows, precision)
            } else {
                sweep::render_table(&rows, precision)
            };
            emit(output, rendered)
        }
    }
}

fn emit(output: Option<PathBuf>, content: String) -> Result<(), Failure> {
    match output {
        Some(path) => std::fs::write(path, content)?,
        None => print!("{content}"),
    }
    Ok(())
}

fn read_input(input: &str) -> Result<Vec<u8>, Failure> {
    if input == "-" {
        let mut bytes = Vec::new();
        std::io::stdin().read_to_end(&mut bytes)?;
        Ok(bytes)
    } else {
        Ok(std::fs::read(input)?)
    }
}

fn parse_family(name: &str, param: Option<usize>) -> Result<GraphFamily, Failure> {
    let parameterized = |param: Option<usize>| {
        param.ok_or_else(|| {
            Failure::new(1, format!("family '{name}' requires a vertex-count parameter"))
        })
    };
    let fixed = |family: GraphFamily, param: Option<usize>| {
        if param.is_some() {
            Err(Failure::new(1, format!("family '{name}' takes no parameter")))
        } else {
            Ok(family)
        }
    };
    match name {
        "complete" => Ok(GraphFamily::Complete(parameterized(param)?)),
        "cycle" => Ok(GraphFamily::Cycle(parameterized(param)?)),
        "path" => Ok(GraphFamily::Path(parameterized(param)?)),
        "star" => Ok(GraphFamily::Star(parameterized(param)?)),
        "chemical-tree" => fixed(GraphFamily::ChemicalTree5, param),
        "c60" => fixed(GraphFamily::TruncatedIcosahedron, param),
        _ => Err(Failure::new(
            1,
            format!(
                "unknown family '{name}' \
                 (known: complete, cycle, path, star, chemical-tree, c60)"
            ),
        )),
    }
}

fn family_constructor(name: &str) -> Result<fn(usize) -> GraphFamily, Failure> {
    match name {
        "complete" => Ok(GraphFamily::Complete),
        "cycle" => Ok(GraphFamily::Cycle),
        "path" => Ok(GraphFamily::Path),
        "star" => Ok(GraphFamily::Star),
        _ => Err(Failure::new(
            1,
            format!("family '{name}' cannot be swept (known: complete, cycle, path, star)"),
        )),
    }
}

fn parse_range(range: &str) -> Result<(usize, usize), Failure> {
    let bad = || Failure::new(1, format!("range '{range}' is not of the form <start>..<end>"));
    let (lo, hi) = range.split_once("..").ok_or_else(bad)?;
    let start: usize = lo.trim().parse().map_err(|_| bad())?;
    let end: usize = hi.trim().parse().map_err(|_| bad())?;
    if start > end {
        return Err(Failure::new(1, format!("empty range {start}..{end}")));
    }
    Ok((start, end))
}

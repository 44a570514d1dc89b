//! `gspec` command-line front end.
//!
//! [`run`] parses an argument list, executes one subcommand and returns the
//! process exit status: 0 on success, 2 on a usage error, 1 on any error
//! raised while loading or analysing a graph.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gspec_core::bounds::{Pair, DEFAULT_CROSSOVER_TOL};
use gspec_core::clustering::{DEFAULT_RESTARTS, DEFAULT_SEED};
use gspec_core::RepresentationKind;

mod commands;
pub mod error;
pub mod input;
pub mod plot;
pub mod sweep;
pub mod table;

pub use error::CliError;

/// Default merge tolerance for `polymap`.
pub const DEFAULT_MERGE_TOL: f64 = 1e-10;

#[derive(Debug, Parser)]
#[command(
    name = "gspec",
    version,
    about = "Compare the spectra of the adjacency matrix and the two graph Laplacians"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GraphArg {
    /// Graph file: `.net` is read as Pajek, anything else as an edge list.
    /// `@karate` selects the bundled karate club network.
    file: String,
    /// Override file-type detection
    #[arg(long, value_enum, default_value_t = input::InputFormat::Auto)]
    input_format: input::InputFormat,
    /// Remove isolated vertices before the analysis
    #[arg(long)]
    drop_isolated: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DataFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableFormat {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Model {
    Star,
    Complete,
    Graphc,
    Bipartiteb,
    Karate,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Size, degree extremes, components, class and region of a graph
    Info {
        #[command(flatten)]
        graph: GraphArg,
    },
    /// Write a model graph as an edge list
    Gen {
        #[arg(value_enum)]
        model: Model,
        /// Vertex count (star) or clique size (complete, graphc)
        size: Option<usize>,
        /// Output file (stdout when omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Ordered eigenvalues of one representation matrix
    Spectra {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, value_parser = parse_kind)]
        kind: RepresentationKind,
        #[arg(long, value_enum, default_value_t = DataFormat::Csv)]
        format: DataFormat,
    },
    /// Eigenvalue-difference bounds and their verification
    Bounds {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
    },
    /// Normalised-eigengap bounds and their verification
    Gaps {
        #[command(flatten)]
        graph: GraphArg,
    },
    /// Bound values over a grid of degree extremes
    Table {
        #[arg(long, default_value_t = 5)]
        dmin_max: u32,
        #[arg(long, default_value_t = 7)]
        dmax_max: u32,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
    },
    /// Region and bound ordering for given degree extremes
    Region {
        #[arg(long)]
        dmin: f64,
        #[arg(long)]
        dmax: f64,
    },
    /// Spectral clustering with k-means
    Cluster {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, value_parser = parse_kind)]
        kind: RepresentationKind,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_RESTARTS)]
        restarts: usize,
        /// Reference labels (`vertex_id label` lines, 1-based ids);
        /// `@karate` selects the bundled faction split
        #[arg(long)]
        truth: Option<String>,
    },
    /// Indices where eigenvalue differences swing between the bound extremes
    Crossover {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, value_parser = parse_pair)]
        pair: Pair,
        #[arg(long, default_value_t = DEFAULT_CROSSOVER_TOL)]
        tol: f64,
    },
    /// Interpolating polynomial from one spectrum onto another
    Polymap {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, value_parser = parse_pair)]
        pair: Pair,
        #[arg(long, default_value_t = DEFAULT_MERGE_TOL)]
        merge_tol: f64,
    },
    /// Check the Weyl interval for the adjacency/Laplacian pair
    Weyl {
        #[command(flatten)]
        graph: GraphArg,
    },
    /// Per-index series behind the eigenvalue and eigengap comparison plots
    Plotdata {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, value_enum)]
        figure: plot::Figure,
        #[arg(long, value_parser = parse_pair)]
        pair: Pair,
        #[arg(long, value_enum, default_value_t = DataFormat::Csv)]
        format: DataFormat,
    },
    /// Normalised eigengaps of the graphs C(k) over a range of k
    Sweep {
        /// Inclusive range, e.g. `3..18`
        #[arg(long, value_parser = parse_range)]
        graphc: (usize, usize),
        #[arg(long, value_enum, default_value_t = DataFormat::Csv)]
        format: DataFormat,
    },
}

fn parse_kind(s: &str) -> Result<RepresentationKind, String> {
    RepresentationKind::from_tag(s)
        .ok_or_else(|| format!("unknown kind {s:?} (expected A, L or Lrw)"))
}

fn parse_pair(s: &str) -> Result<Pair, String> {
    Pair::from_tag(s).ok_or_else(|| format!("unknown pair {s:?} (expected A_L, L_Lrw or A_Lrw)"))
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected LO..HI, got {s:?}"))?;
    let lo: usize = a
        .trim()
        .parse()
        .map_err(|_| format!("invalid lower end {a:?}"))?;
    let hi: usize = b
        .trim()
        .trim_start_matches('=')
        .parse()
        .map_err(|_| format!("invalid upper end {b:?}"))?;
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok((lo, hi))
}

/// Runs one command line. `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    match commands::execute(cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

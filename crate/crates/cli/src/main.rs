//! `wellcover`: analyze graphs, products and factor-pair scans from graph6 input.

mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "wellcover", version, about = "Well-covered graphs and Cartesian products")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Well-coveredness, isolatable vertices and maximal set sizes of one graph.
    Analyze {
        /// graph6 line, or `-` to read one graph per line from stdin
        graph: String,
    },
    /// Report on G □ H and check the pair against the main theorem.
    Product {
        g: String,
        h: String,
        /// Largest product order to enumerate
        #[arg(long, default_value_t = wellcover::caps::DEFAULT_ENUMERATION_CAP)]
        cap: usize,
    },
    /// Build the distinct-size maximal independent sets of G □ H from an
    /// isolatable vertex of one factor and a non-well-covered other factor.
    Witness { g: String, h: String },
    /// Check every unordered pair of a corpus.
    Scan(ScanArgs),
    /// Print one canonical graph6 line per isomorphism class on n vertices.
    Gen { n: usize },
}

#[derive(clap::Args)]
pub struct ScanArgs {
    /// Largest factor order
    #[arg(long = "max-n", env = "WELLCOVER_MAX_N", default_value_t = 5)]
    pub max_n: usize,
    /// Largest product order
    #[arg(long = "product-cap", env = "WELLCOVER_PRODUCT_CAP", default_value_t = 30)]
    pub product_cap: usize,
    /// graph6 file (one graph per line); repeatable
    #[arg(long = "corpus")]
    pub corpus: Vec<PathBuf>,
    /// Generate all graphs up to this order (default 5, or 0 when --corpus is given)
    #[arg(long = "gen-up-to")]
    pub gen_up_to: Option<usize>,
    /// Keep only connected graphs
    #[arg(long = "connected-only")]
    pub connected_only: bool,
    /// Worker threads (0 = all cores)
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Write the report here instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze { graph } => commands::analyze(&graph),
        Command::Product { g, h, cap } => commands::product(&g, &h, cap),
        Command::Witness { g, h } => commands::witness(&g, &h),
        Command::Scan(args) => commands::scan(&args),
        Command::Gen { n } => commands::gen(n),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

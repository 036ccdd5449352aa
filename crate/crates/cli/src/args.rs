use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use signed_graphs::Budget;

#[derive(Debug, Parser)]
#[command(
    name = "sgraph",
    version,
    about = "Generate, analyze and verify signed graphs"
)]
pub struct Cli {
    /// Print reports as JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0x5eed)]
    pub seed: u64,
    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Node limit for every exact search.
    #[arg(long, global = true, default_value_t = Budget::DEFAULT_NODES)]
    pub budget: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a generated graph in the text format.
    Gen(GenArgs),
    /// Measure a graph file.
    Analyze(AnalyzeArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Search for the smallest graph with given negative girth and chi_b.
    Search(SearchArgs),
    /// Girth against the bounds for a graph family, as CSV.
    Harness(HarnessArgs),
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[command(subcommand)]
    pub kind: GenKind,
    /// Output file; stdout when absent.
    #[arg(short, long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum GenKind {
    /// Signed Kneser graph KS(n, k).
    Kneser {
        #[arg(short)]
        n: u32,
        #[arg(short)]
        k: u32,
        /// Keep one vertex of each antitwin pair.
        #[arg(long)]
        reduce: bool,
    },
    /// Signed Schrijver graph SS(n, k).
    Schrijver {
        #[arg(short)]
        n: u32,
        #[arg(short)]
        k: u32,
        #[arg(long)]
        reduce: bool,
    },
    /// Lower-bound construction with chi_b = p on n vertices.
    Lowerbound {
        #[arg(short)]
        p: u32,
        #[arg(short)]
        n: usize,
    },
    /// Generalized Mycielskian of the negative 4-cycle.
    Mycielski {
        #[arg(short, long)]
        levels: usize,
        #[arg(long, value_enum, default_value_t = ConventionArg::InheritedPositiveApex)]
        convention: ConventionArg,
    },
    /// The 13-vertex graph with chi_b = 3 and negative girth 4.
    Fig13,
    /// All-negative clique on 2p - 1 vertices, or on --size vertices.
    Negclique {
        #[arg(short, required_unless_present = "size", conflicts_with = "size")]
        p: Option<usize>,
        #[arg(long)]
        size: Option<usize>,
    },
    /// Cycle on n vertices with exactly one negative edge.
    Cycle {
        #[arg(short)]
        n: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    InheritedPositiveApex,
    InheritedNegativeApex,
    PositiveCross,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Measure {
    Balance,
    Girth,
    Chib,
    Radius,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    pub file: PathBuf,
    /// Quantities to compute; all of them when absent.
    #[arg(long, value_enum, value_delimiter = ',')]
    pub what: Vec<Measure>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(subcommand)]
    pub suite: Suite,
}

#[derive(Debug, Subcommand)]
pub enum Suite {
    /// Negative girth of KS(n, k) against the closed form, plus shift witnesses.
    Lemma21 {
        #[arg(long, default_value_t = 7)]
        nmax: u32,
    },
    /// Peel coloring: a valid pq-coloring or a hypothesis violation.
    Thm31 {
        #[arg(short, default_value_t = 1)]
        p: usize,
        #[arg(short, default_value_t = 2)]
        q: u32,
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Short negative cycle certificates.
    Thm41 {
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Lower-bound construction against both girth bounds.
    Bounds {
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        p: Vec<u32>,
        #[arg(long, default_value_t = 40)]
        nmax: usize,
    },
    /// Fast algorithms against brute-force oracles.
    Oracles {
        /// Exhaustive over every graph up to this many vertices.
        #[arg(long, default_value_t = 4)]
        n: usize,
        /// Number of random graphs.
        #[arg(long, default_value_t = 500)]
        random: usize,
        /// Vertex limit for random graphs.
        #[arg(long, default_value_t = 12)]
        max_n: usize,
    },
}

#[derive(Debug, Args)]
pub struct Inputs {
    /// Built-in corpus name.
    #[arg(long)]
    pub corpus: Option<String>,
    /// Graph files to check in addition to the corpus.
    #[arg(long = "graph")]
    pub graphs: Vec<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long)]
    pub lambda: usize,
    #[arg(short)]
    pub p: usize,
    #[arg(long)]
    pub nmax: usize,
    /// Frontier file written after every level.
    #[arg(long)]
    pub checkpoint: Option<PathBuf>,
    /// Continue from the checkpoint.
    #[arg(long, requires = "checkpoint")]
    pub resume: bool,
    /// Also write the full search report as JSON.
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    LowerBound,
    Negclique,
    Mycielski,
}

#[derive(Debug, Args)]
pub struct HarnessArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    /// Sizes, or Mycielski level counts.
    #[arg(long, value_delimiter = ',', required = true)]
    pub sizes: Vec<usize>,
    #[arg(short)]
    pub p: u32,
    /// CSV file; stdout when absent.
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

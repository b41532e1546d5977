use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "harary",
    version,
    about = "Harary index computation and extremal-graph verification"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Harary and Wiener indices of graph6 lines.
    Compute(InputArgs),
    /// κ, λ, cut vertices and blocks of graph6 lines.
    Connectivity(InputArgs),
    /// Build one of the extremal families.
    #[command(subcommand)]
    Construct(Construct),
    /// Apply an index-increasing surgery and show both sides.
    #[command(subcommand)]
    Transform(Transform),
    /// Exhaustive sweep ranking connected graphs per class.
    Enumerate(EnumerateArgs),
    /// Check a theorem and emit a report; exit 1 if any claim fails.
    #[command(subcommand)]
    Verify(Verify),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// File of graph6 lines; standard input when absent.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Construct {
    /// K_{n-k} with n-k pendant paths of almost equal lengths.
    Gnk {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// K_{n-1} plus a vertex joined to r clique vertices.
    Knr {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// (K_{n1} ∪ K_{n2}) ∨ K_{n3}.
    Join {
        #[arg(long)]
        n1: usize,
        #[arg(long)]
        n2: usize,
        #[arg(long)]
        n3: usize,
    },
    /// Second maximizers for vertex connectivity r.
    SecondMax {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum Transform {
    /// Add the edge u-v.
    AddEdge {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        u: usize,
        #[arg(long)]
        v: usize,
    },
    /// Reroute the twin edge u-v of G1 onto a shortest path of G2.
    Per1 {
        #[arg(long)]
        g1: String,
        #[arg(long)]
        u: usize,
        #[arg(long)]
        v: usize,
        #[arg(long)]
        g2: String,
        /// Comma-separated shortest path x_1..x_t in G2.
        #[arg(long, value_delimiter = ',', required = true)]
        path: Vec<usize>,
        #[arg(long)]
        s: usize,
    },
    /// Merge two cliques sharing a vertex, with pendant paths of t and s vertices.
    Per2 {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        s: usize,
    },
    /// Move one vertex from the longer of two paths at twin vertices to the shorter.
    Shift {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        u: usize,
        #[arg(long)]
        v: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        s: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Classify {
    Cut,
    Kappa,
    Lambda,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
    /// Permit n = 8.
    #[arg(long)]
    pub allow_large: bool,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum)]
    pub classify: Classify,
    #[command(flatten)]
    pub sweep: SweepArgs,
}

#[derive(Debug, Subcommand)]
pub enum Verify {
    /// Unique maximizer per cut-vertex count.
    Cut {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Strictly descending maxima over the cut-vertex count.
    Ordering {
        #[arg(long)]
        n: usize,
    },
    /// Unique maximizer per vertex and edge connectivity.
    Connectivity {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Second maximizers per vertex connectivity.
    SecondMax {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Seeded property run over the index-increasing surgeries.
    Lemmas {
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use coordcut::DEFAULT_BUDGET;

#[derive(Parser, Debug)]
#[command(
    name = "coordcut",
    about = "Exact solvers for maximum weighted digraph partition and binary-action coordination games",
    disable_version_flag = true,
    arg_required_else_help = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Option<Command>,

    #[command(flatten)]
    pub common: Common,

    /// Print the library and file-format versions
    #[arg(long, short = 'V')]
    pub version: bool,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Input JSON file (standard input when omitted)
    #[arg(long, short, global = true)]
    pub input: Option<PathBuf>,

    /// Write the report here instead of standard output
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    /// Largest vertex count handed to exhaustive solvers
    #[arg(long, global = true, env = "COORDCUT_BUDGET", default_value_t = DEFAULT_BUDGET,
          value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(1..=62))]
    pub budget: usize,

    /// Random restarts of the heuristic fallbacks
    #[arg(long, global = true, default_value_t = 16)]
    pub restarts: usize,

    /// Seed of every random choice
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Report format
    #[arg(long, short, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Worker threads for exhaustive scans (all cores when omitted)
    #[arg(long, global = true, value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(1..))]
    pub threads: Option<usize>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Solve an MWDP instance with the dispatcher
    Solve,
    /// Classify an MWDP instance's matrix family
    Classify,
    /// Maximise the social welfare of a polymatrix game
    GameWelfare,
    /// Maximise the potential of a polymatrix potential game
    GamePotential,
    /// Welfare-optimal pure Nash equilibrium of a threshold game
    ThresholdNe,
    /// Solve a graph problem through its MWDP encoding
    Encode {
        /// Source problem
        #[arg(long, value_enum)]
        problem: Problem,
        /// Print the encoded MWDP instance instead of solving it
        #[arg(long)]
        emit_instance: bool,
    },
    /// Maximum-density subgraph by binary search on the average degree
    Density,
    /// Constants and minimum-traversal equilibrium of the hitting-set gadget
    Gadget {
        #[arg(long = "gamma-a", default_value = "3/4")]
        gamma_a: String,
        #[arg(long = "gamma-b", default_value = "1/4")]
        gamma_b: String,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Solve => "solve",
            Command::Classify => "classify",
            Command::GameWelfare => "game-welfare",
            Command::GamePotential => "game-potential",
            Command::ThresholdNe => "threshold-ne",
            Command::Encode { .. } => "encode",
            Command::Density => "density",
            Command::Gadget { .. } => "gadget",
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Problem {
    /// Undirected max cut (`edges`)
    MaxCut,
    /// Directed max cut (`arcs`)
    DirectedMaxCut,
    /// Closeness to Eulerian (`arcs`)
    EulerianCloseness,
    /// Minimum s-t cut (`arcs` or `edges`, plus `s` and `t`)
    MinStCut,
    /// 2-colour partition (coloured graph)
    TwoColorPartition,
    /// Is there a subgraph with average degree above `k`? (`edges`, `k`)
    MaxAvgDegree,
    /// Weighted 2-colour difference (coloured graph)
    TwoColorDifference,
}

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rees_core::decide::{Decider, DEFAULT_BUDGET};

#[derive(Parser, Debug)]
#[command(name = "rees", version, about = "Equivalence and satisfiability of polynomials over finite Rees matrix semigroups")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Structure-matrix file (`m n [group]`, then m rows of n entries).
    #[arg(long, short, global = true)]
    pub matrix: Option<PathBuf>,
    /// Work over S¹ instead of S.
    #[arg(long, global = true)]
    pub adjoin_identity: bool,
    /// Cap on exhaustive evaluations.
    #[arg(long, global = true, env = "REES_BUDGET", default_value_t = DEFAULT_BUDGET,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,
    /// Print the facts each verdict relies on.
    #[arg(long, global = true)]
    pub explain: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
    /// Seed for randomized witness searches and sampling.
    #[arg(long, global = true, default_value_t = Decider::DEFAULT_SEED)]
    pub seed: u64,
    /// Allow exhaustive search when no fast procedure applies.
    #[arg(long, global = true)]
    pub brute: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Plain,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Are two terms equal under every evaluation?
    TermEq { p: String, q: String },
    /// Are two polynomials equal under every evaluation?
    PolEq { p: String, q: String },
    /// Is a polynomial identically 0?
    PolZero { p: String },
    /// Does `p = b` have a solution? `b` is `0`, `1`, or a constant.
    PolSat { p: String, b: String },
    /// Do two polynomials vanish on the same evaluations?
    ZsetEq { p: String, q: String },
    /// Report regularity, total balance, and the retraction plan of a matrix.
    AnalyzeMatrix,
    /// Reduce a graph problem to an identically-zero question over S_{H₃}.
    Reduce {
        problem: Problem,
        /// Graph file: `n m`, then m lines of 1-based edges.
        graph: PathBuf,
        /// Write the polynomial here instead of stdout.
        #[arg(long, short)]
        output: Option<PathBuf>,
        /// Variable-to-vertex map; defaults to `<output>.map` when `--output` is given.
        #[arg(long)]
        map: Option<PathBuf>,
        /// Also search for a structured nonzero evaluation and decode it.
        #[arg(long)]
        witness: bool,
    },
    /// Write a structure-matrix file to stdout.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Export G(p), B(p) or B̄(p) in DOT syntax.
    Graph {
        #[arg(long, value_enum, default_value_t = GraphKind::Bipartite)]
        kind: GraphKind,
        p: String,
    },
    /// Run the fast procedures and the exhaustive oracle side by side.
    BruteCheck {
        /// Instance file; omit to sample random instances.
        instances: Option<PathBuf>,
        /// Number of random instances.
        #[arg(long, default_value_t = 100)]
        random: usize,
        /// Longest random polynomial.
        #[arg(long, default_value_t = 5)]
        max_len: usize,
    },
    /// Decide every instance of a file, one verdict per line.
    Batch { instances: PathBuf },
}

#[derive(ValueEnum, Debug, Clone, Copy)]
pub enum Problem {
    /// Graph 3-colorability.
    #[value(name = "3col")]
    ThreeCol,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
pub enum GraphKind {
    Adjacency,
    Bipartite,
    Identified,
}

#[derive(Subcommand, Debug)]
pub enum GenKind {
    Identity { k: usize },
    Hollow { k: usize },
    AllOnes { m: usize, n: usize },
    /// Adds an all-ones row and column.
    Border { file: PathBuf },
    DirectSum { first: PathBuf, second: PathBuf },
    /// Rank-at-most-one n × n matrices over GF(p).
    Rank1 { p: u64, n: usize },
    /// The combinatorial quotient by the H-relation.
    HQuotient { file: PathBuf },
}

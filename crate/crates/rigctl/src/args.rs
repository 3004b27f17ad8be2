use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rigcore::rank::DEFAULT_TRIALS;

#[derive(Parser, Debug)]
#[command(
    name = "rigctl",
    version,
    about = "d-sparse subgraphs, critical covers and generic rigidity ranks"
)]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Dimension d (1..=8).
    #[arg(long = "dim", short = 'd', global = true, default_value_t = 3)]
    pub dim: usize,

    /// Input graph file, or `-` for standard input (edge list or JSON).
    #[arg(long, short = 'i', global = true, default_value = "-")]
    pub input: PathBuf,

    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Coordinate draws for rank computations.
    #[arg(long, global = true, default_value_t = DEFAULT_TRIALS)]
    pub trials: usize,

    /// Sample count; the default depends on the command.
    #[arg(long, global = true)]
    pub samples: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = BackendArg::Flow)]
    pub backend: BackendArg,

    #[arg(long, short = 'f', global = true, value_enum, default_value_t = FormatArg::Json)]
    pub format: FormatArg,

    /// Worker threads for library internals.
    #[arg(long, global = true, env = "RIGCTL_THREADS", default_value_t = 1)]
    pub threads: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum BackendArg {
    Brute,
    Flow,
    Both,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Json,
    Text,
    Dot,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Given,
    Random,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Emit an example or random graph.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Decide d-sparsity; exits 1 when the graph is not d-sparse.
    Sparse,
    /// Greedy maximal d-sparse subgraph.
    Maximal {
        #[arg(long, value_enum, default_value_t = OrderArg::Given)]
        order: OrderArg,
    },
    /// Critical components of a d-sparse graph.
    Components,
    /// Critical cover of G relative to a maximal d-sparse subgraph, with all
    /// cover checks.
    Cover {
        #[arg(long, value_enum, default_value_t = OrderArg::Given)]
        order: OrderArg,
    },
    /// Generic d-dimensional rigidity rank.
    Rank,
    /// Independence of an edge subset (all edges by default).
    Independent {
        /// Edges as `u-v` pairs separated by commas.
        #[arg(long, value_delimiter = ',')]
        edges: Vec<String>,
    },
    /// Fewest edges in a maximal d-sparse subgraph (estimate or exact).
    Sd {
        #[arg(long)]
        exhaustive: bool,
    },
    /// Least s_d over supergraphs with up to `budget` added edges.
    Sdstar {
        #[arg(long, default_value_t = 1)]
        budget: usize,
    },
    /// Property checks.
    Verify {
        #[command(subcommand)]
        check: VerifyKind,
    },
}

#[derive(Subcommand, Debug)]
pub enum GenKind {
    /// Two K5 blocks sharing an edge, with the shared edge removed.
    DoubleK5,
    /// Two K5 blocks sharing an edge.
    DoubleK5Plus,
    /// K5 with a K5 glued on each of its edges.
    K5Flower,
    Complete {
        n: usize,
    },
    /// G(n, p) from the shared seed.
    Random {
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
    },
}

#[derive(Subcommand, Debug)]
pub enum VerifyKind {
    /// Rank against sampled maximal d-sparse subgraphs (d <= 5).
    Theorem4,
    /// Critical-cover properties and hinge inequalities.
    Lemmas {
        #[arg(long, value_enum, default_value_t = OrderArg::Random)]
        order: OrderArg,
    },
    /// Independent edge subsets span d-sparse subgraphs.
    Maxwell,
    /// In the plane every maximal 2-sparse subgraph has rank-many edges.
    Laman,
    /// Random search for rank-bound violations (d in 6..=8).
    Hunt {
        #[arg(long, default_value_t = 12)]
        n_max: usize,
    },
    /// The full acceptance property suite.
    All {
        /// Restrict to these criteria (1..=8).
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
    },
}

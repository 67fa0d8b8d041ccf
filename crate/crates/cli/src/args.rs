use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::Rational64;

/// Exact algorithms on pseudo-segment intersection graphs.
#[derive(Parser, Debug)]
#[command(name = "psreg", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

/// Seed shared by every randomized command.
#[derive(Args, Debug, Clone, Copy)]
pub struct SeedArg {
    #[arg(long, env = "PSREG_SEED", default_value_t = 0)]
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum OracleMode {
    Exact,
    Heuristic,
    Auto,
}

impl From<OracleMode> for psreg::homog::Mode {
    fn from(m: OracleMode) -> Self {
        match m {
            OracleMode::Exact => psreg::homog::Mode::Exact,
            OracleMode::Heuristic => psreg::homog::Mode::Heuristic,
            OracleMode::Auto => psreg::homog::Mode::Auto,
        }
    }
}

fn fraction(s: &str) -> Result<Rational64, String> {
    s.parse::<Rational64>().map_err(|e| format!("expected a fraction like 1/5: {e}"))
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check that a curve file is a pseudo-segment family.
    Validate {
        file: PathBuf,
        /// Write the arrangement as SVG.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Intersection graph of a curve file.
    Graph {
        file: PathBuf,
        /// Write the graph as an instance file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certified regularity partition.
    Partition {
        file: PathBuf,
        #[arg(long, value_parser = fraction)]
        eps: Rational64,
        /// Number of blocks.
        #[arg(long = "K", visible_alias = "blocks")]
        k: usize,
        #[arg(long, value_enum, default_value_t = OracleMode::Auto)]
        oracle: OracleMode,
        /// Write the pair certificates as an SVG heatmap.
        #[arg(long)]
        svg: Option<PathBuf>,
        #[command(flatten)]
        seed: SeedArg,
    },
    /// Large near-homogeneous vertex set.
    Rodl {
        file: PathBuf,
        #[arg(long, value_parser = fraction)]
        eps: Rational64,
        #[arg(long, value_enum, default_value_t = OracleMode::Auto)]
        oracle: OracleMode,
        #[command(flatten)]
        seed: SeedArg,
    },
    /// Homogeneous pair between red and blue curves.
    Mighty {
        file: PathBuf,
        /// Treat the first N curves as red and the rest as blue instead of
        /// using the colors in the file.
        #[arg(long, value_name = "N")]
        red_blue_split: Option<usize>,
        /// Target fraction of each side.
        #[arg(long, value_parser = fraction, default_value = "1/8")]
        c: Rational64,
        #[arg(long, value_enum, default_value_t = OracleMode::Auto)]
        oracle: OracleMode,
        #[command(flatten)]
        seed: SeedArg,
    },
    /// Balanced separator of the intersection graph.
    Separator { file: PathBuf },
    /// Vertical cutting of a grounded x-monotone family.
    Cutting {
        file: PathBuf,
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        seed: SeedArg,
    },
    /// Half-and-half selection from a string of R and B letters.
    Sweep { colors: String },
    /// Simple topological drawings.
    Topo {
        #[command(subcommand)]
        command: TopoCommand,
    },
    /// Generate an instance file.
    Gen {
        #[command(subcommand)]
        generator: GenCommand,
        #[arg(long, env = "PSREG_SEED", default_value_t = 0, global = true)]
        seed: u64,
        /// Output path; standard output when omitted.
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Summarize every instance file in a directory as CSV.
    Report {
        dir: PathBuf,
        /// CSV path; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum TopoCommand {
    /// Check that a drawing is simple.
    Validate { file: PathBuf },
    /// Pairwise disjoint edges.
    Disjoint {
        file: PathBuf,
        /// Stop at K edges.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value_t = OracleMode::Auto)]
        oracle: OracleMode,
        /// Draw the drawing with the chosen edges highlighted.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Pairs of edges crossing an odd number of times.
    Oddcr { file: PathBuf },
    /// Bisection width against crossings and degrees.
    Bisect {
        file: PathBuf,
        #[command(flatten)]
        seed: SeedArg,
    },
    /// Edge-count bound for drawings without K disjoint edges.
    Bound {
        file: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1.0)]
        c2: f64,
    },
    /// Two K-sets of disjoint edges crossing each other pairwise.
    Grid {
        file: PathBuf,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Shape {
    Random,
    Nested,
    Twist,
}

#[derive(Subcommand, Debug)]
pub enum GenCommand {
    /// Straight segments in generic position.
    Segments {
        #[arg(long)]
        n: usize,
        /// Side of the square coordinate grid.
        #[arg(long, default_value_t = 100)]
        bbox: i64,
        /// Largest coordinate offset between the endpoints of a segment.
        #[arg(long)]
        max_len: Option<i64>,
    },
    /// Segments whose intersection graph is the half graph.
    Halfgraph {
        #[arg(long)]
        n: usize,
    },
    /// x-monotone curves crossing pairwise once.
    Wiring {
        #[arg(long)]
        n: usize,
    },
    /// Curves between two vertical grounds.
    Grounded {
        #[arg(long)]
        n: usize,
        /// Bend the curves so they are no longer x-monotone.
        #[arg(long)]
        bent: bool,
        #[arg(long, value_enum, default_value_t = Shape::Random)]
        shape: Shape,
    },
    /// Straight-line complete graph on a convex polygon.
    Convex {
        #[arg(long)]
        n: usize,
    },
}

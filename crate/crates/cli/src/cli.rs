use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use shadowcut::Field;

#[derive(Parser, Debug)]
#[command(name = "shadowcut", version, about = "Hypertrees, shadows and hypercuts over F2 and Q")]
pub struct Cli {
    /// Worker threads for parallel searches (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FieldArg {
    F2,
    Q,
}

impl From<FieldArg> for Field {
    fn from(f: FieldArg) -> Field {
        match f {
            FieldArg::F2 => Field::F2,
            FieldArg::Q => Field::Q,
        }
    }
}

#[derive(Args, Debug)]
pub struct FieldOpt {
    /// Coefficient field.
    #[arg(long, value_enum)]
    pub field: FieldArg,
}

#[derive(Args, Debug)]
pub struct Input {
    /// Complex file; `-` or omitted reads standard input.
    pub input: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct Output {
    /// Write to this file instead of standard output.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Emit one of the explicit constructions as a complex file.
    Construct {
        #[command(subcommand)]
        kind: Construct,
    },
    /// Rank of the boundary columns of a face set.
    Rank {
        #[command(flatten)]
        field: FieldOpt,
        #[command(flatten)]
        input: Input,
    },
    /// Faces outside the set that lie in its span.
    Shadow {
        #[command(flatten)]
        field: FieldOpt,
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
    },
    /// Greedy elementary collapses; exit 1 if a residual remains.
    Collapse {
        #[command(flatten)]
        input: Input,
        /// Write the `tau -> sigma` steps here.
        #[arg(long)]
        steps: Option<PathBuf>,
        /// Replay a recorded step file instead of collapsing greedily.
        #[arg(long, conflicts_with = "steps")]
        replay: Option<PathBuf>,
    },
    /// Is the face set a hypercut? Exit 1 if not.
    Hypercut {
        #[command(flatten)]
        field: FieldOpt,
        #[command(flatten)]
        input: Input,
    },
    /// Λ-classes of a face set; exit 1 if there is more than one.
    Lambda {
        #[command(flatten)]
        input: Input,
        /// Use the link of this vertex in a 2-dimensional face set.
        #[arg(long)]
        vertex: Option<u32>,
    },
    /// Extremal F2 hypercut searches.
    Search {
        #[command(subcommand)]
        kind: Search,
    },
    /// Minimum of the two-variable inequality on a grid and by sampling.
    Appendix {
        #[arg(long, default_value_t = 0.001)]
        step: f64,
        #[arg(long, default_value_t = 1_000_000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run acceptance checks; exit 1 if any fails.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        /// Cap on n for the X_n, rank-formula, A_n and family suites.
        #[arg(long)]
        nmax: Option<usize>,
        /// Print every sub-check.
        #[arg(short, long)]
        verbose: bool,
    },
    /// Boundary matrix in SMS triplet format.
    Export {
        #[command(flatten)]
        field: FieldOpt,
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Subcommand, Debug)]
pub enum Construct {
    /// 3-term progressions in Z_n with difference other than ±1.
    Xn {
        #[arg(long)]
        n: usize,
        /// Emit the relabeled complex with its edge and face classes as comment sections.
        #[arg(long)]
        classes: bool,
        #[command(flatten)]
        output: Output,
    },
    /// The collapsible shadowless complex A_n (odd n >= 7).
    An {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        output: Output,
    },
    /// The star hypertree: all d-faces through vertex 0.
    Star {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        d: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Random (d-1)-dimensional link on n-1 vertices for even d.
    RandomLink {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        d: usize,
        #[arg(long)]
        seed: u64,
        /// Emit the generated coboundary on n vertices instead of the link.
        #[arg(long)]
        cut: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Largest hypercut from the complement of an admissible family graph.
    ExtremalFamily {
        #[arg(long)]
        n: usize,
        /// matching, matching-isolated or matching-isolated-path.
        #[arg(long)]
        structure: Option<String>,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Subcommand, Debug)]
pub enum Search {
    /// Every coboundary on n <= 7 vertices (8 with --opt-in-n8).
    Exhaustive {
        #[arg(long)]
        n: usize,
        /// Vertex whose link generates the sweep (default n-1).
        #[arg(long)]
        apex: Option<u32>,
        #[arg(long)]
        opt_in_n8: bool,
        /// Witness blocks to print.
        #[arg(long, default_value_t = 3)]
        witnesses: usize,
    },
    /// Best member of the explicit extremal family.
    Family {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        witnesses: usize,
    },
    /// Least F2 shadow of an almost-hypertree on n vertices.
    MinShadow {
        #[arg(long)]
        n: usize,
        /// Also enumerate almost-hypertrees directly (n <= 6).
        #[arg(long)]
        direct: bool,
    },
}

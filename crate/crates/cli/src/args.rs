use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::report::Format;

const FAMILY_HELP: &str = "Family descriptor `name[:p1[,p2]]`: complete:m, star:m, friendship:m, path:m, cycle:m, \
bipartite:i,j, caterpillar:m1,m2, binary-tree:d, mary-tree:m, petersen:m,j, tiling:r3|r4|r6";

/// Exact closed chromatic numbers: χ_{n,k}(G) is the least number of distinct
/// integer labels in a proper labeling whose closed-neighbourhood sums are all
/// ≡ k (mod n).
///
/// Exit status: 0 completed, 2 completed with failure flags, 1 usage or
/// resource error.
#[derive(Debug, Parser)]
#[command(name = "closed-chroma", version, after_help = FAMILY_HELP)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact value and witness from the search engine.
    Compute {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        residue: Residue,
        #[command(flatten)]
        caps: Caps,
        #[command(flatten)]
        output: Output,
    },
    /// Closed-form verdict for a family member.
    Classify {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        residue: Residue,
        #[command(flatten)]
        output: Output,
    },
    /// Check a labeling file, or re-check the witness in a saved report.
    Verify {
        #[command(flatten)]
        target: VerifyTarget,
        #[arg(long, allow_negative_numbers = true, requires = "labeling")]
        n: Option<u64>,
        #[arg(long, allow_negative_numbers = true, requires = "labeling")]
        k: Option<i64>,
        /// One integer per line, in vertex index order.
        #[arg(long, conflicts_with = "report", requires_all = ["n", "k"])]
        labeling: Option<PathBuf>,
        /// A JSON report written by `compute` or `classify`.
        #[arg(long)]
        report: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// Classifier against oracle over a parameter grid of one family.
    Survey {
        /// Family name, e.g. `cycle` or `petersen`.
        #[arg(long)]
        family: String,
        /// First parameter values, e.g. `3..12`.
        #[arg(long)]
        p1: Option<String>,
        /// Second parameter values (Petersen defaults to every valid j).
        #[arg(long)]
        p2: Option<String>,
        #[arg(long, default_value = "1..12")]
        n: String,
        /// Remainders; defaults to every k in 0..n.
        #[arg(long, allow_hyphen_values = true)]
        k: Option<String>,
        /// Compare existence only (no minimization).
        #[arg(long)]
        existence_only: bool,
        #[command(flatten)]
        caps: Caps,
        #[command(flatten)]
        output: Output,
    },
    /// Sweeps targeting undecided cells and open questions.
    Frontier {
        #[command(subcommand)]
        kind: FrontierKind,
    },
    /// Level-label coefficients of perfect binary trees as linear forms in k and a.
    Series {
        #[arg(long, default_value_t = 16)]
        upto: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Independent efficient dominating set, and the coloring it induces.
    Ieds {
        #[command(flatten)]
        input: Input,
        #[arg(long, requires = "k")]
        n: Option<u64>,
        #[arg(long, allow_negative_numbers = true, requires = "n")]
        k: Option<i64>,
        #[command(flatten)]
        caps: Caps,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Debug, Subcommand)]
pub enum FrontierKind {
    /// Generalized Petersen cells: classifier next to linear-algebra existence.
    Petersen {
        #[arg(long, default_value = "3..10")]
        m: String,
        /// Restrict j; defaults to every 1 <= j < m/2.
        #[arg(long)]
        j: Option<String>,
        #[arg(long, default_value = "1..12,16,24")]
        n: String,
        #[arg(long, default_value = "1,2", allow_hyphen_values = true)]
        k: String,
        /// Only cells the classifier leaves undecided.
        #[arg(long)]
        open_only: bool,
        #[command(flatten)]
        caps: Caps,
        #[command(flatten)]
        output: Output,
    },
    /// χ_{n,k1+k2} against χ_{n,k1} + χ_{n,k2} for every pair of remainders.
    Additivity {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "1..8")]
        n: String,
        #[command(flatten)]
        caps: Caps,
        #[command(flatten)]
        output: Output,
    },
    /// Values against χ and χ + 1, with or without an IEDS.
    Ieds {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "1..8")]
        n: String,
        #[command(flatten)]
        caps: Caps,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Input {
    /// Family descriptor, e.g. `petersen:7,2`.
    #[arg(long)]
    pub family: Option<String>,
    /// Edge-list file.
    #[arg(long)]
    pub graph: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(required = false, multiple = false)]
pub struct VerifyTarget {
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub graph: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Residue {
    /// Modulus, at least 1.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,
    #[arg(long, allow_negative_numbers = true)]
    pub k: i64,
}

#[derive(Debug, Args)]
pub struct Caps {
    /// Residue solutions examined before reporting an upper bound.
    #[arg(long, default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub enumeration_cap: u64,
    /// Largest vertex count for exact χ.
    #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u64).range(1..=64))]
    pub chromatic_bound: u64,
    #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u64).range(1..))]
    pub ieds_bound: u64,
    /// Wall-clock budget; unfinished work is reported as unknown.
    #[arg(long, value_parser = positive_seconds)]
    pub time_budget: Option<f64>,
}

#[derive(Debug, Args)]
pub struct Output {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write here instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Add `timing_ms` to single reports (breaks byte-identical output).
    #[arg(long)]
    pub timing: bool,
}

fn positive_seconds(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x > 0.0 && x.is_finite() => Ok(x),
        _ => Err(format!("`{s}` is not a positive number of seconds")),
    }
}

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::render::Format;
use crate::suites::Suite;

#[derive(Debug, Parser)]
#[command(name = "sumsets", version, about = "Sizes of h-fold sumsets and restricted sumsets", long_about = None)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Global {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,
    /// Shorthand for --format json
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for exhaustive scans (default: available cores)
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..=4096))]
    pub workers: Option<u64>,
    /// Largest number of candidate sets a scan may examine
    #[arg(long, global = true, default_value_t = sumset_core::explorer::DEFAULT_BUDGET,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,
    /// Scan past the budget instead of refusing
    #[arg(long, global = true, conflicts_with = "truncate")]
    pub force: bool,
    /// Stop at the budget and report an incomplete result
    #[arg(long, global = true)]
    pub truncate: bool,
    /// Directory for cached range results
    #[arg(long, global = true, env = "SUMSETS_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    /// Seed for randomized suites
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute hA (or the restricted sumset) of a set literal
    Sumset {
        set: String,
        h: usize,
        #[arg(long)]
        restricted: bool,
        /// Group spec such as z/4 + z; the set is then a list of tuples
        #[arg(long)]
        group: Option<String>,
    },
    /// Canonical affine representative of a set
    Normalize { set: String },
    /// Achievable sizes of hA over canonical k-sets in [0, N]
    Range {
        h: usize,
        k: usize,
        #[arg(long)]
        restricted: bool,
        /// Search bound N (default: 2^k - 1 capped by the budget)
        #[arg(long)]
        max_element: Option<u64>,
        #[arg(long)]
        group: Option<String>,
        /// Experimental: joint values (|hA|, |restricted hA|)
        #[arg(long, conflicts_with_all = ["restricted", "group"])]
        joint: bool,
    },
    /// Construct a set with a prescribed sumset size
    Witness {
        #[command(subcommand)]
        kind: WitnessKind,
        /// Print the canonical form of the constructed set
        #[arg(long, global = true)]
        normalize: bool,
    },
    /// Closed-form bounds for |hA| and |restricted hA| at size k
    Bounds { h: usize, k: usize },
    /// Every |hA| for three-element sets, by closed form
    H3 { h: usize },
    /// The size sequence |1A|, ..., |lA|
    Trajectory { set: String, length: usize },
    /// All size sequences of length l over canonical k-sets in [0, N]
    Trajectories {
        length: usize,
        k: usize,
        #[arg(long)]
        max_element: Option<u64>,
    },
    /// Size sequences meeting constraints such as 1:3,3:9 (|1A| = 3, |3A| = 9)
    Filter {
        constraints: String,
        length: usize,
        /// Set size, if no constraint 1:k fixes it
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        max_element: Option<u64>,
    },
    /// Check that hk-h+2 is never a size and that only progressions reach hk-h+1
    Missing {
        h: usize,
        k: usize,
        #[arg(long)]
        max_element: Option<u64>,
    },
    /// Least N that already realizes every size found below N_max (empirical)
    EmpiricalN {
        h: usize,
        k: usize,
        #[arg(long)]
        max_element: Option<u64>,
        #[arg(long)]
        restricted: bool,
    },
    /// Whether a subset of a finite group is a coset of a subgroup
    Coset {
        set: String,
        #[arg(long)]
        group: String,
    },
    /// Run a named reproduction suite
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
}

#[derive(Debug, Subcommand)]
pub enum WitnessKind {
    /// k-set in [0, 2^k - 1] with |2A| = t
    TwoFold { k: usize, t: u64 },
    /// k-set in [0, 2^(k-2)] with |restricted 2A| = t
    TwoFoldRestricted { k: usize, t: u64 },
    /// {0,1,b} with |hA| = t
    H3 { h: usize, t: u64 },
    /// Arithmetic progression reaching the minimum
    Min {
        h: usize,
        k: usize,
        #[arg(long)]
        restricted: bool,
    },
    /// Powers of h+1 reaching the maximum
    Max {
        h: usize,
        k: usize,
        #[arg(long)]
        restricted: bool,
    },
    /// Member b of family P1, P2, Q1..Q5 with its |3A|
    Family { name: String, b: i64 },
    /// A = {(i,0)} in z/m + z, smaller than any integer k-set allows
    Counterexample {
        h: usize,
        k: usize,
        #[arg(long)]
        restricted: bool,
    },
}

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "starlike", version, about = "Bounds, generators and membership checks for two-sided strongly starlike functions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generator coefficients λ_n with the hypergeometric cross-check residual.
    Lambda(Common),
    /// Tables of the closed-form bounds.
    Bounds {
        #[arg(value_enum)]
        which: BoundFamily,
        #[command(flatten)]
        common: Common,
    },
    /// Samples the argument condition for a function on a disc grid.
    Check {
        /// identity | koebe | koebe-beta:BETA | extremal | series:PATH
        #[arg(long, conflicts_with = "series")]
        builtin: Option<String>,
        /// JSON file of [re, im] coefficient pairs indexed by degree.
        #[arg(long)]
        series: Option<PathBuf>,
        /// Which quantity is tested against the sector.
        #[arg(long, value_enum, default_value_t = Condition::Starlike)]
        condition: Condition,
        #[command(flatten)]
        common: Common,
    },
    /// Coefficients and logarithmic coefficients of z·exp G̃(z).
    Extremal(Common),
    /// Point lists for plotting.
    Plotdata {
        #[arg(value_enum)]
        what: PlotKind,
        #[command(flatten)]
        common: Common,
    },
    /// Runs the seeded invariant suites.
    Verify {
        /// series | generator | membership | bounds | extremal | all
        #[arg(default_value = "all")]
        suites: Vec<String>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    #[arg(long, default_value_t = 1.0)]
    pub alpha1: f64,
    #[arg(long, default_value_t = 1.0)]
    pub alpha2: f64,
    #[arg(long, default_value_t = 64)]
    pub order: usize,
    #[arg(long, default_value_t = 32)]
    pub n_max: usize,
    /// Single radius.
    #[arg(long, conflicts_with = "r_list")]
    pub r: Option<f64>,
    /// Comma-separated radii.
    #[arg(long, value_delimiter = ',')]
    pub r_list: Option<Vec<f64>>,
    /// Angles per radius (or per curve).
    #[arg(long, default_value_t = 720)]
    pub angles: usize,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Accepted for symmetry with `verify`; the table commands are not random.
    #[arg(long)]
    pub seed: Option<u64>,
}

impl Common {
    /// `--r-list`, else `--r`, else `default`.
    pub fn radii(&self, default: &[f64]) -> Vec<f64> {
        match (&self.r_list, self.r) {
            (Some(list), _) => list.clone(),
            (None, Some(r)) => vec![r],
            (None, None) => default.to_vec(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BoundFamily {
    Re,
    Growth,
    Gamma,
    Coeff,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Condition {
    /// z f'/f
    Starlike,
    /// 1 + z f''/f', restricted to the lower bound's validity radius
    Convexity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PlotKind {
    OmegaBoundary,
    GImage,
    GrowthAnnulus,
}

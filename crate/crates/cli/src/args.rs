use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use covertree::analysis::DEFAULT_CALIBRATION;

#[derive(Debug, Parser)]
#[command(
    name = "covertree",
    version,
    about = "Arc averages and their convergence on universal covers of finite graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report degree structure, bipartiteness and the Ramanujan property.
    Classify(GraphArgs),
    /// Laplacian spectrum with the predicted rate of every eigenvalue.
    Spectrum(SpectrumArgs),
    /// Radial averages and deviations of a field over a region.
    Average(AverageArgs),
    /// Deviation series checked against the predicted geometric bound.
    Rate(RateArgs),
    /// Bound check for every eigenvector field and one random field, over
    /// every base half-edge.
    Verify(VerifyArgs),
    /// Write a generated graph, e.g. `gen complete_bipartite 3 4 -o k34.g`.
    Gen(GenArgs),
}

#[derive(Debug, Args)]
pub struct Output {
    /// Output file; standard output when absent.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[arg(long)]
    pub graph: PathBuf,
    /// `1`, `2`, `3` or `bipartite`.
    #[arg(long)]
    pub theorem: String,
    /// Mark eigenspaces on which this field has a nonzero projection.
    #[arg(long)]
    pub field: Option<PathBuf>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SetKind {
    Arc,
    Sphere,
    EdgeSphere,
    Tube,
    Horocycle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Transfer,
    Enumerate,
}

#[derive(Debug, Args)]
pub struct RegionArgs {
    #[arg(long)]
    pub graph: PathBuf,
    /// Field file; without it a seeded random field is used.
    #[arg(long)]
    pub field: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long = "set", value_enum)]
    pub set: SetKind,
    /// `u v [k]` for an arc, a root vertex for spheres, a file for tubes and
    /// horocycles.
    #[arg(long, num_args = 1..=3, required = true)]
    pub base: Vec<String>,
    #[arg(long)]
    pub radius: usize,
    #[arg(long, value_enum, default_value_t = MethodArg::Transfer)]
    pub method: MethodArg,
}

#[derive(Debug, Args)]
pub struct AverageArgs {
    #[command(flatten)]
    pub region: RegionArgs,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct RateArgs {
    #[command(flatten)]
    pub region: RegionArgs,
    #[arg(long)]
    pub theorem: String,
    /// Replace the predicted rate before the bound check.
    #[arg(long)]
    pub override_beta: Option<f64>,
    /// Largest radius used to calibrate the bound constant.
    #[arg(long, default_value_t = DEFAULT_CALIBRATION)]
    pub calibration: usize,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub theorem: String,
    #[arg(long)]
    pub radius: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Largest radius used to calibrate the bound constant.
    #[arg(long, default_value_t = DEFAULT_CALIBRATION)]
    pub calibration: usize,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// `complete`, `complete_bipartite`, `petersen`, `cycle` or
    /// `cycle_with_chords`.
    pub name: String,
    pub params: Vec<usize>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

//! Command-line grammar.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "hahn", version, about = "Hahn polynomials in one, two and many variables, with exact verification suites")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate one polynomial at one point.
    Eval(EvalArgs),
    /// Print the bivariate overlap matrix W·Q (rows i.k, columns m.n).
    Overlap(Shared),
    /// Print the two factors of the overlap matrix through the (p, q) basis.
    Chain(Shared),
    /// Print generating-function coefficients.
    Genfun(Shared),
    /// Run verification suites.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Float,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Hahn1,
    Hahn2,
    Hahnd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Uni,
    Bi,
    Mv,
    Oracle,
    Classical,
    All,
}

#[derive(Args, Debug)]
pub struct Shared {
    /// Comma-separated rationals such as `-1/2,0,7/3`.
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    /// Level (total degree bound).
    #[arg(long = "N")]
    pub n: Option<usize>,
    #[arg(long, value_enum, default_value = "exact")]
    pub mode: Mode,
    /// Relative tolerance of floating checks.
    #[arg(long, default_value = "1e-10")]
    pub tol: String,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct EvalArgs {
    #[command(flatten)]
    pub shared: Shared,
    #[arg(long, value_enum)]
    pub family: Family,
    /// Comma-separated degrees.
    #[arg(long)]
    pub degrees: String,
    /// Comma-separated grid coordinates.
    #[arg(long)]
    pub point: String,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub shared: Shared,
    #[arg(long, value_enum)]
    pub suite: Suite,
    /// Run a single named check (requires --alpha and --N).
    #[arg(long)]
    pub check: Option<String>,
    /// Perturb one coefficient of the selected checks.
    #[arg(long, hide = true)]
    pub perturb: bool,
}

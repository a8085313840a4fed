//! `hacf`: harmonicity checks, functional sweeps and series coefficients on
//! the Heisenberg group, with CSV output and verdict exit codes.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub const VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), " (", env!("HACF_GIT_DESCRIBE"), ")");

#[derive(Parser, Debug)]
#[command(name = "hacf", version = VERSION, about = "Monotonicity functionals on the Heisenberg group")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Apply the Kohn-Laplacian to an expression, or list a harmonic basis.
    Harmonic(HarmonicArgs),
    /// Sample a functional over a geometric radius grid and classify it.
    Functional(FunctionalArgs),
    /// Series coefficients a_k and a_{h,k}.
    Coeffs(CoeffsArgs),
    /// Reproduce the decreasing I and J curves for x - 3yt - 2x^3.
    Counterexample(CounterexampleArgs),
}

#[derive(Args, Debug)]
pub struct HarmonicArgs {
    #[arg(long, required_unless_present = "basis")]
    pub expr: Option<String>,
    /// Print a basis of harmonic polynomials of degree D.
    #[arg(long, value_name = "D", allow_negative_numbers = true)]
    pub basis: Option<i64>,
    /// Use the Euclidean Laplacian and ordinary degree instead.
    #[arg(long)]
    pub euclid: bool,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct GridArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub r_min: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub r_max: Option<f64>,
    #[arg(long)]
    pub r_count: Option<usize>,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct OrderArgs {
    #[arg(long, default_value_t = 64)]
    pub n_phi: usize,
    #[arg(long, default_value_t = 128)]
    pub n_theta: usize,
    #[arg(long, default_value_t = 16)]
    pub n_r: usize,
    /// Multiplier on the sphere orders for phase-restricted integrands.
    #[arg(long, default_value_t = 4)]
    pub indicator_factor: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Table,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    /// Write to PATH instead of standard output.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    #[value(name = "I")]
    I,
    #[value(name = "J")]
    J,
    #[value(name = "Jbeta")]
    JBeta,
    #[value(name = "Ieuclid")]
    IEuclid,
    #[value(name = "Jeuclid")]
    JEuclid,
}

#[derive(Args, Debug)]
pub struct FunctionalArgs {
    #[arg(long, value_enum, ignore_case = true)]
    pub kind: KindArg,
    /// Polynomial in x, y, t, or `counterexample`.
    #[arg(long, default_value = "counterexample")]
    pub expr: String,
    #[command(flatten)]
    pub grid: GridArgs,
    #[command(flatten)]
    pub orders: OrderArgs,
    /// Exponent for `Jbeta`.
    #[arg(long, allow_negative_numbers = true)]
    pub beta: Option<f64>,
    /// Phase weights: evaluate on A1 u^+ - A2 u^-.
    #[arg(long, num_args = 2, value_names = ["A1", "A2"], allow_negative_numbers = true)]
    pub alpha: Option<Vec<f64>>,
    /// Tolerance on mean-normalized values for the verdict.
    #[arg(long, default_value_t = hacf_core::functionals::DEFAULT_TOL)]
    pub tol: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct CoeffsArgs {
    #[arg(long, default_value = "counterexample")]
    pub expr: String,
    /// Highest index; defaults to the top degree of the expression.
    #[arg(long = "k", value_name = "K")]
    pub k: Option<u32>,
    /// Also list the Euclidean coefficients.
    #[arg(long)]
    pub euclid: bool,
    #[command(flatten)]
    pub orders: OrderArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct CounterexampleArgs {
    #[command(flatten)]
    pub grid: GridArgs,
    #[command(flatten)]
    pub orders: OrderArgs,
    #[arg(long, default_value_t = hacf_core::functionals::DEFAULT_TOL)]
    pub tol: f64,
    /// Also check the weighted two-phase identities.
    #[arg(long, num_args = 2, value_names = ["A1", "A2"], allow_negative_numbers = true)]
    pub alpha: Option<Vec<f64>>,
    /// Also run the Euclidean increasing baseline.
    #[arg(long)]
    pub euclid_baseline: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

/// Why a command did not succeed; each maps to one exit code.
#[derive(Debug)]
pub enum Failure {
    /// A mathematical check did not hold.
    Check(String),
    /// Bad input or configuration.
    Usage(String),
    /// A non-finite value came out of the numerics.
    Numeric(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Check(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Numeric(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Check(m) | Failure::Usage(m) | Failure::Numeric(m) => m,
        }
    }
}

impl From<hacf_core::Error> for Failure {
    fn from(e: hacf_core::Error) -> Self {
        match e {
            hacf_core::Error::NonFinite { .. } => Failure::Numeric(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(format!("cannot write output: {e}"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Harmonic(a) => commands::harmonic(&a),
        Command::Functional(a) => commands::functional(&a),
        Command::Coeffs(a) => commands::coeffs(&a),
        Command::Counterexample(a) => commands::counterexample(&a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("{}", f.message());
            ExitCode::from(f.code())
        }
    }
}

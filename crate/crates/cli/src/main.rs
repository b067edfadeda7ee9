//! `heffter`: build, check and embed λ-fold relative Heffter arrays.
//!
//! Exit codes: 0 success, 1 a check failed or nothing was found,
//! 2 usage or input error, 3 search budget exhausted.

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "heffter",
    version,
    about = "Lambda-fold relative Heffter arrays"
)]
pub struct Cli {
    /// Human-readable tables instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,

    /// λ for CSV input (CSV files carry no parameters).
    #[arg(long = "csv-lambda", global = true, value_name = "LAMBDA")]
    pub csv_lambda: Option<usize>,

    /// t for CSV input.
    #[arg(long = "csv-t", global = true, value_name = "T")]
    pub csv_t: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build an array from one of the constructions.
    Construct(ConstructArgs),
    /// Check an array against its declared parameters.
    Verify {
        file: PathBuf,
        /// Also require the integer condition.
        #[arg(long)]
        integer: bool,
        /// Also require the signed magic array conditions.
        #[arg(long)]
        sma: bool,
    },
    /// Show row and column orderings with their partial sums.
    Order {
        file: PathBuf,
        #[command(flatten)]
        mode: OrderMode,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Solve the Crazy Knight's Tour Problem for an array.
    Knight {
        file: PathBuf,
        /// Cap on orientation vectors tried.
        #[arg(long)]
        max_candidates: Option<u64>,
    },
    /// Difference family from rows or columns, optionally developed.
    Decomp {
        file: PathBuf,
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long)]
        develop: bool,
        #[arg(long, value_enum, default_value = "natural")]
        orderings: OrderingChoice,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Face trace of the biembedding given by compatible orderings.
    Biembed {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "knight")]
        orderings: OrderingChoice,
        /// Include every face in the output.
        #[arg(long)]
        faces: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Check that A's embedding covers that of its projection B.
    Cover {
        file_a: PathBuf,
        file_b: PathBuf,
        /// The divisor of t used for the projection.
        #[arg(long)]
        lambda: usize,
        #[arg(long, value_enum, default_value = "knight")]
        orderings: OrderingChoice,
    },
    /// Exhaustive search for small arrays.
    Search(SearchArgs),
    /// Build and check a whole range of one construction.
    Sweep {
        #[arg(long, value_enum)]
        family: SweepFamily,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        /// Comma-separated subset of verify, simple, diagonal, integer.
        #[arg(long, value_delimiter = ',', default_value = "verify")]
        checks: Vec<Check>,
    },
}

#[derive(Args, Debug, Default)]
#[group(multiple = false)]
pub struct OrderMode {
    /// Natural orderings and whether they are all simple.
    #[arg(long)]
    pub global: bool,
    /// Search for simple orderings line by line.
    #[arg(long)]
    pub search: bool,
    /// Orderings from a knight-tour solution.
    #[arg(long)]
    pub knight: bool,
}

#[derive(Args, Debug, Clone)]
pub struct BudgetArgs {
    /// Node cap for searches.
    #[arg(long, env = "HEFFTER_BUDGET_NODES")]
    pub max_nodes: Option<u64>,
    /// Wall-clock cap in seconds.
    #[arg(long, default_value_t = 60)]
    pub time_cap: u64,
}

#[derive(Args, Debug)]
pub struct ParamArgs {
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub s: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub lambda: usize,
    #[arg(long)]
    pub t: usize,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    /// Restrict to these wrapped diagonals (square arrays).
    #[arg(long, value_delimiter = ',')]
    pub diagonals: Vec<usize>,
    /// Require simple natural orderings.
    #[arg(long)]
    pub simple: bool,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    /// Column count; the size for the 2xn and 5diag families.
    #[arg(long, required_if_eq_any = [("family", "2xn-even"), ("family", "2xn-odd"), ("family", "5diag"), ("family", "search")])]
    pub n: Option<usize>,
    /// Input array for project and compose.
    #[arg(long, required_if_eq_any = [("family", "project"), ("family", "compose")])]
    pub input: Option<PathBuf>,
    /// Divisor of t for project.
    #[arg(long, required_if_eq("family", "project"))]
    pub divisor: Option<usize>,
    #[arg(long, required_if_eq("family", "compose"))]
    pub l1: Option<usize>,
    #[arg(long, required_if_eq("family", "compose"))]
    pub l2: Option<usize>,
    #[arg(long, required_if_eq("family", "compose"))]
    pub a1: Option<usize>,
    #[arg(long, required_if_eq("family", "compose"))]
    pub a2: Option<usize>,
    #[arg(long, required_if_eq("family", "search"))]
    pub m: Option<usize>,
    #[arg(long, required_if_eq("family", "search"))]
    pub s: Option<usize>,
    #[arg(long, required_if_eq("family", "search"))]
    pub k: Option<usize>,
    #[arg(long, required_if_eq("family", "search"))]
    pub lambda: Option<usize>,
    #[arg(long, required_if_eq("family", "search"))]
    pub t: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    pub diagonals: Vec<usize>,
    #[arg(long)]
    pub simple: bool,
    #[command(flatten)]
    pub budget: BudgetArgs,
    /// Output encoding.
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    #[value(name = "2xn-even")]
    TwoByNEven,
    #[value(name = "2xn-odd")]
    TwoByNOdd,
    #[value(name = "5diag")]
    FiveDiag,
    Project,
    Compose,
    Search,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepFamily {
    #[value(name = "2xn-even")]
    TwoByNEven,
    #[value(name = "2xn-odd")]
    TwoByNOdd,
    #[value(name = "5diag")]
    FiveDiag,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    Verify,
    Simple,
    Diagonal,
    Integer,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Which {
    Rows,
    Columns,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderingChoice {
    Natural,
    Search,
    Knight,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

/// How a command ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Fail,
    Budget,
}

impl From<Status> for ExitCode {
    fn from(s: Status) -> Self {
        match s {
            Status::Ok => ExitCode::SUCCESS,
            Status::Fail => ExitCode::from(1),
            Status::Budget => ExitCode::from(3),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(status) => status.into(),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

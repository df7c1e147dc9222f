use clap::{Args, Parser, Subcommand, ValueEnum};

use wdbounds::{SeqId, Target};

pub const DEFAULT_DIGITS: usize = 12;
pub const TABLE_DIGITS: usize = 6;
pub const DEFAULT_GRID: usize = 10_000;
pub const DEFAULT_PREC: u32 = 256;
pub const MAX_INDEX: usize = 10_000;

/// Exact coefficients, certified polynomial bounds and their numerical
/// verification for Wilker and Shafer–Fink type inequalities.
#[derive(Debug, Parser)]
#[command(name = "wdbounds", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print coefficients of a series for a range of indices.
    Coeffs(CoeffsArgs),
    /// Print the lower and upper polynomial of a bound pair.
    Bounds(BoundsArgs),
    /// Check lower < f < upper on a uniform interior grid.
    Verify(VerifyArgs),
    /// Print the supremum of the Wilker gap for a range of orders.
    Table(TableArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Decimal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeqArg {
    /// Wilker coefficients c_k
    C,
    /// Shafer–Fink D_3(m)
    D3,
    /// Shafer–Fink D_π(m)
    Dpi,
    /// Shafer–Fink E(m)
    E,
}

impl SeqArg {
    pub fn id(self) -> SeqId {
        match self {
            SeqArg::C => SeqId::WilkerC,
            SeqArg::D3 => SeqId::SfD3,
            SeqArg::Dpi => SeqId::SfDpi,
            SeqArg::E => SeqId::SfE,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SeqArg::C => "c",
            SeqArg::D3 => "d3",
            SeqArg::Dpi => "dpi",
            SeqArg::E => "e",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TargetArg {
    Wilker,
    SfD3,
    SfDpi,
    SfE,
}

impl From<TargetArg> for Target {
    fn from(t: TargetArg) -> Target {
        match t {
            TargetArg::Wilker => Target::Wilker,
            TargetArg::SfD3 => Target::SfD3,
            TargetArg::SfDpi => Target::SfDpi,
            TargetArg::SfE => Target::SfE,
        }
    }
}

#[derive(Debug, Args)]
pub struct Output {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct CoeffsArgs {
    #[arg(long, value_enum)]
    pub seq: SeqArg,
    #[arg(long)]
    pub from: usize,
    #[arg(long)]
    pub to: usize,
    #[arg(long, value_enum, default_value_t = Mode::Exact)]
    pub mode: Mode,
    /// Significant digits in decimal mode.
    #[arg(long, default_value_t = DEFAULT_DIGITS)]
    pub digits: usize,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[arg(long, value_enum)]
    pub target: TargetArg,
    #[arg(long)]
    pub order: usize,
    #[arg(long, value_enum, default_value_t = Mode::Exact)]
    pub mode: Mode,
    #[arg(long, default_value_t = DEFAULT_DIGITS)]
    pub digits: usize,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub target: TargetArg,
    #[arg(long)]
    pub order: usize,
    /// Number of interior grid points.
    #[arg(long, default_value_t = DEFAULT_GRID)]
    pub grid: usize,
    /// Working precision in bits.
    #[arg(long, default_value_t = DEFAULT_PREC)]
    pub prec: u32,
    #[arg(long, default_value_t = DEFAULT_DIGITS)]
    pub digits: usize,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, value_enum, default_value_t = TargetArg::Wilker)]
    pub target: TargetArg,
    /// Inclusive range `a..b`, or a single order.
    #[arg(long, default_value = "3..6")]
    pub orders: String,
    #[arg(long, default_value_t = DEFAULT_PREC)]
    pub prec: u32,
    #[arg(long, value_enum, default_value_t = Mode::Decimal)]
    pub mode: Mode,
    #[arg(long, default_value_t = TABLE_DIGITS)]
    pub digits: usize,
    #[command(flatten)]
    pub output: Output,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Exact => "exact",
            Mode::Decimal => "decimal",
        }
    }
}

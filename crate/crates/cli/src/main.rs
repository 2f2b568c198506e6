use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use johnson_cover::{BudgetTier, VertexOrder};

mod commands;
mod failure;

/// Clique covers of Johnson graphs J(n, k).
#[derive(Debug, Parser)]
#[command(name = "jcover", version)]
struct Cli {
    /// Output style for reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads for the parallel parts (annealing restarts).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    ClosedForm,
    Recursive,
    Lexicode,
    Blocks,
    Exact,
    Anneal,
    Greedy,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    CoverToCode,
    CodeToCover,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Tier {
    Fast,
    Extended,
    Heavy,
}

impl From<Tier> for BudgetTier {
    fn from(t: Tier) -> Self {
        match t {
            Tier::Fast => BudgetTier::Fast,
            Tier::Extended => BudgetTier::Extended,
            Tier::Heavy => BudgetTier::Heavy,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Order {
    Lex,
    Colex,
}

impl From<Order> for VertexOrder {
    fn from(o: Order) -> Self {
        match o {
            Order::Lex => VertexOrder::Lex,
            Order::Colex => VertexOrder::Colex,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Table of θ(J(N, k)) bounds, compared with the bundled values.
    Table(TableArgs),
    /// Build a cover with one of the constructions or solvers.
    Cover(CoverArgs),
    /// Check that a cover file covers every vertex.
    Verify(VerifyArgs),
    /// Convert between covers and distance-4 codes.
    Convert(ConvertArgs),
    /// Every bound on θ(J(n, k)) available without search.
    Bounds(BoundsArgs),
    /// Lexicode cover of J(2k, k); shorthand for `cover --method lexicode`.
    Lexicode(LexicodeArgs),
    /// Type counts and per-element generator frequencies of a cover.
    Stats(StatsArgs),
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(2..=15))]
    pub max_n: u32,
    #[arg(long, value_enum, default_value_t = Tier::Fast)]
    pub tier: Tier,
    /// Skip the solvers and report closed-form bounds only.
    #[arg(long)]
    pub bounds_only: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct CoverArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub k: u32,
    #[arg(long, value_enum)]
    pub method: Method,
    #[arg(long, value_enum, default_value_t = Tier::Fast)]
    pub tier: Tier,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Order::Lex)]
    pub order_convention: Order,
    /// Block file for `--method blocks`.
    #[arg(long)]
    pub blocks: Option<PathBuf>,
    /// Where to write the cover file (stdout when absent).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Where to write the solver log for `--method exact`.
    #[arg(long)]
    pub log: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub file: PathBuf,
    /// Verify the complemented cover of J(n, n - k) instead.
    #[arg(long)]
    pub complement: bool,
    /// Write the verified (possibly complemented) cover here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ConvertArgs {
    pub file: PathBuf,
    #[arg(long, value_enum, default_value_t = Direction::CoverToCode)]
    pub direction: Direction,
    /// Conversion element (searched for when absent).
    #[arg(long)]
    pub j: Option<u32>,
    /// Second element for the two-element rule.
    #[arg(long, requires = "j")]
    pub j2: Option<u32>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub k: u32,
    /// Covering design or Turán system giving a further upper bound.
    #[arg(long)]
    pub blocks: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct LexicodeArgs {
    #[arg(long)]
    pub k: u32,
    #[arg(long, value_enum, default_value_t = Order::Lex)]
    pub order_convention: Order,
    /// `heavy` lifts the candidate budget (needed for k = 16).
    #[arg(long, value_enum, default_value_t = Tier::Fast)]
    pub tier: Tier,
    /// Write the code file instead of the cover.
    #[arg(long)]
    pub emit_code: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct StatsArgs {
    pub file: PathBuf,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(failure::USAGE);
        }
    }
    let result = match cli.command {
        Command::Table(a) => commands::table(&a, cli.format),
        Command::Cover(a) => commands::cover(&a, cli.format),
        Command::Verify(a) => commands::verify(&a, cli.format),
        Command::Convert(a) => commands::convert(&a, cli.format),
        Command::Bounds(a) => commands::bounds(&a, cli.format),
        Command::Lexicode(a) => commands::lexicode(&a, cli.format),
        Command::Stats(a) => commands::stats(&a, cli.format),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.exit_code())
        }
    }
}

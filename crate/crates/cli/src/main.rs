use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use flagmult::{TypeLetter, Word};

mod commands;
mod render;

use render::{CliError, Format};

#[derive(Parser)]
#[command(
    name = "flagmult",
    version,
    about = "Equivariant multiplicities and standard-seed calculus"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Debug)]
pub struct Target {
    /// Dynkin type.
    #[arg(long = "type", value_name = "A|D|E")]
    pub type_letter: TypeLetter,
    #[arg(long, value_name = "N")]
    pub rank: usize,
}

#[derive(Args, Clone, Debug)]
pub struct Output {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the result to PATH instead of stdout.
    #[arg(long, value_name = "PATH")]
    pub emit: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exact,
    Randomized,
}

#[derive(Args, Clone, Debug)]
pub struct Check {
    /// Defaults to exact for short elements and randomized otherwise.
    #[arg(long, value_enum)]
    pub mode: Option<ModeArg>,
    /// Evaluation points in randomized mode.
    #[arg(long, value_name = "K")]
    pub trials: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StartArg {
    Nat,
    Lex,
    Word,
}

#[derive(Args, Clone, Debug)]
pub struct StartArgs {
    #[arg(long, value_enum, default_value_t = StartArg::Nat)]
    pub start: StartArg,
    /// Reduced word of the longest element, with `--start word`.
    #[arg(long, value_name = "a,b,c")]
    pub word: Option<Word>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MoveArg {
    Braid,
    Commute,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CatalogArg {
    /// The frozen D4 character of weight (2,2,4,2).
    Frozen,
}

#[derive(Subcommand)]
enum Command {
    /// Positive roots, by height.
    Roots {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        out: Output,
    },
    /// All reduced words of the element of `--word`.
    Redwords {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_name = "a,b,c")]
        word: Word,
        /// List the words only when there are at most this many.
        #[arg(long, default_value_t = 100_000)]
        limit: u128,
        #[command(flatten)]
        out: Output,
    },
    /// Fully commutative, minuscule, dominant minuscule and strict.
    Classify {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_name = "a,b,c")]
        word: Word,
        #[command(flatten)]
        out: Output,
    },
    /// Reduced-word count against the hook formula.
    Hook {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_name = "a,b,c")]
        word: Word,
        #[command(flatten)]
        out: Output,
    },
    /// Sum over reduced words against the inverse inversion product.
    Nakada {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_name = "a,b,c")]
        word: Word,
        #[command(flatten)]
        check: Check,
        #[command(flatten)]
        out: Output,
    },
    /// Good Lyndon words of the positive roots.
    Lyndon {
        #[command(flatten)]
        target: Target,
        /// Total order on letters, smallest first.
        #[arg(long, value_name = "a,b,c")]
        order: Option<Word>,
        #[command(flatten)]
        out: Output,
    },
    /// Dominant words of the determinantal modules of the seed of an order.
    Detwords {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_name = "a,b,c")]
        order: Option<Word>,
        #[command(flatten)]
        out: Output,
    },
    /// Builds a standard seed and checks it.
    Seed {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        start: StartArgs,
        #[command(flatten)]
        out: Output,
    },
    /// One braid mutation or commutation move from a standard seed.
    Mutate {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        start: StartArgs,
        /// 1-based position `k` of the move.
        #[arg(long, value_name = "K")]
        position: usize,
        #[arg(long = "move", value_enum, default_value_t = MoveArg::Braid)]
        kind: MoveArg,
        #[command(flatten)]
        out: Output,
    },
    /// Visits every reduced word of the longest element.
    Walk {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        start: StartArgs,
        #[arg(long, default_value_t = 1, value_name = "T")]
        threads: usize,
        #[arg(long, value_name = "N")]
        max_seeds: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// Value of a homogeneous module or of a bundled character.
    Dbar {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_name = "a,b,c", conflicts_with = "catalog")]
        word: Option<Word>,
        #[arg(long, value_enum)]
        catalog: Option<CatalogArg>,
        #[command(flatten)]
        out: Output,
    },
    /// Strict dominant minuscule elements against the flag minors.
    Evidence {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 1, value_name = "T")]
        threads: usize,
        #[command(flatten)]
        out: Output,
    },
    /// The bundled reference tables.
    Tables {
        #[command(flatten)]
        out: Output,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    use commands as c;
    match cli.command {
        Command::Roots { target, out } => c::roots(&target)?.emit(&out),
        Command::Redwords {
            target,
            word,
            limit,
            out,
        } => c::redwords(&target, &word, limit)?.emit(&out),
        Command::Classify { target, word, out } => c::classify(&target, &word)?.emit(&out),
        Command::Hook { target, word, out } => c::hook(&target, &word)?.emit(&out),
        Command::Nakada {
            target,
            word,
            check,
            out,
        } => c::nakada(&target, &word, &check)?.emit(&out),
        Command::Lyndon { target, order, out } => c::lyndon(&target, order.as_ref())?.emit(&out),
        Command::Detwords { target, order, out } => {
            c::detwords(&target, order.as_ref())?.emit(&out)
        }
        Command::Seed { target, start, out } => c::seed(&target, &start)?.emit(&out),
        Command::Mutate {
            target,
            start,
            position,
            kind,
            out,
        } => c::mutate(&target, &start, position, kind)?.emit(&out),
        Command::Walk {
            target,
            start,
            threads,
            max_seeds,
            out,
        } => c::walk(&target, &start, threads, max_seeds)?.emit(&out),
        Command::Dbar {
            target,
            word,
            catalog,
            out,
        } => c::dbar(&target, word.as_ref(), catalog)?.emit(&out),
        Command::Evidence {
            target,
            threads,
            out,
        } => c::evidence(&target, threads)?.emit(&out),
        Command::Tables { out } => c::tables()?.emit(&out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => e.report(),
    }
}

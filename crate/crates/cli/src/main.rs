mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Simulation preorders on labelled transition systems and stability checks
/// for orders on `P^A`.
///
/// Exit status: 0 when the relation holds or the law passes, 1 when it does
/// not (or is inconclusive), 2 on usage or input errors.
#[derive(Parser, Debug)]
#[command(name = "simcoal", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether one state is simulated by another.
    Check(CheckArgs),
    /// Print the whole greatest simulation between two systems.
    Preorder(PreorderArgs),
    /// Check one stability law for one order on finite carriers.
    Stability(StabilityArgs),
    /// Compare the fixed-point engines against brute-force enumeration.
    Oracle(OracleArgs),
    /// Convert between .aut, native JSON and term files.
    Convert(ConvertArgs),
}

#[derive(Args, Debug)]
struct Inputs {
    /// Left system (.aut, .term, or native .json).
    #[arg(long)]
    lhs: PathBuf,
    /// Right system; the left one when omitted.
    #[arg(long)]
    rhs: Option<PathBuf>,
    /// Fail instead of merging differing alphabets.
    #[arg(long)]
    strict_alphabet: bool,
}

#[derive(Args, Debug)]
#[group(id = "criterion", required = true, multiple = false, args = ["semantics", "order"])]
struct Relate {
    #[arg(long, value_enum)]
    semantics: Option<SemanticsArg>,
    /// Order expression, e.g. `compose(conf_empty, conf_nonempty)`.
    #[arg(long)]
    order: Option<String>,
    /// Partition file with fields r, l, bi, used by `cc`.
    #[arg(long)]
    partition: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = ModeArg::Fast)]
    mode: ModeArg,
}

#[derive(Args, Debug)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the result here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[command(flatten)]
    inputs: Inputs,
    #[command(flatten)]
    relate: Relate,
    /// Left state, by index or name; the initial state by default.
    #[arg(long)]
    state: Option<String>,
    /// Right state, by index or name; the initial state by default.
    #[arg(long)]
    rhs_state: Option<String>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct PreorderArgs {
    #[command(flatten)]
    inputs: Inputs,
    #[command(flatten)]
    relate: Relate,
    /// List related pairs instead of printing a matrix.
    #[arg(long)]
    pairs: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct StabilityArgs {
    #[arg(long, value_enum)]
    law: LawArg,
    #[arg(long)]
    order: String,
    /// Second order, for `commute` and the composition laws.
    #[arg(long)]
    with: Option<String>,
    /// Left (source side) factor for `factored-lift`.
    #[arg(long)]
    left: Option<String>,
    /// Right (target side) factor for `factored-lift`.
    #[arg(long)]
    right: Option<String>,
    #[arg(long)]
    partition: Option<PathBuf>,
    /// Carrier sizes, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    sizes: Vec<usize>,
    #[arg(long, default_value_t = 1)]
    alphabet: usize,
    /// Cap on evaluated instances.
    #[arg(long)]
    budget: Option<u64>,
    /// Sample `budget` instances from this seed when the space is larger.
    #[arg(long)]
    seed: Option<u64>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct OracleArgs {
    #[command(flatten)]
    inputs: Inputs,
    #[arg(long, value_enum)]
    semantics: SemanticsArg,
    #[arg(long)]
    partition: Option<PathBuf>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct ConvertArgs {
    input: PathBuf,
    /// Target format; taken from the --out extension when omitted.
    #[arg(long, value_enum)]
    to: Option<TargetFormat>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SemanticsArg {
    Plain,
    Reverse,
    Cc,
    Conformance,
    Bisim,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Fast,
    Generic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TargetFormat {
    Aut,
    Native,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum LawArg {
    Preorder,
    Functorial,
    RightStable,
    LeftStable,
    Stable,
    Interchange,
    Commute,
    CompositionRightStable,
    CompositionLeftStable,
    CompositionStable,
    FactoredLift,
    OpDuality,
    LiftTranspose,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check(a) => commands::check(a),
        Command::Preorder(a) => commands::preorder(a),
        Command::Stability(a) => commands::stability(a),
        Command::Oracle(a) => commands::oracle(a),
        Command::Convert(a) => commands::convert(a),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

//! Command-line front end for the wildflower game engine.

mod commands;
mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use wildflower::sat::{FullGameBound, VerifyMode};
use wildflower::{Engine, FamilyRule};

use commands::{CliError, Play, ReduceArgs};
use output::Format;

#[derive(Parser, Debug)]
#[command(name = "wildflower", version, about = "Exact solver for wildflower sums in normal and misère play")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Outcome class of a position.
    Eval {
        expr: String,
        #[arg(long, value_enum, default_value_t = Play::Normal)]
        play: Play,
    },
    /// Normal-play canonical form of the sum.
    Canonical { expr: String },
    /// Genus of an impartial position.
    Genus { expr: String },
    /// Tameness, restricted status and wildflower shape of each component.
    Classify { expr: String },
    /// Build and verify the evil twin of a position.
    Twin {
        expr: String,
        #[arg(long, value_parser = parse_family)]
        family: FamilyRule,
    },
    /// Sweep every instance of a family up to a bound.
    Check {
        #[arg(value_parser = parse_family)]
        family: FamilyRule,
        /// Summand count, or birthday for tame-impartial.
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Reduce a Tovey-form 3-SAT instance to a sum of mutant flowers.
    Reduce {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Verify::Oracle)]
        verify: Verify,
        /// Accept an even number of variables.
        #[arg(long)]
        allow_even: bool,
        /// Largest variable count solved as a full game.
        #[arg(long, default_value_t = FullGameBound::default().max_vars)]
        max_vars: usize,
        /// Largest clause count solved as a full game.
        #[arg(long, default_value_t = FullGameBound::default().max_clauses)]
        max_clauses: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Verify {
    Oracle,
    Full,
}

fn parse_family(s: &str) -> Result<FamilyRule, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = FamilyRule::ALL.iter().map(|f| f.as_str()).collect();
        format!("unknown family {s:?}, expected one of {}", names.join(", "))
    })
}

fn run(cli: &Cli) -> commands::CliResult {
    let e = Engine::new();
    match &cli.command {
        Command::Eval { expr, play } => commands::eval(&e, expr, *play),
        Command::Canonical { expr } => commands::canonical(&e, expr),
        Command::Genus { expr } => commands::genus(&e, expr),
        Command::Classify { expr } => commands::classify(&e, expr),
        Command::Twin { expr, family } => commands::twin(&e, expr, *family),
        Command::Check { family, bound } => commands::check(&e, *family, *bound),
        Command::Reduce { file, verify, allow_even, max_vars, max_clauses } => {
            let mode = match verify {
                Verify::Oracle => VerifyMode::Oracle,
                Verify::Full => VerifyMode::FullGame,
            };
            let bound = FullGameBound { max_vars: *max_vars, max_clauses: *max_clauses };
            commands::reduce(&e, &ReduceArgs { file, mode, allow_even: *allow_even, bound })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let mut stdout = std::io::stdout().lock();
            // A closed pipe is not worth a panic.
            let _ = stdout.write_all(output::emit(&report.body, cli.format).as_bytes());
            if report.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

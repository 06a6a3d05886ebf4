//! `artin`: normal forms, equality, towers, splittings and finite-quotient
//! separation for even Artin groups of FC type.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use commands::{Failure, Outcome};

#[derive(Parser, Debug)]
#[command(
    name = "artin",
    version,
    about = "Word problem and normal forms for even Artin groups of FC type"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Also run the brute-force oracles (slow; debugging aid).
    #[arg(long, global = true)]
    oracle: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Report whether the graph is even and of FC type.
    Check { graph: PathBuf },
    /// Print the canonical form of a word.
    Nf { graph: PathBuf, word: String },
    /// Decide whether two words are equal (exit 0) or distinct (exit 1).
    Eq {
        graph: PathBuf,
        word1: String,
        word2: String,
    },
    /// Print the stages of the poly-free tower.
    Tower { graph: PathBuf },
    /// Print an amalgam splitting over a missing edge, or `complete`.
    Split { graph: PathBuf },
    /// Search for a finite quotient in which the word is nontrivial.
    Separate {
        graph: PathBuf,
        word: String,
        #[arg(long, default_value_t = artin_core::residual::DEFAULT_MAX_DEGREE)]
        max_degree: usize,
    },
    /// Print the word as an element of F ⋊ A_1 (debugging aid).
    Act {
        graph: PathBuf,
        word: String,
        /// Splitting vertex; defaults to the least vertex.
        #[arg(long)]
        at: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Check { graph } => commands::check(graph),
        Command::Nf { graph, word } => commands::nf(graph, word, cli.oracle),
        Command::Eq {
            graph,
            word1,
            word2,
        } => commands::eq(graph, word1, word2, cli.oracle),
        Command::Tower { graph } => commands::tower(graph),
        Command::Split { graph } => commands::split(graph),
        Command::Separate {
            graph,
            word,
            max_degree,
        } => commands::separate(graph, word, *max_degree),
        Command::Act { graph, word, at } => commands::act(graph, word, at.as_deref()),
    };
    let outcome = result.unwrap_or_else(Failure::into_outcome);
    emit(&outcome, cli.format);
    ExitCode::from(outcome.code)
}

fn emit(outcome: &Outcome, format: Format) {
    match format {
        Format::Text if outcome.failed => eprintln!("{}", outcome.text),
        Format::Text => println!("{}", outcome.text),
        Format::Json => println!("{}", serde_json::to_string_pretty(&outcome.json).unwrap()),
    }
}

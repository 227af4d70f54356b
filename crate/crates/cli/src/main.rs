use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hopfcontra::cyclic::{HomologyMode, DEFAULT_DIM_CAP};
use hopfcontra::session::{load_session, SessionError};
use hopfcontra::tasks::{run, Command, RunOptions};

const EXIT_IO: u8 = 5;

#[derive(Parser)]
#[command(name = "hopfcontra", version, about = "Exact checks and (co)homology for Hopf algebras with AYD contramodule coefficients")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run every axiom, compatibility and stability check.
    Check(Args),
    /// Build cyclic modules and verify their relations.
    BuildCyclic(Args),
    /// Build cocyclic modules, bimodule laws and relations.
    BuildCocyclic(Args),
    /// Hochschild or cyclic homology dimension tables.
    Homology(Args),
    /// Coring, differential graded algebra and curvature.
    Homconn(Args),
    /// Every task declared in the session.
    Report(Args),
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Hochschild,
    Connes,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Canonical,
}

#[derive(clap::Args)]
struct Args {
    /// Session file (JSON).
    session: PathBuf,
    /// Highest degree to build; overrides the session.
    #[arg(long)]
    max_degree: Option<usize>,
    #[arg(long, value_enum)]
    mode: Option<Mode>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Build with coefficients that fail stability.
    #[arg(long)]
    allow_unstable: bool,
}

fn dim_cap() -> Result<usize, String> {
    match std::env::var("HOPFCONTRA_DIM_CAP") {
        Ok(v) => v.trim().parse().map_err(|_| format!("HOPFCONTRA_DIM_CAP must be a positive integer, got {v:?}")),
        Err(_) => Ok(DEFAULT_DIM_CAP),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, args) = match cli.command {
        Cmd::Check(a) => (Command::Check, a),
        Cmd::BuildCyclic(a) => (Command::BuildCyclic, a),
        Cmd::BuildCocyclic(a) => (Command::BuildCocyclic, a),
        Cmd::Homology(a) => (Command::Homology, a),
        Cmd::Homconn(a) => (Command::Homconn, a),
        Cmd::Report(a) => (Command::Report, a),
    };
    let dim_cap = match dim_cap() {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(4);
        }
    };
    let session = match load_session(&args.session) {
        Ok(s) => s,
        Err(SessionError::Io(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_IO);
        }
        Err(SessionError::Core(e)) => {
            eprintln!("error: {} {e}", e.kind());
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let opts = RunOptions {
        max_degree: args.max_degree,
        mode: args.mode.map(|m| match m {
            Mode::Hochschild => HomologyMode::Hochschild,
            Mode::Connes => HomologyMode::ConnesLambda,
        }),
        allow_unstable: args.allow_unstable,
        dim_cap,
    };
    let report = match run(&session, command, &opts) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {} {e}", e.kind());
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let body = match args.format {
        Format::Text => report.render_text(),
        Format::Canonical => report.render_canonical(),
    };
    match &args.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, body) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(EXIT_IO);
            }
        }
        None => print!("{body}"),
    }
    ExitCode::from(report.exit_code() as u8)
}

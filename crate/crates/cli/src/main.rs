//! `lpa`: analyze the ideal structure of Leavitt path algebras of finite
//! graphs given as JSON files.

mod commands;
mod dot;

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use lpa_core::{FieldTag, Graph};

use commands::CliError;

#[derive(Parser, Debug)]
#[command(name = "lpa", version, about = "Ideal lattices, primes and factorizations of Leavitt path algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug)]
struct Input {
    /// Graph file (JSON), or `-` for stdin.
    path: String,
    /// Field override: `Q` or `Fp:<p>`.
    #[arg(long)]
    field: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Conditions (L) and (K), lattice size, graded primes and all checks.
    Analyze {
        #[command(flatten)]
        input: Input,
        /// Emit the JSON report instead of text.
        #[arg(long)]
        json: bool,
    },
    /// The admissible-pair lattice, as text or as a DOT Hasse diagram.
    Lattice {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        dot: bool,
    },
    /// Operations on one ideal given as a JSON literal.
    Ideal {
        #[command(flatten)]
        input: Input,
        /// `{"H":[..],"S":[..],"components":[{"cycle":[..],"poly":".."}]}`
        literal: String,
        #[command(subcommand)]
        op: commands::IdealOp,
    },
    /// Run one registered check (or list them with `--list`).
    Check {
        /// Check name.
        #[arg(required_unless_present = "list")]
        name: Option<String>,
        /// Graph file (JSON), or `-` for stdin.
        #[arg(required_unless_present = "list")]
        path: Option<String>,
        #[arg(long)]
        field: Option<String>,
        #[arg(long)]
        list: bool,
    },
}

fn read_source(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::Input(format!("stdin: {e}")))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{path}: {e}")))
    }
}

fn load(path: &str, field: Option<&str>) -> Result<(String, Graph, FieldTag), CliError> {
    let text = read_source(path)?;
    let field = field.map(FieldTag::parse).transpose()?;
    let (graph, field) = lpa_core::io::load_graph(&text, field)?;
    let name = if path == "-" {
        "stdin".to_string()
    } else {
        std::path::Path::new(path)
            .file_stem()
            .map_or_else(|| path.to_string(), |s| s.to_string_lossy().into_owned())
    };
    Ok((name, graph, field))
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Analyze { input, json } => {
            let (name, g, field) = load(&input.path, input.field.as_deref())?;
            commands::analyze(&name, g, field, json)
        }
        Command::Lattice { input, dot } => {
            let (name, g, field) = load(&input.path, input.field.as_deref())?;
            commands::lattice(&name, g, field, dot)
        }
        Command::Ideal { input, literal, op } => {
            let (_, g, field) = load(&input.path, input.field.as_deref())?;
            commands::ideal(g, field, &literal, &op)
        }
        Command::Check { list: true, .. } => Ok(commands::list_checks()),
        Command::Check { name, path, field, .. } => {
            let (name, path) = (name.unwrap_or_default(), path.unwrap_or_default());
            let (_, g, f) = load(&path, field.as_deref())?;
            commands::check(&name, g, f)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

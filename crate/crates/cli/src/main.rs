mod commands;
mod matrix_file;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crate::report::Format;

#[derive(Parser, Debug)]
#[command(name = "knotforms", version, about = "Algebraic invariants of high-dimensional knots and Brieskorn links")]
struct Cli {
    /// Output mode.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full invariant report of one or more Seifert matrix files (`-` for stdin).
    Invariants {
        #[arg(required = true)]
        files: Vec<String>,
        /// Worker threads for batch mode; output order follows the argument order.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Invariant report of the Brieskorn–Pham germ z_0^a_0 + ... + z_q^a_q.
    Brieskorn {
        #[arg(required = true, num_args = 1..)]
        exponents: Vec<u32>,
        /// Also write the Seifert matrix to this path in matrix-file format.
        #[arg(long, value_name = "PATH")]
        emit_matrix: Option<PathBuf>,
    },
    /// Decide algebraic cobordism of two Seifert forms. Exit 0 cobordant, 1 not, 3 unknown.
    Cobordant {
        a: String,
        b: String,
        /// Entry bound for the metaboliser search.
        #[arg(long, default_value_t = 2)]
        bound: u32,
    },
    /// Table of G^n, bP^{n+1} and Im J over a range such as `1..32` or `7`.
    Groups {
        range: String,
        /// Treat dimension 126 as settled (Kervaire invariant one exists there).
        #[arg(long)]
        kervaire_126_resolved: bool,
    },
    /// Linking numbers and framing data of the handle presentation.
    Handles { file: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Invariants { files, jobs } => commands::invariants(&files, jobs, cli.format),
        Command::Brieskorn { exponents, emit_matrix } => {
            commands::brieskorn(exponents, emit_matrix.as_deref(), cli.format)
        }
        Command::Cobordant { a, b, bound } => commands::cobordant(&a, &b, bound, cli.format),
        Command::Groups { range, kervaire_126_resolved } => {
            commands::groups(&range, kervaire_126_resolved, cli.format)
        }
        Command::Handles { file } => commands::handles(&file, cli.format),
    };
    match outcome {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

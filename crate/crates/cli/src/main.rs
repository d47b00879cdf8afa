//! `almtool`: command-line front end for the almonoid workbench.
//!
//! Exit codes: 0 when every check passed, 1 when a check failed, 2 on input
//! or usage errors.

mod commands;
mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "almtool", version, about = "Finite AL-monoid workbench")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Size bound for ideal enumeration, model search and products.
    #[arg(long, global = true)]
    pub bound: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check every axiom and print the verdicts.
    Check { file: PathBuf },
    /// List and classify ideals, with star sets, radical and distant pairs.
    Ideals { file: PathBuf },
    /// List congruences and check the ideal-congruence correspondence.
    Congruences { file: PathBuf },
    /// Print the quotient by an ideal as an .alm document.
    Quotient {
        file: PathBuf,
        /// Comma-separated element labels, e.g. `0,a`.
        #[arg(long)]
        ideal: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// List homomorphisms from the first algebra to the second.
    Homs {
        source: PathBuf,
        target: PathBuf,
        #[arg(long)]
        count_only: bool,
    },
    /// Search for an isomorphism; exit 0 iff one exists.
    Iso { first: PathBuf, second: PathBuf },
    /// Check both isomorphism theorems on every quotient and every small subalgebra.
    Isotheorems { file: PathBuf },
    /// Build the direct product of two algebras.
    Product {
        first: PathBuf,
        second: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decompose along every distant pair of ideals.
    Decompose { file: PathBuf },
    /// Find a minimal prime family and the subdirect embedding it gives.
    Subdirect { file: PathBuf },
    /// Evaluate the representability predicates side by side.
    Representable { file: PathBuf },
    /// Prime spectrum, separation, minimal and maximal primes, values.
    Spectrum {
        file: PathBuf,
        /// Also print the values of this element and the map onto them.
        #[arg(long)]
        element: Option<String>,
    },
    /// Enumerate all AL-monoids of one order up to isomorphism.
    Search {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        count_only: bool,
        /// Write each model to DIR/<name>.alm.
        #[arg(long, value_name = "DIR")]
        emit: Option<PathBuf>,
    },
    /// Look for the first model of order at most N violating a property.
    Falsify {
        #[arg(long)]
        order: usize,
        /// A theorem-check id (see `verify`) or an axiom id (see `check`).
        #[arg(long)]
        property: String,
        #[arg(long, value_name = "DIR")]
        emit: Option<PathBuf>,
    },
    /// Run the theorem-check registry on one file or on all models up to an order.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct VerifyArgs {
    pub file: Option<PathBuf>,
    #[arg(long)]
    pub order: Option<usize>,
    /// Write every model that fails a counted check to DIR.
    #[arg(long, value_name = "DIR")]
    pub emit: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            let body = if cli.json {
                let mut s = serde_json::to_string_pretty(&out.json).expect("json values serialize");
                s.push('\n');
                s
            } else {
                out.text
            };
            // a closed pipe (e.g. `| head`) is not an error
            let _ = std::io::stdout().lock().write_all(body.as_bytes());
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

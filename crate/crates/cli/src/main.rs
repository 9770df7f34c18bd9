//! `lexseg`: command-line access to the monomial ideal toolkit.
//!
//! Exit codes: 0 success, 2 usage or unreadable input, 3 math-domain error
//! (unit ideal, non-O-sequence, ...), 4 verification failure.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "lexseg", version, about = "Hilbert series, regularity and Betti tables of monomial ideals")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build the lexsegment ideal with reg(S/I) = r and deg h = s.
    Construct {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        s: u32,
        /// Write the ideal JSON here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Report every invariant of S/I for an ideal file.
    Analyze {
        /// Ideal JSON file.
        #[arg(required_unless_present = "fixture", conflicts_with = "fixture")]
        input: Option<PathBuf>,
        /// Use a built-in generator list (r4-s2, dim2-reg6) instead of a file.
        #[arg(long)]
        fixture: Option<String>,
        /// Force the brute-force Koszul oracle for Betti numbers.
        #[arg(long)]
        oracle: bool,
        /// Number of Hilbert function values to print.
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Realize a Hilbert function spec as a lexsegment ideal.
    Lexify {
        /// Hilbert function spec JSON file.
        spec: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Macaulay expansion of a in degree d and the growth bound a^<d>.
    Expansion {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        d: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Graded Betti table of S/I.
    Betti {
        input: PathBuf,
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Construct and verify every (r, s) with 1 <= r <= rmax, 1 <= s <= smax.
    VerifyGrid {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        rmax: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        smax: u32,
        /// Also compare Eliahou–Kervaire against the Koszul oracle when n <= 4.
        #[arg(long)]
        oracle: bool,
    },
    /// Seeded randomized cross-checks of the independent engines.
    Selfcheck {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Ideals per corpus.
        #[arg(long, default_value_t = 100)]
        count: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(commands::exit_code(&e))
        }
    }
}

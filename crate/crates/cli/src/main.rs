use std::process::ExitCode;

use clap::{Parser, Subcommand};
use metacover_cli::{cmd_classify, cmd_dualize, cmd_hilbert, cmd_symbol_suite, cmd_theta, cmd_torus_cover, cmd_validate, cmd_verify, CliError, Report};

#[derive(Parser)]
#[command(name = "metacover", version, about = "Strict forms, BG cohomology and dual data of metaplectic covers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a root datum file (or catalog:NAME) against the axioms.
    Validate { file: String },
    /// Cohomology of BG, homotopy of the space of covers and strict forms.
    Classify {
        file: String,
        #[arg(long = "N")]
        n: i64,
    },
    /// Sharp datum, dual datum H, Z_H and epsilon for a strict form.
    Dualize {
        file: String,
        #[arg(long = "N")]
        n: i64,
        /// Coefficient list `[q11, q12, .., q22, ..]` or monomials `x1^2 + x1x2`.
        #[arg(long = "Q", allow_hyphen_values = true)]
        q: String,
    },
    /// Homotopy groups of theta-data computed every available way.
    Theta {
        #[arg(long)]
        rank: usize,
        #[arg(long = "N")]
        n: i64,
        #[arg(long, default_value_t = 2)]
        level: u8,
    },
    /// N-th Hilbert symbol, as an exponent of the fixed root of unity.
    Hilbert {
        #[arg(long)]
        place: String,
        #[arg(long = "N", default_value_t = 2)]
        n: u64,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Bilinearity, Steinberg and (a, a) = (a, -1) on a sample.
    SymbolSuite {
        #[arg(long)]
        place: String,
        #[arg(long = "N", default_value_t = 2)]
        n: u64,
        /// Comma-separated rationals; defaults to ±1..±10 and p.
        #[arg(long, allow_hyphen_values = true)]
        sample: Option<String>,
    },
    /// Group law checks and commutator readings for a torus cover.
    TorusCover {
        #[arg(long)]
        rank: usize,
        /// File holding the cocycle matrix, or the matrix itself.
        #[arg(long)]
        cocycle: String,
        #[arg(long)]
        place: String,
        #[arg(long = "N", default_value_t = 2)]
        n: u64,
    },
    /// Run a verification suite: linear-algebra, theta, coherence, schubert, symbols, dual or all.
    Verify {
        #[arg(long)]
        suite: String,
    },
}

fn run(cmd: Command) -> Result<Report, CliError> {
    match cmd {
        Command::Validate { file } => cmd_validate(&file),
        Command::Classify { file, n } => cmd_classify(&file, n),
        Command::Dualize { file, n, q } => cmd_dualize(&file, n, &q),
        Command::Theta { rank, n, level } => cmd_theta(rank, n, level),
        Command::Hilbert { place, n, a, b } => cmd_hilbert(&place, n, &a, &b),
        Command::SymbolSuite { place, n, sample } => cmd_symbol_suite(&place, n, sample.as_deref()),
        Command::TorusCover { rank, cocycle, place, n } => cmd_torus_cover(rank, &cocycle, &place, n),
        Command::Verify { suite } => cmd_verify(&suite),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse().command) {
        Ok(report) => {
            println!("{report}");
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

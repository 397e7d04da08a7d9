//! `knotgrid`: grid diagrams, braids, θ̃ certificates and HOMFLY-PT from the
//! command line.
//!
//! Exit codes: 0 success, 1 mathematical refusal (a check came out
//! negative, a move does not apply), 2 input error, 3 budget exceeded.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use knotgrid::config::{Config, OutputFormat};

#[derive(Parser)]
#[command(
    name = "knotgrid",
    version,
    about = "Grid diagrams, braids, grid Floer certificates and HOMFLY-PT"
)]
struct Cli {
    /// TOML config file (default: $KNOTGRID_CONFIG, else built-in defaults)
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output format, overriding the config
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// HOMFLY crossing cap, overriding the config
    #[arg(long, global = true)]
    homfly_cap: Option<usize>,
    /// θ̃ state budget, overriding the config
    #[arg(long, global = true)]
    theta_cap: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Grid diagram operations
    #[command(subcommand)]
    Grid(GridCmd),
    /// Braid word operations
    #[command(subcommand)]
    Braid(BraidCmd),
    /// The tilde grid complex and the class of x⁺
    #[command(subcommand)]
    Floer(FloerCmd),
    /// HOMFLY-PT polynomial of a braid closure or a grid
    #[command(subcommand)]
    Homfly(HomflyCmd),
    /// The two-parameter knot family
    #[command(subcommand)]
    Family(FamilyCmd),
}

/// Grid files are JSON (`{"n":..,"X":[..],"O":[..]}`) or ASCII art; `-`
/// reads standard input.
#[derive(Subcommand)]
enum GridCmd {
    /// Check a grid file and report size and component count
    Validate { file: PathBuf },
    /// Print the grid as JSON and ASCII art
    Show { file: PathBuf },
    /// Reflect across the upper-left to lower-right diagonal
    Mirror { file: PathBuf },
    /// The generator x⁺
    Xplus { file: PathBuf },
    /// tb, r and sl of the Legendrian front
    Front { file: PathBuf },
    /// Apply a Cromwell move
    Move {
        file: PathBuf,
        /// translation | commutation | commutation-rows | stab:NW | stab:NE | stab:SW | stab:SE | destab
        #[arg(long)]
        kind: String,
        /// Comma-separated one-based arguments: dx,dy for translation; a
        /// column (or row) for commutation and stabilization; col,row of the
        /// block's lower-left cell for destabilization
        #[arg(long, allow_hyphen_values = true)]
        at: String,
    },
    /// The braid B(G), or B'(G) with --prime
    ToBraid {
        file: PathBuf,
        #[arg(long)]
        prime: bool,
    },
}

/// Braids are written `"4 | 3 -2 -2 3"` or `"4 | s3 s2^-2 s3^2"`.
#[derive(Subcommand)]
enum BraidCmd {
    /// Garside normal form
    Nf { word: String },
    /// Equality in the braid group (exit 1 when different)
    Equal { first: String, second: String },
    /// Self-linking number of the closure
    Sl { word: String },
    /// σ_k B σ_k^-1
    Conjugate {
        word: String,
        #[arg(long, allow_hyphen_values = true)]
        by: i32,
    },
    /// Exchange move; without --at, lists the sites where it applies
    Exchange {
        word: String,
        /// s1 or s3
        #[arg(long)]
        kind: String,
        /// Zero-based letter positions i,j
        #[arg(long)]
        at: Option<String>,
    },
    /// Positive Markov stabilization
    Stabilize { word: String },
    /// Positive Markov destabilization
    Destabilize { word: String },
    /// A grid diagram whose braid is the word
    ToGrid { word: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Expect {
    Vanishing,
    Nonvanishing,
}

#[derive(Subcommand)]
enum FloerCmd {
    /// Decide whether x⁺ is a boundary and print the certificate
    Theta {
        file: PathBuf,
        /// Also run the exhaustive check (grids up to size 7)
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        emit_certificate: Option<PathBuf>,
        /// Exit 1 unless the answer is this
        #[arg(long, value_enum)]
        expect: Option<Expect>,
    },
    /// Check a stored certificate against a grid
    Verify { file: PathBuf, certificate: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Eval {
    Z0,
    Z2i,
}

#[derive(Subcommand)]
enum HomflyCmd {
    Braid {
        word: String,
        #[arg(long, value_enum)]
        eval: Option<Eval>,
    },
    Grid {
        file: PathBuf,
        #[arg(long, value_enum)]
        eval: Option<Eval>,
    },
}

#[derive(Args, Clone, Copy)]
struct Ab {
    #[arg(long, allow_hyphen_values = true)]
    a: i64,
    #[arg(long, allow_hyphen_values = true)]
    b: i64,
}

#[derive(Subcommand)]
enum FamilyCmd {
    G1(Ab),
    G2(Ab),
    B1(Ab),
    B2(Ab),
    /// σ3 σ2^{-2c-2} σ3^{2a+2} σ2 σ3^{-2d-1} σ1^-1 σ2 σ1^{2b+2}
    Conjectured {
        #[command(flatten)]
        ab: Ab,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        c: i64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        d: i64,
    },
    /// Torus-summand arithmetic behind primality
    Primality(Ab),
    /// The 7_2 flype pair
    Flype,
    /// Every check for (a, b) and the overall verdict
    Reproduce {
        #[command(flatten)]
        ab: Ab,
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

fn load_config(cli: &Cli) -> Result<Config, commands::CliError> {
    let mut c = Config::load(cli.config.as_deref())
        .map_err(|e| commands::CliError::Input(e.to_string()))?;
    if let Some(f) = cli.format {
        c.output_format = match f {
            Format::Json => OutputFormat::Json,
            Format::Text => OutputFormat::Text,
        };
    }
    if let Some(v) = cli.homfly_cap {
        c.homfly_crossing_cap = v;
    }
    if let Some(v) = cli.theta_cap {
        c.theta_state_cap = v;
    }
    c.validate()
        .map_err(|e| commands::CliError::Input(e.to_string()))?;
    Ok(c)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = load_config(&cli)
        .and_then(|config| commands::run(&cli.command, &config).map(|out| (config, out)));
    match result {
        Ok((config, out)) => {
            out.print(config.output_format);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}

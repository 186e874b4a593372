use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use dnacyclic::Granularity;

/// Appends a line to the output buffer.
macro_rules! emit {
    ($out:expr) => {
        $out.push('\n')
    };
    ($out:expr, $($arg:tt)*) => {{
        use std::fmt::Write as _;
        writeln!($out, $($arg)*).expect("writing to a String cannot fail")
    }};
}

mod catalog;
mod check;
mod config;
mod factor;
mod failure;
mod tables;

use failure::Failure;

/// Cyclic DNA codes of odd length over Z4[u]/(u^2 - 1).
#[derive(Debug, Parser)]
#[command(name = "dnacyclic", version)]
struct Cli {
    /// TOML file with `max_n`, `enum_cap` and `pair_cap`.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Factor x^n - 1 over Z4 and x^n + 1 over GF(2).
    Factor {
        n: usize,
        #[arg(long)]
        json: bool,
        /// Render Z4 coefficients in {-1, 0, 1, 2}.
        #[arg(long)]
        signed: bool,
    },
    /// Build a code from generator polynomials and verify its constraints.
    Check(CheckArgs),
    /// Evaluate every generator triple for a length.
    Catalog {
        n: usize,
        /// Draw g2 from all polynomials up to this degree instead of the divisors of x^n - 1.
        #[arg(long, value_name = "DEG")]
        g2_max_degree: Option<usize>,
        /// Coefficient set for `--g2-max-degree`.
        #[arg(long, value_name = "LIST", default_value = "0,1,1+u")]
        g2_coeffs: String,
        #[arg(long)]
        json: bool,
    },
    /// Print the theta table and the DNA images of the two constant-word codes.
    Tables,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// TOML spec file with `n`, `g1`, `g2`, optional `g3` and `strict`.
    #[arg(long, value_name = "FILE", conflicts_with_all = ["n", "g1", "g2", "g3"])]
    spec: Option<PathBuf>,
    #[arg(long)]
    n: Option<usize>,
    /// Z4 polynomial, ascending coefficients, e.g. `[1,1,1]`.
    #[arg(long, value_name = "POLY")]
    g1: Option<String>,
    /// R polynomial, e.g. `[1,(1+u),0,u]`. Defaults to 0.
    #[arg(long, value_name = "POLY")]
    g2: Option<String>,
    #[arg(long, value_name = "POLY")]
    g3: Option<String>,
    /// Also require divisibility over Z4, not only mod 2.
    #[arg(long)]
    strict: bool,

    #[arg(long)]
    reversible: bool,
    #[arg(long)]
    rc: bool,
    #[arg(long)]
    deletion: bool,
    #[arg(long)]
    gc: bool,
    #[arg(long, value_delimiter = ',', default_value = "symbol")]
    granularity: Vec<Granularity>,
    /// List codewords and their theta images.
    #[arg(long)]
    emit_words: bool,
    /// Largest code listed by `--emit-words`.
    #[arg(long, default_value_t = 4096)]
    max_words: usize,
    #[arg(long)]
    json: bool,
}

fn run(out: &mut String, cli: Cli) -> Result<bool, Failure> {
    let limits = config::load(cli.config.as_deref())?;
    match cli.command {
        Command::Factor { n, json, signed } => factor::run(out, n, json, signed, &limits),
        Command::Check(args) => check::run(out, &args, &limits),
        Command::Catalog {
            n,
            g2_max_degree,
            g2_coeffs,
            json,
        } => catalog::run(out, n, g2_max_degree, &g2_coeffs, json, &limits),
        Command::Tables => tables::run(out),
    }
}

fn main() -> ExitCode {
    let mut out = String::new();
    let result = run(&mut out, Cli::parse());
    // A closed pipe on stdout (e.g. `| head`) is not an error.
    if let Err(e) = io::stdout().write_all(out.as_bytes()) {
        if e.kind() != io::ErrorKind::BrokenPipe {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.exit_code())
        }
    }
}

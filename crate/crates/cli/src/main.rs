//! `agf-lab`: sequences, connection constants, AGF values, verification
//! suites and tables.

mod commands;
mod output;
mod suites;
mod tables;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand, ValueEnum};

use agf_core::agf::GridSpec;

#[derive(Parser, Debug)]
#[command(
    name = "agf-lab",
    version,
    about = "Additive Gamma functions: compute, verify, tabulate"
)]
pub struct Cli {
    /// Significant digits: up to 15 uses double precision, 16 to 31 double-double
    #[arg(long, global = true, default_value_t = 15)]
    digits: u32,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Largest index for `seq`; largest sample index for `limit` (default 65536)
    #[arg(long, global = true)]
    n_max: Option<i64>,

    /// Grid as re_min:re_max:im_min:im_max:step
    #[arg(long, global = true, value_parser = parse_grid, allow_hyphen_values = true)]
    grid: Option<GridSpec>,

    /// Seed for randomized checks
    #[arg(long, global = true, default_value_t = 20_240_601)]
    seed: u64,

    /// Write output to this file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Iterate a recurrence: `e`, `pi` or a recurrence file
    Seq {
        world: String,
        #[arg(allow_hyphen_values = true)]
        z: String,
        /// Largest index (overrides --n-max)
        #[arg(value_name = "N_MAX")]
        last: Option<i64>,
    },
    /// Extrapolate a connection constant: `e`, `pi` or `gamma`
    Limit {
        world: LimitWorld,
        #[arg(allow_hyphen_values = true)]
        z: String,
    },
    /// Evaluate f(z) or g(z)
    Agf {
        which: Which,
        #[arg(allow_hyphen_values = true)]
        z: String,
    },
    /// Run a verification suite; exits nonzero if any check fails
    Verify {
        #[arg(value_enum, default_value_t = suites::Suite::All)]
        suite: suites::Suite,
        /// Re-validate a CSV table previously written by `table`
        #[arg(long)]
        table: Option<PathBuf>,
    },
    /// Emit a CSV/JSON table
    Table {
        kind: tables::TableKind,
        /// Largest m for duality tables
        #[arg(long, default_value_t = 10)]
        m_max: u64,
    },
    /// Classify an AFE spec file as regular or irregular at infinity
    Classify { file: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum LimitWorld {
    E,
    Pi,
    Gamma,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    F,
    G,
}

fn parse_grid(s: &str) -> std::result::Result<GridSpec, String> {
    let parts: Vec<f64> = s
        .split(':')
        .map(|p| p.trim().parse::<f64>().map_err(|e| format!("{p:?}: {e}")))
        .collect::<std::result::Result<_, _>>()?;
    let [re_min, re_max, im_min, im_max, step] = parts[..] else {
        return Err("expected re_min:re_max:im_min:im_max:step".into());
    };
    let g = GridSpec {
        re_min,
        re_max,
        im_min,
        im_max,
        step,
    };
    g.validate().map_err(|e| e.to_string())?;
    Ok(g)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// Returns `Ok(false)` when a verification ran but failed.
fn run(cli: &Cli) -> Result<bool> {
    if cli.digits == 0 || cli.digits > 31 {
        anyhow::bail!("--digits must be between 1 and 31");
    }
    if let Some(n) = cli.n_max {
        if n < 16 {
            anyhow::bail!("--n-max must be at least 16");
        }
    }
    let ctx = output::Context::new(cli);
    match &cli.command {
        Command::Seq { world, z, last } => commands::seq(&ctx, world, z, last.or(cli.n_max).unwrap_or(20)),
        Command::Limit { world, z } => commands::limit(&ctx, *world, z, cli.n_max),
        Command::Agf { which, z } => commands::agf(&ctx, *which, z),
        Command::Verify { suite, table } => match table {
            Some(path) => tables::verify_table(&ctx, path),
            None => suites::run(&ctx, *suite, cli.grid.unwrap_or_default(), cli.seed),
        },
        Command::Table { kind, m_max } => tables::emit(&ctx, *kind, *m_max, cli.grid.unwrap_or_default()),
        Command::Classify { file } => commands::classify(&ctx, file),
    }
}

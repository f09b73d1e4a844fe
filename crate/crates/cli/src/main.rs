//! `balkan` — compute the exact closed forms, verify them against the
//! numeric evaluator on the published grids, regenerate the reference
//! tables, and run the auxiliary sieves and series checks.

use std::process::ExitCode;

use balkan_cli::commands::{compute, decimate, derive, series, table, verify};
use balkan_cli::report::Report;
use balkan_core::miner::ZeroPolicy;
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "balkan", version, about = "Exact closed forms and verification for a three-parameter continued-fraction family")]
struct Cli {
    /// Report rendering.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Cap on the depth-doubling of numeric evaluation.
    #[arg(long, global = true)]
    depth_cap: Option<u64>,

    #[command(subcommand)]
    command: Commands,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exact,
    Decimal,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum Policy {
    ZeroEliminates,
    ZeroSkips,
}

#[derive(Subcommand)]
enum Commands {
    /// Exact value (and optionally its decimal expansion) at one point.
    Compute {
        j: i64,
        kappa: i64,
        c: i64,
        #[arg(value_enum, default_value_t = Mode::Exact)]
        mode: Mode,
        /// Decimal digits for decimal output.
        #[arg(long, default_value_t = 50)]
        digits: u32,
    },
    /// Grid verification of the closed forms against the numeric evaluator.
    Verify {
        /// montenegro|bosnia|northern|kosovo|symmetry|croatia|ratio|altogether
        area: String,
        /// Comparison precision in decimal digits.
        #[arg(long, default_value_t = 200)]
        digits: u32,
        /// Working precision of numeric constant derivations.
        #[arg(long, default_value_t = 2000)]
        derive_digits: u32,
        /// Optional grid clamp `jlo..jhi,klo..khi,clo..chi` (use `*` to skip an axis).
        #[arg(long, allow_hyphen_values = true)]
        r#box: Option<String>,
    },
    /// Regenerate a reference table and diff it (2|3|8|9|10|11|12|13|14).
    Table {
        name: u32,
        /// Recovery precision for the convergent tables.
        #[arg(long, default_value_t = 300)]
        digits: u32,
    },
    /// Auxiliary checks: table5|remark11|limits|inostranstvo.
    Series { check: String },
    /// Divisibility sieve over a candidate box.
    Decimate {
        /// affine|catalan|product
        family: String,
        /// Database file (`j κ c t` lines); defaults to the shipped one.
        #[arg(long)]
        db: Option<std::path::PathBuf>,
        /// Box `lo..hi` (all coordinates) or comma-separated per-coordinate.
        #[arg(long, default_value = "-8..8", allow_hyphen_values = true)]
        r#box: String,
        #[arg(long, value_enum, default_value_t = Policy::ZeroEliminates)]
        policy: Policy,
        /// Write the database that was sieved (normalised format) to a file.
        #[arg(long)]
        dump_db: Option<std::path::PathBuf>,
    },
    /// Numeric derivation diffed against the algebraic chain.
    Derive {
        /// alphabeta|seeds
        target: String,
        j: i64,
        kappa: Option<i64>,
        #[arg(long)]
        digits: Option<u32>,
    },
}

fn parse_clamp(spec: &str) -> Result<verify::GridClamp, String> {
    let axes: Vec<&str> = spec.split(',').collect();
    if axes.len() != 3 {
        return Err("clamp must have three axes: j,k,c".into());
    }
    let parse_axis = |s: &str| -> Result<Option<(i64, i64)>, String> {
        if s == "*" {
            return Ok(None);
        }
        let (lo, hi) = s.split_once("..").ok_or_else(|| format!("bad range {s}"))?;
        Ok(Some((
            lo.parse().map_err(|_| format!("bad range {s}"))?,
            hi.parse().map_err(|_| format!("bad range {s}"))?,
        )))
    };
    Ok(verify::GridClamp {
        j: parse_axis(axes[0])?,
        kappa: parse_axis(axes[1])?,
        c: parse_axis(axes[2])?,
    })
}

fn emit(report: Report, format: Format) -> ExitCode {
    match format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => println!("{}", report.to_json()),
    }
    ExitCode::from(report.exit_code() as u8)
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(cap) = cli.depth_cap {
        balkan_core::cf_engine::set_depth_cap(cap);
    }
    match cli.command {
        Commands::Compute { j, kappa, c, mode, digits } => {
            let mode = match mode {
                Mode::Exact => compute::OutputMode::Exact,
                Mode::Decimal => compute::OutputMode::Decimal,
                Mode::Both => compute::OutputMode::Both,
            };
            match compute::run(j, kappa, c, mode, digits) {
                Ok(r) => emit(r, cli.format),
                Err(e) => usage_error(&e),
            }
        }
        Commands::Verify { area, digits, derive_digits, r#box } => {
            let area = match area.parse::<verify::VerifyArea>() {
                Ok(a) => a,
                Err(e) => return usage_error(&e),
            };
            let clamp = match r#box.as_deref().map(parse_clamp).transpose() {
                Ok(c) => c.unwrap_or_default(),
                Err(e) => return usage_error(&e),
            };
            emit(verify::run(area, digits, derive_digits, clamp), cli.format)
        }
        Commands::Table { name, digits } => match table::run(name, digits) {
            Ok(r) => emit(r, cli.format),
            Err(e) => usage_error(&e),
        },
        Commands::Series { check } => match check.parse::<series::SeriesCheck>() {
            Ok(c) => emit(series::run(c), cli.format),
            Err(e) => usage_error(&e),
        },
        Commands::Decimate { family, db, r#box, policy, dump_db } => {
            let family = match decimate::family_from_str(&family) {
                Ok(f) => f,
                Err(e) => return usage_error(&e),
            };
            let text = match db {
                None => balkan_cli::data::mining_db_text().to_string(),
                Some(path) => match std::fs::read_to_string(&path) {
                    Ok(t) => t,
                    Err(e) => return usage_error(&format!("cannot read {}: {e}", path.display())),
                },
            };
            let zero = match policy {
                Policy::ZeroEliminates => ZeroPolicy::Eliminates,
                Policy::ZeroSkips => ZeroPolicy::Skips,
            };
            match decimate::run(&text, family, &r#box, zero, dump_db.as_deref()) {
                Ok(r) => emit(r, cli.format),
                Err(e) => usage_error(&e),
            }
        }
        Commands::Derive { target, j, kappa, digits } => match target.as_str() {
            "alphabeta" => {
                let Some(kappa) = kappa else {
                    return usage_error("derive alphabeta needs J KAPPA");
                };
                match derive::alphabeta(j, kappa, digits.unwrap_or(2000)) {
                    Ok(r) => emit(r, cli.format),
                    Err(e) => usage_error(&e),
                }
            }
            "seeds" => match derive::seeds(j, digits.unwrap_or(5000)) {
                Ok(r) => emit(r, cli.format),
                Err(e) => usage_error(&e),
            },
            other => usage_error(&format!("unknown derive target {other}; expected alphabeta|seeds")),
        },
    }
}

mod document;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use gwq_core::{recognize, QSeries, Recognition, SurfaceParams};

use crate::document::{write_output, TableDocument};
use crate::verify::{run_verify, Mutation};

// Exit codes are a contract: 0 success, 1 verification failure,
// 2 usage/parse error, 3 internal cross-check failure.
const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CROSS_CHECK: u8 = 3;

const DEFAULT_ORDER: usize = 64;
const ORDER_ENV: &str = "GWQ_ORDER_DEFAULT";

#[derive(Parser)]
#[command(
    name = "gwq",
    version,
    about = "Exact family curve-count tables and identity verification for elliptic surfaces E(n)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the invariant table (n, g, d) -> GW value, cross-checked by two routes
    Table {
        /// Surface index n of E(n); must be >= 1
        #[arg(long)]
        n: u32,
        /// Largest genus to tabulate
        #[arg(long, default_value_t = 4)]
        g_max: u32,
        /// Truncation order (default: GWQ_ORDER_DEFAULT or 64)
        #[arg(long)]
        order: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Output file (default: stdout)
        #[arg(long)]
        out: Option<PathBuf>,
        /// Self-test hook: corrupt one closed-form value before the cross-check
        #[arg(long, hide = true)]
        mutate: bool,
    },
    /// Run the full identity verification suite
    Verify {
        /// Largest surface index to check
        #[arg(long, default_value_t = 5)]
        n_max: u32,
        /// Largest genus to check
        #[arg(long, default_value_t = 4)]
        g_max: u32,
        /// Truncation order (default: GWQ_ORDER_DEFAULT or 64)
        #[arg(long)]
        order: Option<usize>,
        /// Emit a JSON report instead of human-readable lines
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Output file (default: stdout)
        #[arg(long)]
        out: Option<PathBuf>,
        /// Self-test hook: corrupt one input and demand the suite catches it
        #[arg(long, hide = true, value_enum)]
        mutate: Option<Mutation>,
    },
    /// Match a series file against one weight of the ring Q[E2, E4, E6]
    Recognize {
        /// Weight of the candidate polynomial (even)
        #[arg(long)]
        weight: u32,
        /// File holding the series as whitespace-separated exact coefficients
        series_file: PathBuf,
        /// Output file (default: stdout)
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn resolve_order(flag: Option<usize>) -> Result<usize, String> {
    if let Some(order) = flag {
        return Ok(order);
    }
    match std::env::var(ORDER_ENV) {
        Ok(raw) => raw
            .parse::<usize>()
            .map_err(|_| format!("{ORDER_ENV} must be a nonnegative integer, got {raw:?}")),
        Err(_) => Ok(DEFAULT_ORDER),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(CliError::CrossCheck(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_CROSS_CHECK)
        }
    }
}

enum CliError {
    Usage(String),
    CrossCheck(String),
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Table {
            n,
            g_max,
            order,
            format,
            out,
            mutate,
        } => {
            let order = resolve_order(order).map_err(CliError::Usage)?;
            let p = SurfaceParams::new(n)
                .map_err(|e| CliError::Usage(format!("{e}; pass --n 1 or higher")))?;
            let doc = TableDocument::build(&p, g_max, order, mutate)
                .map_err(|e| CliError::CrossCheck(format!("table not emitted: {e}")))?;
            let rendered = match format {
                Format::Json => doc.to_json(),
                Format::Csv => doc.to_csv(),
            };
            write_output(out.as_deref(), &rendered).map_err(CliError::Usage)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            n_max,
            g_max,
            order,
            format,
            out,
            mutate,
        } => {
            let order = resolve_order(order).map_err(CliError::Usage)?;
            let reports = run_verify(n_max, g_max, order, mutate);
            let all_ok = reports.iter().all(|r| r.is_verified());
            let rendered = match format {
                Some(Format::Json) => verify::json_report(&reports, order),
                Some(Format::Csv) => {
                    return Err(CliError::Usage(
                        "verify reports support --format json only".into(),
                    ))
                }
                None => verify::text_report(&reports),
            };
            write_output(out.as_deref(), &rendered).map_err(CliError::Usage)?;
            if all_ok {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(EXIT_VERIFY_FAILED))
            }
        }
        Command::Recognize {
            weight,
            series_file,
            out,
        } => {
            let text = std::fs::read_to_string(&series_file).map_err(|e| {
                CliError::Usage(format!("cannot read {}: {e}", series_file.display()))
            })?;
            let series = QSeries::parse_text(&text)
                .map_err(|e| CliError::Usage(format!("{}: {e}", series_file.display())))?;
            let order = series.order();
            let answer = recognize(&series, weight).map_err(|e| CliError::Usage(e.to_string()))?;
            let rendered = match answer {
                Recognition::Solved(poly) => format!("{poly}\n"),
                Recognition::NoSolution => format!(
                    "NoSolution: no weight-{weight} polynomial in E2, E4, E6 matches (checked to order {order})\n"
                ),
                Recognition::Ambiguous => format!(
                    "AmbiguousSolution: the linear system is underdetermined at order {order}\n"
                ),
            };
            write_output(out.as_deref(), &rendered).map_err(CliError::Usage)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use polyfun_cli::commands::{self, parse_columns, TableFormat};
use polyfun_cli::verify::{self, Outcome, VerifyOptions};
use polyfun_cli::{parse_range, resolve_seed, CliError, OutputRecord, Payload, Report};

#[derive(Parser)]
#[command(name = "polyfun", version, about = "Polynomial functions over Z/nZ")]
struct Cli {
    /// Output format; `json` emits an array of records.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFmt {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Least k with n | k!
    Smarandache { n: u64 },
    /// Degree data and the basic null polynomials
    Basis { n: u64 },
    /// Number of polyfunctions over Z_n (in d variables with --d)
    Psi {
        n: u64,
        #[arg(long)]
        d: Option<usize>,
    },
    /// Split a null polynomial along the basic null polynomials
    Decompose {
        n: u64,
        /// Ascending coefficients, e.g. "0,1,1"
        poly: String,
    },
    /// Canonical representative of a polynomial function
    Canonical {
        n: u64,
        poly: Option<String>,
        /// Multivariate input file ("mod=<n> d=<d>" header, "k1 .. kd : c" lines)
        #[arg(long, conflicts_with = "poly")]
        multi: Option<String>,
    },
    /// Additive group of polyfunctions as a sum of cyclic groups
    Group { n: u64 },
    /// Compare closed forms against exhaustive oracles
    ///
    /// With no scope flags every check runs, as with --all. Exits 1 at the
    /// first disagreement. --inject-fault adds 1 to one seeded decomposition
    /// sample, which must then be reported: `polyfun verify --deco-samples 5
    /// --inject-fault` exits 1.
    Verify {
        #[arg(long)]
        psi_max: Option<u64>,
        #[arg(long)]
        group_max: Option<u64>,
        #[arg(long)]
        deco_samples: Option<usize>,
        #[arg(long)]
        multi_grid: bool,
        #[arg(long)]
        units: bool,
        #[arg(long)]
        idempotents: bool,
        #[arg(long)]
        all: bool,
        /// Overrides POLYFUN_SEED
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        inject_fault: bool,
    },
    /// Invariant table for a range of moduli
    Table {
        /// Inclusive, e.g. 2..10
        #[arg(long)]
        range: String,
        #[arg(long, default_value = "s,psi,q,t")]
        columns: String,
        #[arg(long = "format", value_enum, default_value_t = TableFmt::Csv)]
        table_format: TableFmt,
    },
}

enum Failure {
    Input(CliError),
    Verify(String),
}

impl From<CliError> for Failure {
    fn from(e: CliError) -> Self {
        Failure::Input(e)
    }
}

fn emit(out: &mut impl Write, format: Format, report: &Report) -> Result<(), Failure> {
    let text = match format {
        Format::Text => report.text.clone(),
        Format::Json => report.to_json().map_err(CliError::from)?,
    };
    // a closed pipe is not worth a diagnostic
    let _ = out.write_all(text.as_bytes());
    Ok(())
}

fn run_verify(opts: VerifyOptions, format: Format, out: &mut impl Write) -> Result<(), Failure> {
    let opts = if opts.is_empty() { VerifyOptions::everything(opts.seed) } else { opts };
    let outcome = verify::run(&opts)?;
    let (passed, failure) = match outcome {
        Outcome::Clean(p) => (p, None),
        Outcome::Failed(p, d) => (p, Some(d)),
    };
    let mut report = Report::default();
    for p in &passed {
        report.line(format!("ok    {}: {}", p.check, p.summary));
        report.records.push(OutputRecord::new(
            "verify",
            p.check,
            Payload::text("ok"),
            &p.summary,
        ));
    }
    if let Some(d) = &failure {
        report.line(format!("FAIL  {}: {}", d.check, d.detail));
        report.records.push(OutputRecord::new("verify", d.check, Payload::text("fail"), &d.detail));
    }
    emit(out, format, &report)?;
    match failure {
        Some(d) => Err(Failure::Verify(format!("{}: {}", d.check, d.detail))),
        None => Ok(()),
    }
}

fn dispatch(cli: Cli, out: &mut impl Write) -> Result<(), Failure> {
    let format = cli.format;
    let report = match cli.command {
        Command::Smarandache { n } => commands::smarandache_cmd(n)?,
        Command::Basis { n } => commands::basis_cmd(n)?,
        Command::Psi { n, d } => commands::psi_cmd(n, d)?,
        Command::Decompose { n, poly } => commands::decompose_cmd(n, &poly)?,
        Command::Canonical { n, poly, multi } => match (poly, multi) {
            (_, Some(path)) => {
                let text = std::fs::read_to_string(&path)
                    .map_err(|source| CliError::Io { path: path.clone(), source })?;
                commands::canonical_multi_cmd(n, &path, &text)?
            }
            (Some(poly), None) => commands::canonical_cmd(n, &poly)?,
            (None, None) => {
                return Err(CliError::Input("canonical needs a polynomial or --multi FILE".into()).into())
            }
        },
        Command::Group { n } => commands::group_cmd(n)?,
        Command::Verify {
            psi_max,
            group_max,
            deco_samples,
            multi_grid,
            units,
            idempotents,
            all,
            seed,
            inject_fault,
        } => {
            let env = std::env::var("POLYFUN_SEED").ok();
            let seed = resolve_seed(seed, env.as_deref())?;
            let opts = if all {
                VerifyOptions { inject_fault, ..VerifyOptions::everything(seed) }
            } else {
                VerifyOptions {
                    psi_max,
                    group_max,
                    deco_samples,
                    multi_grid,
                    units,
                    idempotents,
                    all,
                    seed,
                    inject_fault,
                }
            };
            return run_verify(opts, format, out);
        }
        Command::Table { range, columns, table_format } => {
            let range = parse_range(&range)?;
            let columns = parse_columns(&columns)?;
            let fmt = match (format, table_format) {
                (Format::Json, _) | (_, TableFmt::Json) => TableFormat::Json,
                _ => TableFormat::Csv,
            };
            let text = commands::table_cmd(range, &columns, fmt)?;
            let _ = out.write_all(text.as_bytes());
            return Ok(());
        }
    };
    emit(out, format, &report)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = dispatch(cli, &mut out);
    let _ = out.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verify(detail)) => {
            eprintln!("polyfun: verification failed: {detail}");
            ExitCode::from(1)
        }
        Err(Failure::Input(e)) => {
            eprintln!("polyfun: {e}");
            ExitCode::from(2)
        }
    }
}

//! `latwalk`: exact lattice-walk enumeration from the command line.

mod render;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use lattice_walks::asymptotics::{book, Book, BookConfig, BookError, NRange, DEFAULT_PRECISION};
use lattice_walks::closed_forms::{
    a2_gf_coeff, arcsine_counts, chung_feller_gf_coeff, solve_king_system, ClosedFormError,
};
use lattice_walks::enumerate::{endpoint_poly_2d, endpoint_poly_3d, DpStat};
use lattice_walks::moments::{moment_report, MomentError};
use lattice_walks::record::{self, BookRecord, MomentRecord, OutputRecord};
use lattice_walks::walk::{
    Oracle, OracleError, Region3, Stat, StepSet2, StepSet3, DEFAULT_ORACLE_LIMIT,
};

/// Overrides the oracle's work limit (walks or search nodes).
const LIMIT_ENV: &str = "LATWALK_ORACLE_LIMIT";

#[derive(Parser, Debug)]
#[command(
    name = "latwalk",
    version,
    about = "Exact enumeration and moment asymptotics for lattice walks"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    /// Report wall-clock time on stderr.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Latex,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Statistic polynomial over walks to one endpoint.
    Poly(PolyArgs),
    /// Region-visit polynomial over 3D walks to one endpoint.
    Poly3(Poly3Args),
    /// Exact moments of a statistic over walks to one endpoint.
    Moments(MomentArgs),
    /// Fitted asymptotic constants for every subset of a step set.
    Book(BookArgs),
    /// Coefficients of closed-form generating functions.
    #[command(subcommand)]
    Gf(GfCommand),
    /// Losing-time counts over free unit walks of length 2n.
    Arcsine {
        #[arg(long)]
        n: u64,
    },
    /// Exhaustive enumeration.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Args, Debug)]
struct PolyArgs {
    /// Steps as `dx,dy;dx,dy;...`.
    #[arg(long)]
    steps: StepSet2,
    /// Endpoint `a,b`.
    #[arg(long, value_parser = parse_endpoint2)]
    endpoint: (u64, u64),
    #[arg(long, default_value = "a1")]
    stat: Stat,
    /// Enumerate walks one by one instead of running the DP.
    #[arg(long)]
    oracle: bool,
}

#[derive(Args, Debug)]
struct Poly3Args {
    /// Steps as `dx,dy,dz;...`.
    #[arg(long)]
    steps: StepSet3,
    /// Endpoint `a,b,c`.
    #[arg(long, value_parser = parse_endpoint3)]
    endpoint: [u64; 3],
    /// Region 1..7 (6 strict orders of the coordinates, then ties).
    #[arg(long, value_parser = parse_region)]
    region: Region3,
    #[arg(long)]
    oracle: bool,
}

#[derive(Args, Debug)]
struct MomentArgs {
    #[command(flatten)]
    poly: PolyArgs,
    /// Highest standardized moment.
    #[arg(long, default_value_t = 4)]
    max_moment: usize,
}

#[derive(Args, Debug)]
struct BookArgs {
    #[arg(long)]
    steps: StepSet2,
    #[arg(long)]
    max_moment: usize,
    /// Range of n as `K1:K2`.
    #[arg(long)]
    range: NRange,
    /// Second range `K3:K4`; keeps only digits on which both fits agree.
    #[arg(long)]
    range2: Option<NRange>,
    /// Fractional digits in the fitted constants.
    #[arg(long, default_value_t = DEFAULT_PRECISION)]
    precision: usize,
}

#[derive(Subcommand, Debug)]
enum GfCommand {
    /// `[z^n]` of the losing-time generating function for unit steps.
    ChungFeller {
        #[arg(long)]
        n: usize,
    },
    /// `[z^n]` of the break-even generating function for unit steps.
    A2 {
        #[arg(long)]
        n: usize,
    },
    /// Forward King generating function through `z^order`.
    King {
        #[arg(long)]
        order: usize,
    },
}

#[derive(Subcommand, Debug)]
enum OracleCommand {
    /// Joint distribution of all four statistics over walks of one length.
    Grand {
        #[arg(long)]
        steps: StepSet2,
        #[arg(long)]
        length: usize,
    },
}

fn parse_numbers<const N: usize>(s: &str) -> Result<[u64; N], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != N {
        return Err(format!("expected {N} comma-separated integers, got {s:?}"));
    }
    let mut out = [0u64; N];
    for (slot, p) in out.iter_mut().zip(parts) {
        *slot = p.parse().map_err(|_| format!("invalid integer {p:?}"))?;
    }
    Ok(out)
}

fn parse_endpoint2(s: &str) -> Result<(u64, u64), String> {
    parse_numbers::<2>(s).map(|[a, b]| (a, b))
}

fn parse_endpoint3(s: &str) -> Result<[u64; 3], String> {
    parse_numbers::<3>(s)
}

fn parse_region(s: &str) -> Result<Region3, String> {
    s.parse::<u8>()
        .ok()
        .and_then(Region3::from_index)
        .ok_or_else(|| format!("region must be 1..7, got {s:?}"))
}

#[derive(Debug, Error)]
enum RunError {
    #[error(transparent)]
    Guard(#[from] OracleError),
    #[error("{0}")]
    Usage(String),
}

impl From<MomentError> for RunError {
    fn from(e: MomentError) -> Self {
        RunError::Usage(e.to_string())
    }
}

impl From<ClosedFormError> for RunError {
    fn from(e: ClosedFormError) -> Self {
        RunError::Usage(e.to_string())
    }
}

impl From<BookError> for RunError {
    fn from(e: BookError) -> Self {
        RunError::Usage(e.to_string())
    }
}

fn oracle() -> Result<Oracle, RunError> {
    match std::env::var(LIMIT_ENV) {
        Ok(v) => v.trim().parse().map(Oracle::with_limit).map_err(|_| {
            RunError::Usage(format!(
                "{LIMIT_ENV} must be a non-negative integer, got {v:?}"
            ))
        }),
        Err(_) => Ok(Oracle::with_limit(DEFAULT_ORACLE_LIMIT)),
    }
}

fn stat_poly(args: &PolyArgs) -> Result<(lattice_walks::algebra::IntPoly, &'static str), RunError> {
    match DpStat::try_from(args.stat) {
        Ok(dp) if !args.oracle => Ok((endpoint_poly_2d(&args.steps, args.endpoint, dp), "dp")),
        // a3 and a4 are only available by enumeration
        _ => Ok((
            oracle()?.endpoint_poly(&args.steps, args.endpoint, args.stat)?,
            "oracle",
        )),
    }
}

fn poly_inputs(args: &PolyArgs, method: &str) -> BTreeMap<String, String> {
    BTreeMap::from([
        ("steps".to_string(), args.steps.to_string()),
        (
            "endpoint".to_string(),
            format!("{},{}", args.endpoint.0, args.endpoint.1),
        ),
        ("stat".to_string(), args.stat.to_string()),
        ("method".to_string(), method.to_string()),
    ])
}

/// A finished command: its record, plus the book itself for renderers that
/// lay it out directly.
pub struct Outcome {
    pub record: OutputRecord,
    pub book: Option<Book>,
}

fn execute(command: &Command) -> Result<Outcome, RunError> {
    let mut native_book = None;
    let (name, inputs, result) = match command {
        Command::Poly(args) => {
            let (p, method) = stat_poly(args)?;
            ("poly", poly_inputs(args, method), record::polynomial(&p))
        }
        Command::Poly3(args) => {
            let (p, method) = if args.oracle {
                (
                    oracle()?.endpoint_poly_3d(&args.steps, args.endpoint, args.region)?,
                    "oracle",
                )
            } else {
                (
                    endpoint_poly_3d(&args.steps, args.endpoint, args.region),
                    "dp",
                )
            };
            let [a, b, c] = args.endpoint;
            let inputs = BTreeMap::from([
                ("steps".to_string(), args.steps.to_string()),
                ("endpoint".to_string(), format!("{a},{b},{c}")),
                ("region".to_string(), args.region.index().to_string()),
                ("method".to_string(), method.to_string()),
            ]);
            ("poly3", inputs, record::polynomial(&p))
        }
        Command::Moments(args) => {
            let (p, method) = stat_poly(&args.poly)?;
            if p.is_zero() {
                return Err(RunError::Usage(format!(
                    "endpoint {},{} is not reachable with steps {}",
                    args.poly.endpoint.0, args.poly.endpoint.1, args.poly.steps
                )));
            }
            let report = moment_report(&p, args.max_moment)?;
            let mut inputs = poly_inputs(&args.poly, method);
            inputs.insert("max_moment".to_string(), args.max_moment.to_string());
            (
                "moments",
                inputs,
                record::ResultRecord::Moments(MomentRecord::from(&report)),
            )
        }
        Command::Book(args) => {
            let mut ranges = vec![args.range];
            ranges.extend(args.range2);
            let mut config = BookConfig::new(args.steps.clone(), args.max_moment, ranges);
            config.precision = args.precision;
            let b = book(&config)?;
            let rec = BookRecord::from(&b);
            native_book = Some(b);
            let mut inputs = BTreeMap::from([
                ("steps".to_string(), args.steps.to_string()),
                ("max_moment".to_string(), args.max_moment.to_string()),
                ("range".to_string(), args.range.to_string()),
                ("precision".to_string(), args.precision.to_string()),
            ]);
            if let Some(r) = args.range2 {
                inputs.insert("range2".to_string(), r.to_string());
            }
            ("book", inputs, record::ResultRecord::Book(rec))
        }
        Command::Gf(gf) => match gf {
            GfCommand::ChungFeller { n } => {
                let p = chung_feller_gf_coeff(*n, *n)?;
                (
                    "gf chung-feller",
                    BTreeMap::from([("n".to_string(), n.to_string())]),
                    record::polynomial(&p),
                )
            }
            GfCommand::A2 { n } => {
                let p = a2_gf_coeff(*n, *n)?;
                (
                    "gf a2",
                    BTreeMap::from([("n".to_string(), n.to_string())]),
                    record::polynomial(&p),
                )
            }
            GfCommand::King { order } => {
                let sys = solve_king_system(*order)?;
                (
                    "gf king",
                    BTreeMap::from([("order".to_string(), order.to_string())]),
                    record::series(&sys.king),
                )
            }
        },
        Command::Arcsine { n } => (
            "arcsine",
            BTreeMap::from([("n".to_string(), n.to_string())]),
            record::counts(&arcsine_counts(*n)),
        ),
        Command::Oracle(OracleCommand::Grand { steps, length }) => {
            let g = oracle()?.grand_poly(steps, *length)?;
            let inputs = BTreeMap::from([
                ("steps".to_string(), steps.to_string()),
                ("length".to_string(), length.to_string()),
            ]);
            ("oracle grand", inputs, record::grand(&g))
        }
    };
    Ok(Outcome {
        record: OutputRecord {
            command: name.to_string(),
            inputs,
            result,
            timing_ms: None,
        },
        book: native_book,
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let start = Instant::now();
    match execute(&cli.command) {
        Ok(mut outcome) => {
            if cli.timing {
                let ms = start.elapsed().as_millis() as u64;
                outcome.record.timing_ms = Some(ms);
                eprintln!("elapsed: {ms} ms");
            }
            print!("{}", render::render(&outcome, cli.format));
            ExitCode::SUCCESS
        }
        Err(RunError::Guard(e)) => {
            eprintln!("error: {e} (raise {LIMIT_ENV} to allow more)");
            ExitCode::from(3)
        }
        Err(RunError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

//! Command-line front end. One subcommand per analysis, one report per
//! invocation, deterministic output.
//!
//! Exit codes: 0 on success, 1 when a computation rejects its inputs (a
//! structured error JSON goes to stderr), 2 for usage errors.

use std::fs;
use std::path::PathBuf;
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::fourier::Convention;
use crate::quantum::{self, BoundChoice, PairKind, PhysicalConstants};
use crate::report;
use crate::sampling;
use crate::signal::{DomainLabel, Grid, SampledSignal, SignalFamily};
use crate::widths;

/// Environment variable naming a JSON file that overrides the CODATA
/// constants.
pub const CONSTANTS_ENV: &str = "CONJUGATE_BENCH_CONSTANTS";

#[derive(Parser)]
#[command(
    name = "conjugate-bench",
    version,
    about = "Audits Fourier width products, sampling limits, and their physical-unit readings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

#[derive(Args)]
struct SignalArgs {
    /// Signal family spec, e.g. gaussian:sigma=1,center=0
    #[arg(long, value_parser = SignalFamily::from_str)]
    family: SignalFamily,
    /// Grid span override, domain units (default: 40 characteristic scales)
    #[arg(long)]
    span: Option<f64>,
    /// Grid point count override (default: 4096)
    #[arg(long)]
    count: Option<usize>,
    /// Coordinate meaning: time, position, or generic
    #[arg(long, default_value = "generic", value_parser = DomainLabel::from_str)]
    domain: DomainLabel,
}

#[derive(Args)]
struct OutputArgs {
    /// Report format; analysis commands emit json, signal commands csv
    #[arg(long, value_enum)]
    output: Option<OutputFormat>,
    /// Write the report to a file instead of stdout
    #[arg(long)]
    output_path: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Width statistics of one signal
    Widths {
        #[command(flatten)]
        signal: SignalArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Width product of a signal and its transform against a bound
    Uncertainty {
        #[command(flatten)]
        signal: SignalArgs,
        /// Transform convention: nu or omega
        #[arg(long, default_value = "omega", value_parser = Convention::from_str)]
        convention: Convention,
        /// Bound: a number (dimensionless), or h-over-2 / hbar-over-2 for
        /// physical units (needs --domain time or position)
        #[arg(long)]
        bound: Option<String>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Width products across a corpus of signal families
    CorpusAudit {
        /// Family to audit; repeatable (default: the built-in corpus)
        #[arg(long = "family", value_parser = SignalFamily::from_str)]
        families: Vec<SignalFamily>,
        #[arg(long, default_value = "omega", value_parser = Convention::from_str)]
        convention: Convention,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Decimate a signal, keeping every k-th sample
    Sample {
        #[command(flatten)]
        signal: SignalArgs,
        /// Decimation factor
        #[arg(long)]
        factor: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Fold a frequency through a sampling rate
    Alias {
        /// Frequency to fold, cycles per unit
        #[arg(long = "f")]
        frequency: f64,
        /// Sampling rate, samples per unit
        #[arg(long)]
        rate: f64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Decimate, then sinc-interpolate back onto the original grid
    Reconstruct {
        #[command(flatten)]
        signal: SignalArgs,
        /// Decimation factor applied before reconstruction
        #[arg(long)]
        factor: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Fold a wavenumber into the first Brillouin zone
    Brillouin {
        /// Lattice spacing, meters
        #[arg(long = "a")]
        spacing: f64,
        /// Wavenumber to reduce, 1/m
        #[arg(long = "k")]
        wavenumber: f64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Observability of a hydrogenic transition n -> m
    Hydrogen {
        /// Upper principal quantum number
        #[arg(long = "n")]
        n: u32,
        /// Lower principal quantum number
        #[arg(long = "m")]
        m: u32,
        /// Nuclear charge
        #[arg(long = "Z", default_value_t = 1)]
        z: u32,
        #[command(flatten)]
        out: OutputArgs,
    },
}

enum RunError {
    Usage(String),
    Computation(Error),
}

impl From<Error> for RunError {
    fn from(e: Error) -> Self {
        RunError::Computation(e)
    }
}

type RunResult<T> = std::result::Result<T, RunError>;

/// Parses argv, runs the requested analysis, and returns the process exit
/// code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok(()) => 0,
        Err(RunError::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(RunError::Computation(err)) => {
            eprint!("{}", report::error_report(&err));
            1
        }
    }
}

fn constants() -> RunResult<PhysicalConstants> {
    match std::env::var_os(CONSTANTS_ENV) {
        Some(path) => {
            let text = fs::read_to_string(&path).map_err(Error::from)?;
            Ok(PhysicalConstants::from_json(&text)?)
        }
        None => Ok(PhysicalConstants::codata2018()),
    }
}

impl SignalArgs {
    fn build(&self) -> RunResult<SampledSignal> {
        let default = self.family.default_grid()?;
        let grid = if self.span.is_some() || self.count.is_some() {
            Grid::centered(
                default.midpoint(),
                self.span.unwrap_or_else(|| default.span()),
                self.count.unwrap_or_else(|| default.count()),
            )?
        } else {
            default
        };
        Ok(self.family.generate(grid, self.domain)?)
    }

    fn require_width_analysis(&self) -> RunResult<()> {
        if self.family.admits_width_analysis() {
            Ok(())
        } else {
            Err(RunError::Computation(Error::InvalidParameter(format!(
                "family `{}` has no finite-energy envelope; width analysis is undefined for it",
                self.family.kind_name()
            ))))
        }
    }
}

impl OutputArgs {
    fn emit_json(&self, command: &str, text: String) -> RunResult<()> {
        if self.output == Some(OutputFormat::Csv) {
            return Err(RunError::Usage(format!(
                "`{command}` writes a json report; csv output exists only for sample and reconstruct"
            )));
        }
        self.write(text)
    }

    fn emit_csv(&self, command: &str, text: String) -> RunResult<()> {
        if self.output == Some(OutputFormat::Json) {
            return Err(RunError::Usage(format!(
                "`{command}` writes signal csv; json output exists only for analysis reports"
            )));
        }
        self.write(text)
    }

    fn write(&self, text: String) -> RunResult<()> {
        match &self.output_path {
            Some(path) => fs::write(path, text).map_err(|e| RunError::Computation(e.into())),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }
}

enum BoundSpec {
    Custom(f64),
    Physical(BoundChoice),
}

fn parse_bound(s: &str) -> RunResult<BoundSpec> {
    if let Ok(choice) = BoundChoice::from_str(s) {
        return Ok(BoundSpec::Physical(choice));
    }
    match s.parse::<f64>() {
        Ok(v) => Ok(BoundSpec::Custom(v)),
        Err(_) => Err(RunError::Usage(format!(
            "invalid value `{s}` for --bound: expected h-over-2, hbar-over-2, or a number"
        ))),
    }
}

fn execute(command: Command) -> RunResult<()> {
    match command {
        Command::Widths { signal, out } => {
            signal.require_width_analysis()?;
            let s = signal.build()?;
            let r = widths::width_report(&s)?;
            out.emit_json("widths", report::width_report(&signal.family.to_string(), &r))
        }
        Command::Uncertainty {
            signal,
            convention,
            bound,
            out,
        } => {
            signal.require_width_analysis()?;
            let spec = match bound.as_deref() {
                None => BoundSpec::Custom(widths::default_bound(convention)),
                Some(s) => parse_bound(s)?,
            };
            let label = signal.family.to_string();
            match spec {
                BoundSpec::Custom(b) => {
                    let s = signal.build()?;
                    let r = widths::uncertainty_product(&s, convention, b)?;
                    out.emit_json("uncertainty", report::uncertainty_report(&label, &r))
                }
                BoundSpec::Physical(choice) => {
                    let kind = match signal.domain {
                        DomainLabel::Time => PairKind::TimeEnergy,
                        DomainLabel::Position => PairKind::PositionMomentum,
                        DomainLabel::Generic => {
                            return Err(RunError::Usage(
                                "a physical bound needs --domain time or --domain position"
                                    .into(),
                            ))
                        }
                    };
                    let s = signal.build()?;
                    let c = constants()?;
                    let pair = quantum::uncertainty_in_units(&s, kind, &c, choice)?;
                    out.emit_json("uncertainty", report::pair_report(&label, &pair))
                }
            }
        }
        Command::CorpusAudit {
            families,
            convention,
            out,
        } => {
            let families = if families.is_empty() {
                SignalFamily::audit_corpus()
            } else {
                families
            };
            let audit = widths::corpus_audit(&families, convention)?;
            out.emit_json("corpus-audit", report::corpus_report(&audit))
        }
        Command::Sample {
            signal,
            factor,
            out,
        } => {
            let s = signal.build()?;
            let coarse = sampling::sample(&s, factor)?;
            out.emit_csv("sample", coarse.to_csv())
        }
        Command::Alias {
            frequency,
            rate,
            out,
        } => {
            let r = sampling::alias_fold(frequency, rate)?;
            out.emit_json("alias", report::alias_report(&r))
        }
        Command::Reconstruct {
            signal,
            factor,
            out,
        } => {
            let s = signal.build()?;
            let coarse = sampling::sample(&s, factor)?;
            let rebuilt = sampling::reconstruct(&coarse, *s.grid())?;
            out.emit_csv("reconstruct", rebuilt.to_csv())
        }
        Command::Brillouin {
            spacing,
            wavenumber,
            out,
        } => {
            let zone = quantum::BrillouinZone::new(spacing)?;
            let (reduced_k, zone_index) = quantum::brillouin_reduce(wavenumber, &zone);
            out.emit_json(
                "brillouin",
                report::brillouin_report(&zone, wavenumber, reduced_k, zone_index),
            )
        }
        Command::Hydrogen { n, m, z, out } => {
            let c = constants()?;
            let t = quantum::observability(n, m, z, &c)?;
            out.emit_json("hydrogen", report::hydrogen_report(&t))
        }
    }
}

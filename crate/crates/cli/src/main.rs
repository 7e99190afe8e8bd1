//! `ferrers`: naturals as Ferrers diagrams from the command line.
//!
//! Exit codes: 0 success, 1 counterexample found, 2 usage error, 3 overflow.

mod table;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use ferrers::bounds::{self, SweepOptions};
use ferrers::diagram::{self, Partition};
use ferrers::render::{self, Format, RenderSpec};
use ferrers::{primes, Error, RectDims};

const EXIT_COUNTEREXAMPLE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_OVERFLOW: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "ferrers",
    version,
    about = "Naturals as Ferrers diagrams via prime factorization"
)]
struct Cli {
    /// Write output here instead of standard output.
    #[arg(short, long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Draw F(n).
    Diagram {
        n: u64,
        #[arg(long, default_value = "ascii", value_parser = parse_format)]
        format: Format,
        /// Cell size for svg (pixels) and tikz (points).
        #[arg(long, default_value_t = 10.0)]
        cell_size: f64,
    },
    /// The number whose diagram has the given comma-separated row lengths.
    Number {
        #[arg(value_name = "R1,R2,...", default_value = "")]
        rows: String,
    },
    /// Factorization of n in prime-index notation.
    Factor { n: u64 },
    /// Number of primes <= x.
    #[command(allow_negative_numbers = true)]
    Pi { x: f64 },
    /// Evaluate the lower bound on pi(x) and its integer chain at x.
    #[command(allow_negative_numbers = true)]
    Bound { x: f64 },
    /// n, factorization and diagram for every n <= n_max.
    Table { n_max: u64 },
    /// Number of subfigures of an i x j rectangle.
    CountSubfigures { i: u64, j: u64 },
    /// Run a brute-force verification sweep.
    #[command(subcommand)]
    Verify(Claim),
}

#[derive(Debug, Subcommand)]
enum Claim {
    /// F(a) ⊆ F(b) implies a <= b, for all a, b <= max.
    Lemma1 {
        #[arg(long)]
        max: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// An i x j rectangle has C(i + j, j) subfigures.
    Lemma2 {
        #[arg(long)]
        imax: u64,
        #[arg(long)]
        jmax: u64,
    },
    /// The pi(x) lower bound, its chain and witnesses for all 2 <= x <= xmax.
    Theorem {
        #[arg(long)]
        xmax: u64,
        /// Stream one CSV row per x to this file.
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A failed command: message for standard error plus exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Overflow => EXIT_OVERFLOW,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    validate(&cli.command)?;
    let mut out: Box<dyn Write> = match &cli.output {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let code = dispatch(cli.command, &mut out)?;
    out.flush()?;
    Ok(code)
}

fn validate(command: &Command) -> Result<(), Failure> {
    match *command {
        Command::Diagram { n: 0, .. } | Command::Factor { n: 0 } => {
            Err(Failure::usage("n must be at least 1"))
        }
        Command::Diagram { cell_size, .. } if !(cell_size.is_finite() && cell_size > 0.0) => {
            Err(Failure::usage("--cell-size must be positive"))
        }
        Command::Pi { x } if !(x.is_finite() && x >= 0.0) => Err(Failure::usage("x must be >= 0")),
        Command::Bound { x } if !(x.is_finite() && x >= 2.0) => {
            Err(Failure::usage("the bound is defined for x >= 2"))
        }
        Command::Table { n_max: 0 } => Err(Failure::usage("n_max must be at least 1")),
        Command::Verify(Claim::Lemma1 { max: 0, .. }) => {
            Err(Failure::usage("--max must be at least 1"))
        }
        Command::Verify(Claim::Theorem { xmax, .. }) if xmax < 2 => {
            Err(Failure::usage("--xmax must be at least 2"))
        }
        Command::Verify(Claim::Lemma1 { jobs: 0, .. } | Claim::Theorem { jobs: 0, .. }) => {
            Err(Failure::usage("--jobs must be at least 1"))
        }
        _ => Ok(()),
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<u8, Failure> {
    match command {
        Command::Diagram {
            n,
            format,
            cell_size,
        } => {
            let spec = RenderSpec::new(format).with_cell_size(cell_size)?;
            out.write_all(render::render(&diagram::to_diagram(n)?, &spec).as_bytes())?;
        }
        Command::Number { rows } => {
            let d = parse_rows(&rows)?;
            writeln!(out, "{}", diagram::from_diagram(&d)?)?;
        }
        Command::Factor { n } => writeln!(out, "{}", primes::factorize(n)?)?,
        Command::Pi { x } => writeln!(out, "{}", primes::prime_count(x)?)?,
        Command::Bound { x } => {
            let report = bounds::bound_report(x)?;
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&report).expect("report serializes")
            )?;
        }
        Command::Table { n_max } => table::write_table(n_max, out)?,
        Command::CountSubfigures { i, j } => writeln!(
            out,
            "{}",
            bounds::count_subfigures_rect(RectDims::new(i, j))?
        )?,
        Command::Verify(claim) => {
            let report = match claim {
                Claim::Lemma1 { max, jobs } => {
                    bounds::verify_lemma1(max, &SweepOptions::with_jobs(jobs))?
                }
                Claim::Lemma2 { imax, jmax } => bounds::verify_lemma2(imax, jmax)?,
                Claim::Theorem { xmax, csv, jobs } => {
                    let opts = SweepOptions::with_jobs(jobs);
                    match csv {
                        Some(path) => {
                            let mut file = BufWriter::new(File::create(&path)?);
                            bounds::verify_theorem(xmax, &opts, Some(&mut file))?
                        }
                        None => bounds::verify_theorem(xmax, &opts, None)?,
                    }
                }
            };
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&report).expect("report serializes")
            )?;
            if !report.holds() {
                eprintln!("{report}");
                return Ok(EXIT_COUNTEREXAMPLE);
            }
        }
    }
    Ok(0)
}

/// `3,1` -> [3, 1]; order is irrelevant, the empty string is the empty diagram.
fn parse_rows(s: &str) -> Result<Partition, Failure> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Partition::empty());
    }
    let rows = s
        .split(',')
        .map(|part| {
            let part = part.trim();
            match part.parse::<u64>() {
                Ok(0) => Err(Failure::usage("row lengths must be at least 1")),
                Ok(r) => Ok(r),
                Err(_) => Err(Failure::usage(format!("invalid row length {part:?}"))),
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Partition::from_unsorted(rows)?)
}

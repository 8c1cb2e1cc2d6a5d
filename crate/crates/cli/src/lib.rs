//! The `ruled` command-line tool.
//!
//! Exit codes: `0` success, `1` a verification suite failed, `2` bad input.

pub mod docs;
pub mod render;

use std::fmt;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use ruled_core::verify::{self, Predicates, VerifyConfig, VerifyReport};
use ruled_core::{region, BoundaryTag, NumClass, SurfaceModel};

pub const DEFAULT_MAX_CELLS: u64 = 1_000_000;

#[derive(Debug, Parser)]
#[command(
    name = "ruled",
    version,
    about = "Line-bundle classes on elliptic ruled surfaces"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cohomology, positivity and normal presentation of one class.
    Classify(ClassifyArgs),
    /// Classify every class in a window of Num(X).
    Region(RegionArgs),
    /// Write a class as a sum of two entirely base-point-free classes.
    Decompose(DecomposeArgs),
    /// Run the self-verification suites.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct ClassArgs {
    /// Invariant e of the surface (e >= -1).
    #[arg(long, allow_hyphen_values = true)]
    pub e: i64,
    /// Coefficient of C0.
    #[arg(long, allow_hyphen_values = true)]
    pub a: i64,
    /// Coefficient of f.
    #[arg(long, allow_hyphen_values = true)]
    pub b: i64,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub class: ClassArgs,
    /// Member of an e = -1 ray class: zero, eta1, eta2, eta3 or generic.
    #[arg(long)]
    pub tag: Option<BoundaryTag>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Ascii,
    Svg,
}

/// An inclusive range written `lo:hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub lo: i64,
    pub hi: i64,
}

impl Span {
    pub fn range(self) -> RangeInclusive<i64> {
        self.lo..=self.hi
    }
}

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (lo, hi) = s
            .split_once(':')
            .ok_or_else(|| format!("expected lo:hi, got '{s}'"))?;
        let parse = |x: &str| {
            x.trim()
                .parse::<i64>()
                .map_err(|err| format!("bad bound '{x}': {err}"))
        };
        let span = Span {
            lo: parse(lo)?,
            hi: parse(hi)?,
        };
        if span.lo > span.hi {
            return Err(format!("empty range {s}"));
        }
        Ok(span)
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.lo, self.hi)
    }
}

#[derive(Debug, Args)]
pub struct RegionArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub e: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub a_range: Span,
    #[arg(long, allow_hyphen_values = true)]
    pub b_range: Span,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Refuse windows with more cells than this.
    #[arg(long, default_value_t = DEFAULT_MAX_CELLS)]
    pub max_cells: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Constructive,
    Brute,
}

#[derive(Debug, Args)]
pub struct DecomposeArgs {
    #[command(flatten)]
    pub class: ClassArgs,
    #[arg(long, value_enum, default_value_t = Mode::Constructive)]
    pub mode: Mode,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Comma-separated invariants to test.
    #[arg(long, allow_hyphen_values = true, value_delimiter = ',', default_values_t = [-1, 0, 1, 2])]
    pub e: Vec<i64>,
    /// Half-width of the window: |a|, |b| <= N.
    #[arg(long, default_value_t = 40)]
    pub window: i64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Failure of a command, mapped onto an exit code.
#[derive(Debug)]
pub enum Failure {
    /// Bad arguments or input; exit 2.
    Usage(String),
    /// Anything else (I/O); exit 2 as well, with the error chain.
    Other(anyhow::Error),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        2
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(msg) => f.write_str(msg),
            Failure::Other(err) => write!(f, "{err:#}"),
        }
    }
}

impl From<ruled_core::Error> for Failure {
    fn from(err: ruled_core::Error) -> Self {
        Failure::Usage(err.to_string())
    }
}

impl From<anyhow::Error> for Failure {
    fn from(err: anyhow::Error) -> Self {
        Failure::Other(err)
    }
}

impl From<io::Error> for Failure {
    fn from(err: io::Error) -> Self {
        Failure::Other(err.into())
    }
}

fn sink(
    out: &Option<PathBuf>,
    stdout: &mut dyn Write,
    f: impl FnOnce(&mut dyn Write) -> io::Result<()>,
) -> Result<(), Failure> {
    match out {
        Some(path) => {
            let file =
                File::create(path).with_context(|| format!("creating {}", path.display()))?;
            let mut w = BufWriter::new(file);
            f(&mut w)?;
            w.flush()?;
        }
        None => f(stdout)?,
    }
    Ok(())
}

/// Runs a parsed command, writing to `stdout` unless `--out` is given.
/// Returns the process exit code on success.
pub fn run(cli: Cli, stdout: &mut dyn Write) -> Result<u8, Failure> {
    run_with(cli, stdout, &Predicates::default())
}

/// As [`run`], with the predicate table used by `verify` supplied.
pub fn run_with(cli: Cli, stdout: &mut dyn Write, predicates: &Predicates) -> Result<u8, Failure> {
    match cli.command {
        Command::Classify(args) => {
            let s = SurfaceModel::new(args.class.e)?;
            let c = NumClass::new(args.class.a, args.class.b);
            let doc = docs::classify(c, args.tag.unwrap_or_default(), s)?;
            sink(&args.out, stdout, |w| docs::write_pretty(w, &doc))?;
            Ok(0)
        }
        Command::Region(args) => {
            let s = SurfaceModel::new(args.e)?;
            let (ar, br) = (args.a_range.range(), args.b_range.range());
            let cells = region::cell_count(&ar, &br).unwrap_or(u128::MAX);
            if cells > args.max_cells as u128 {
                return Err(Failure::Usage(format!(
                    "window {} x {} has {cells} cells, over the cap of {}",
                    args.a_range, args.b_range, args.max_cells
                )));
            }
            let grid = region::scan(s, ar, br);
            sink(&args.out, stdout, |w| match args.format {
                Format::Json => render::json_lines(w, &grid),
                Format::Ascii => render::ascii(w, s, args.a_range, args.b_range, &grid),
                Format::Svg => render::svg(w, s, args.a_range, args.b_range, &grid),
            })?;
            Ok(0)
        }
        Command::Decompose(args) => {
            let s = SurfaceModel::new(args.class.e)?;
            let c = NumClass::new(args.class.a, args.class.b);
            let doc = docs::decompose(c, s, args.mode);
            sink(&args.out, stdout, |w| docs::write_pretty(w, &doc))?;
            Ok(0)
        }
        Command::Verify(args) => {
            if args.window < 4 {
                return Err(Failure::Usage(format!(
                    "--window must be at least 4, got {}",
                    args.window
                )));
            }
            for e in &args.e {
                SurfaceModel::new(*e)?;
            }
            let cfg = VerifyConfig {
                e_values: args.e.clone(),
                window: args.window,
                seed: args.seed,
                ..VerifyConfig::default()
            };
            let report = verify::run(predicates, &cfg);
            sink(&args.out, stdout, |w| match args.format {
                Some(Format::Json) => docs::write_pretty(w, &report),
                _ => write_verify_text(w, &report),
            })?;
            Ok(if report.passed() { 0 } else { 1 })
        }
    }
}

pub fn write_verify_text(w: &mut dyn Write, report: &VerifyReport) -> io::Result<()> {
    writeln!(
        w,
        "verify: window {}, e in {:?}, seed {}",
        report.window, report.e_values, report.seed
    )?;
    for r in &report.results {
        let status = if r.passed { "PASS" } else { "FAIL" };
        writeln!(w, "[{status}] {} ({} checks)", r.name, r.checked)?;
        for c in &r.counterexamples {
            writeln!(w, "    counterexample: {c}")?;
        }
    }
    let verdict = if report.passed() {
        "all suites passed"
    } else {
        "FAILED"
    };
    writeln!(w, "{verdict} in {} ms", report.wall_time_ms)
}

//! Command-line front end for the `sextica` solvers.

pub mod parse;
pub mod report;
pub mod sweep;

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use sextica::sextic::S56Mode;
use sextica::solve::{solve, Method, SolveOptions};
use sextica::verify::RunReport;

pub use parse::{parse_poly, ParseError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DEGENERATE: i32 = 2;
pub const EXIT_UNVERIFIED: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Parser)]
#[command(
    name = "sextica",
    version,
    about = "Closed-form polynomial solvers checked against an iterative oracle"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    T1,
    T2,
    T3,
    Oracle,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Auto => Method::Auto,
            MethodArg::T1 => Method::T1,
            MethodArg::T2 => Method::T2,
            MethodArg::T3 => Method::T3,
            MethodArg::Oracle => Method::Oracle,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum S56Arg {
    Paper,
    Vieta,
}

impl From<S56Arg> for S56Mode {
    fn from(m: S56Arg) -> Self {
        match m {
            S56Arg::Paper => S56Mode::Paper,
            S56Arg::Vieta => S56Mode::Vieta,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SolveFormat {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepFormat {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve one polynomial, or one per line of a file.
    Solve {
        /// Coefficients, highest degree first, e.g. `1,0,-1` or `1,0,1+2i`.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "file", required_unless_present = "file")]
        coeffs: Option<String>,
        /// One coefficient list per line; writes one JSON report per line.
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = S56Arg::Vieta)]
        s56: S56Arg,
        /// Also run the other Γ₄ seats of a sextic.
        #[arg(long)]
        all_seats: bool,
        /// Relative backward residual at or below which a candidate is verified.
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = SolveFormat::Json)]
        format: SolveFormat,
        /// Record wall-clock time in `timing_ns`.
        #[arg(long)]
        timing: bool,
    },
    /// Solve many random polynomials and aggregate the outcomes.
    Sweep {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        count: usize,
        #[arg(long)]
        seed: u64,
        /// Coefficient interval `lo,hi`.
        #[arg(long, allow_hyphen_values = true, default_value = "-10,10")]
        range: String,
        #[arg(long)]
        all_seats: bool,
        #[arg(long, value_enum, default_value_t = S56Arg::Vieta)]
        s56: S56Arg,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = SweepFormat::Json)]
        format: SweepFormat,
    },
}

/// Exit code for a finished report.
pub fn exit_code(r: &RunReport) -> i32 {
    if r.degeneracy.is_some() {
        EXIT_DEGENERATE
    } else if r.all_verified() && !r.verdicts.is_empty() {
        EXIT_OK
    } else {
        EXIT_UNVERIFIED
    }
}

fn parse_range(s: &str) -> Option<(f64, f64)> {
    let (lo, hi) = s.split_once(',')?;
    Some((lo.trim().parse().ok()?, hi.trim().parse().ok()?))
}

fn valid_tol(tol: f64) -> bool {
    tol.is_finite() && tol > 0.0
}

/// Runs the CLI on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    match cli.command {
        Command::Solve { coeffs, file, method, s56, all_seats, tol, format, timing } => {
            if !valid_tol(tol) {
                let _ = writeln!(err, "error: --tol must be a positive finite number");
                return EXIT_USAGE;
            }
            let mut opts = SolveOptions { method: method.into(), ..Default::default() };
            opts.sextic.s56 = s56.into();
            opts.sextic.all_seats = all_seats;
            opts.tolerances.residual_tol = tol;
            match (coeffs, file) {
                (Some(text), _) => solve_one(&text, &opts, format, timing, out, err),
                (None, Some(path)) => solve_file(&path, &opts, timing, out, err),
                (None, None) => EXIT_USAGE,
            }
        }
        Command::Sweep { degree, count, seed, range, all_seats, s56, method, tol, format } => {
            let Some(range) = parse_range(&range) else {
                let _ = writeln!(err, "error: --range must be lo,hi");
                return EXIT_USAGE;
            };
            if !valid_tol(tol) {
                let _ = writeln!(err, "error: --tol must be a positive finite number");
                return EXIT_USAGE;
            }
            let mut cfg = sweep::SweepConfig::new(degree, count, seed);
            cfg.range = range;
            cfg.options.method = method.into();
            cfg.options.sextic.s56 = s56.into();
            cfg.options.sextic.all_seats = all_seats;
            cfg.options.tolerances.residual_tol = tol;
            if let Err(e) = cfg.validate() {
                let _ = writeln!(err, "error: {e}");
                return EXIT_USAGE;
            }
            let outcomes = sweep::run_instances(&cfg, sweep::thread_count());
            let text = match format {
                SweepFormat::Json => sweep::to_json(&sweep::summarize(&cfg, &outcomes)) + "\n",
                SweepFormat::Csv => sweep::to_csv(&cfg, &outcomes),
            };
            let _ = out.write_all(text.as_bytes());
            EXIT_OK
        }
    }
}

enum LineOutcome {
    Report(Box<RunReport>, Option<u64>),
    Usage(String),
}

fn solve_line(text: &str, opts: &SolveOptions, timing: bool) -> LineOutcome {
    let p = match parse_poly(text) {
        Ok(p) => p,
        Err(e) => return LineOutcome::Usage(e.to_string()),
    };
    let start = Instant::now();
    match solve(&p, opts) {
        Ok(r) => {
            let ns = timing.then(|| start.elapsed().as_nanos().min(u64::MAX as u128) as u64);
            LineOutcome::Report(Box::new(r), ns)
        }
        Err(e) => LineOutcome::Usage(e.to_string()),
    }
}

fn solve_one(
    text: &str,
    opts: &SolveOptions,
    format: SolveFormat,
    timing: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    match solve_line(text, opts, timing) {
        LineOutcome::Report(r, ns) => {
            let body = match format {
                SolveFormat::Json => report::to_json(&r, ns) + "\n",
                SolveFormat::Text => report::to_text(&r, ns),
            };
            let _ = out.write_all(body.as_bytes());
            exit_code(&r)
        }
        LineOutcome::Usage(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

/// JSON-lines over a file. Blank lines and `#` comments are skipped; a line
/// that cannot be solved becomes `{"line": n, "error": "..."}`. The exit
/// code is the largest of the per-line codes.
fn solve_file(
    path: &std::path::Path,
    opts: &SolveOptions,
    timing: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let content = match std::fs::read_to_string(path) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(err, "error: {}: {e}", path.display());
            return EXIT_USAGE;
        }
    };
    let mut code = EXIT_OK;
    for (k, line) in content.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (body, c) = match solve_line(line, opts, timing) {
            LineOutcome::Report(r, ns) => (report::to_json(&r, ns), exit_code(&r)),
            LineOutcome::Usage(msg) => {
                (serde_json::json!({ "line": k + 1, "error": msg }).to_string(), EXIT_USAGE)
            }
        };
        let _ = writeln!(out, "{body}");
        code = code.max(c);
    }
    code
}

//! Command-line front end: parse an instance, run a solver or an oracle,
//! print the result as text or JSON, optionally draw it.

pub mod doc;
pub mod fmt;
pub mod svg;

use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use segcover::oracle::{oracle_cover, oracle_partition, oracle_two_disk_cover, Kernel};
use segcover::verify::violations;
use segcover::{
    approximate_two_center, gen, instance, solve_cover, solve_hit, solve_rcover, DiskPair, Error, InstanceReader,
    Problem, SegmentSource, Solution,
};

use doc::{OracleDocument, SolutionDocument};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INFEASIBLE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "segcover", version, about = "Two congruent axis-parallel squares for line segments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Cover every segment with the union of two squares.
    Cover(SolveArgs),
    /// Hit every segment with one of two squares.
    Hit(SolveArgs),
    /// Put every segment inside one of two squares.
    CoverRestricted(SolveArgs),
    /// Two congruent disks from the square solution of --mode.
    TwoCenter {
        #[command(flatten)]
        args: SolveArgs,
        #[arg(long, value_enum, default_value_t = Mode::Cover)]
        mode: Mode,
    },
    /// Brute-force optimum for small instances.
    Oracle {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, value_enum, default_value_t = OracleMode::Cover)]
        mode: OracleMode,
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
    },
    /// Write a random instance to standard output.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Two disjoint clusters instead of uniform endpoints.
        #[arg(long)]
        clustered: bool,
    },
}

#[derive(Args, Debug)]
struct SolveArgs {
    /// Instance file; standard input when absent.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Also draw the instance and solution.
    #[arg(long)]
    svg: Option<PathBuf>,
    #[arg(long, default_value_t = 1e-9)]
    tolerance: f64,
    /// Re-check the reported shapes against every segment.
    #[arg(long)]
    verify: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Cover,
    Hit,
    CoverRestricted,
}

impl From<Mode> for Problem {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Cover => Problem::Cover,
            Mode::Hit => Problem::Hit,
            Mode::CoverRestricted => Problem::RestrictedCover,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OracleMode {
    Cover,
    Hit,
    CoverRestricted,
    TwoCenter,
}

/// Runs one command with standard input as the fallback instance source.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    run_with_stdin(args, &mut io::stdin().lock(), out, err)
}

pub fn run_with_stdin<I, S>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind::{DisplayHelp, DisplayVersion};
            if matches!(e.kind(), DisplayHelp | DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let _ = write!(err, "{e}");
            return EXIT_USAGE;
        }
    };
    match dispatch(cli.command, stdin, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

/// Holds a spooled copy of standard input alive while it is being read.
struct Opened {
    reader: InstanceReader,
    _spool: Option<tempfile::NamedTempFile>,
}

fn open(input: Option<&PathBuf>, stdin: &mut dyn Read) -> segcover::Result<Opened> {
    match input {
        Some(p) => Ok(Opened { reader: InstanceReader::open(p)?, _spool: None }),
        None => {
            // The solvers read their input more than once, so standard input
            // is copied to a file first.
            let mut spool = tempfile::NamedTempFile::new()?;
            io::copy(stdin, &mut spool)?;
            spool.flush()?;
            Ok(Opened { reader: InstanceReader::open(spool.path())?, _spool: Some(spool) })
        }
    }
}

fn solve(problem: Problem, src: &mut dyn SegmentSource<f64>, tol: f64) -> segcover::Result<Solution> {
    match problem {
        Problem::Cover => solve_cover(src, tol),
        Problem::Hit => solve_hit(src, tol),
        Problem::RestrictedCover => solve_rcover(src, tol),
    }
}

pub fn text_line(sol: &Solution, disks: Option<&DiskPair>) -> String {
    let g = |v: f64| fmt::g(v, 9);
    let sq = |s: &segcover::Square| format!("({},{},{})", g(s.min.x), g(s.min.y), g(s.side));
    let mut line = format!("sigma={} config={} s1={} s2={}", g(sol.sigma), sol.config, sq(&sol.s1), sq(&sol.s2));
    if let Some(d) = disks {
        let dk = |c: &segcover::Disk| format!("({},{},{})", g(c.center.x), g(c.center.y), g(c.radius));
        line += &format!(" radius={} lower_bound={} d1={} d2={}", g(d.radius), g(d.lower_bound), dk(&d.d1), dk(&d.d2));
    }
    line
}

fn dispatch(cmd: Command, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> segcover::Result<i32> {
    match cmd {
        Command::Cover(a) => solve_command(Problem::Cover, false, a, stdin, out, err),
        Command::Hit(a) => solve_command(Problem::Hit, false, a, stdin, out, err),
        Command::CoverRestricted(a) => solve_command(Problem::RestrictedCover, false, a, stdin, out, err),
        Command::TwoCenter { args, mode } => solve_command(mode.into(), true, args, stdin, out, err),
        Command::Oracle { input, format, mode, tolerance } => {
            let mut text = String::new();
            match &input {
                Some(p) => text = std::fs::read_to_string(p)?,
                None => {
                    stdin.read_to_string(&mut text)?;
                }
            }
            let segs = instance::parse_str::<f64>(&text)?;
            let (problem, value) = match mode {
                OracleMode::Cover => ("cover", oracle_cover(&segs, tolerance)),
                OracleMode::Hit => ("hit", oracle_partition(&segs, Kernel::Hit, tolerance)?),
                OracleMode::CoverRestricted => ("cover-restricted", oracle_partition(&segs, Kernel::Cover, tolerance)?),
                OracleMode::TwoCenter => ("two-center", oracle_two_disk_cover(&segs, tolerance)?),
            };
            let d = OracleDocument { problem: problem.into(), value, n: segs.len() };
            match format {
                Format::Text => writeln!(out, "{}={} n={}", if mode == OracleMode::TwoCenter { "radius" } else { "sigma" }, fmt::g(value, 9), d.n)?,
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&d).expect("document serializes"))?,
            }
            Ok(EXIT_OK)
        }
        Command::Gen { n, seed, clustered } => {
            let segs = if clustered { gen::clustered::<f64>(n, seed) } else { gen::uniform::<f64>(n, seed) };
            let mut buf = io::BufWriter::new(out);
            instance::write_instance(&mut buf, &segs)?;
            buf.flush()?;
            Ok(EXIT_OK)
        }
    }
}

fn solve_command(
    problem: Problem,
    disks: bool,
    a: SolveArgs,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> segcover::Result<i32> {
    if !(a.tolerance >= 0.0 && a.tolerance.is_finite()) {
        return Err(Error::Parse { line: 0, message: format!("bad tolerance {}", a.tolerance) });
    }
    let mut opened = open(a.input.as_ref(), stdin)?;
    let src = &mut opened.reader;
    let t0 = Instant::now();
    let sol = solve(problem, src, a.tolerance)?;
    let ms = t0.elapsed().as_secs_f64() * 1e3;
    let pair = disks.then(|| approximate_two_center(&sol));

    match a.format {
        Format::Text => writeln!(out, "{}", text_line(&sol, pair.as_ref()))?,
        Format::Json => writeln!(out, "{}", SolutionDocument::new(&sol, pair.as_ref(), ms).to_json())?,
    }
    if let Some(path) = &a.svg {
        std::fs::write(path, svg::render(&sol, pair.as_ref(), src)?)?;
    }
    if a.verify {
        // Geometric slack scales with the instance.
        let b = sol.bounds;
        let scale = [b.min.x, b.min.y, b.max.x, b.max.y].iter().fold(1.0f64, |m, v| m.max(v.abs()));
        let tol = a.tolerance.max(1e-12) * scale;
        let bad = match &pair {
            Some(d) => violations(src, problem, &d.d1, &d.d2, tol)?,
            None => violations(src, problem, &sol.s1, &sol.s2, tol)?,
        };
        if bad.is_empty() {
            writeln!(err, "verify: PASS")?;
        } else {
            writeln!(err, "verify: FAIL ({} of {} segments, first at index {})", bad.len(), sol.n, bad[0])?;
            return Ok(EXIT_INFEASIBLE);
        }
    }
    Ok(EXIT_OK)
}

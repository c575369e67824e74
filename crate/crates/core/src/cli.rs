//! Command-line front end. Exit status: 0 success, 1 verification mismatch,
//! 2 usage error.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use crate::closed_form::{formula, formula_min};
use crate::error::Error;
use crate::exact::ExactScalar;
use crate::family::FamilyTag;
use crate::matrix::{build_bordered, build_dense, MIN_BORDERED_N};
use crate::oracle::{det_banded, det_bareiss, det_cofactor, det_float_banded, det_float_dense, COFACTOR_LIMIT};
use crate::verify::{
    default_a_samples, default_samples, emit_csv, emit_float_csv, emit_plot_data, lemma_skips, mismatches,
    verify_lemmas, verify_range, DetReport, Oracle, ParamSample, VerifyConfig, THREADS_ENV,
};
use crate::ExactFamily;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Dense Bareiss is cubic; the benchmark stops timing it past this size.
const BENCH_BAREISS_LIMIT: usize = 512;

const FAMILY_HELP: &str = "\
Family minima (n): B >= 5, C >= 1, K >= 5, L >= 6, G >= 4, T >= 6, P >= 4.
B carries a at (1,n-1) and (2,n) and b at (1,n); G, T and P carry a at (1,n).
The banded method needs n >= 6; cofactor expansion is limited to n <= 10.
Rationals are written p or p/q, e.g. -3 or 7/5.";

#[derive(Parser, Debug)]
#[command(name = "banddet", version, about = "Exact determinants of corner-perturbed banded Toeplitz matrices", after_help = FAMILY_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Determinant of the n x n matrix with corners a, b.
    #[command(after_help = FAMILY_HELP)]
    Det {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        a: ExactScalar,
        #[arg(long, allow_hyphen_values = true)]
        b: ExactScalar,
        /// Defaults to closed for n >= 5, bareiss otherwise.
        #[arg(long, value_enum)]
        method: Option<Method>,
        /// Print the elimination trace.
        #[arg(short, long)]
        verbose: bool,
    },
    /// Compare the closed form with oracles over a range of n.
    #[command(after_help = FAMILY_HELP)]
    Verify {
        #[arg(long, default_value = "b")]
        family: FamilyTag,
        /// Omit a (and b) to sweep the default parameter set.
        #[arg(long, allow_hyphen_values = true)]
        a: Option<ExactScalar>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<ExactScalar>,
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_delimiter = ',', default_value = "banded")]
        oracle: Vec<Oracle>,
        /// Also run the float path and report its error.
        #[arg(long)]
        float: bool,
        #[arg(long, env = THREADS_ENV)]
        threads: Option<usize>,
        /// CSV report destination.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Float error table destination (implies --float).
        #[arg(long)]
        float_out: Option<PathBuf>,
    },
    /// Check the lemma families K, L, G, T, P against Bareiss.
    #[command(after_help = FAMILY_HELP)]
    Lemmas {
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        /// Values of a for G, T and P (default 0,1,-2,7/3).
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        a: Vec<ExactScalar>,
        #[arg(long, env = THREADS_ENV)]
        threads: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Time each method at geometrically spaced n.
    Bench {
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "closed,banded,float")]
        methods: Vec<Method>,
    },
    /// Determinant table for one corner setting, as CSV or plot data.
    Table {
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long, allow_hyphen_values = true)]
        a: ExactScalar,
        #[arg(long, allow_hyphen_values = true)]
        b: ExactScalar,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
        /// Destination file (default stdout).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Closed,
    Banded,
    Bareiss,
    Cofactor,
    Float,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Plot,
}

enum Failure {
    Usage(String),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::FormulaInconsistency { .. } => Failure::Mismatch(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type CmdResult = Result<i32, Failure>;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    let result = match cli.command {
        Command::Det { n, a, b, method, verbose } => cmd_det(n, a, b, method, verbose, out),
        Command::Verify { family, a, b, n_min, n_max, oracle, float, threads, out: path, float_out } => {
            cmd_verify(VerifyArgs { family, a, b, n_min, n_max, oracle, float, threads, path, float_out }, out)
        }
        Command::Lemmas { n_min, n_max, a, threads, out: path } => cmd_lemmas(n_min, n_max, a, threads, path, out),
        Command::Bench { n_max, methods } => cmd_bench(n_max, &methods, out),
        Command::Table { n_min, n_max, a, b, format, out: path } => cmd_table(n_min, n_max, a, b, format, path, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Mismatch(msg)) => {
            let _ = writeln!(out, "MISMATCH: {msg}");
            EXIT_MISMATCH
        }
    }
}

fn io(e: std::io::Error) -> Failure {
    Failure::Usage(e.to_string())
}

fn cmd_det(n: usize, a: ExactScalar, b: ExactScalar, method: Option<Method>, verbose: bool, out: &mut dyn Write) -> CmdResult {
    let family = ExactFamily::B { a, b };
    let method = method.unwrap_or(if n >= 5 { Method::Closed } else { Method::Bareiss });
    let mut trace = None;
    let text = match method {
        Method::Closed => formula(&family, n)?.to_string(),
        Method::Banded => {
            let (v, t) = det_banded(&build_bordered(&family, n)?)?;
            trace = Some(t);
            v.to_string()
        }
        Method::Bareiss => {
            let (v, t) = det_bareiss(&build_dense(&family, n)?);
            trace = Some(t);
            v.to_string()
        }
        Method::Cofactor => det_cofactor(&build_dense(&family, n)?)?.to_string(),
        Method::Float => {
            let exact = if n >= 5 { formula(&family, n)? } else { det_bareiss(&build_dense(&family, n)?).0 };
            let check = if n >= MIN_BORDERED_N {
                det_float_banded(&build_bordered(&family, n)?, &exact)?
            } else {
                det_float_dense(&build_dense(&family, n)?, &exact)?
            };
            if verbose {
                writeln!(out, "# exact {exact}, abs error {:e}", check.abs_error).map_err(io)?;
            }
            check.value.to_string()
        }
    };
    writeln!(out, "{text}").map_err(io)?;
    if let (true, Some(t)) = (verbose, trace) {
        write!(out, "{}", t.render()).map_err(io)?;
    }
    Ok(EXIT_OK)
}

struct VerifyArgs {
    family: FamilyTag,
    a: Option<ExactScalar>,
    b: Option<ExactScalar>,
    n_min: usize,
    n_max: usize,
    oracle: Vec<Oracle>,
    float: bool,
    threads: Option<usize>,
    path: Option<PathBuf>,
    float_out: Option<PathBuf>,
}

fn samples_for(family: FamilyTag, a: Option<ExactScalar>, b: Option<ExactScalar>) -> Result<Vec<ParamSample>, Failure> {
    let usage = |m: String| Err(Failure::Usage(m));
    match (family.takes_a(), family.takes_b(), a, b) {
        (false, _, None, None) => Ok(vec![ParamSample::none()]),
        (false, _, _, _) => usage(format!("family {family} takes no parameters")),
        (true, false, _, Some(_)) => usage(format!("family {family} takes no b")),
        (true, false, Some(a), None) => Ok(vec![ParamSample { a: Some(a), b: None }]),
        (true, false, None, None) => {
            Ok(default_a_samples().into_iter().map(|a| ParamSample { a: Some(a), b: None }).collect())
        }
        (true, true, Some(a), Some(b)) => Ok(vec![ParamSample::ab(a, b)]),
        (true, true, None, None) => Ok(default_samples()),
        (true, true, _, _) => usage("give both --a and --b, or neither for the default set".into()),
    }
}

fn create(path: &PathBuf) -> Result<BufWriter<File>, Failure> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn summarize(reports: &[DetReport], out: &mut dyn Write) -> CmdResult {
    let bad = mismatches(reports);
    if bad.is_empty() {
        writeln!(out, "OK {}", reports.len()).map_err(io)?;
        Ok(EXIT_OK)
    } else {
        let shown: Vec<String> = bad.iter().take(20).map(ToString::to_string).collect();
        let more = if bad.len() > 20 { format!(" (+{} more)", bad.len() - 20) } else { String::new() };
        writeln!(out, "MISMATCH at n={}{more}", shown.join(",")).map_err(io)?;
        Ok(EXIT_MISMATCH)
    }
}

fn cmd_verify(args: VerifyArgs, out: &mut dyn Write) -> CmdResult {
    let mut cfg = VerifyConfig::new(args.family, args.n_min, args.n_max);
    cfg.samples = samples_for(args.family, args.a, args.b)?;
    cfg.oracles = args.oracle;
    cfg.float = args.float || args.float_out.is_some();
    if let Some(t) = args.threads {
        cfg.threads = t;
    }
    let reports = verify_range(&cfg)?;
    if let Some(path) = &args.path {
        emit_csv(&reports, create(path)?)?;
    }
    if let Some(path) = &args.float_out {
        emit_float_csv(&reports, create(path)?)?;
    }
    if cfg.float {
        let worst = reports.iter().filter_map(|r| r.float.map(|f| f.abs_error)).fold(0.0, f64::max);
        let off = reports
            .iter()
            .filter(|r| r.formula_value.is_integer())
            .filter(|r| r.float.is_some_and(|f| !f.rounds_to(&r.formula_value)))
            .count();
        writeln!(out, "float max_abs_error={worst:e} rounding_mismatches={off}").map_err(io)?;
    }
    summarize(&reports, out)
}

fn cmd_lemmas(
    n_min: usize,
    n_max: usize,
    a: Vec<ExactScalar>,
    threads: Option<usize>,
    path: Option<PathBuf>,
    out: &mut dyn Write,
) -> CmdResult {
    if n_min > n_max {
        return Err(Failure::Usage(format!("empty range {n_min}..{n_max}")));
    }
    let a = if a.is_empty() { default_a_samples() } else { a };
    let threads = threads.unwrap_or_else(crate::verify::default_threads);
    let reports = verify_lemmas(n_min, n_max, &a, threads)?;
    for (tag, min) in lemma_skips(n_min) {
        let upto = (min - 1).min(n_max);
        writeln!(out, "{tag}: skipped n={n_min}..{upto} (defined for n >= {min})").map_err(io)?;
    }
    let mut checked = 0;
    for tag in FamilyTag::LEMMAS {
        let mine: Vec<&DetReport> = reports.iter().filter(|r| r.family.tag() == tag).collect();
        if mine.is_empty() {
            continue;
        }
        checked += 1;
        let bad = mine.iter().filter(|r| !r.agree).count();
        let status = if bad == 0 { "OK".to_string() } else { format!("MISMATCH {bad}") };
        writeln!(out, "{tag}: {status} {}", mine.len()).map_err(io)?;
    }
    if let Some(path) = &path {
        emit_csv(&reports, create(path)?)?;
    }
    let bad = mismatches(&reports);
    if bad.is_empty() {
        writeln!(out, "OK {}, {checked} families checked", reports.len()).map_err(io)?;
        Ok(EXIT_OK)
    } else {
        let shown: Vec<String> = bad.iter().map(ToString::to_string).collect();
        writeln!(out, "MISMATCH at n={}", shown.join(",")).map_err(io)?;
        Ok(EXIT_MISMATCH)
    }
}

/// 6, 12, 24, ... below `n_max`, then `n_max`.
fn bench_sizes(n_max: usize) -> Vec<usize> {
    let mut sizes: Vec<usize> = std::iter::successors(Some(MIN_BORDERED_N), |&n| Some(n * 2)).take_while(|&n| n < n_max).collect();
    sizes.push(n_max);
    sizes
}

fn time_mean(mut f: impl FnMut() -> Result<(), Error>) -> Result<f64, Error> {
    let start = Instant::now();
    let mut reps = 0u32;
    while reps == 0 || (start.elapsed().as_secs_f64() < 0.02 && reps < 10_000) {
        f()?;
        reps += 1;
    }
    Ok(start.elapsed().as_secs_f64() / reps as f64)
}

fn cmd_bench(n_max: usize, methods: &[Method], out: &mut dyn Write) -> CmdResult {
    if n_max < MIN_BORDERED_N {
        return Err(Failure::Usage(format!("--n-max must be at least {MIN_BORDERED_N}")));
    }
    let family = ExactFamily::theorem_a();
    let names: Vec<String> = methods.iter().map(|m| format!("{m:?}").to_lowercase()).collect();
    write!(out, "{:>8}", "n").map_err(io)?;
    for name in &names {
        write!(out, " {name:>12}").map_err(io)?;
    }
    writeln!(out).map_err(io)?;
    let mut refusals = Vec::new();
    for n in bench_sizes(n_max) {
        write!(out, "{n:>8}").map_err(io)?;
        for &m in methods {
            let cell = match m {
                Method::Cofactor if n > COFACTOR_LIMIT => None,
                Method::Bareiss if n > BENCH_BAREISS_LIMIT => None,
                Method::Closed => Some(time_mean(|| formula(&family, n).map(drop))?),
                Method::Banded => Some(time_mean(|| det_banded(&build_bordered(&family, n)?).map(drop))?),
                Method::Bareiss => Some(time_mean(|| build_dense(&family, n).map(|m| drop(det_bareiss(&m))))?),
                Method::Cofactor => Some(time_mean(|| det_cofactor(&build_dense(&family, n)?).map(drop))?),
                Method::Float => {
                    let exact = formula(&family, n)?;
                    let m = build_bordered(&family, n)?;
                    Some(time_mean(|| det_float_banded(&m, &exact).map(drop))?)
                }
            };
            match cell {
                Some(t) => write!(out, " {t:>12.3e}").map_err(io)?,
                None => {
                    write!(out, " {:>12}", "refused").map_err(io)?;
                    refusals.push(m);
                }
            }
        }
        writeln!(out).map_err(io)?;
    }
    if refusals.contains(&Method::Cofactor) {
        writeln!(out, "cofactor: refused above n = {COFACTOR_LIMIT} (factorial cost; use bareiss)").map_err(io)?;
    }
    if refusals.contains(&Method::Bareiss) {
        writeln!(out, "bareiss: refused above n = {BENCH_BAREISS_LIMIT} (cubic cost; use banded)").map_err(io)?;
    }
    Ok(EXIT_OK)
}

fn cmd_table(
    n_min: usize,
    n_max: usize,
    a: ExactScalar,
    b: ExactScalar,
    format: TableFormat,
    path: Option<PathBuf>,
    out: &mut dyn Write,
) -> CmdResult {
    if n_min > n_max {
        return Err(Failure::Usage(format!("empty range {n_min}..{n_max}")));
    }
    let min = formula_min(FamilyTag::B);
    if n_min < min {
        return Err(Failure::Usage(format!("--n-min must be at least {min}")));
    }
    let mut cfg = VerifyConfig::new(FamilyTag::B, n_min, n_max);
    cfg.samples = vec![ParamSample::ab(a, b)];
    cfg.oracles = vec![Oracle::Banded];
    let reports = verify_range(&cfg)?;
    let write = |w: &mut dyn Write| match format {
        TableFormat::Csv => emit_csv(&reports, w),
        TableFormat::Plot => emit_plot_data(&reports, w),
    };
    match &path {
        Some(p) => write(&mut create(p)?)?,
        None => write(out)?,
    }
    Ok(if mismatches(&reports).is_empty() { EXIT_OK } else { EXIT_MISMATCH })
}

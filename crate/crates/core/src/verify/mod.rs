//! Batch cross-verification of closed forms against the oracles.

mod csv;
mod plot;

pub use self::csv::{emit_csv, emit_float_csv, read_csv, write_csv, CsvRecord, CSV_HEADER};
pub use self::plot::{emit_plot_data, write_plot_data};

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;

use crate::closed_form::{formula, formula_min};
use crate::error::{Error, Result};
use crate::exact::ExactScalar;
use crate::family::{FamilyTag, MatrixFamily};
use crate::matrix::{build_bordered, build_dense, MIN_BORDERED_N};
use crate::oracle::{det_banded, det_bareiss, det_cofactor, det_float_banded, det_float_dense, FloatCheck, COFACTOR_LIMIT};
use crate::ExactFamily;

/// Environment variable holding the default parallelism width.
pub const THREADS_ENV: &str = "BANDDET_THREADS";

/// Dense float LU is only used below this size; larger runs use band storage.
const DENSE_FLOAT_LIMIT: usize = MIN_BORDERED_N;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Oracle {
    Cofactor,
    Bareiss,
    Banded,
}

impl Oracle {
    pub fn name(self) -> &'static str {
        match self {
            Oracle::Cofactor => "cofactor",
            Oracle::Bareiss => "bareiss",
            Oracle::Banded => "banded",
        }
    }
}

impl fmt::Display for Oracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Oracle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "cofactor" => Ok(Oracle::Cofactor),
            "bareiss" => Ok(Oracle::Bareiss),
            "banded" => Ok(Oracle::Banded),
            _ => Err(Error::Config(format!("unknown oracle `{s}` (expected cofactor, bareiss or banded)"))),
        }
    }
}

/// Result of one oracle on one matrix.
#[derive(Clone, Debug, PartialEq)]
pub enum Outcome {
    Value(ExactScalar),
    Skipped(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct OracleRun {
    pub oracle: Oracle,
    /// Method actually used; the banded oracle runs Bareiss below its size minimum.
    pub method: Oracle,
    pub outcome: Outcome,
    pub seconds: f64,
}

impl OracleRun {
    pub fn value(&self) -> Option<&ExactScalar> {
        match &self.outcome {
            Outcome::Value(v) => Some(v),
            Outcome::Skipped(_) => None,
        }
    }
}

/// One (family, n) comparison.
#[derive(Clone, Debug, PartialEq)]
pub struct DetReport {
    pub family: ExactFamily,
    pub n: usize,
    pub formula_value: ExactScalar,
    pub formula_seconds: f64,
    /// One entry per configured oracle, in configuration order.
    pub oracle_runs: Vec<OracleRun>,
    pub float: Option<FloatCheck>,
    /// True iff the formula and every oracle that ran produced the same value.
    pub agree: bool,
}

impl DetReport {
    /// First exact oracle value, if any oracle ran.
    pub fn oracle_value(&self) -> Option<&ExactScalar> {
        self.oracle_runs.iter().find_map(OracleRun::value)
    }
}

/// Corner parameters for one sweep.
#[derive(Clone, Debug, PartialEq)]
pub struct ParamSample {
    pub a: Option<ExactScalar>,
    pub b: Option<ExactScalar>,
}

impl ParamSample {
    pub fn ab(a: ExactScalar, b: ExactScalar) -> Self {
        ParamSample { a: Some(a), b: Some(b) }
    }

    pub fn none() -> Self {
        ParamSample { a: None, b: None }
    }
}

/// `(0,1)`, `(1,0)`, `(0,0)`, `(2,-3)`, `(1/2,7/5)`.
pub fn default_samples() -> Vec<ParamSample> {
    [("0", "1"), ("1", "0"), ("0", "0"), ("2", "-3"), ("1/2", "7/5")]
        .iter()
        .map(|(a, b)| ParamSample::ab(a.parse().unwrap(), b.parse().unwrap()))
        .collect()
}

/// `0`, `1`, `-2`, `7/3`.
pub fn default_a_samples() -> Vec<ExactScalar> {
    ["0", "1", "-2", "7/3"].iter().map(|s| s.parse().unwrap()).collect()
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub family: FamilyTag,
    pub n_min: usize,
    pub n_max: usize,
    pub samples: Vec<ParamSample>,
    pub oracles: Vec<Oracle>,
    /// Also run the float path and record its error.
    pub float: bool,
    pub threads: usize,
}

impl VerifyConfig {
    pub fn new(family: FamilyTag, n_min: usize, n_max: usize) -> Self {
        VerifyConfig {
            family,
            n_min,
            n_max,
            samples: vec![ParamSample::none()],
            oracles: vec![Oracle::Bareiss],
            float: false,
            threads: default_threads(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let min = formula_min(self.family);
        if self.n_min < min {
            return Err(Error::Config(format!("family {} needs n_min >= {min}", self.family)));
        }
        if self.n_min > self.n_max {
            return Err(Error::Config(format!("empty range {}..{}", self.n_min, self.n_max)));
        }
        if self.oracles.is_empty() && !self.float {
            return Err(Error::Config("select at least one oracle or the float path".into()));
        }
        if self.samples.is_empty() {
            return Err(Error::Config("no parameter samples".into()));
        }
        for s in &self.samples {
            self.family_for(s)?;
        }
        Ok(())
    }

    fn family_for(&self, s: &ParamSample) -> Result<ExactFamily> {
        MatrixFamily::from_parts(self.family, s.a.clone(), s.b.clone())
    }
}

/// Width from [`THREADS_ENV`], else the number of available cores.
pub fn default_threads() -> usize {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&t: &usize| t > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |p| p.get()))
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = Instant::now();
    let v = f();
    (v, start.elapsed().as_secs_f64())
}

fn run_oracle(family: &ExactFamily, n: usize, oracle: Oracle) -> Result<OracleRun> {
    let skipped = |reason: String| OracleRun { oracle, method: oracle, outcome: Outcome::Skipped(reason), seconds: 0.0 };
    let (method, result, seconds) = match oracle {
        Oracle::Cofactor if n > COFACTOR_LIMIT => {
            return Ok(skipped(format!("n > {COFACTOR_LIMIT}")));
        }
        Oracle::Cofactor => {
            let m = build_dense(family, n)?;
            let (v, t) = timed(|| det_cofactor(&m));
            (oracle, v?, t)
        }
        Oracle::Banded if n >= MIN_BORDERED_N => {
            let m = build_bordered(family, n)?;
            let (v, t) = timed(|| det_banded(&m));
            (oracle, v?.0, t)
        }
        Oracle::Bareiss | Oracle::Banded => {
            let m = build_dense(family, n)?;
            let (v, t) = timed(|| det_bareiss(&m).0);
            (Oracle::Bareiss, v, t)
        }
    };
    Ok(OracleRun { oracle, method, outcome: Outcome::Value(result), seconds })
}

fn run_float(family: &ExactFamily, n: usize, exact: &ExactScalar) -> Result<FloatCheck> {
    if n < DENSE_FLOAT_LIMIT {
        det_float_dense(&build_dense(family, n)?, exact)
    } else {
        det_float_banded(&build_bordered(family, n)?, exact)
    }
}

/// Compares the closed form with the selected oracles for one matrix.
pub fn check_one(family: &ExactFamily, n: usize, oracles: &[Oracle], float: bool) -> Result<DetReport> {
    let (formula_value, formula_seconds) = timed(|| formula(family, n));
    let formula_value = formula_value?;
    let oracle_runs = oracles.iter().map(|&o| run_oracle(family, n, o)).collect::<Result<Vec<_>>>()?;
    let agree = oracle_runs.iter().filter_map(OracleRun::value).all(|v| *v == formula_value);
    let float = if float {
        let exact = oracle_runs.iter().find_map(OracleRun::value).unwrap_or(&formula_value);
        Some(run_float(family, n, exact)?)
    } else {
        None
    };
    Ok(DetReport { family: family.clone(), n, formula_value, formula_seconds, oracle_runs, float, agree })
}

fn run_tasks(tasks: Vec<(ExactFamily, usize)>, oracles: &[Oracle], float: bool, threads: usize) -> Result<Vec<DetReport>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .map_err(|e| Error::Config(format!("thread pool: {e}")))?;
    // Indexed parallel collect keeps task order.
    pool.install(|| {
        tasks
            .par_iter()
            .map(|(family, n)| check_one(family, *n, oracles, float))
            .collect()
    })
}

/// One report per `(n, sample)`, ordered by `n` then sample index.
pub fn verify_range(cfg: &VerifyConfig) -> Result<Vec<DetReport>> {
    cfg.validate()?;
    let families = cfg.samples.iter().map(|s| cfg.family_for(s)).collect::<Result<Vec<_>>>()?;
    let tasks = (cfg.n_min..=cfg.n_max)
        .flat_map(|n| families.iter().map(move |f| (f.clone(), n)))
        .collect();
    run_tasks(tasks, &cfg.oracles, cfg.float, cfg.threads)
}

/// Checks every lemma family against Bareiss on `n_min..=n_max`, skipping
/// sizes below each family's minimum. Families taking `a` are run once per
/// sample. Ordered by family (K, L, G, T, P), then `n`, then sample.
pub fn verify_lemmas(n_min: usize, n_max: usize, a_samples: &[ExactScalar], threads: usize) -> Result<Vec<DetReport>> {
    if a_samples.is_empty() {
        return Err(Error::Config("no a samples".into()));
    }
    let mut tasks = Vec::new();
    for tag in FamilyTag::LEMMAS {
        let families: Vec<ExactFamily> = if tag.takes_a() {
            a_samples
                .iter()
                .map(|a| MatrixFamily::from_parts(tag, Some(a.clone()), None))
                .collect::<Result<_>>()?
        } else {
            vec![MatrixFamily::from_parts(tag, None, None)?]
        };
        for n in n_min.max(formula_min(tag))..=n_max {
            tasks.extend(families.iter().map(|f| (f.clone(), n)));
        }
    }
    run_tasks(tasks, &[Oracle::Bareiss], false, threads)
}

/// Lemma families whose minimum lies above `n_min`, with that minimum.
pub fn lemma_skips(n_min: usize) -> Vec<(FamilyTag, usize)> {
    FamilyTag::LEMMAS
        .into_iter()
        .map(|t| (t, formula_min(t)))
        .filter(|&(_, min)| n_min < min)
        .collect()
}

/// Sizes whose report disagrees.
pub fn mismatches(reports: &[DetReport]) -> Vec<usize> {
    reports.iter().filter(|r| !r.agree).map(|r| r.n).collect()
}

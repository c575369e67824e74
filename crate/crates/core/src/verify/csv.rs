use std::fs::File;
use std::io::{BufWriter, Read, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::exact::ExactScalar;
use crate::family::FamilyTag;
use crate::verify::{DetReport, Oracle};

pub const CSV_HEADER: [&str; 10] =
    ["family", "n", "a", "b", "formula", "oracle", "method", "agree", "formula_seconds", "oracle_seconds"];

const FLOAT_HEADER: [&str; 7] = ["family", "n", "a", "b", "exact", "float", "abs_error"];

/// `oracle` column text for an oracle that declined to run.
const SKIPPED: &str = "skipped";

/// One CSV line: a report paired with one of its oracle runs.
#[derive(Clone, Debug, PartialEq)]
pub struct CsvRecord {
    pub family: FamilyTag,
    pub n: usize,
    pub a: Option<ExactScalar>,
    pub b: Option<ExactScalar>,
    pub formula: ExactScalar,
    /// `None` when the oracle was skipped.
    pub oracle: Option<ExactScalar>,
    pub method: Oracle,
    pub agree: bool,
    pub formula_seconds: f64,
    pub oracle_seconds: f64,
}

impl CsvRecord {
    pub fn from_reports(reports: &[DetReport]) -> Vec<CsvRecord> {
        reports
            .iter()
            .flat_map(|r| {
                r.oracle_runs.iter().map(move |run| CsvRecord {
                    family: r.family.tag(),
                    n: r.n,
                    a: r.family.a().cloned(),
                    b: r.family.b().cloned(),
                    formula: r.formula_value.clone(),
                    oracle: run.value().cloned(),
                    method: run.method,
                    agree: r.agree,
                    formula_seconds: r.formula_seconds,
                    oracle_seconds: run.seconds,
                })
            })
            .collect()
    }

    fn fields(&self) -> [String; 10] {
        let opt = |v: &Option<ExactScalar>| v.as_ref().map(ToString::to_string).unwrap_or_default();
        [
            self.family.to_string(),
            self.n.to_string(),
            opt(&self.a),
            opt(&self.b),
            self.formula.to_string(),
            self.oracle.as_ref().map_or_else(|| SKIPPED.to_string(), ToString::to_string),
            self.method.to_string(),
            self.agree.to_string(),
            self.formula_seconds.to_string(),
            self.oracle_seconds.to_string(),
        ]
    }

    fn parse(rec: &::csv::StringRecord) -> Result<CsvRecord> {
        if rec.len() != CSV_HEADER.len() {
            return Err(Error::Parse(format!("expected {} fields, got {}", CSV_HEADER.len(), rec.len())));
        }
        let bad = |what: &str, v: &str| Error::Parse(format!("{what}: `{v}`"));
        let opt = |v: &str| if v.is_empty() { Ok(None) } else { v.parse().map(Some) };
        Ok(CsvRecord {
            family: rec[0].parse()?,
            n: rec[1].parse().map_err(|_| bad("n", &rec[1]))?,
            a: opt(&rec[2])?,
            b: opt(&rec[3])?,
            formula: rec[4].parse()?,
            oracle: if &rec[5] == SKIPPED { None } else { Some(rec[5].parse()?) },
            method: rec[6].parse()?,
            agree: rec[7].parse().map_err(|_| bad("agree", &rec[7]))?,
            formula_seconds: rec[8].parse().map_err(|_| bad("formula_seconds", &rec[8]))?,
            oracle_seconds: rec[9].parse().map_err(|_| bad("oracle_seconds", &rec[9]))?,
        })
    }
}

fn csv_err(e: ::csv::Error) -> Error {
    Error::Io { path: "<csv>".into(), message: e.to_string() }
}

fn io_err(path: &Path, e: impl std::fmt::Display) -> Error {
    Error::Io { path: path.display().to_string(), message: e.to_string() }
}

/// Writes the header and one line per (report, oracle run).
pub fn emit_csv<W: Write>(reports: &[DetReport], out: W) -> Result<()> {
    if reports.is_empty() {
        return Err(Error::Config("no reports to write".into()));
    }
    let mut w = ::csv::WriterBuilder::new().terminator(::csv::Terminator::Any(b'\n')).from_writer(out);
    w.write_record(CSV_HEADER).map_err(csv_err)?;
    for rec in CsvRecord::from_reports(reports) {
        w.write_record(rec.fields()).map_err(csv_err)?;
    }
    w.flush().map_err(|e| Error::Io { path: "<csv>".into(), message: e.to_string() })
}

pub fn write_csv(reports: &[DetReport], path: &Path) -> Result<()> {
    if reports.is_empty() {
        return Err(Error::Config("no reports to write".into()));
    }
    let file = File::create(path).map_err(|e| io_err(path, e))?;
    emit_csv(reports, BufWriter::new(file)).map_err(|e| match e {
        Error::Io { message, .. } => io_err(path, message),
        other => other,
    })
}

pub fn read_csv<R: Read>(input: R) -> Result<Vec<CsvRecord>> {
    let mut r = ::csv::ReaderBuilder::new().has_headers(true).from_reader(input);
    let header = r.headers().map_err(csv_err)?;
    if header.iter().ne(CSV_HEADER) {
        return Err(Error::Parse(format!("unexpected header {:?}", header.iter().collect::<Vec<_>>())));
    }
    r.records().map(|rec| CsvRecord::parse(&rec.map_err(csv_err)?)).collect()
}

/// Float determinant next to the exact value, one line per report that ran
/// the float path.
pub fn emit_float_csv<W: Write>(reports: &[DetReport], out: W) -> Result<()> {
    let mut w = ::csv::WriterBuilder::new().terminator(::csv::Terminator::Any(b'\n')).from_writer(out);
    w.write_record(FLOAT_HEADER).map_err(csv_err)?;
    let opt = |v: Option<&ExactScalar>| v.map(ToString::to_string).unwrap_or_default();
    for r in reports {
        let Some(f) = &r.float else { continue };
        let exact = r.oracle_value().unwrap_or(&r.formula_value);
        w.write_record([
            r.family.tag().to_string(),
            r.n.to_string(),
            opt(r.family.a()),
            opt(r.family.b()),
            exact.to_string(),
            f.value.to_string(),
            f.abs_error.to_string(),
        ])
        .map_err(csv_err)?;
    }
    w.flush().map_err(|e| Error::Io { path: "<csv>".into(), message: e.to_string() })
}

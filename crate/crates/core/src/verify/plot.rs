use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::verify::DetReport;

fn check_series(reports: &[DetReport]) -> Result<()> {
    let Some(first) = reports.first() else {
        return Err(Error::Config("no reports to plot".into()));
    };
    if let Some(other) = reports.iter().find(|r| r.family != first.family) {
        return Err(Error::Config(format!(
            "plot data needs a single family and parameter sample, got {} and {}",
            first.family, other.family
        )));
    }
    Ok(())
}

/// Two whitespace-separated columns, `n` and the determinant. Integer values
/// are written exactly, others as decimals.
pub fn emit_plot_data<W: Write>(reports: &[DetReport], mut out: W) -> Result<()> {
    check_series(reports)?;
    let io = |e: std::io::Error| Error::Io { path: "<plot>".into(), message: e.to_string() };
    for r in reports {
        let v = r.oracle_value().unwrap_or(&r.formula_value);
        if v.is_integer() {
            writeln!(out, "{} {}", r.n, v).map_err(io)?;
        } else {
            writeln!(out, "{} {}", r.n, v.to_f64().unwrap_or(f64::NAN)).map_err(io)?;
        }
    }
    out.flush().map_err(io)
}

/// Validates before creating the file, so a rejected series writes nothing.
pub fn write_plot_data(reports: &[DetReport], path: &Path) -> Result<()> {
    check_series(reports)?;
    let file = File::create(path).map_err(|e| Error::Io { path: path.display().to_string(), message: e.to_string() })?;
    emit_plot_data(reports, BufWriter::new(file)).map_err(|e| match e {
        Error::Io { message, .. } => Error::Io { path: path.display().to_string(), message },
        other => other,
    })
}

use thiserror::Error;

use crate::family::FamilyTag;

/// Errors raised by builders, closed forms, oracles and the verifier.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("cannot parse `{0}` as a rational (expected `p` or `p/q`)")]
    Parse(String),

    #[error("family {family} needs n >= {min}, got n = {n}")]
    DimensionTooSmall { family: FamilyTag, n: usize, min: usize },

    #[error("index ({i}, {j}) out of range for an {n}x{n} matrix (indices are 1-based)")]
    IndexOutOfRange { n: usize, i: usize, j: usize },

    #[error("{what} is defined for n >= {min}, got n = {n}")]
    FormulaRange { what: &'static str, n: i64, min: i64 },

    #[error("case table and sequence identity disagree for {what} at n = {n}: {table} vs {identity}")]
    FormulaInconsistency { what: &'static str, n: usize, table: String, identity: String },

    #[error("bordered storage needs n >= {min}, got n = {n}; use the dense path")]
    BorderedTooSmall { n: usize, min: usize },

    #[error("entry ({i}, {j}) = {value} lies outside the band and border of the bordered storage")]
    OutsideStorage { i: usize, j: usize, value: String },

    #[error("elimination step {step}: fill at column {col} of row {row} escaped the reserved diagonals")]
    FillEscaped { step: usize, row: usize, col: usize },

    #[error("cofactor expansion refused for n = {n} (limit {limit}); use Bareiss")]
    CofactorTooLarge { n: usize, limit: usize },

    #[error("matrix entry is not representable as a finite float")]
    NotFloat,

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

//! Exact determinants of banded Toeplitz matrices with corner perturbations.
//!
//! The matrices have ones on the diagonals `j - i` in `{-2, -1, 0, 1}` and a
//! handful of parameters in the top-right corner. This crate evaluates their
//! determinants in closed form, recomputes them with independent oracles
//! (cofactor expansion, Bareiss elimination, a linear-time bordered-band
//! eliminator, floating LU) and cross-checks the two at scale.
//!
//! The core is generic over [`Scalar`]; the aliases below fix it to the exact
//! rational type or to `f64`.

pub mod closed_form;
pub mod error;
pub mod exact;
pub mod family;
pub mod matrix;
pub mod oracle;
pub mod scalar;
pub mod verify;

#[doc(hidden)]
pub mod cli;

pub use error::{Error, Result};
pub use exact::{sign_pow, ExactScalar};
pub use family::{entry, FamilyTag, MatrixFamily};
pub use matrix::{build_bordered, build_dense, BorderedBandMatrix, DenseMatrix};
pub use scalar::Scalar;

pub type ExactFamily = MatrixFamily<ExactScalar>;
pub type ExactDense = DenseMatrix<ExactScalar>;
pub type ExactBordered = BorderedBandMatrix<ExactScalar>;
pub type FloatDense = DenseMatrix<f64>;
pub type FloatBordered = BorderedBandMatrix<f64>;
/// Reference rational type backing the large values of [`ExactScalar`].
pub type BigRational = num_rational::BigRational;

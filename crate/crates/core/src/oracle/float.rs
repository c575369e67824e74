use num_traits::ToPrimitive;

use crate::error::Result;
use crate::exact::ExactScalar;
use crate::matrix::{BorderedBandMatrix, DenseMatrix};
use crate::oracle::{choose_pivot, det_banded};
use crate::scalar::Scalar;

/// LU determinant with row pivoting (largest magnitude for floats).
pub fn det_lu<S: Scalar>(m: &DenseMatrix<S>) -> S {
    let n = m.n();
    let mut a = m.clone();
    let mut det = S::one();
    for k in 0..n {
        let Some(p) = choose_pivot((k..n).map(|r| (r, &a[(r, k)]))) else {
            return S::zero();
        };
        if p != k {
            a.swap_rows(k, p);
            det = -det;
        }
        let pivot = a[(k, k)].clone();
        det = det * pivot.clone();
        for i in k + 1..n {
            if a[(i, k)].is_zero() {
                continue;
            }
            let factor = a[(i, k)].clone() / pivot.clone();
            for j in k + 1..n {
                let v = a[(i, j)].clone() - factor.clone() * a[(k, j)].clone();
                a[(i, j)] = v;
            }
            a[(i, k)] = S::zero();
        }
    }
    det
}

/// A floating-point determinant next to the exact value it should reproduce.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FloatCheck {
    pub value: f64,
    pub exact: f64,
    /// `|value - exact|`; infinite when `value` is not finite.
    pub abs_error: f64,
}

impl FloatCheck {
    pub fn new(value: f64, exact: &ExactScalar) -> Self {
        let exact = exact.to_f64().unwrap_or(f64::NAN);
        let abs_error = if value.is_finite() { (value - exact).abs() } else { f64::INFINITY };
        FloatCheck { value, exact, abs_error }
    }

    pub fn is_finite(&self) -> bool {
        self.value.is_finite()
    }

    /// For an integer-valued exact determinant: does the float round to it?
    pub fn rounds_to(&self, exact: &ExactScalar) -> bool {
        exact.is_integer() && self.is_finite() && exact.to_f64() == Some(self.value.round())
    }
}

/// Dense float LU of `m`, compared with `exact`.
pub fn det_float_dense(m: &DenseMatrix<ExactScalar>, exact: &ExactScalar) -> Result<FloatCheck> {
    let f = m.to_f64()?;
    Ok(FloatCheck::new(det_lu(&f), exact))
}

/// Bordered-band float elimination of `m`, compared with `exact`.
pub fn det_float_banded(m: &BorderedBandMatrix<ExactScalar>, exact: &ExactScalar) -> Result<FloatCheck> {
    let f = m.to_f64()?;
    let (value, _) = det_banded(&f)?;
    Ok(FloatCheck::new(value, exact))
}

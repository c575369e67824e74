use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::scalar::Scalar;

/// Largest dimension accepted by [`det_cofactor`].
pub const COFACTOR_LIMIT: usize = 10;

/// Determinant by recursive first-row Laplace expansion.
pub fn det_cofactor<S: Scalar>(m: &DenseMatrix<S>) -> Result<S> {
    let n = m.n();
    if n > COFACTOR_LIMIT {
        return Err(Error::CofactorTooLarge { n, limit: COFACTOR_LIMIT });
    }
    let cols: Vec<usize> = (0..n).collect();
    Ok(expand(m, 0, &cols))
}

// Determinant of the minor formed by rows `row..n` and the given columns.
fn expand<S: Scalar>(m: &DenseMatrix<S>, row: usize, cols: &[usize]) -> S {
    if cols.len() == 1 {
        return m[(row, cols[0])].clone();
    }
    let mut total = S::zero();
    let mut rest = Vec::with_capacity(cols.len() - 1);
    for (k, &c) in cols.iter().enumerate() {
        let x = &m[(row, c)];
        if x.is_zero() {
            continue;
        }
        rest.clear();
        rest.extend(cols.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, &c)| c));
        let term = x.clone() * expand(m, row + 1, &rest);
        if k % 2 == 0 {
            total = total + term;
        } else {
            total = total - term;
        }
    }
    total
}

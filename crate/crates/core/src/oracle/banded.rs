use crate::error::{Error, Result};
use crate::matrix::BorderedBandMatrix;
use crate::oracle::{choose_pivot, EliminationTrace};
use crate::scalar::Scalar;

/// Gaussian elimination confined to the band, its fill diagonals and the
/// border columns. O(n) scalar operations for fixed bandwidth.
///
/// Pivot candidates for column `k` are the rows `k ..= k + lower` (all
/// remaining rows once `k` is a border column). A swap moves at most
/// `lower` rows, so its fill lands in the reserved diagonals; a write that
/// would escape them is reported as [`Error::FillEscaped`].
pub fn det_banded<S: Scalar>(m: &BorderedBandMatrix<S>) -> Result<(S, EliminationTrace)> {
    let n = m.n();
    let (lower, reach) = (m.lower(), m.upper() + m.fill());
    let first_border = m.first_border_col();
    let mut a = m.clone();
    let mut trace = EliminationTrace::new();
    let zero = S::zero();
    let mut det = S::one();
    let mut pivot_row: Vec<(usize, S)> = Vec::with_capacity(reach + 2);

    for k in 0..n {
        if k == n - 1 {
            det = det * a.get(k, k);
            break;
        }
        let last_row = if a.is_border_col(k) { n - 1 } else { (k + lower).min(n - 1) };
        let pivot = choose_pivot((k..=last_row).map(|r| (r, a.get_ref(r, k).unwrap_or(&zero))));
        let Some(p) = pivot else {
            trace.singular_at = Some(k);
            return Ok((S::zero(), trace));
        };
        if p != k {
            let cols = (k..(p + reach + 1).min(first_border)).chain(first_border.max(k)..n);
            for j in cols {
                let x = a.get(k, j);
                let y = a.get(p, j);
                a.set(k, j, y).map_err(|_| Error::FillEscaped { step: k, row: k, col: j })?;
                a.set(p, j, x).map_err(|_| Error::FillEscaped { step: k, row: p, col: j })?;
            }
        }
        trace.record(k, p);

        let pivot = a.get(k, k);
        det = det * pivot.clone();
        trace.observe_bits(pivot.size_bits());

        pivot_row.clear();
        let band_cols = (k + 1..=(k + reach).min(n - 1)).filter(|&j| j < first_border);
        for j in band_cols.chain(first_border.max(k + 1)..n) {
            if let Some(v) = a.get_ref(k, j).filter(|v| !v.is_zero()) {
                pivot_row.push((j, v.clone()));
            }
        }

        for i in k + 1..=last_row {
            let lead = a.get(i, k);
            if lead.is_zero() {
                continue;
            }
            let factor = lead / pivot.clone();
            for (j, pv) in &pivot_row {
                let j = *j;
                let v = a.get(i, j) - factor.clone() * pv.clone();
                trace.observe_bits(v.size_bits());
                a.set(i, j, v).map_err(|_| Error::FillEscaped { step: k, row: i, col: j })?;
            }
            let _ = a.set(i, k, S::zero());
        }
    }
    let det = if trace.sign < 0 { -det } else { det };
    Ok((det, trace))
}

//! Independent determinant evaluators.
//!
//! Cofactor expansion is the smallest-trust check, Bareiss elimination the
//! dense exact workhorse, and the bordered-band eliminator reaches large `n`
//! in linear time. The float path mirrors an ordinary LU determinant.

mod banded;
mod bareiss;
mod cofactor;
mod float;
mod trace;

pub use banded::det_banded;
pub use bareiss::det_bareiss;
pub use cofactor::{det_cofactor, COFACTOR_LIMIT};
pub use float::{det_float_banded, det_float_dense, det_lu, FloatCheck};
pub use trace::{EliminationTrace, PivotStep};

use crate::scalar::Scalar;

/// Picks the pivot among `candidates` (row, value): first nonzero for exact
/// scalars, largest magnitude otherwise. `None` when all are zero.
pub(crate) fn choose_pivot<'a, S: Scalar + 'a>(
    candidates: impl Iterator<Item = (usize, &'a S)>,
) -> Option<usize> {
    if S::EXACT {
        candidates.filter(|(_, v)| !v.is_zero()).map(|(r, _)| r).next()
    } else {
        let mut best: Option<(usize, S)> = None;
        for (r, v) in candidates {
            let m = v.abs();
            if m.is_zero() {
                continue;
            }
            if best.as_ref().is_none_or(|(_, b)| m > *b) {
                best = Some((r, m));
            }
        }
        best.map(|(r, _)| r)
    }
}

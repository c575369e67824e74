use crate::matrix::DenseMatrix;
use crate::oracle::{choose_pivot, EliminationTrace};
use crate::scalar::Scalar;

/// Fraction-free (Bareiss) elimination with row pivoting.
///
/// Every intermediate is a minor of the input, so integer input stays integer
/// and each division is exact. A column with no usable pivot ends the run
/// with determinant zero.
pub fn det_bareiss<S: Scalar>(m: &DenseMatrix<S>) -> (S, EliminationTrace) {
    let n = m.n();
    let mut a = m.clone();
    let mut trace = EliminationTrace::new();
    let mut prev = S::one();
    for k in 0..n.saturating_sub(1) {
        let pivot = choose_pivot((k..n).map(|r| (r, &a[(r, k)])));
        let Some(p) = pivot else {
            trace.singular_at = Some(k);
            return (S::zero(), trace);
        };
        a.swap_rows(k, p);
        trace.record(k, p);
        let pk = a[(k, k)].clone();
        for i in k + 1..n {
            let lead = a[(i, k)].clone();
            if lead.is_zero() {
                // Only a rescale by pk / prev; zeros stay zero.
                for j in k + 1..n {
                    if !a[(i, j)].is_zero() {
                        let v = pk.clone() * a[(i, j)].clone() / prev.clone();
                        trace.observe_bits(v.size_bits());
                        a[(i, j)] = v;
                    }
                }
                continue;
            }
            for j in k + 1..n {
                let v = (pk.clone() * a[(i, j)].clone() - lead.clone() * a[(k, j)].clone()) / prev.clone();
                trace.observe_bits(v.size_bits());
                a[(i, j)] = v;
            }
            a[(i, k)] = S::zero();
        }
        prev = pk;
    }
    let last = a[(n - 1, n - 1)].clone();
    let det = if trace.sign < 0 { -last } else { last };
    (det, trace)
}

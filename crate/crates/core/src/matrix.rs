//! Dense and bordered-band storage, and the builders that fill them.

use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::family::{entry_unchecked, MatrixFamily};
use crate::scalar::Scalar;

/// Square matrix, row-major, 0-based indexing.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix<S> {
    n: usize,
    data: Vec<S>,
}

impl<S: Scalar> DenseMatrix<S> {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        DenseMatrix { n, data }
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::Config("matrix rows must form a nonempty square".into()));
        }
        Ok(DenseMatrix { n, data: rows.into_iter().flatten().collect() })
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { S::one() } else { S::zero() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[S]> {
        self.data.chunks(self.n)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)].clone())
    }

    pub fn swap_rows(&mut self, r1: usize, r2: usize) {
        if r1 == r2 {
            return;
        }
        for j in 0..self.n {
            self.data.swap(r1 * self.n + j, r2 * self.n + j);
        }
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&S) -> U) -> DenseMatrix<U> {
        DenseMatrix { n: self.n, data: self.data.iter().map(f).collect() }
    }

    /// Converts every entry to `f64`; fails if one is not finite.
    pub fn to_f64(&self) -> Result<DenseMatrix<f64>> {
        let data = self
            .data
            .iter()
            .map(|x| x.to_f64().filter(|v| v.is_finite()).ok_or(Error::NotFloat))
            .collect::<Result<_>>()?;
        Ok(DenseMatrix { n: self.n, data })
    }
}

impl<S> Index<(usize, usize)> for DenseMatrix<S> {
    type Output = S;
    fn index(&self, (i, j): (usize, usize)) -> &S {
        &self.data[i * self.n + j]
    }
}

impl<S> IndexMut<(usize, usize)> for DenseMatrix<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        &mut self.data[i * self.n + j]
    }
}

/// Number of trailing dense columns in bordered storage.
pub const BORDER_COLS: usize = 2;

/// Smallest dimension for which the border columns stay clear of row 1's band.
pub const MIN_BORDERED_N: usize = 6;

/// Band storage with reserved fill diagonals plus dense trailing columns.
///
/// Row `i` keeps a window of columns `i - lower ..= i + upper + fill`; the
/// last [`BORDER_COLS`] columns are stored densely for every row and take
/// precedence over the window. `fill = lower`, which is the most a row swap
/// within the lower bandwidth can push a row's extent rightward.
#[derive(Clone, Debug, PartialEq)]
pub struct BorderedBandMatrix<S> {
    n: usize,
    lower: usize,
    upper: usize,
    fill: usize,
    band: Vec<S>,
    border: Vec<S>,
}

impl<S: Scalar> BorderedBandMatrix<S> {
    pub fn zeros(n: usize, lower: usize, upper: usize) -> Self {
        let fill = lower;
        let width = lower + upper + fill + 1;
        BorderedBandMatrix {
            n,
            lower,
            upper,
            fill,
            band: vec![S::zero(); n * width],
            border: vec![S::zero(); n * BORDER_COLS],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lower(&self) -> usize {
        self.lower
    }

    pub fn upper(&self) -> usize {
        self.upper
    }

    pub fn fill(&self) -> usize {
        self.fill
    }

    fn width(&self) -> usize {
        self.lower + self.upper + self.fill + 1
    }

    pub fn first_border_col(&self) -> usize {
        self.n - BORDER_COLS
    }

    pub fn is_border_col(&self, j: usize) -> bool {
        j >= self.first_border_col()
    }

    // Storage slot of (i, j), if it is stored at all.
    fn slot(&self, i: usize, j: usize) -> Option<Slot> {
        if self.is_border_col(j) {
            return Some(Slot::Border(i * BORDER_COLS + j - self.first_border_col()));
        }
        let offset = j + self.lower;
        if offset >= i && offset - i < self.width() {
            Some(Slot::Band(i * self.width() + offset - i))
        } else {
            None
        }
    }

    pub fn get(&self, i: usize, j: usize) -> S {
        match self.slot(i, j) {
            Some(Slot::Border(k)) => self.border[k].clone(),
            Some(Slot::Band(k)) => self.band[k].clone(),
            None => S::zero(),
        }
    }

    pub(crate) fn get_ref(&self, i: usize, j: usize) -> Option<&S> {
        match self.slot(i, j) {
            Some(Slot::Border(k)) => Some(&self.border[k]),
            Some(Slot::Band(k)) => Some(&self.band[k]),
            None => None,
        }
    }

    /// Stores `value` at `(i, j)`. Zeros may be written anywhere; a nonzero
    /// outside the window and border is rejected and the matrix is unchanged.
    pub fn set(&mut self, i: usize, j: usize, value: S) -> std::result::Result<(), S> {
        match self.slot(i, j) {
            Some(Slot::Border(k)) => self.border[k] = value,
            Some(Slot::Band(k)) => self.band[k] = value,
            None if value.is_zero() => {}
            None => return Err(value),
        }
        Ok(())
    }

    /// Columns of row `i` held in its band window (border columns excluded).
    pub fn window_cols(&self, i: usize) -> std::ops::Range<usize> {
        let lo = i.saturating_sub(self.lower);
        let hi = (i + self.upper + self.fill + 1).min(self.first_border_col());
        lo..hi.max(lo)
    }

    /// True when every reserved fill diagonal (`upper < j - i <= upper + fill`)
    /// holds zero outside the border columns.
    pub fn fill_is_zero(&self) -> bool {
        (0..self.n).all(|i| {
            (1..=self.fill).all(|d| {
                let j = i + self.upper + d;
                j >= self.first_border_col() || self.get(i, j).is_zero()
            })
        })
    }

    pub fn to_dense(&self) -> DenseMatrix<S> {
        DenseMatrix::from_fn(self.n, |i, j| self.get(i, j))
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&S) -> U) -> BorderedBandMatrix<U> {
        BorderedBandMatrix {
            n: self.n,
            lower: self.lower,
            upper: self.upper,
            fill: self.fill,
            band: self.band.iter().map(&f).collect(),
            border: self.border.iter().map(&f).collect(),
        }
    }

    pub fn to_f64(&self) -> Result<BorderedBandMatrix<f64>> {
        let conv = |v: &[S]| {
            v.iter()
                .map(|x| x.to_f64().filter(|f| f.is_finite()).ok_or(Error::NotFloat))
                .collect::<Result<Vec<_>>>()
        };
        Ok(BorderedBandMatrix {
            n: self.n,
            lower: self.lower,
            upper: self.upper,
            fill: self.fill,
            band: conv(&self.band)?,
            border: conv(&self.border)?,
        })
    }
}

#[derive(Clone, Copy)]
enum Slot {
    Band(usize),
    Border(usize),
}

/// Dense `n x n` member of `family`.
pub fn build_dense<S: Scalar>(family: &MatrixFamily<S>, n: usize) -> Result<DenseMatrix<S>> {
    family.check_dimension(n)?;
    Ok(DenseMatrix::from_fn(n, |i, j| entry_unchecked(family, n, i + 1, j + 1)))
}

/// Bordered-band `n x n` member of `family`, `n >= 6`.
///
/// Only the stored positions are evaluated, so construction is O(n).
pub fn build_bordered<S: Scalar>(family: &MatrixFamily<S>, n: usize) -> Result<BorderedBandMatrix<S>> {
    family.check_dimension(n)?;
    if n < MIN_BORDERED_N {
        return Err(Error::BorderedTooSmall { n, min: MIN_BORDERED_N });
    }
    let (lower, upper) = family.tag().bandwidths();
    let mut m = BorderedBandMatrix::zeros(n, lower, upper);
    for i in 0..n {
        let band_lo = i.saturating_sub(lower);
        let band_hi = (i + upper).min(m.first_border_col().saturating_sub(1));
        for j in (band_lo..=band_hi).chain(m.first_border_col()..n) {
            let v = entry_unchecked(family, n, i + 1, j + 1);
            if v.is_zero() {
                continue;
            }
            m.set(i, j, v).map_err(|v| Error::OutsideStorage { i: i + 1, j: j + 1, value: v.to_string() })?;
        }
    }
    for (i, j) in family.off_band_positions(n) {
        let v = entry_unchecked(family, n, i, j);
        if m.get(i - 1, j - 1) != v {
            return Err(Error::OutsideStorage { i, j, value: v.to_string() });
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use num_traits::Zero;

    use super::*;
    use crate::exact::ExactScalar;
    use crate::family::FamilyTag;
    use crate::ExactFamily;

    fn q(s: &str) -> ExactScalar {
        s.parse().unwrap()
    }

    fn ints(m: &DenseMatrix<ExactScalar>) -> Vec<Vec<String>> {
        m.rows().map(|r| r.iter().map(|x| x.to_string()).collect()).collect()
    }

    #[test]
    fn dense_c4() {
        let m = build_dense(&ExactFamily::C, 4).unwrap();
        let want = [["1", "1", "0", "0"], ["1", "1", "1", "0"], ["1", "1", "1", "1"], ["0", "1", "1", "1"]];
        assert_eq!(ints(&m), want.iter().map(|r| r.iter().map(|s| s.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>());
    }

    #[test]
    fn dense_theorem_a_first_row() {
        let m = build_dense(&ExactFamily::theorem_a(), 5).unwrap();
        assert_eq!(ints(&m)[0], ["1", "1", "0", "0", "1"]);
    }

    #[test]
    fn dense_c1() {
        let m = build_dense(&ExactFamily::C, 1).unwrap();
        assert_eq!(m.n(), 1);
        assert_eq!(m[(0, 0)], q("1"));
    }

    #[test]
    fn b_with_zero_corners_is_c() {
        let zero = ExactFamily::B { a: q("0"), b: q("0") };
        for n in 4..=20 {
            assert_eq!(build_dense(&zero, n).unwrap(), build_dense(&ExactFamily::C, n).unwrap());
        }
    }

    fn families() -> Vec<ExactFamily> {
        vec![
            ExactFamily::B { a: q("3"), b: q("-7/2") },
            ExactFamily::theorem_a(),
            ExactFamily::C,
            ExactFamily::K,
            ExactFamily::L,
            ExactFamily::G { a: q("5/3") },
            ExactFamily::T { a: q("-2") },
            ExactFamily::P { a: q("7/3") },
        ]
    }

    #[test]
    fn bordered_reconstructs_dense() {
        for fam in families() {
            for n in 6..=40 {
                let b = build_bordered(&fam, n).unwrap();
                assert_eq!(b.to_dense(), build_dense(&fam, n).unwrap(), "{fam} n={n}");
                assert!(b.fill_is_zero());
            }
        }
    }

    #[test]
    fn bordered_c_has_no_corners() {
        let b = build_bordered(&ExactFamily::C, 8).unwrap();
        for i in 0..5 {
            assert!(b.get(i, 6).is_zero() && b.get(i, 7).is_zero());
        }
        assert_eq!(b.get(6, 7), q("1"));
        assert_eq!(b.get(7, 6), q("1"));
    }

    #[test]
    fn bordered_g_uses_wider_upper_band() {
        let g = ExactFamily::G { a: q("2") };
        let b = build_bordered(&g, 6).unwrap();
        assert_eq!((b.lower(), b.upper(), b.fill()), (1, 2, 1));
        assert_eq!(b.to_dense(), build_dense(&g, 6).unwrap());
        assert_eq!(FamilyTag::G.bandwidths(), (1, 2));
    }

    #[test]
    fn bordered_rejects_small_n() {
        assert!(matches!(build_bordered(&ExactFamily::theorem_a(), 5), Err(Error::BorderedTooSmall { .. })));
        assert!(matches!(build_bordered(&ExactFamily::K, 4), Err(Error::DimensionTooSmall { .. })));
    }

    #[test]
    fn set_outside_storage_is_rejected() {
        let mut b = BorderedBandMatrix::<ExactScalar>::zeros(10, 2, 1);
        assert!(b.set(0, 6, q("1")).is_err());
        assert!(b.set(0, 6, q("0")).is_ok());
        assert!(b.set(0, 5, q("1")).is_err());
        assert!(b.set(0, 4, q("1")).is_err());
        assert!(b.set(0, 3, q("1")).is_ok());
        assert!(b.set(0, 9, q("1")).is_ok());
        assert!(!b.fill_is_zero());
    }

    #[test]
    fn transpose_and_swap() {
        let m = build_dense(&ExactFamily::C, 5).unwrap();
        assert_eq!(m.transpose().transpose(), m);
        assert_eq!(m.transpose()[(0, 2)], q("1"));
        assert_eq!(m.transpose()[(2, 0)], q("0"));
        assert_eq!(m.transpose()[(0, 1)], q("1"));
        let mut s = m.clone();
        s.swap_rows(0, 4);
        assert_eq!(s.row(0), m.row(4));
    }
}

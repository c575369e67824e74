//! The matrix families and their entry rules.
//!
//! Every family is a 0/1 band pattern plus a few corner overrides. Indices in
//! [`entry`] are 1-based to match the displayed arrays; everything else in the
//! crate indexes from 0.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyTag {
    B,
    C,
    K,
    L,
    G,
    T,
    P,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 7] = [Self::B, Self::C, Self::K, Self::L, Self::G, Self::T, Self::P];

    /// The matrices whose determinants the lemma formulas describe.
    pub const LEMMAS: [FamilyTag; 5] = [Self::K, Self::L, Self::G, Self::T, Self::P];

    /// Smallest dimension the builder accepts.
    pub fn min_n(self) -> usize {
        match self {
            Self::C => 1,
            Self::B | Self::G | Self::T | Self::P => 4,
            Self::K | Self::L => 5,
        }
    }

    pub fn takes_a(self) -> bool {
        matches!(self, Self::B | Self::G | Self::T | Self::P)
    }

    pub fn takes_b(self) -> bool {
        self == Self::B
    }

    /// `(lower, upper)` bandwidth of the 0/1 pattern, corners excluded.
    pub fn bandwidths(self) -> (usize, usize) {
        match self {
            Self::G => (1, 2),
            _ => (2, 1),
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::B => "B",
            Self::C => "C",
            Self::K => "K",
            Self::L => "L",
            Self::G => "G",
            Self::T => "T",
            Self::P => "P",
        };
        f.write_str(s)
    }
}

impl FromStr for FamilyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|t| t.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Config(format!("unknown family `{s}` (expected one of b, c, k, l, g, t, p)")))
    }
}

/// A matrix family together with its corner parameters.
///
/// The two conjectured settings are not separate variants: they are
/// [`MatrixFamily::theorem_a`] and [`MatrixFamily::theorem_m`].
#[derive(Clone, Debug, PartialEq)]
pub enum MatrixFamily<S> {
    /// Four-diagonal band with `a` at (1, n-1) and (2, n), `b` at (1, n).
    B { a: S, b: S },
    /// The bare four-diagonal band.
    C,
    K,
    L,
    G { a: S },
    T { a: S },
    P { a: S },
}

impl<S: Scalar> MatrixFamily<S> {
    /// `B` with `a = 0, b = 1`.
    pub fn theorem_a() -> Self {
        Self::B { a: S::zero(), b: S::one() }
    }

    /// `B` with `a = 1, b = 0`.
    pub fn theorem_m() -> Self {
        Self::B { a: S::one(), b: S::zero() }
    }

    /// Builds the family named by `tag`, taking whichever parameters it uses.
    pub fn from_parts(tag: FamilyTag, a: Option<S>, b: Option<S>) -> Result<Self> {
        let need = |v: Option<S>, name: &str| {
            v.ok_or_else(|| Error::Config(format!("family {tag} needs parameter {name}")))
        };
        Ok(match tag {
            FamilyTag::B => Self::B { a: need(a, "a")?, b: need(b, "b")? },
            FamilyTag::C => Self::C,
            FamilyTag::K => Self::K,
            FamilyTag::L => Self::L,
            FamilyTag::G => Self::G { a: need(a, "a")? },
            FamilyTag::T => Self::T { a: need(a, "a")? },
            FamilyTag::P => Self::P { a: need(a, "a")? },
        })
    }

    pub fn tag(&self) -> FamilyTag {
        match self {
            Self::B { .. } => FamilyTag::B,
            Self::C => FamilyTag::C,
            Self::K => FamilyTag::K,
            Self::L => FamilyTag::L,
            Self::G { .. } => FamilyTag::G,
            Self::T { .. } => FamilyTag::T,
            Self::P { .. } => FamilyTag::P,
        }
    }

    pub fn a(&self) -> Option<&S> {
        match self {
            Self::B { a, .. } | Self::G { a } | Self::T { a } | Self::P { a } => Some(a),
            _ => None,
        }
    }

    pub fn b(&self) -> Option<&S> {
        match self {
            Self::B { b, .. } => Some(b),
            _ => None,
        }
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&S) -> U) -> MatrixFamily<U> {
        match self {
            Self::B { a, b } => MatrixFamily::B { a: f(a), b: f(b) },
            Self::C => MatrixFamily::C,
            Self::K => MatrixFamily::K,
            Self::L => MatrixFamily::L,
            Self::G { a } => MatrixFamily::G { a: f(a) },
            Self::T { a } => MatrixFamily::T { a: f(a) },
            Self::P { a } => MatrixFamily::P { a: f(a) },
        }
    }

    /// 1-based positions outside the band that may hold a nonzero.
    pub fn off_band_positions(&self, n: usize) -> Vec<(usize, usize)> {
        match self {
            Self::B { .. } => vec![(1, n - 1), (1, n), (2, n)],
            Self::C => vec![],
            Self::K => vec![(1, n - 1)],
            Self::L => vec![(1, n - 1), (2, n)],
            Self::G { .. } | Self::T { .. } | Self::P { .. } => vec![(1, n)],
        }
    }

    pub fn check_dimension(&self, n: usize) -> Result<()> {
        let min = self.tag().min_n();
        if n < min {
            return Err(Error::DimensionTooSmall { family: self.tag(), n, min });
        }
        Ok(())
    }
}

impl<S: Scalar> fmt::Display for MatrixFamily<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a(), self.b()) {
            (Some(a), Some(b)) => write!(f, "{}(a={a}, b={b})", self.tag()),
            (Some(a), None) => write!(f, "{}(a={a})", self.tag()),
            _ => write!(f, "{}", self.tag()),
        }
    }
}

fn c_band(i: usize, j: usize) -> bool {
    // j - i in {-2, -1, 0, 1}
    j + 2 >= i && j <= i + 1
}

fn indicator<S: Scalar>(on: bool) -> S {
    if on {
        S::one()
    } else {
        S::zero()
    }
}

/// Entry `(i, j)` (1-based) of the `n x n` member of `family`.
pub fn entry<S: Scalar>(family: &MatrixFamily<S>, n: usize, i: usize, j: usize) -> Result<S> {
    family.check_dimension(n)?;
    if i == 0 || j == 0 || i > n || j > n {
        return Err(Error::IndexOutOfRange { n, i, j });
    }
    Ok(entry_unchecked(family, n, i, j))
}

pub(crate) fn entry_unchecked<S: Scalar>(family: &MatrixFamily<S>, n: usize, i: usize, j: usize) -> S {
    match family {
        MatrixFamily::C => indicator(c_band(i, j)),
        MatrixFamily::B { a, b } => match (i, j) {
            (1, c) if c == n - 1 => a.clone(),
            (1, c) if c == n => b.clone(),
            (2, c) if c == n => a.clone(),
            _ => indicator(c_band(i, j)),
        },
        MatrixFamily::K => match i {
            1 => indicator(j == 1 || j == n - 1),
            _ => indicator(c_band(i, j)),
        },
        MatrixFamily::L => match i {
            1 => indicator(j == 1 || j == n - 1),
            2 => indicator(j == 1 || j == 2 || j == n),
            _ => indicator(c_band(i, j)),
        },
        MatrixFamily::G { a } => match i {
            1 if j == n => a.clone(),
            1 => indicator(j == 1 || j == 2),
            // j - i in {-1, 0, 1, 2}
            _ => indicator(j + 1 >= i && j <= i + 2),
        },
        MatrixFamily::T { a } => match (i, j) {
            (1, c) if c == n => a.clone(),
            (r, c) if r == n => indicator(c + 1 >= n),
            _ => indicator(c_band(i, j)),
        },
        MatrixFamily::P { a } => match (i, j) {
            (1, c) if c == n => a.clone(),
            _ => indicator(c_band(i, j)),
        },
    }
}

use std::fmt::{Debug, Display};

use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

use crate::exact::ExactScalar;

/// Field element the matrices, closed forms and eliminators are generic over.
///
/// Exact types pivot on the first nonzero candidate; inexact types pivot on
/// the largest magnitude.
pub trait Scalar:
    Clone + Debug + Display + PartialOrd + Num + Signed + FromPrimitive + ToPrimitive + Send + Sync
{
    const EXACT: bool;

    /// Magnitude of the stored representation in bits, for growth diagnostics.
    fn size_bits(&self) -> u64 {
        0
    }

    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("every scalar type represents small integers")
    }
}

impl Scalar for ExactScalar {
    const EXACT: bool = true;

    fn size_bits(&self) -> u64 {
        self.numerator_bits()
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn size_bits(&self) -> u64 {
        self.numer().bits()
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;
}

impl Scalar for f32 {
    const EXACT: bool = false;
}

/// `(-1)^n` in any scalar type.
pub fn alternating<T: Scalar>(n: i64) -> T {
    if n.rem_euclid(2) == 0 {
        T::one()
    } else {
        -T::one()
    }
}

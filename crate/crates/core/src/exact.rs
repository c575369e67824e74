//! Arbitrary-precision rational scalar.
//!
//! Values that fit a pair of machine words stay inline and are combined with
//! 128-bit intermediates; anything larger is promoted to a heap `BigRational`
//! and demoted again once it fits. Every value is kept in lowest terms with a
//! positive denominator, so each rational has exactly one representation.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Rem, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

enum Repr {
    /// `num / den` with `den > 0` and `gcd(|num|, den) = 1`.
    Small { num: i64, den: i64 },
    /// Only holds values that do not fit `Small`.
    Big(Box<BigRational>),
}

/// Exact rational number in canonical form.
pub struct ExactScalar(Repr);

impl Clone for ExactScalar {
    #[inline]
    fn clone(&self) -> Self {
        match &self.0 {
            Repr::Small { num, den } => ExactScalar(Repr::Small { num: *num, den: *den }),
            Repr::Big(r) => ExactScalar(Repr::Big(r.clone())),
        }
    }
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    if a == 0 {
        return b;
    }
    if b == 0 {
        return a;
    }
    let shift = (a | b).trailing_zeros();
    a >>= a.trailing_zeros();
    loop {
        b >>= b.trailing_zeros();
        if a > b {
            std::mem::swap(&mut a, &mut b);
        }
        b -= a;
        if b == 0 {
            return a << shift;
        }
    }
}

impl ExactScalar {
    pub fn from_integer(v: i64) -> Self {
        ExactScalar(Repr::Small { num: v, den: 1 })
    }

    /// `num / den`, reduced. Fails when `den = 0`.
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_i128_parts(num as i128, den as i128))
    }

    pub fn from_bigints(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_big(BigRational::new(num, den)))
    }

    // den != 0
    #[inline]
    fn from_i128_parts(num: i128, den: i128) -> Self {
        debug_assert!(den != 0);
        if num == 0 {
            return Self::zero();
        }
        let g = gcd_u128(num.unsigned_abs(), den.unsigned_abs());
        // g divides both, so the quotients fit u128; i128::MIN is the only
        // magnitude that does not fit i128, and it only survives when g = 1.
        let (n, d) = (num.unsigned_abs() / g, den.unsigned_abs() / g);
        let negative = (num < 0) != (den < 0);
        if d <= i64::MAX as u128 {
            let limit = if negative { 1u128 << 63 } else { i64::MAX as u128 };
            if n <= limit {
                let num = if negative { (n as i128).wrapping_neg() as i64 } else { n as i64 };
                return ExactScalar(Repr::Small { num, den: d as i64 });
            }
        }
        let bn = if negative { -BigInt::from(n) } else { BigInt::from(n) };
        ExactScalar(Repr::Big(Box::new(BigRational::new_raw(bn, BigInt::from(d)))))
    }

    fn from_big(r: BigRational) -> Self {
        // BigRational::new already reduced; demote if it fits.
        if let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_i64()) {
            return ExactScalar(Repr::Small { num: n, den: d });
        }
        ExactScalar(Repr::Big(Box::new(r)))
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small { num, den } => {
                BigRational::new_raw(BigInt::from(*num), BigInt::from(*den))
            }
            Repr::Big(r) => (**r).clone(),
        }
    }

    pub fn numerator(&self) -> BigInt {
        match &self.0 {
            Repr::Small { num, .. } => BigInt::from(*num),
            Repr::Big(r) => r.numer().clone(),
        }
    }

    pub fn denominator(&self) -> BigInt {
        match &self.0 {
            Repr::Small { den, .. } => BigInt::from(*den),
            Repr::Big(r) => r.denom().clone(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small { den, .. } => *den == 1,
            Repr::Big(r) => r.is_integer(),
        }
    }

    /// Bit length of the numerator's magnitude.
    pub fn numerator_bits(&self) -> u64 {
        match &self.0 {
            Repr::Small { num, .. } => 64 - num.unsigned_abs().leading_zeros() as u64,
            Repr::Big(r) => r.numer().bits(),
        }
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(div_nonzero(self, rhs))
    }

    pub fn checked_recip(&self) -> Result<Self> {
        Self::one().checked_div(self)
    }

    /// Integer power, exact.
    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }
}

#[inline]
fn add_ref(x: &ExactScalar, y: &ExactScalar) -> ExactScalar {
    match (&x.0, &y.0) {
        (Repr::Small { num: a, den: 1 }, Repr::Small { num: b, den: 1 }) => {
            match a.checked_add(*b) {
                Some(s) => ExactScalar::from_integer(s),
                None => ExactScalar::from_i128_parts(*a as i128 + *b as i128, 1),
            }
        }
        (Repr::Small { num: a, den: p }, Repr::Small { num: b, den: q }) => {
            let (a, p, b, q) = (*a as i128, *p as i128, *b as i128, *q as i128);
            match (a * q).checked_add(b * p) {
                Some(n) => ExactScalar::from_i128_parts(n, p * q),
                None => ExactScalar::from_big(x.to_big() + y.to_big()),
            }
        }
        _ => ExactScalar::from_big(x.to_big() + y.to_big()),
    }
}

#[inline]
fn mul_ref(x: &ExactScalar, y: &ExactScalar) -> ExactScalar {
    match (&x.0, &y.0) {
        (Repr::Small { num: a, den: 1 }, Repr::Small { num: b, den: 1 }) => {
            match a.checked_mul(*b) {
                Some(s) => ExactScalar::from_integer(s),
                None => ExactScalar::from_i128_parts(*a as i128 * *b as i128, 1),
            }
        }
        (Repr::Small { num: a, den: p }, Repr::Small { num: b, den: q }) => {
            ExactScalar::from_i128_parts(*a as i128 * *b as i128, *p as i128 * *q as i128)
        }
        _ => ExactScalar::from_big(x.to_big() * y.to_big()),
    }
}

#[inline]
fn neg_ref(x: &ExactScalar) -> ExactScalar {
    match &x.0 {
        Repr::Small { num, den } => match num.checked_neg() {
            Some(n) => ExactScalar(Repr::Small { num: n, den: *den }),
            None => ExactScalar::from_i128_parts(-(*num as i128), *den as i128),
        },
        Repr::Big(r) => ExactScalar::from_big(-(**r).clone()),
    }
}

fn div_nonzero(x: &ExactScalar, y: &ExactScalar) -> ExactScalar {
    match (&x.0, &y.0) {
        (Repr::Small { num: a, den: p }, Repr::Small { num: b, den: q }) => {
            ExactScalar::from_i128_parts(*a as i128 * *q as i128, *p as i128 * *b as i128)
        }
        _ => ExactScalar::from_big(x.to_big() / y.to_big()),
    }
}

impl Zero for ExactScalar {
    #[inline]
    fn zero() -> Self {
        ExactScalar(Repr::Small { num: 0, den: 1 })
    }
    #[inline]
    fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small { num: 0, .. })
    }
}

impl One for ExactScalar {
    #[inline]
    fn one() -> Self {
        ExactScalar(Repr::Small { num: 1, den: 1 })
    }
}

impl PartialEq for ExactScalar {
    fn eq(&self, other: &Self) -> bool {
        match (&self.0, &other.0) {
            (Repr::Small { num: a, den: p }, Repr::Small { num: b, den: q }) => a == b && p == q,
            (Repr::Big(x), Repr::Big(y)) => x == y,
            _ => false,
        }
    }
}

impl Eq for ExactScalar {}

impl Hash for ExactScalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.numerator().hash(state);
        self.denominator().hash(state);
    }
}

impl Ord for ExactScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small { num: a, den: p }, Repr::Small { num: b, den: q }) => {
                (*a as i128 * *q as i128).cmp(&(*b as i128 * *p as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl PartialOrd for ExactScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $f:expr) => {
        impl $trait<&ExactScalar> for &ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &ExactScalar) -> ExactScalar {
                $f(self, rhs)
            }
        }
        impl $trait<ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                $f(&self, &rhs)
            }
        }
        impl $trait<&ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &ExactScalar) -> ExactScalar {
                $f(&self, rhs)
            }
        }
    };
}

#[inline]
fn sub_ref(x: &ExactScalar, y: &ExactScalar) -> ExactScalar {
    add_ref(x, &neg_ref(y))
}

/// Panics on a zero divisor, like integer division; use
/// [`ExactScalar::checked_div`] where the divisor is not known to be nonzero.
fn div_ref(x: &ExactScalar, y: &ExactScalar) -> ExactScalar {
    x.checked_div(y).expect("ExactScalar division by zero")
}

fn rem_ref(x: &ExactScalar, y: &ExactScalar) -> ExactScalar {
    assert!(!y.is_zero(), "ExactScalar remainder by zero");
    ExactScalar::from_big(x.to_big() % y.to_big())
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);
forward_binop!(Div, div, div_ref);
forward_binop!(Rem, rem, rem_ref);

impl AddAssign<&ExactScalar> for ExactScalar {
    fn add_assign(&mut self, rhs: &ExactScalar) {
        *self = add_ref(self, rhs);
    }
}

impl SubAssign<&ExactScalar> for ExactScalar {
    fn sub_assign(&mut self, rhs: &ExactScalar) {
        *self = sub_ref(self, rhs);
    }
}

impl MulAssign<&ExactScalar> for ExactScalar {
    fn mul_assign(&mut self, rhs: &ExactScalar) {
        *self = mul_ref(self, rhs);
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        neg_ref(&self)
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        neg_ref(self)
    }
}

impl Sum for ExactScalar {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| add_ref(&acc, &x))
    }
}

impl Product for ExactScalar {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, x| mul_ref(&acc, &x))
    }
}

impl Num for ExactScalar {
    type FromStrRadixErr = Error;

    fn from_str_radix(s: &str, radix: u32) -> Result<Self> {
        parse_radix(s, radix)
    }
}

impl Signed for ExactScalar {
    fn abs(&self) -> Self {
        if self.is_negative() {
            neg_ref(self)
        } else {
            self.clone()
        }
    }

    fn abs_sub(&self, other: &Self) -> Self {
        if self <= other {
            Self::zero()
        } else {
            sub_ref(self, other)
        }
    }

    fn signum(&self) -> Self {
        match self.cmp(&Self::zero()) {
            Ordering::Less => -Self::one(),
            Ordering::Equal => Self::zero(),
            Ordering::Greater => Self::one(),
        }
    }

    fn is_positive(&self) -> bool {
        match &self.0 {
            Repr::Small { num, .. } => *num > 0,
            Repr::Big(r) => r.is_positive(),
        }
    }

    fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small { num, .. } => *num < 0,
            Repr::Big(r) => r.is_negative(),
        }
    }
}

impl FromPrimitive for ExactScalar {
    fn from_i64(n: i64) -> Option<Self> {
        Some(Self::from_integer(n))
    }

    fn from_u64(n: u64) -> Option<Self> {
        Some(Self::from_i128_parts(n as i128, 1))
    }

    fn from_i128(n: i128) -> Option<Self> {
        Some(Self::from_big(BigRational::from_integer(BigInt::from(n))))
    }

    /// Exact binary value of the float; non-finite inputs are rejected.
    fn from_f64(f: f64) -> Option<Self> {
        BigRational::from_float(f).map(Self::from_big)
    }
}

impl ToPrimitive for ExactScalar {
    fn to_i64(&self) -> Option<i64> {
        match &self.0 {
            Repr::Small { num, den: 1 } => Some(*num),
            _ => None,
        }
    }

    fn to_u64(&self) -> Option<u64> {
        self.to_i64().and_then(|v| u64::try_from(v).ok())
    }

    fn to_f64(&self) -> Option<f64> {
        match &self.0 {
            Repr::Small { num, den } => Some(*num as f64 / *den as f64),
            Repr::Big(r) => r.to_f64(),
        }
    }
}

impl From<i64> for ExactScalar {
    fn from(v: i64) -> Self {
        Self::from_integer(v)
    }
}

impl From<i32> for ExactScalar {
    fn from(v: i32) -> Self {
        Self::from_integer(v as i64)
    }
}

impl From<BigRational> for ExactScalar {
    fn from(r: BigRational) -> Self {
        Self::from_big(r)
    }
}

impl From<&ExactScalar> for BigRational {
    fn from(x: &ExactScalar) -> Self {
        x.to_big()
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small { num, den: 1 } => write!(f, "{num}"),
            Repr::Small { num, den } => write!(f, "{num}/{den}"),
            Repr::Big(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Repr::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_digits(s: &str, radix: u32) -> Option<BigInt> {
    if s.is_empty() || !s.chars().all(|c| c.is_digit(radix)) {
        return None;
    }
    BigInt::parse_bytes(s.as_bytes(), radix)
}

/// Accepts `[+-]digits` or `[+-]digits/digits` with no whitespace. The
/// denominator carries no sign and must be nonzero; non-reduced input is
/// reduced.
fn parse_radix(s: &str, radix: u32) -> Result<ExactScalar> {
    let err = || Error::Parse(s.to_string());
    let (negative, body) = match s.as_bytes().first() {
        Some(b'-') => (true, &s[1..]),
        Some(b'+') => (false, &s[1..]),
        _ => (false, s),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (parse_digits(n, radix).ok_or_else(err)?, parse_digits(d, radix).ok_or_else(err)?),
        None => (parse_digits(body, radix).ok_or_else(err)?, BigInt::one()),
    };
    if den.is_zero() {
        return Err(err());
    }
    let num = if negative { -num } else { num };
    Ok(ExactScalar::from_big(BigRational::new(num, den)))
}

impl FromStr for ExactScalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_radix(s, 10)
    }
}

/// `(-1)^n` as an exact scalar.
pub fn sign_pow(n: i64) -> ExactScalar {
    if n.is_even() {
        ExactScalar::one()
    } else {
        -ExactScalar::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> ExactScalar {
        s.parse().unwrap()
    }

    #[test]
    fn textbook_addition() {
        assert_eq!(q("1/2") + q("1/3"), q("5/6"));
        assert_eq!((q("1/2") + q("1/3")).to_string(), "5/6");
    }

    #[test]
    fn multiplicative_identity() {
        for s in ["0", "7", "-3/4", "123456789012345678901234567890/7"] {
            assert_eq!(q(s) * ExactScalar::one(), q(s));
        }
    }

    #[test]
    fn square_of_shifted_value() {
        let a = q("3");
        let d = &a - &ExactScalar::one();
        assert_eq!(&d * &d, q("4"));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(q("1").checked_div(&ExactScalar::zero()), Err(Error::DivisionByZero));
        assert_eq!(ExactScalar::zero().checked_recip(), Err(Error::DivisionByZero));
        assert_eq!(ExactScalar::new(1, 0), Err(Error::DivisionByZero));
        assert!("1/0".parse::<ExactScalar>().is_err());
    }

    #[test]
    fn sign_pow_values() {
        assert_eq!(sign_pow(0), q("1"));
        assert_eq!(sign_pow(7), q("-1"));
        assert_eq!(sign_pow(10000), q("1"));
        assert_eq!(sign_pow(-3), q("-1"));
    }

    #[test]
    fn canonical_text() {
        assert_eq!(q("4/6").to_string(), "2/3");
        assert_eq!(q("-4/2").to_string(), "-2");
        assert_eq!(q("+5").to_string(), "5");
        assert_eq!(q("0/9").to_string(), "0");
        for bad in ["", "1/", "/2", "1/-2", " 1", "1 /2", "1.5", "--1", "a"] {
            assert!(bad.parse::<ExactScalar>().is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn promotion_and_demotion() {
        let big = ExactScalar::from_integer(i64::MAX);
        let sum = &big + &big;
        assert_eq!(sum.to_string(), "18446744073709551614");
        let back = &sum - &big;
        assert_eq!(back, big);
        assert!(matches!(back.0, Repr::Small { .. }));

        let min = ExactScalar::from_integer(i64::MIN);
        assert_eq!((-&min).to_string(), "9223372036854775808");
        assert_eq!(-(-&min), min);

        let tiny = ExactScalar::new(1, i64::MAX).unwrap();
        let t2 = &tiny * &tiny;
        assert_eq!(&t2 * &ExactScalar::from_integer(i64::MAX), tiny);
    }

    #[test]
    fn integer_pipelines_stay_integral() {
        let x = q("6") * q("7") - q("2");
        assert!(x.is_integer());
        assert_eq!(x.denominator(), BigInt::one());
        assert!(!(q("1") / q("3")).is_integer());
    }

    #[test]
    fn ordering_and_sign() {
        assert!(q("1/3") < q("1/2"));
        assert!(q("-1/2") < q("-1/3"));
        assert_eq!(q("-7/3").abs(), q("7/3"));
        assert_eq!(q("-7/3").signum(), q("-1"));
        assert_eq!(q("7/3") % q("1"), q("1/3"));
    }

    #[test]
    fn float_conversions() {
        assert_eq!(q("1/4").to_f64(), Some(0.25));
        assert_eq!(ExactScalar::from_f64(0.375), Some(q("3/8")));
        assert_eq!(ExactScalar::from_f64(f64::NAN), None);
        assert_eq!(q("5").to_i64(), Some(5));
        assert_eq!(q("5/2").to_i64(), None);
    }
}

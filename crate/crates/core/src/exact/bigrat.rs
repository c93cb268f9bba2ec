use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct BigRat(BigRational);

impl BigRat {
    pub fn new(numer: BigInt, denom: BigInt) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        Ok(BigRat(BigRational::new(numer, denom)))
    }

    pub fn ratio(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        BigRat(BigRational::new(numer.into(), denom.into()))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        BigRat(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        BigRat(BigRational::zero())
    }

    pub fn one() -> Self {
        BigRat(BigRational::one())
    }

    /// Exact conversion of a finite `f64` (every finite double is dyadic).
    pub fn from_f64_exact(x: f64) -> Option<Self> {
        BigRational::from_float(x).map(BigRat)
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        BigRat(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain {
                function: "recip",
                reason: "reciprocal of zero".into(),
            });
        }
        Ok(BigRat(self.0.recip()))
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        if e < 0 && self.is_zero() {
            return Err(Error::Domain {
                function: "pow",
                reason: "negative power of zero".into(),
            });
        }
        Ok(BigRat(num_traits::Pow::pow(&self.0, e)))
    }

    /// Integer value when the denominator is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.0.numer().clone())
    }

    /// Nearest `i64` when the value is an integer in range.
    pub fn to_i64(&self) -> Option<i64> {
        self.to_integer().and_then(|n| n.to_i64())
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Always `num/den`, including integers (`3/1`).
    pub fn to_fraction_string(&self) -> String {
        format!("{}/{}", self.0.numer(), self.0.denom())
    }

    pub fn as_inner(&self) -> &BigRational {
        &self.0
    }

    /// `floor(self * 2^shift)` for nonnegative or negative `shift`.
    pub(crate) fn scaled_floor(&self, shift: i64) -> BigInt {
        let (n, d) = (self.0.numer().clone(), self.0.denom().clone());
        let (n, d) = if shift >= 0 {
            (n << shift as usize, d)
        } else {
            (n, d << (-shift) as usize)
        };
        num_integer::Integer::div_floor(&n, &d)
    }

    /// `log2 |numer| - log2 denom`, rounded down to an integer; `None` for zero.
    pub(crate) fn approx_log2(&self) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        Some(self.0.numer().bits() as i64 - self.0.denom().bits() as i64)
    }
}

impl From<i64> for BigRat {
    fn from(n: i64) -> Self {
        BigRat::from_integer(n)
    }
}

impl From<BigInt> for BigRat {
    fn from(n: BigInt) -> Self {
        BigRat::from_integer(n)
    }
}

impl From<BigUint> for BigRat {
    fn from(n: BigUint) -> Self {
        BigRat::from_integer(BigInt::from_biguint(Sign::Plus, n))
    }
}

impl From<BigRational> for BigRat {
    fn from(r: BigRational) -> Self {
        BigRat(r)
    }
}

impl fmt::Display for BigRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

/// Accepts `-3`, `7/12`, `-1/2`, `0.25`, `1.5e-3` and `2/-4` style literals.
impl FromStr for BigRat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidArgument(format!("not a rational literal: {s:?}"));
        if let Some((n, d)) = s.split_once('/') {
            let n: BigRat = n.parse()?;
            let d: BigRat = d.parse()?;
            if d.is_zero() {
                return Err(bad());
            }
            return Ok(n / d);
        }
        let (mantissa, exp) = match s.find(['e', 'E']) {
            Some(i) => (&s[..i], s[i + 1..].parse::<i32>().map_err(|_| bad())?),
            None => (s, 0),
        };
        let (neg, digits) = match mantissa.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
        };
        let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(bad());
        }
        if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let all: String = format!("{int_part}{frac_part}");
        let mut value = BigInt::from_str(if all.is_empty() { "0" } else { &all }).map_err(|_| bad())?;
        if neg {
            value = -value;
        }
        let ten = BigRat::from_integer(10);
        let scale = exp - frac_part.len() as i32;
        Ok(BigRat::from_integer(value) * ten.pow(scale).map_err(|_| bad())?)
    }
}

impl Neg for BigRat {
    type Output = BigRat;
    fn neg(self) -> BigRat {
        BigRat(-self.0)
    }
}

impl Neg for &BigRat {
    type Output = BigRat;
    fn neg(self) -> BigRat {
        BigRat(-&self.0)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $assign_trait:ident, $assign:ident) => {
        impl $trait<BigRat> for BigRat {
            type Output = BigRat;
            fn $method(self, rhs: BigRat) -> BigRat {
                BigRat(self.0.$method(rhs.0))
            }
        }
        impl $trait<&BigRat> for BigRat {
            type Output = BigRat;
            fn $method(self, rhs: &BigRat) -> BigRat {
                BigRat(self.0.$method(&rhs.0))
            }
        }
        impl $trait<BigRat> for &BigRat {
            type Output = BigRat;
            fn $method(self, rhs: BigRat) -> BigRat {
                BigRat((&self.0).$method(rhs.0))
            }
        }
        impl $trait<&BigRat> for &BigRat {
            type Output = BigRat;
            fn $method(self, rhs: &BigRat) -> BigRat {
                BigRat((&self.0).$method(&rhs.0))
            }
        }
        impl $assign_trait<BigRat> for BigRat {
            fn $assign(&mut self, rhs: BigRat) {
                self.0 = std::mem::take(&mut self.0).$method(rhs.0);
            }
        }
        impl $assign_trait<&BigRat> for BigRat {
            fn $assign(&mut self, rhs: &BigRat) {
                self.0 = std::mem::take(&mut self.0).$method(&rhs.0);
            }
        }
    };
}

binop!(Add, add, AddAssign, add_assign);
binop!(Sub, sub, SubAssign, sub_assign);
binop!(Mul, mul, MulAssign, mul_assign);

// Division by zero panics, matching the integer types; use `recip` for a
// checked path.
impl Div<BigRat> for BigRat {
    type Output = BigRat;
    fn div(self, rhs: BigRat) -> BigRat {
        BigRat(self.0 / rhs.0)
    }
}
impl Div<&BigRat> for BigRat {
    type Output = BigRat;
    fn div(self, rhs: &BigRat) -> BigRat {
        BigRat(self.0 / &rhs.0)
    }
}
impl Div<&BigRat> for &BigRat {
    type Output = BigRat;
    fn div(self, rhs: &BigRat) -> BigRat {
        BigRat(&self.0 / &rhs.0)
    }
}
impl Div<BigRat> for &BigRat {
    type Output = BigRat;
    fn div(self, rhs: BigRat) -> BigRat {
        BigRat(&self.0 / rhs.0)
    }
}

impl PartialEq<i64> for BigRat {
    fn eq(&self, other: &i64) -> bool {
        self.0.is_integer() && self.0.numer() == &BigInt::from(*other)
    }
}

impl PartialOrd<i64> for BigRat {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        self.0.partial_cmp(&BigRational::from_integer((*other).into()))
    }
}

impl std::iter::Sum for BigRat {
    fn sum<I: Iterator<Item = BigRat>>(iter: I) -> BigRat {
        iter.fold(BigRat::zero(), |acc, x| acc + x)
    }
}

impl std::iter::Product for BigRat {
    fn product<I: Iterator<Item = BigRat>>(iter: I) -> BigRat {
        iter.fold(BigRat::one(), |acc, x| acc * x)
    }
}

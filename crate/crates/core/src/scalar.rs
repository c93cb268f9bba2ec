use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::complexfn::{CNum, Real};
use crate::BigRat;

/// Field elements a recurrence can be iterated over: exact rationals or
/// complex floats at some working precision.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialEq
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn from_rat(r: &BigRat) -> Self;
    fn is_zero(&self) -> bool;
}

impl Scalar for BigRat {
    fn zero() -> Self {
        BigRat::zero()
    }
    fn one() -> Self {
        BigRat::one()
    }
    fn from_i64(n: i64) -> Self {
        BigRat::from(n)
    }
    fn from_rat(r: &BigRat) -> Self {
        r.clone()
    }
    fn is_zero(&self) -> bool {
        BigRat::is_zero(self)
    }
}

impl<R: Real> Scalar for CNum<R> {
    fn zero() -> Self {
        CNum::zero()
    }
    fn one() -> Self {
        CNum::one()
    }
    fn from_i64(n: i64) -> Self {
        CNum::from_real(R::from_i64(n))
    }
    fn from_rat(r: &BigRat) -> Self {
        CNum::from_real(R::from_ratio(r))
    }
    fn is_zero(&self) -> bool {
        CNum::is_zero(self)
    }
}

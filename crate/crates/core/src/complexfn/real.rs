use std::fmt::{Debug, Display};
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::BigRat;

/// A real working-precision scalar. Implemented for `f64` and for the
/// double-double type [`Dd`](super::Dd).
pub trait Real:
    Copy
    + Debug
    + Display
    + PartialOrd
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
{
    /// Unit roundoff.
    fn epsilon() -> Self;
    /// Significant decimal digits carried.
    fn digits() -> u32;
    /// Whether this is the extended (double-double) precision.
    fn is_extended() -> bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_f64(x: f64) -> Self;
    fn from_i64(n: i64) -> Self;
    fn from_ratio(r: &BigRat) -> Self;
    fn to_f64(self) -> f64;
    /// Exact rational value of a finite number.
    fn to_ratio(self) -> Option<BigRat>;

    fn pi() -> Self;
    fn e() -> Self;
    fn ln_pi() -> Self;
    /// `ln(2π)/2`
    fn half_ln_tau() -> Self;

    fn abs(self) -> Self;
    fn sqrt(self) -> Self;
    fn exp(self) -> Self;
    fn ln(self) -> Self;
    fn sin_cos(self) -> (Self, Self);
    fn sinh_cosh(self) -> (Self, Self);
    fn atan2(self, x: Self) -> Self;
    fn floor(self) -> Self;
    fn is_finite(self) -> bool;

    fn sin(self) -> Self {
        self.sin_cos().0
    }
    fn cos(self) -> Self {
        self.sin_cos().1
    }
    fn round(self) -> Self {
        (self + Self::from_f64(0.5)).floor()
    }
    fn hypot(self, other: Self) -> Self {
        let (a, b) = (self.abs(), other.abs());
        let (big, small) = if a >= b { (a, b) } else { (b, a) };
        if big == Self::zero() {
            return Self::zero();
        }
        let r = small / big;
        big * (Self::one() + r * r).sqrt()
    }
    fn powi(self, n: i32) -> Self {
        let mut base = if n < 0 { Self::one() / self } else { self };
        let mut k = n.unsigned_abs();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc *= base;
            }
            base *= base;
            k >>= 1;
        }
        acc
    }
    fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }
    fn min(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }
    /// Scientific notation with `digits` significant digits.
    fn fmt_sig(self, digits: usize) -> String;
}

impl Real for f64 {
    fn epsilon() -> Self {
        f64::EPSILON / 2.0
    }
    fn digits() -> u32 {
        15
    }
    fn is_extended() -> bool {
        false
    }
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_f64(x: f64) -> Self {
        x
    }
    fn from_i64(n: i64) -> Self {
        n as f64
    }
    fn from_ratio(r: &BigRat) -> Self {
        super::Dd::from_ratio(r).to_f64()
    }
    fn to_f64(self) -> f64 {
        self
    }
    fn to_ratio(self) -> Option<BigRat> {
        BigRat::from_f64_exact(self)
    }
    fn pi() -> Self {
        std::f64::consts::PI
    }
    fn e() -> Self {
        std::f64::consts::E
    }
    fn ln_pi() -> Self {
        1.1447298858494002
    }
    fn half_ln_tau() -> Self {
        0.9189385332046728
    }
    fn abs(self) -> Self {
        f64::abs(self)
    }
    fn sqrt(self) -> Self {
        f64::sqrt(self)
    }
    fn exp(self) -> Self {
        f64::exp(self)
    }
    fn ln(self) -> Self {
        f64::ln(self)
    }
    fn sin_cos(self) -> (Self, Self) {
        f64::sin_cos(self)
    }
    fn sinh_cosh(self) -> (Self, Self) {
        (f64::sinh(self), f64::cosh(self))
    }
    fn atan2(self, x: Self) -> Self {
        f64::atan2(self, x)
    }
    fn floor(self) -> Self {
        f64::floor(self)
    }
    fn is_finite(self) -> bool {
        f64::is_finite(self)
    }
    fn round(self) -> Self {
        f64::round(self)
    }
    fn hypot(self, other: Self) -> Self {
        f64::hypot(self, other)
    }
    fn fmt_sig(self, digits: usize) -> String {
        format!("{:.*e}", digits.max(1) - 1, self)
    }
}

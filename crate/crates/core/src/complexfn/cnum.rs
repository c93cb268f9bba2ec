use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use super::real::Real;
use crate::{BigRat, Error, Result};

/// Complex number over a working-precision real type.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct CNum<R> {
    pub re: R,
    pub im: R,
}

pub type C64 = CNum<f64>;

impl<R: Real> CNum<R> {
    pub fn new(re: R, im: R) -> Self {
        CNum { re, im }
    }

    pub fn from_real(re: R) -> Self {
        CNum { re, im: R::zero() }
    }

    pub fn from_f64(re: f64, im: f64) -> Self {
        CNum::new(R::from_f64(re), R::from_f64(im))
    }

    pub fn from_rat(re: &BigRat) -> Self {
        CNum::from_real(R::from_ratio(re))
    }

    pub fn zero() -> Self {
        CNum::from_real(R::zero())
    }

    pub fn one() -> Self {
        CNum::from_real(R::one())
    }

    pub fn i() -> Self {
        CNum::new(R::zero(), R::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re == R::zero() && self.im == R::zero()
    }

    pub fn is_real(&self) -> bool {
        self.im == R::zero()
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    /// Converts between working precisions.
    pub fn cast<S: Real>(self) -> CNum<S> {
        match (self.re.to_ratio(), self.im.to_ratio()) {
            (Some(re), Some(im)) => CNum::new(S::from_ratio(&re), S::from_ratio(&im)),
            _ => CNum::from_f64(self.re.to_f64(), self.im.to_f64()),
        }
    }

    pub fn to_c64(self) -> C64 {
        CNum::new(self.re.to_f64(), self.im.to_f64())
    }

    pub fn conj(self) -> Self {
        CNum::new(self.re, -self.im)
    }

    pub fn norm_sqr(self) -> R {
        self.re * self.re + self.im * self.im
    }

    pub fn abs(self) -> R {
        self.re.hypot(self.im)
    }

    /// Argument in `(-π, π]`; the negative real axis maps to `+π`.
    pub fn arg(self) -> R {
        if self.im == R::zero() {
            return if self.re < R::zero() { R::pi() } else { R::zero() };
        }
        self.im.atan2(self.re)
    }

    pub fn scale(self, r: R) -> Self {
        CNum::new(self.re * r, self.im * r)
    }

    pub fn recip(self) -> Self {
        CNum::one() / self
    }

    pub fn exp(self) -> Self {
        let m = self.re.exp();
        let (s, c) = self.im.sin_cos();
        CNum::new(m * c, m * s)
    }

    /// Principal logarithm with the cut along `(-∞, 0]`.
    pub fn ln(self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain {
                function: "principal_log",
                reason: "logarithm of zero".into(),
            });
        }
        Ok(CNum::new(self.abs().ln(), self.arg()))
    }

    /// Principal power `exp(w · Log z)`; `0^w` is defined only for positive
    /// integer `w` (value 0) and for `w = 0` (value 1).
    pub fn powc(self, w: Self) -> Result<Self> {
        if self.is_zero() {
            if w.is_zero() {
                return Ok(CNum::one());
            }
            if w.im == R::zero() && w.re > R::zero() && w.re == w.re.floor() {
                return Ok(CNum::zero());
            }
            return Err(Error::Domain {
                function: "principal_pow",
                reason: "zero base with exponent not a positive integer".into(),
            });
        }
        Ok((w * self.ln()?).exp())
    }

    pub fn powi(self, n: i32) -> Self {
        let mut base = if n < 0 { self.recip() } else { self };
        let mut k = n.unsigned_abs();
        let mut acc = CNum::one();
        while k > 0 {
            if k & 1 == 1 {
                acc *= base;
            }
            base *= base;
            k >>= 1;
        }
        acc
    }

    /// Principal square root (`Re ≥ 0`).
    pub fn sqrt(self) -> Self {
        if self.is_zero() {
            return self;
        }
        let two = R::from_f64(2.0);
        let r = self.abs();
        if self.re >= R::zero() {
            let t = ((r + self.re) / two).sqrt();
            CNum::new(t, self.im / (two * t))
        } else {
            let t = ((r - self.re) / two).sqrt();
            let sign = if self.im < R::zero() { -R::one() } else { R::one() };
            CNum::new(self.im.abs() / (two * t), sign * t)
        }
    }

    pub fn sin(self) -> Self {
        let (s, c) = self.re.sin_cos();
        let (sh, ch) = self.im.sinh_cosh();
        CNum::new(s * ch, c * sh)
    }

    pub fn cos(self) -> Self {
        let (s, c) = self.re.sin_cos();
        let (sh, ch) = self.im.sinh_cosh();
        CNum::new(c * ch, -(s * sh))
    }

    /// `sin(π z)` with the real part reduced mod 2 before scaling by π.
    pub fn sin_pi(self) -> Self {
        let two = R::from_f64(2.0);
        let shift = (self.re / two).round() * two;
        let reduced = CNum::new(self.re - shift, self.im);
        reduced.scale(R::pi()).sin()
    }

    /// Nearest integer when `z` lies on the real axis at an integer.
    pub fn as_integer(self) -> Option<i64> {
        if self.im != R::zero() || !self.re.is_finite() {
            return None;
        }
        let r = self.re.round();
        (r == self.re).then(|| r.to_f64() as i64)
    }

    /// Distance to the nearest point of `{0, -1, -2, ...}`.
    pub fn distance_to_nonpositive_integers(self) -> R {
        let k = if self.re > R::zero() {
            R::zero()
        } else {
            self.re.round()
        };
        (self - CNum::from_real(k)).abs()
    }

    /// Formats as `re+imi` / `re-imi` with `digits` significant digits.
    pub fn fmt_digits(self, digits: usize) -> String {
        let re = self.re.fmt_sig(digits);
        let im = self.im.abs().fmt_sig(digits);
        let sign = if self.im < R::zero() { '-' } else { '+' };
        format!("{re}{sign}{im}i")
    }
}

impl<R: Real> fmt::Display for CNum<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(R::digits() as usize);
        f.write_str(&self.fmt_digits(digits))
    }
}

/// Parses `a`, `bi`, `a+bi`, `a-bi`, `i`, `-i` with optional spaces; the
/// parts are decimal or rational literals.
pub fn parse_complex(s: &str) -> Result<(BigRat, BigRat)> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::InvalidArgument(format!("not a complex literal: {s:?}"));
    if compact.is_empty() {
        return Err(bad());
    }
    let Some(body) = compact.strip_suffix('i') else {
        return Ok((compact.parse().map_err(|_| bad())?, BigRat::zero()));
    };
    // split at the last sign that is not the leading one and not an exponent sign
    let bytes = body.as_bytes();
    let mut split = None;
    for idx in (1..bytes.len()).rev() {
        let c = bytes[idx];
        if (c == b'+' || c == b'-') && !matches!(bytes[idx - 1], b'e' | b'E') {
            split = Some(idx);
            break;
        }
    }
    let imag_part = |t: &str| -> Result<BigRat> {
        match t {
            "" | "+" => Ok(BigRat::one()),
            "-" => Ok(-BigRat::one()),
            _ => t.parse().map_err(|_| bad()),
        }
    };
    match split {
        Some(idx) => {
            let re: BigRat = body[..idx].parse().map_err(|_| bad())?;
            Ok((re, imag_part(&body[idx..])?))
        }
        None => Ok((BigRat::zero(), imag_part(body)?)),
    }
}

impl<R: Real> FromStr for CNum<R> {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (re, im) = parse_complex(s)?;
        Ok(CNum::new(R::from_ratio(&re), R::from_ratio(&im)))
    }
}

impl<R: Real> Neg for CNum<R> {
    type Output = Self;
    fn neg(self) -> Self {
        CNum::new(-self.re, -self.im)
    }
}

impl<R: Real> Add for CNum<R> {
    type Output = Self;
    fn add(self, b: Self) -> Self {
        CNum::new(self.re + b.re, self.im + b.im)
    }
}

impl<R: Real> Sub for CNum<R> {
    type Output = Self;
    fn sub(self, b: Self) -> Self {
        CNum::new(self.re - b.re, self.im - b.im)
    }
}

impl<R: Real> Mul for CNum<R> {
    type Output = Self;
    fn mul(self, b: Self) -> Self {
        CNum::new(self.re * b.re - self.im * b.im, self.re * b.im + self.im * b.re)
    }
}

impl<R: Real> Div for CNum<R> {
    type Output = Self;
    // Smith's algorithm
    fn div(self, b: Self) -> Self {
        if b.im == R::zero() {
            return CNum::new(self.re / b.re, self.im / b.re);
        }
        if b.re.abs() >= b.im.abs() {
            let r = b.im / b.re;
            let d = b.re + b.im * r;
            CNum::new((self.re + self.im * r) / d, (self.im - self.re * r) / d)
        } else {
            let r = b.re / b.im;
            let d = b.re * r + b.im;
            CNum::new((self.re * r + self.im) / d, (self.im * r - self.re) / d)
        }
    }
}

impl<R: Real> Add<R> for CNum<R> {
    type Output = Self;
    fn add(self, b: R) -> Self {
        CNum::new(self.re + b, self.im)
    }
}

impl<R: Real> Sub<R> for CNum<R> {
    type Output = Self;
    fn sub(self, b: R) -> Self {
        CNum::new(self.re - b, self.im)
    }
}

impl<R: Real> Mul<R> for CNum<R> {
    type Output = Self;
    fn mul(self, b: R) -> Self {
        self.scale(b)
    }
}

impl<R: Real> Div<R> for CNum<R> {
    type Output = Self;
    fn div(self, b: R) -> Self {
        CNum::new(self.re / b, self.im / b)
    }
}

macro_rules! assign_ops {
    ($($trait:ident $method:ident $op:tt),*) => {$(
        impl<R: Real> $trait for CNum<R> {
            fn $method(&mut self, rhs: Self) {
                *self = *self $op rhs;
            }
        }
    )*};
}
assign_ops!(AddAssign add_assign +, SubAssign sub_assign -, MulAssign mul_assign *, DivAssign div_assign /);

impl<R: Real> std::iter::Sum for CNum<R> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(CNum::zero(), |a, b| a + b)
    }
}

//! Double-double arithmetic: an unevaluated sum `hi + lo` of two `f64`
//! with `|lo| <= ulp(hi)/2`, carrying about 32 significant decimal digits.
//!
//! Arithmetic follows the error-free transformations of Dekker and Knuth;
//! the transcendental functions use argument reduction plus Taylor series
//! (`exp`, `sin`, `cos`) or one Newton step from the `f64` value (`ln`,
//! `atan2`).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{FromPrimitive, Signed, ToPrimitive, Zero};

use super::real::Real;
use crate::BigRat;

#[derive(Clone, Copy, Debug, Default)]
pub struct Dd {
    hi: f64,
    lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };
    pub const PI: Dd = Dd {
        hi: std::f64::consts::PI,
        lo: 1.2246467991473532e-16,
    };
    pub const TAU: Dd = Dd {
        hi: std::f64::consts::TAU,
        lo: 2.4492935982947064e-16,
    };
    pub const FRAC_PI_2: Dd = Dd {
        hi: std::f64::consts::FRAC_PI_2,
        lo: 6.123233995736766e-17,
    };
    pub const LN_2: Dd = Dd {
        hi: std::f64::consts::LN_2,
        lo: 2.3190468138462996e-17,
    };
    pub const E: Dd = Dd {
        hi: std::f64::consts::E,
        lo: 1.4456468917292502e-16,
    };
    pub const LN_PI: Dd = Dd {
        hi: 1.1447298858494002,
        lo: 1.0265951162707826e-17,
    };
    pub const HALF_LN_TAU: Dd = Dd {
        hi: 0.9189385332046728,
        lo: -3.8782941580672414e-17,
    };
    /// 2^-104
    pub const EPSILON: f64 = 4.930380657631324e-32;

    pub fn new(hi: f64, lo: f64) -> Self {
        let (hi, lo) = quick_two_sum(hi, lo);
        Dd { hi, lo }
    }

    pub const fn from_f64_const(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    pub fn hi(self) -> f64 {
        self.hi
    }

    pub fn lo(self) -> f64 {
        self.lo
    }

    pub fn is_zero(self) -> bool {
        self.hi == 0.0
    }

    fn from_two_sum(a: f64, b: f64) -> Self {
        let (hi, lo) = two_sum(a, b);
        Dd { hi, lo }
    }

    pub fn sqr(self) -> Self {
        let (p1, mut p2) = two_prod(self.hi, self.hi);
        p2 += 2.0 * self.hi * self.lo;
        p2 += self.lo * self.lo;
        let (hi, lo) = quick_two_sum(p1, p2);
        Dd { hi, lo }
    }

    pub fn mul_f64(self, b: f64) -> Self {
        let (p1, mut p2) = two_prod(self.hi, b);
        p2 += self.lo * b;
        let (hi, lo) = quick_two_sum(p1, p2);
        Dd { hi, lo }
    }

    /// `self * 2^k`, exact barring overflow/underflow.
    pub fn ldexp(self, k: i32) -> Self {
        let mut x = self;
        let mut k = k;
        while k != 0 {
            let step = k.clamp(-1000, 1000);
            let f = 2f64.powi(step);
            x = Dd {
                hi: x.hi * f,
                lo: x.lo * f,
            };
            k -= step;
        }
        x
    }

    pub fn from_ratio(r: &BigRat) -> Self {
        let Some(l) = r.approx_log2() else {
            return Dd::ZERO;
        };
        let shift = 112 - l;
        let q = r.scaled_floor(shift);
        let hi = q.to_f64().unwrap_or(f64::INFINITY);
        if !hi.is_finite() {
            return Dd::from_f64_const(if q.is_negative() {
                f64::NEG_INFINITY
            } else {
                f64::INFINITY
            });
        }
        let rem: BigInt = &q - BigInt::from_f64(hi).expect("finite");
        let lo = rem.to_f64().unwrap_or(0.0);
        let (hi, lo) = quick_two_sum(hi, lo);
        let shift = i32::try_from(shift).unwrap_or(if shift > 0 { i32::MAX } else { i32::MIN });
        Dd { hi, lo }.ldexp(-shift)
    }

    pub fn to_ratio(self) -> Option<BigRat> {
        Some(BigRat::from_f64_exact(self.hi)? + BigRat::from_f64_exact(self.lo)?)
    }

    fn taylor_sin_cos(t: Dd) -> (Dd, Dd) {
        // |t| <= π/4 (plus rounding)
        let t2 = t.sqr();
        let thresh = Dd::EPSILON * 1e-2;
        let mut sin = t;
        let mut term = t;
        let mut k = 1.0;
        loop {
            term = -(term * t2) / Dd::from_f64_const((k + 1.0) * (k + 2.0));
            sin += term;
            k += 2.0;
            if term.hi.abs() < thresh {
                break;
            }
        }
        let mut cos = Dd::ONE;
        let mut term = Dd::ONE;
        let mut k = 0.0;
        loop {
            term = -(term * t2) / Dd::from_f64_const((k + 1.0) * (k + 2.0));
            cos += term;
            k += 2.0;
            if term.hi.abs() < thresh {
                break;
            }
        }
        (sin, cos)
    }
}

impl PartialEq for Dd {
    fn eq(&self, other: &Self) -> bool {
        self.hi == other.hi && self.lo == other.lo
    }
}

impl PartialOrd for Dd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi)? {
            Ordering::Equal => self.lo.partial_cmp(&other.lo),
            o => Some(o),
        }
    }
}

impl From<f64> for Dd {
    fn from(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }
}

impl Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Add for Dd {
    type Output = Dd;
    fn add(self, b: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, b.hi);
        let (t1, t2) = two_sum(self.lo, b.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (hi, lo) = quick_two_sum(s1, s2 + t2);
        if !hi.is_finite() {
            return Dd { hi, lo: 0.0 };
        }
        Dd { hi, lo }
    }
}

impl Sub for Dd {
    type Output = Dd;
    fn sub(self, b: Dd) -> Dd {
        self + (-b)
    }
}

impl Mul for Dd {
    type Output = Dd;
    fn mul(self, b: Dd) -> Dd {
        let (p1, mut p2) = two_prod(self.hi, b.hi);
        p2 += self.hi * b.lo + self.lo * b.hi;
        let (hi, lo) = quick_two_sum(p1, p2);
        if !hi.is_finite() {
            return Dd { hi, lo: 0.0 };
        }
        Dd { hi, lo }
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, b: Dd) -> Dd {
        let q1 = self.hi / b.hi;
        if !q1.is_finite() || q1 == 0.0 {
            return Dd { hi: q1, lo: 0.0 };
        }
        let r = self - b.mul_f64(q1);
        let q2 = r.hi / b.hi;
        let r = r - b.mul_f64(q2);
        let q3 = r.hi / b.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo } + Dd::from_f64_const(q3)
    }
}

macro_rules! assign_ops {
    ($($trait:ident $method:ident $op:tt),*) => {$(
        impl $trait for Dd {
            fn $method(&mut self, rhs: Dd) {
                *self = *self $op rhs;
            }
        }
    )*};
}
assign_ops!(AddAssign add_assign +, SubAssign sub_assign -, MulAssign mul_assign *, DivAssign div_assign /);

impl Real for Dd {
    fn epsilon() -> Self {
        Dd::from_f64_const(Dd::EPSILON)
    }
    fn digits() -> u32 {
        31
    }
    fn is_extended() -> bool {
        true
    }
    fn zero() -> Self {
        Dd::ZERO
    }
    fn one() -> Self {
        Dd::ONE
    }
    fn from_f64(x: f64) -> Self {
        Dd::from_f64_const(x)
    }
    fn from_i64(n: i64) -> Self {
        let hi = n as f64;
        let lo = (n as i128 - hi as i128) as f64;
        Dd::new(hi, lo)
    }
    fn from_ratio(r: &BigRat) -> Self {
        Dd::from_ratio(r)
    }
    fn to_f64(self) -> f64 {
        self.hi + self.lo
    }
    fn to_ratio(self) -> Option<BigRat> {
        Dd::to_ratio(self)
    }
    fn pi() -> Self {
        Dd::PI
    }
    fn e() -> Self {
        Dd::E
    }
    fn ln_pi() -> Self {
        Dd::LN_PI
    }
    fn half_ln_tau() -> Self {
        Dd::HALF_LN_TAU
    }
    fn abs(self) -> Self {
        if self.hi < 0.0 {
            -self
        } else {
            self
        }
    }

    fn sqrt(self) -> Self {
        if self.hi == 0.0 {
            return Dd::ZERO;
        }
        if self.hi < 0.0 {
            return Dd::from_f64_const(f64::NAN);
        }
        let x = 1.0 / self.hi.sqrt();
        let ax = self.hi * x;
        let corr = (self - Dd::from_f64_const(ax).sqr()).hi * (x * 0.5);
        Dd::from_two_sum(ax, corr)
    }

    fn exp(self) -> Self {
        if self.hi <= -745.0 {
            return Dd::ZERO;
        }
        if self.hi >= 709.8 {
            return Dd::from_f64_const(f64::INFINITY);
        }
        if self.hi == 0.0 {
            return Dd::ONE;
        }
        // exp(x) = 2^m * (exp(r / 2^10))^(2^10), |r| <= ln2/2
        let m = (self.hi / Dd::LN_2.hi).round();
        let r = (self - Dd::LN_2.mul_f64(m)).ldexp(-10);
        // s = exp(r) - 1 by Taylor
        let mut s = r;
        let mut term = r;
        let mut k = 2.0;
        loop {
            term = term * r / Dd::from_f64_const(k);
            s += term;
            k += 1.0;
            if term.hi.abs() < Dd::EPSILON * 1e-3 {
                break;
            }
        }
        // (1 + s)^2 - 1 = s (2 + s), applied 10 times
        for _ in 0..10 {
            s = s.ldexp(1) + s.sqr();
        }
        (s + Dd::ONE).ldexp(m as i32)
    }

    fn ln(self) -> Self {
        if self.hi <= 0.0 {
            return Dd::from_f64_const(if self.hi == 0.0 { f64::NEG_INFINITY } else { f64::NAN });
        }
        if !self.hi.is_finite() {
            return self;
        }
        // one Newton step on exp(x) = a
        let x = Dd::from_f64_const(self.hi.ln());
        x + self * (-x).exp() - Dd::ONE
    }

    fn sin_cos(self) -> (Self, Self) {
        if self.hi == 0.0 {
            return (Dd::ZERO, Dd::ONE);
        }
        let z = self - Dd::TAU * (self / Dd::TAU).round();
        let j = (z / Dd::FRAC_PI_2).round();
        let t = z - Dd::FRAC_PI_2 * j;
        let (s, c) = Dd::taylor_sin_cos(t);
        match (j.hi as i64).rem_euclid(4) {
            0 => (s, c),
            1 => (c, -s),
            2 => (-s, -c),
            _ => (-c, s),
        }
    }

    fn sinh_cosh(self) -> (Self, Self) {
        if self.hi.abs() < 0.5 {
            let x2 = self.sqr();
            let mut sinh = self;
            let mut term = self;
            let mut k = 1.0;
            loop {
                term = term * x2 / Dd::from_f64_const((k + 1.0) * (k + 2.0));
                sinh += term;
                k += 2.0;
                if term.hi.abs() < Dd::EPSILON * 1e-3 {
                    break;
                }
            }
            let cosh = (Dd::ONE + sinh.sqr()).sqrt();
            (sinh, cosh)
        } else {
            let ex = self.exp();
            let inv = Dd::ONE / ex;
            ((ex - inv).ldexp(-1), (ex + inv).ldexp(-1))
        }
    }

    fn atan2(self, x: Self) -> Self {
        let y = self;
        if x.hi == 0.0 {
            if y.hi == 0.0 {
                return Dd::ZERO;
            }
            return if y.hi > 0.0 { Dd::FRAC_PI_2 } else { -Dd::FRAC_PI_2 };
        }
        if y.hi == 0.0 {
            return if x.hi > 0.0 { Dd::ZERO } else { Dd::PI };
        }
        let r = x.hypot(y);
        let (xx, yy) = (x / r, y / r);
        let mut z = Dd::from_f64_const(y.hi.atan2(x.hi));
        let (s, c) = z.sin_cos();
        if xx.hi.abs() > yy.hi.abs() {
            z += (yy - s) / c;
        } else {
            z -= (xx - c) / s;
        }
        z
    }

    fn floor(self) -> Self {
        let hi = self.hi.floor();
        if hi == self.hi {
            let (hi, lo) = quick_two_sum(hi, self.lo.floor());
            Dd { hi, lo }
        } else {
            Dd { hi, lo: 0.0 }
        }
    }

    fn is_finite(self) -> bool {
        self.hi.is_finite() && self.lo.is_finite()
    }

    fn hypot(self, other: Self) -> Self {
        let (a, b) = (self.abs(), other.abs());
        let (big, small) = if a >= b { (a, b) } else { (b, a) };
        if big.hi == 0.0 {
            return Dd::ZERO;
        }
        let r = small / big;
        big * (Dd::ONE + r.sqr()).sqrt()
    }

    fn fmt_sig(self, digits: usize) -> String {
        format_sig(self, digits.max(1))
    }
}

/// Exact decimal rendering through the rational value of `hi + lo`.
fn format_sig(x: Dd, digits: usize) -> String {
    if !x.hi.is_finite() {
        return format!("{}", x.hi);
    }
    if x.hi == 0.0 {
        return format!("{:.*e}", digits - 1, 0.0);
    }
    let r = x.to_ratio().expect("finite").abs();
    let mut e10 = x.hi.abs().log10().floor() as i64;
    let ten = BigRat::from(10);
    let scaled = |e10: i64| -> BigInt {
        let shift = digits as i64 - 1 - e10;
        let v = &r * ten.pow(shift as i32).expect("nonzero base");
        (v + BigRat::ratio(1, 2)).floor()
    };
    let mut m = scaled(e10);
    let limit = num_traits::Pow::pow(BigInt::from(10), digits as u32);
    if m >= limit {
        e10 += 1;
        m = scaled(e10);
    } else if m < &limit / 10 {
        e10 -= 1;
        m = scaled(e10);
    }
    let s = m.to_string();
    let sign = if x.hi < 0.0 { "-" } else { "" };
    let (lead, rest) = s.split_at(1);
    if rest.is_empty() || m.is_zero() {
        format!("{sign}{lead}e{e10}")
    } else {
        format!("{sign}{lead}.{rest}e{e10}")
    }
}

impl fmt::Display for Dd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(32);
        f.write_str(&format_sig(*self, digits))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dd(s: &str) -> Dd {
        Dd::from_ratio(&s.parse::<BigRat>().unwrap())
    }

    fn rel(a: Dd, b: Dd) -> f64 {
        ((a - b) / b).abs().to_f64()
    }

    // Reference values from a 50-digit evaluation.
    #[test]
    fn transcendentals_against_reference() {
        let third = Dd::ONE / Dd::from(3.0);
        let cases = [
            (third.exp(), dd("1.39561242508608952862812531960258683759790652")),
            (third.ln(), dd("-1.09861228866810969139524523692252570464749056")),
            (third.sin(), dd("0.327194696796152244173344085267620606064301407")),
            (third.cos(), dd("0.9449569463147376643882840076758806078458527")),
            (
                Dd::from(2.0).sqrt(),
                dd("1.41421356237309504880168872420969807856967188"),
            ),
            (
                dd("0.7").atan2(dd("0.3")),
                dd("1.16590454050981319591924876263030882554669806"),
            ),
            (dd("10.5").exp(), dd("36315.502674246637738912026901316617968931558")),
            (
                dd("-3.25").exp(),
                dd("0.0387742078317220098868998352675961432601440619"),
            ),
            (dd("1234.5").ln(), dd("7.11842130878523419388788608090972728070052339")),
            (dd("100").sin(), dd("-0.506365641109758793656557610459785432065032721")),
        ];
        for (i, (got, want)) in cases.iter().enumerate() {
            assert!(rel(*got, *want) < 1e-30, "case {i}: {got} vs {want}");
        }
    }

    #[test]
    fn constants_are_consistent() {
        assert!(rel(Dd::ONE.exp(), Dd::E) < 1e-31);
        assert!(rel(Dd::from(2.0).ln(), Dd::LN_2) < 1e-31);
        assert!(rel(Dd::PI.ln(), Dd::LN_PI) < 1e-31);
        assert!((Dd::PI.sin()).abs().to_f64() < 1e-31);
        assert!(rel(Dd::FRAC_PI_2.ldexp(1), Dd::PI) < 1e-32);
    }

    #[test]
    fn division_and_ratio_round_trip() {
        let x = Dd::ONE / Dd::from(7.0);
        let back = x * Dd::from(7.0);
        assert!((back - Dd::ONE).abs().to_f64() < 1e-31);
        let r = BigRat::ratio(355, 113);
        assert!(rel(Dd::from_ratio(&r), Dd::from(355.0) / Dd::from(113.0)) < 1e-31);
        assert_eq!(Dd::from_ratio(&BigRat::zero()), Dd::ZERO);
        let huge = BigRat::from(10).pow(400).unwrap() / BigRat::from(10).pow(399).unwrap();
        assert!(rel(Dd::from_ratio(&huge), Dd::from(10.0)) < 1e-31);
    }

    #[test]
    fn formatting() {
        assert_eq!(Dd::from(1.5).fmt_sig(3), "1.50e0");
        let third = Dd::ONE / Dd::from(3.0);
        assert_eq!(third.fmt_sig(30), "3.33333333333333333333333333333e-1");
        assert_eq!((-Dd::PI).fmt_sig(20), "-3.1415926535897932385e0");
        assert_eq!(Dd::from(9.9999).fmt_sig(2), "1.0e1");
    }

    #[test]
    fn floor_and_round() {
        assert_eq!(Dd::from(2.5).floor(), Dd::from(2.0));
        assert_eq!(Dd::from(-2.5).floor(), Dd::from(-3.0));
        assert_eq!(Dd::new(3.0, -1e-20).floor(), Dd::from(2.0));
        assert_eq!(Dd::from(2.5).round(), Dd::from(3.0));
    }
}

//! The integer slope condition: `Γ(φ(z+1))/Γ(φ(z))` with `φ(z) = αz + β` is
//! a rational function of `z` exactly when `α ∈ ℤ`.

use std::fmt;

use crate::complexfn::{gamma_ratio, C64};
use crate::holonomic::{Poly2, RationalFn};
use crate::{BigRat, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlopeRatioKind {
    Rational,
    NonRational,
}

/// `∏_j (k z + s_j)` or its reciprocal, with `k = α`.
#[derive(Clone, Debug, PartialEq)]
pub struct SlopeRationalForm {
    pub alpha: i64,
    pub shifts: Vec<C64>,
    pub reciprocal: bool,
}

impl SlopeRationalForm {
    pub fn eval(&self, z: C64) -> C64 {
        let p = self
            .shifts
            .iter()
            .fold(C64::one(), |acc, &s| acc * (z * self.alpha as f64 + s));
        if self.reciprocal {
            p.recip()
        } else {
            p
        }
    }

    /// The form as an exact [`RationalFn`] in `z`; needs real shifts (every
    /// finite `f64` is an exact rational).
    pub fn to_rational_fn(&self) -> Result<RationalFn> {
        let mut p = Poly2::one();
        for s in &self.shifts {
            if s.im != 0.0 {
                return Err(Error::InvalidArgument(
                    "complex shift has no rational-coefficient form".into(),
                ));
            }
            let s = BigRat::from_f64_exact(s.re).ok_or_else(|| Error::InvalidArgument("non-finite shift".into()))?;
            let factor = &Poly2::z().scale(&BigRat::from(self.alpha)) + &Poly2::constant(s);
            p = p.checked_mul(&factor)?;
        }
        let p = RationalFn::poly(p);
        if self.reciprocal {
            p.recip()
        } else {
            Ok(p)
        }
    }
}

impl fmt::Display for SlopeRationalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors: Vec<String> = self
            .shifts
            .iter()
            .map(|s| {
                let lin = match self.alpha {
                    1 => "z".to_string(),
                    -1 => "-z".to_string(),
                    k => format!("{k}z"),
                };
                if s.is_zero() {
                    format!("({lin})")
                } else {
                    let c = compact(*s);
                    if c.starts_with('-') {
                        format!("({lin}{c})")
                    } else {
                        format!("({lin}+{c})")
                    }
                }
            })
            .collect();
        if self.reciprocal {
            write!(f, "1/[{}]", factors.join(""))
        } else {
            write!(f, "{}", factors.join(""))
        }
    }
}

/// Shortest round-trip text for a shift, parenthesized when complex.
fn compact(s: C64) -> String {
    if s.im == 0.0 {
        format!("{}", s.re)
    } else {
        let sign = if s.im < 0.0 { '-' } else { '+' };
        format!("+({}{sign}{}i)", s.re, s.im.abs())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SlopeRatioResult {
    pub kind: SlopeRatioKind,
    pub rational_form: Option<SlopeRationalForm>,
}

/// Decides whether `Γ(α(z+1) + β)/Γ(αz + β)` is rational in `z` and, if so,
/// returns it: `∏_{j<k}(αz+β+j)` for `α = k > 0`, and
/// `1/∏_{j<k}(αz+β−k+j)` for `α = −k < 0`.
pub fn slope_ratio(alpha: &BigRat, beta: C64) -> Result<SlopeRatioResult> {
    if alpha.is_zero() {
        return Err(Error::InvalidArgument("slope alpha must be nonzero".into()));
    }
    let Some(k) = alpha.to_i64() else {
        return Ok(SlopeRatioResult {
            kind: SlopeRatioKind::NonRational,
            rational_form: None,
        });
    };
    let m = k.unsigned_abs() as i64;
    if m > 64 {
        return Err(Error::InvalidArgument(format!("|alpha| = {m} is too large to expand")));
    }
    let offset = if k > 0 { 0 } else { -m };
    let shifts = (0..m).map(|j| beta + (offset + j) as f64).collect();
    Ok(SlopeRatioResult {
        kind: SlopeRatioKind::Rational,
        rational_form: Some(SlopeRationalForm {
            alpha: k,
            shifts,
            reciprocal: k < 0,
        }),
    })
}

/// Max over `samples` of `|Γ-ratio − form| / |Γ-ratio|`.
pub fn slope_ratio_numeric_check(result: &SlopeRatioResult, alpha: &BigRat, beta: C64, samples: &[C64]) -> Result<f64> {
    let form = result
        .rational_form
        .as_ref()
        .ok_or_else(|| Error::InvalidArgument("numeric check needs a rational slope ratio".into()))?;
    let a = alpha.to_f64();
    let mut worst = 0.0_f64;
    for &z in samples {
        let phi = z * a + beta;
        let exact = gamma_ratio(phi + a, phi)?;
        if exact.is_zero() {
            return Err(Error::Pole {
                function: "slope ratio",
                at: format!("z = {z}"),
            });
        }
        worst = worst.max((exact - form.eval(z)).abs() / exact.abs());
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn known_cases() {
        let r = slope_ratio(&BigRat::from(1), C64::zero()).unwrap();
        assert_eq!(r.kind, SlopeRatioKind::Rational);
        assert_eq!(
            r.rational_form.as_ref().unwrap().to_rational_fn().unwrap().to_string(),
            "z"
        );

        let r = slope_ratio(&BigRat::from(2), C64::zero()).unwrap();
        let f = r.rational_form.unwrap();
        assert_eq!(f.to_rational_fn().unwrap().to_string(), "4*z^2 + 2*z");
        assert_eq!(f.to_string(), "(2z)(2z+1)");

        let r = slope_ratio(&BigRat::ratio(1, 2), C64::zero()).unwrap();
        assert_eq!(r.kind, SlopeRatioKind::NonRational);
        assert!(r.rational_form.is_none());

        let r = slope_ratio(&BigRat::from(-1), C64::zero()).unwrap();
        let f = r.rational_form.unwrap();
        assert_eq!(f.to_rational_fn().unwrap().to_string(), "1/(-z - 1)");
        assert_eq!(f.to_string(), "1/[(-z-1)]");

        assert!(slope_ratio(&BigRat::zero(), C64::zero()).is_err());
    }

    #[test]
    fn numeric_agreement() {
        let a = BigRat::from(1);
        let r = slope_ratio(&a, C64::zero()).unwrap();
        let dev = slope_ratio_numeric_check(&r, &a, C64::zero(), &[c(2.0, 0.0), c(3.0, 1.0), c(0.5, 0.0)]).unwrap();
        assert!(dev < 1e-12);

        let samples: Vec<C64> = (0..20)
            .map(|k| c(0.3 + 0.17 * k as f64, 0.9 - 0.11 * k as f64))
            .collect();
        for (alpha, beta) in [(3, c(1.0, 0.0)), (-2, c(0.5, 0.0))] {
            let a = BigRat::from(alpha);
            let r = slope_ratio(&a, beta).unwrap();
            let dev = slope_ratio_numeric_check(&r, &a, beta, &samples).unwrap();
            assert!(dev < 1e-10, "alpha {alpha}: {dev}");
        }
    }

    #[test]
    fn non_rational_has_no_numeric_check() {
        let a = BigRat::ratio(5, 3);
        let r = slope_ratio(&a, C64::zero()).unwrap();
        assert!(slope_ratio_numeric_check(&r, &a, C64::zero(), &[c(1.0, 0.0)]).is_err());
    }
}

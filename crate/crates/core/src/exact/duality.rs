//! The linear forms `(-1)^m f(m)/f(0) = a_m - e b_m` and
//! `(-1)^m g(m)/g(0) = p_m - π q_m`.

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;
use serde_json::value::RawValue;

use super::combinatorics::{derangements, double_factorial, factorial};
use crate::complexfn::Real;
use crate::{BigRat, Error, Result};

/// `K_m = a - e·b` with nonnegative integers `a`, `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearFormE {
    pub a: BigUint,
    pub b: BigUint,
}

/// `K_m = p - π·q` with nonnegative rationals `p`, `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearFormPi {
    pub p: BigRat,
    pub q: BigRat,
}

impl LinearFormE {
    pub fn value<R: Real>(&self) -> R {
        R::from_ratio(&BigRat::from(self.a.clone())) - R::e() * R::from_ratio(&BigRat::from(self.b.clone()))
    }

    /// `a + e·b`, the scale for relative residuals.
    pub fn magnitude<R: Real>(&self) -> R {
        R::from_ratio(&BigRat::from(self.a.clone())) + R::e() * R::from_ratio(&BigRat::from(self.b.clone()))
    }

    /// `{"m":…, "a":…, "b":…}` with `a`, `b` as bare JSON integers.
    pub fn to_json_record(&self, m: u64) -> String {
        #[derive(Serialize)]
        struct Record {
            m: u64,
            a: Box<RawValue>,
            b: Box<RawValue>,
        }
        let raw = |n: &BigUint| RawValue::from_string(n.to_string()).expect("integer literal is valid JSON");
        let rec = Record {
            m,
            a: raw(&self.a),
            b: raw(&self.b),
        };
        serde_json::to_string(&rec).expect("record serializes")
    }
}

impl LinearFormPi {
    pub fn value<R: Real>(&self) -> R {
        R::from_ratio(&self.p) - R::pi() * R::from_ratio(&self.q)
    }

    pub fn magnitude<R: Real>(&self) -> R {
        R::from_ratio(&self.p) + R::pi() * R::from_ratio(&self.q)
    }

    /// `{"m":…, "p":"num/den", "q":"num/den"}`
    pub fn to_json_record(&self, m: u64) -> String {
        serde_json::json!({
            "m": m,
            "p": self.p.to_fraction_string(),
            "q": self.q.to_fraction_string(),
        })
        .to_string()
    }
}

/// `(a_m, b_m)` for `m = 0..=m_max`, computed from the recurrences
/// `a_{m+1} = (m+2) a_m`, `b_{m+1} = (m+2) b_m + (-1)^m` and checked against
/// `a_m = (m+1)!`, `b_m = D_{m+1}`.
pub fn duality_forms_e(m_max: u64) -> Result<Vec<LinearFormE>> {
    let mut out = Vec::with_capacity(m_max as usize + 1);
    let mut a = BigUint::one();
    let mut b = BigUint::from(0u32);
    let d = derangements(m_max + 1);
    let mut fact = BigUint::one();
    for m in 0..=m_max {
        fact *= m + 1;
        if a != fact || b != d[m as usize + 1] {
            return Err(Error::Consistency(format!(
                "e-world form at m = {m}: recurrence ({a}, {b}) vs closed form ({fact}, {})",
                d[m as usize + 1]
            )));
        }
        out.push(LinearFormE {
            a: a.clone(),
            b: b.clone(),
        });
        a *= m + 2;
        // b_{m+1} = (m+2) b_m + (-1)^m; b stays nonnegative since b_m >= 1 for odd m.
        b *= m + 2;
        if m % 2 == 0 {
            b += 1u32;
        } else {
            b -= 1u32;
        }
    }
    debug_assert_eq!(out.last().map(|f| &f.a), Some(&factorial(m_max + 1)));
    Ok(out)
}

pub fn duality_form_e(m: u64) -> Result<LinearFormE> {
    Ok(duality_forms_e(m)?.pop().expect("nonempty"))
}

fn closed_form_pi(m: u64) -> Result<LinearFormPi> {
    if m == 0 {
        return Ok(LinearFormPi {
            p: BigRat::one(),
            q: BigRat::zero(),
        });
    }
    let df = |k: i64| double_factorial(k).map(BigRat::from);
    let half = BigRat::ratio(1, 2);
    let k = (m / 2) as i64;
    if m.is_multiple_of(2) {
        Ok(LinearFormPi {
            p: df(2 * k)? / df(2 * k - 1)?,
            q: &half * (df(2 * k - 1)? / df(2 * k - 2)?),
        })
    } else {
        Ok(LinearFormPi {
            p: df(2 * k)? / df(2 * k - 1)?,
            q: &half * (df(2 * k + 1)? / df(2 * k)?),
        })
    }
}

/// `(p_m, q_m)` for `m = 0..=m_max` from the recurrences
/// `p_{m+2} = p_m + p_{m+1}/(m+1)` (same for `q`), each checked exactly
/// against the double-factorial closed forms.
pub fn duality_forms_pi(m_max: u64) -> Result<Vec<LinearFormPi>> {
    let mut p = vec![BigRat::one(), BigRat::one()];
    let mut q = vec![BigRat::zero(), BigRat::ratio(1, 2)];
    for m in 0..m_max.saturating_sub(1) as usize {
        let denom = BigRat::from(m as i64 + 1);
        p.push(&p[m] + &p[m + 1] / &denom);
        q.push(&q[m] + &q[m + 1] / &denom);
    }
    let mut out = Vec::with_capacity(m_max as usize + 1);
    for m in 0..=m_max as usize {
        let rec = LinearFormPi {
            p: p[m].clone(),
            q: q[m].clone(),
        };
        let closed = closed_form_pi(m as u64)?;
        if rec != closed {
            return Err(Error::Consistency(format!(
                "π-world form at m = {m}: recurrence ({}, {}) vs closed form ({}, {})",
                rec.p, rec.q, closed.p, closed.q
            )));
        }
        out.push(rec);
    }
    Ok(out)
}

pub fn duality_form_pi(m: u64) -> Result<LinearFormPi> {
    Ok(duality_forms_pi(m)?.pop().expect("nonempty"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e_form(a: u64, b: u64) -> LinearFormE {
        LinearFormE {
            a: a.into(),
            b: b.into(),
        }
    }

    #[test]
    fn e_forms_small() {
        assert_eq!(duality_form_e(0).unwrap(), e_form(1, 0));
        assert_eq!(duality_form_e(1).unwrap(), e_form(2, 1));
        // iterate a/b from (1, 0): (2, 1), (6, 2), (24, 9)
        assert_eq!(duality_form_e(3).unwrap(), e_form(24, 9));
    }

    #[test]
    fn pi_forms_small() {
        let f = |m| duality_form_pi(m).unwrap();
        assert_eq!(
            f(0),
            LinearFormPi {
                p: BigRat::one(),
                q: BigRat::zero()
            }
        );
        assert_eq!(
            f(1),
            LinearFormPi {
                p: BigRat::one(),
                q: BigRat::ratio(1, 2)
            }
        );
        assert_eq!(
            f(2),
            LinearFormPi {
                p: BigRat::from(2),
                q: BigRat::ratio(1, 2)
            }
        );
        assert_eq!(
            f(3),
            LinearFormPi {
                p: BigRat::from(2),
                q: BigRat::ratio(3, 4)
            }
        );
    }

    #[test]
    fn e_recurrences_hold_to_200() {
        let forms = duality_forms_e(201).unwrap();
        let d = derangements(202);
        for m in 0..=200usize {
            let (cur, next) = (&forms[m], &forms[m + 1]);
            assert_eq!(next.a, &cur.a * (m as u64 + 2));
            let scaled = &cur.b * (m as u64 + 2);
            let expected = if m % 2 == 0 { scaled + 1u32 } else { scaled - 1u32 };
            assert_eq!(next.b, expected);
            assert_eq!(cur.b, d[m + 1]);
        }
    }

    #[test]
    fn pi_freeze_properties() {
        let forms = duality_forms_pi(201).unwrap();
        for k in 1..=100usize {
            assert_eq!(forms[2 * k + 1].p, forms[2 * k].p);
            assert_eq!(forms[2 * k].q, forms[2 * k - 1].q);
        }
    }

    #[test]
    fn values_match_known_constants() {
        let k1: f64 = duality_form_e(1).unwrap().value();
        assert!((k1 - (2.0 - std::f64::consts::E)).abs() < 1e-15);
        let k1: f64 = duality_form_pi(1).unwrap().value();
        assert!((k1 - (1.0 - std::f64::consts::FRAC_PI_2)).abs() < 1e-15);
    }

    #[test]
    fn json_records() {
        assert_eq!(duality_form_e(3).unwrap().to_json_record(3), r#"{"m":3,"a":24,"b":9}"#);
        let rec: serde_json::Value = serde_json::from_str(&duality_form_pi(3).unwrap().to_json_record(3)).unwrap();
        assert_eq!(rec["p"], "2/1");
        assert_eq!(rec["q"], "3/4");
        let big = duality_form_e(40).unwrap().to_json_record(40);
        let parsed: serde_json::Value = serde_json::from_str(&big).unwrap();
        assert!(parsed["a"].is_number());
    }
}

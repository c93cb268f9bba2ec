//! Generating-function ODE certificates, checked coefficient by coefficient
//! in exact arithmetic after clearing the `1/x` singular coefficient.

use serde::Serialize;

use crate::holonomic::{eval_sequence, gamma_recurrence, mirror_e, mirror_pi, PRecurrence};
use crate::{BigRat, Error, Result};

use super::series::PowerSeries;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OdeCheck {
    pub pass: bool,
    pub first_failure: Option<usize>,
    pub order: usize,
}

/// `Σ_{n≥n0} u_n x^n` through `x^order`.
pub fn generating_series(rec: &PRecurrence, z: &BigRat, order: usize) -> Result<PowerSeries> {
    let n0 = rec.initial_index();
    if n0 < 0 {
        return Err(Error::InvalidArgument("generating series needs n0 >= 0".into()));
    }
    let n_max = (order as i64).max(n0 + rec.order() as i64);
    let mut s = PowerSeries::zero(order);
    for p in eval_sequence(rec, z, n_max)? {
        s.set_coeff(p.n as usize, p.value);
    }
    Ok(s)
}

fn poly(p: &[BigRat], order: usize) -> PowerSeries {
    PowerSeries::from_poly(p, order)
}

fn verdict(residual: &PowerSeries, order: usize) -> OdeCheck {
    let first_failure = residual.truncate(order).first_nonzero();
    OdeCheck {
        pass: first_failure.is_none(),
        first_failure,
        order,
    }
}

fn r(v: i64) -> BigRat {
    BigRat::from(v)
}

/// `x(1−x)U′ − U(x² − x + 2 − m + m x) − m x²` for a given `U`.
pub fn ode_residual_e(m: &BigRat, u: &PowerSeries) -> PowerSeries {
    let order = u.order();
    let lhs = &poly(&[r(0), r(1), r(-1)], order) * &u.derivative();
    let q = poly(&[r(2) - m, m - r(1), r(1)], order);
    let rhs = &(&q * u) + &poly(&[r(0), r(0), m.clone()], order);
    &lhs - &rhs
}

/// `x(1−x²)V′ + V(m − 2 − x − m x²) − m x²` for a given `V`.
pub fn ode_residual_pi(m: &BigRat, v: &PowerSeries) -> PowerSeries {
    let order = v.order();
    let lhs = &poly(&[r(0), r(1), r(0), r(-1)], order) * &v.derivative();
    let q = poly(&[m - r(2), r(-1), -m], order);
    &(&lhs + &(&q * v)) - &poly(&[r(0), r(0), m.clone()], order)
}

/// `x(1−x)W′ + (z − 1 − x)W − z x` for a given `W`.
pub fn ode_residual_gamma(z: &BigRat, w: &PowerSeries) -> PowerSeries {
    let order = w.order();
    let lhs = &poly(&[r(0), r(1), r(-1)], order) * &w.derivative();
    let q = poly(&[z - r(1), r(-1)], order);
    &(&lhs + &(&q * w)) - &poly(&[r(0), z.clone()], order)
}

fn check_order(n: usize) -> Result<()> {
    if n < 10 {
        return Err(Error::InvalidArgument(format!(
            "certificate order must be >= 10, got {n}"
        )));
    }
    Ok(())
}

/// Certifies the e-world ODE for `U_m = Σ u_n(m) x^n` through `x^n_order`.
pub fn ode_series_check_e(m: u64, n_order: usize) -> Result<OdeCheck> {
    check_order(n_order)?;
    let m = BigRat::from(m as i64);
    let u = generating_series(&mirror_e(), &m, n_order + 1)?;
    Ok(verdict(&ode_residual_e(&m, &u), n_order))
}

/// Certifies the π-world ODE for `V_m = Σ v_n(m) x^n` through `x^n_order`.
pub fn ode_series_check_pi(m: u64, n_order: usize) -> Result<OdeCheck> {
    check_order(n_order)?;
    let m = BigRat::from(m as i64);
    let v = generating_series(&mirror_pi(), &m, n_order + 1)?;
    Ok(verdict(&ode_residual_pi(&m, &v), n_order))
}

/// Certifies the Γ-triangle ODE for `W = Σ w_n(z) x^n`, `w_1 = 1`.
pub fn ode_series_check_gamma(z: &BigRat, n_order: usize) -> Result<OdeCheck> {
    check_order(n_order)?;
    let w = generating_series(&gamma_recurrence(), z, n_order + 1)?;
    Ok(verdict(&ode_residual_gamma(z, &w), n_order))
}

/// Runs a certificate on `series` after replacing coefficient `index` by
/// `value`; used to show the check is sensitive to corruption.
pub fn ode_check_mutated(
    residual: impl Fn(&BigRat, &PowerSeries) -> PowerSeries,
    param: &BigRat,
    series: &PowerSeries,
    index: usize,
    value: BigRat,
) -> OdeCheck {
    let mut s = series.clone();
    s.set_coeff(index, value);
    let order = s.order() - 1;
    verdict(&residual(param, &s), order)
}

/// Taylor coefficients of `x² e^{−x}/(1−x)²`, the closed form of `U_0`.
pub fn closed_form_u0(order: usize) -> Result<PowerSeries> {
    let num = &PowerSeries::from_i64s(&[0, 0, 1], order) * &PowerSeries::exp_neg_x(order);
    num.div_unit(&PowerSeries::from_i64s(&[1, -2, 1], order))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn e_world_certificates() {
        for m in [0, 3] {
            assert!(ode_series_check_e(m, 100).unwrap().pass);
        }
    }

    #[test]
    fn pi_world_certificates() {
        for m in [0, 2] {
            assert!(ode_series_check_pi(m, 100).unwrap().pass);
        }
    }

    #[test]
    fn gamma_certificates() {
        for z in [
            BigRat::ratio(1, 2),
            BigRat::from(0),
            BigRat::from(3),
            BigRat::ratio(-7, 3),
        ] {
            assert!(ode_series_check_gamma(&z, 60).unwrap().pass, "z = {z}");
        }
    }

    #[test]
    fn mutation_is_caught() {
        let m = BigRat::from(1);
        let u = generating_series(&mirror_e(), &m, 11).unwrap();
        let bad = &u.coeff(5) + &BigRat::ratio(1, 1000);
        let chk = ode_check_mutated(ode_residual_e, &m, &u, 5, bad);
        assert!(!chk.pass);
        assert!(chk.first_failure.unwrap() <= 7);

        let m = BigRat::from(0);
        let v = generating_series(&mirror_pi(), &m, 11).unwrap();
        let chk = ode_check_mutated(ode_residual_pi, &m, &v, 4, BigRat::from(7));
        let at = chk.first_failure.unwrap();
        assert!((3..=6).contains(&at), "{at}");
    }

    #[test]
    fn wrong_ode_fails() {
        // the e-world series does not satisfy the π-world ODE
        let m = BigRat::from(0);
        let u = generating_series(&mirror_e(), &m, 21).unwrap();
        assert!(!verdict(&ode_residual_pi(&m, &u), 20).pass);
    }

    #[test]
    fn closed_form_shadow() {
        let u = generating_series(&mirror_e(), &BigRat::zero(), 30).unwrap();
        let shadow = closed_form_u0(30).unwrap();
        for k in 0..=30 {
            assert!((u.coeff(k).to_f64() - shadow.coeff(k).to_f64()).abs() < 1e-12);
        }
    }

    #[test]
    fn order_precondition() {
        assert!(ode_series_check_e(0, 5).is_err());
    }
}

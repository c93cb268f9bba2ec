//! Power-series evaluators: lower incomplete gamma and Kummer's ₁F₁.

use super::cnum::CNum;
use super::precision::PrecisionConfig;
use super::real::Real;
use crate::{Error, Result};

/// Sums `Σ term_k` produced by `next_term(k, prev)` starting from `first`.
/// Stops after three consecutive terms below `tolerance_abs · |sum|`, or on an
/// exactly zero term (terminating series).
pub(crate) fn sum_series<R: Real>(
    first: CNum<R>,
    cfg: &PrecisionConfig,
    what: &'static str,
    mut next_term: impl FnMut(usize, CNum<R>) -> CNum<R>,
) -> Result<CNum<R>> {
    let tol = R::from_f64(cfg.tolerance_abs);
    let mut sum = first;
    let mut term = first;
    let mut small_run = 0;
    for k in 1..cfg.series_truncation_bound {
        term = next_term(k, term);
        sum += term;
        if term.is_zero() {
            return Ok(sum);
        }
        if !term.is_finite() {
            break;
        }
        if term.abs() <= tol * sum.abs() {
            small_run += 1;
            if small_run == 3 {
                return Ok(sum);
            }
        } else {
            small_run = 0;
        }
    }
    Err(Error::NonConvergence(format!(
        "{what}: series not converged within {} terms",
        cfg.series_truncation_bound
    )))
}

pub fn principal_log<R: Real>(z: CNum<R>) -> Result<CNum<R>> {
    z.ln()
}

pub fn principal_pow<R: Real>(z: CNum<R>, w: CNum<R>) -> Result<CNum<R>> {
    z.powc(w)
}

/// `γ(a, x) = Σ_{k≥0} (-1)^k x^{a+k} / (k! (a+k))` on the principal branch of
/// `x^a`. Errors at `a ∈ {0, -1, -2, ...}`.
pub fn lower_incomplete_gamma<R: Real>(a: CNum<R>, x: R, cfg: &PrecisionConfig) -> Result<CNum<R>> {
    if let Some(k) = a.as_integer() {
        if k <= 0 {
            return Err(Error::Pole {
                function: "lower_incomplete_gamma",
                at: format!("a = {k}"),
            });
        }
    }
    if x == R::zero() {
        if a.re > R::zero() {
            return Ok(CNum::zero());
        }
        return Err(Error::Domain {
            function: "lower_incomplete_gamma",
            reason: "x = 0 requires Re a > 0".into(),
        });
    }
    let xa = CNum::from_real(x).powc(a)?;
    // t_k = (-x)^k / k!, summand t_k / (a + k)
    let mut t = CNum::one();
    let first = CNum::one() / a;
    let s = sum_series(first, cfg, "lower_incomplete_gamma", |k, _| {
        t = t.scale(-x / R::from_i64(k as i64));
        t / (a + R::from_i64(k as i64))
    })?;
    Ok(xa * s)
}

/// Kummer's confluent hypergeometric function `₁F₁(a; b; x)` by its power
/// series. Errors when `b` is a nonpositive integer.
pub fn hyp1f1<R: Real>(a: CNum<R>, b: CNum<R>, x: CNum<R>, cfg: &PrecisionConfig) -> Result<CNum<R>> {
    if let Some(k) = b.as_integer() {
        if k <= 0 {
            return Err(Error::Pole {
                function: "hyp1f1",
                at: format!("b = {k}"),
            });
        }
    }
    sum_series(CNum::one(), cfg, "hyp1f1", |k, prev| {
        let j = R::from_i64(k as i64 - 1);
        prev * (a + j) / ((b + j) * R::from_i64(k as i64)) * x
    })
}

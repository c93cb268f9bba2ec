use crate::complexfn::{gamma_ratio, hyp1f1, lower_incomplete_gamma, sum_series, CNum, PrecisionConfig, Real};
use crate::{Error, Result};

fn f_pole_check<R: Real>(z: CNum<R>, function: &'static str) -> Result<()> {
    match z.as_integer() {
        Some(k) if k <= -2 => Err(Error::Pole {
            function,
            at: format!("z = {k} (poles at -2, -3, -4, ...)"),
        }),
        _ => Ok(()),
    }
}

/// `f(z) = e^{-1} Σ_{k≥0} 1/(k! (z+2+k))`.
pub fn f_eval<R: Real>(z: CNum<R>) -> Result<CNum<R>> {
    f_pole_check(z, "f")?;
    let cfg = PrecisionConfig::for_real::<R>();
    let a = z + R::from_i64(2);
    let mut fact = R::one();
    let s = sum_series(a.recip(), &cfg, "f series", |k, _| {
        fact *= R::from_i64(k as i64);
        (a + R::from_i64(k as i64)).recip() / fact
    })?;
    Ok(s * (-R::one()).exp())
}

/// `f(z) = e^{-1-iπz} γ(z+2, -1)` on the principal branch.
pub fn f_eval_gamma_route<R: Real>(z: CNum<R>) -> Result<CNum<R>> {
    f_pole_check(z, "f (incomplete gamma route)")?;
    let cfg = PrecisionConfig::for_real::<R>();
    let g = lower_incomplete_gamma(z + R::from_i64(2), -R::one(), &cfg)?;
    let phase = (CNum::i() * z * R::pi() + R::one()).scale(-R::one()).exp();
    Ok(phase * g)
}

/// `f(z) = ₁F₁(2; z+2; -1)/(z+1)`. The singularity at `z = -1` is removable
/// for `f` but not for this formula, so it is reported as a pole here.
pub fn f_eval_confluent<R: Real>(z: CNum<R>) -> Result<CNum<R>> {
    f_pole_check(z, "f (confluent route)")?;
    let zp1 = z + R::one();
    if zp1.is_zero() {
        return Err(Error::Pole {
            function: "f (confluent route, removable)",
            at: "z = -1".into(),
        });
    }
    let cfg = PrecisionConfig::for_real::<R>();
    let two = CNum::from_real(R::from_i64(2));
    Ok(hyp1f1(two, z + R::from_i64(2), CNum::from_real(-R::one()), &cfg)? / zp1)
}

/// `A(z) = Γ(z/2 + 1)/Γ((z+1)/2)`; zero where the denominator has a pole.
pub fn a_function<R: Real>(z: CNum<R>) -> Result<CNum<R>> {
    let half = R::from_f64(0.5);
    gamma_ratio(z * half + R::one(), (z + R::one()) * half)
}

/// `g(z) = √2 (A(z) − A(z−1))`.
pub fn g_eval<R: Real>(z: CNum<R>) -> Result<CNum<R>> {
    if let Some(k) = z.as_integer() {
        if k < 0 {
            return Err(Error::Pole {
                function: "g",
                at: format!("z = {k} (poles at -1, -2, -3, ...)"),
            });
        }
    }
    let d = a_function(z)? - a_function(z - R::one())?;
    Ok(d * R::from_i64(2).sqrt())
}

//! Γ and log Γ over [`CNum`].
//!
//! Double precision uses the Lanczos approximation (g = 7, nine terms) with
//! reflection for `Re z < 1/2`. Extended precision uses Stirling's series
//! with Bernoulli corrections after raising the argument to `|z| ≥ 35`.

use std::sync::OnceLock;

use super::cnum::CNum;
use super::real::Real;
use crate::{BigRat, Error, Result};

const LANCZOS_G: f64 = 7.0;
// published coefficients, kept verbatim
#[allow(clippy::excessive_precision)]
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

const STIRLING_MIN_ABS: f64 = 35.0;
const STIRLING_TERMS: usize = 30;

/// `B_{2k} / (2k (2k-1))` for `k = 1..=STIRLING_TERMS`, exact.
fn stirling_coefficients() -> &'static [BigRat] {
    static COEFFS: OnceLock<Vec<BigRat>> = OnceLock::new();
    COEFFS.get_or_init(|| {
        let bern = bernoulli_numbers(2 * STIRLING_TERMS);
        (1..=STIRLING_TERMS)
            .map(|k| &bern[2 * k] / BigRat::from((2 * k * (2 * k - 1)) as i64))
            .collect()
    })
}

/// `B_0..=B_n` from `Σ_{j=0}^{m} C(m+1, j) B_j = 0`.
pub(crate) fn bernoulli_numbers(n: usize) -> Vec<BigRat> {
    let mut b = vec![BigRat::one()];
    for m in 1..=n {
        let mut binom = BigRat::one(); // C(m+1, 0)
        let mut acc = BigRat::zero();
        for (j, bj) in b.iter().enumerate() {
            acc += &binom * bj;
            binom = binom * BigRat::from((m + 1 - j) as i64) / BigRat::from(j as i64 + 1);
        }
        b.push(-acc / BigRat::from(m as i64 + 1));
    }
    b
}

fn pole_check<R: Real>(z: CNum<R>, function: &'static str) -> Result<()> {
    if let Some(k) = z.as_integer() {
        if k <= 0 {
            return Err(Error::Pole {
                function,
                at: k.to_string(),
            });
        }
    }
    Ok(())
}

fn half<R: Real>() -> R {
    R::from_f64(0.5)
}

/// Lanczos sum and `t = z + g - 1/2` for `Γ(z)`, valid for `Re z ≥ 1/2`.
fn lanczos_parts<R: Real>(z: CNum<R>) -> (CNum<R>, CNum<R>) {
    let zm1 = z - R::one();
    let mut x = CNum::from_real(R::from_f64(LANCZOS_COEFFS[0]));
    for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        x += CNum::from_real(R::from_f64(c)) / (zm1 + R::from_i64(i as i64));
    }
    let t = zm1 + R::from_f64(LANCZOS_G + 0.5);
    (x, t)
}

fn stirling_ln_gamma<R: Real>(z: CNum<R>) -> Result<CNum<R>> {
    let mut w = z;
    let mut product = CNum::one();
    if z.abs() < R::from_f64(STIRLING_MIN_ABS) {
        let shift = (R::from_f64(STIRLING_MIN_ABS) - z.re).floor().to_f64().max(0.0) as i64 + 1;
        for _ in 0..shift {
            product *= w;
            w = w + R::one();
        }
    }
    let ln_w = w.ln()?;
    let mut sum = (w - half::<R>()) * ln_w - w + CNum::from_real(R::half_ln_tau());
    let w2 = w * w;
    let mut wpow = w; // w^(2k-1)
    let threshold = R::epsilon() * R::from_f64(1e-2);
    for c in stirling_coefficients() {
        let term = CNum::from_real(R::from_ratio(c)) / wpow;
        sum += term;
        if term.abs() < threshold * sum.abs() {
            break;
        }
        wpow *= w2;
    }
    if product != CNum::one() {
        sum -= product.ln()?;
    }
    Ok(sum)
}

/// `ln Γ(z)` for `Re z ≥ 1/2`.
fn ln_gamma_right<R: Real>(z: CNum<R>) -> Result<CNum<R>> {
    if R::is_extended() {
        stirling_ln_gamma(z)
    } else {
        let (x, t) = lanczos_parts(z);
        Ok((z - half::<R>()) * t.ln()? - t + CNum::from_real(R::half_ln_tau()) + x.ln()?)
    }
}

/// Euler Γ. Errors at the poles `{0, -1, -2, ...}`.
pub fn gamma<R: Real>(z: CNum<R>) -> Result<CNum<R>> {
    pole_check(z, "gamma")?;
    if z.re < half::<R>() {
        let s = z.sin_pi();
        let g = gamma(CNum::one() - z)?;
        return Ok(CNum::from_real(R::pi()) / (s * g));
    }
    if R::is_extended() {
        return Ok(stirling_ln_gamma(z)?.exp());
    }
    let (x, t) = lanczos_parts(z);
    let sqrt_tau = R::half_ln_tau().exp();
    let tpow = t.powc(z - half::<R>())?;
    Ok(tpow * (-t).exp() * x * sqrt_tau)
}

/// A logarithm of Γ with `exp(log_gamma(z)) = gamma(z)`. The branch is the
/// principal one for `Re z ≥ 1/2`; the reflected half-plane carries the
/// branch of `ln π - ln sin(πz) - ln Γ(1-z)`.
pub fn log_gamma<R: Real>(z: CNum<R>) -> Result<CNum<R>> {
    pole_check(z, "log_gamma")?;
    if z.re < half::<R>() {
        let s = z.sin_pi();
        return Ok(CNum::from_real(R::ln_pi()) - s.ln()? - ln_gamma_right(CNum::one() - z)?);
    }
    ln_gamma_right(z)
}

/// `1/Γ(z)`, exactly zero at the poles of Γ.
pub fn rgamma<R: Real>(z: CNum<R>) -> Result<CNum<R>> {
    match z.as_integer() {
        Some(k) if k <= 0 => Ok(CNum::zero()),
        _ => Ok((-log_gamma(z)?).exp()),
    }
}

/// `Γ(a)/Γ(b)` through log Γ; zero when `b` is a pole and `a` is not.
pub fn gamma_ratio<R: Real>(a: CNum<R>, b: CNum<R>) -> Result<CNum<R>> {
    pole_check(a, "gamma_ratio")?;
    if matches!(b.as_integer(), Some(k) if k <= 0) {
        return Ok(CNum::zero());
    }
    Ok((log_gamma(a)? - log_gamma(b)?).exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexfn::C64;
    use crate::Dd;

    fn c(re: f64, im: f64) -> C64 {
        CNum::new(re, im)
    }

    fn rel(a: C64, b: C64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn bernoulli_small() {
        let b = bernoulli_numbers(8);
        assert_eq!(b[1], BigRat::ratio(-1, 2));
        assert_eq!(b[2], BigRat::ratio(1, 6));
        assert_eq!(b[3], BigRat::zero());
        assert_eq!(b[4], BigRat::ratio(-1, 30));
        assert_eq!(b[8], BigRat::ratio(-1, 30));
    }

    #[test]
    fn classical_values() {
        assert!(rel(gamma(c(5.0, 0.0)).unwrap(), c(24.0, 0.0)) < 1e-14);
        let sqrt_pi = std::f64::consts::PI.sqrt();
        assert!(rel(gamma(c(0.5, 0.0)).unwrap(), c(sqrt_pi, 0.0)) < 1e-14);
        assert!(rel(gamma(c(1.5, 0.0)).unwrap(), c(sqrt_pi / 2.0, 0.0)) < 1e-14);
        assert!(rel(gamma(c(-0.5, 0.0)).unwrap(), c(-2.0 * sqrt_pi, 0.0)) < 1e-14);
    }

    #[test]
    fn poles_are_errors() {
        for k in [0.0, -1.0, -7.0] {
            assert!(matches!(gamma(c(k, 0.0)), Err(Error::Pole { .. })));
            assert!(matches!(log_gamma(c(k, 0.0)), Err(Error::Pole { .. })));
            assert_eq!(rgamma(c(k, 0.0)).unwrap(), C64::zero());
        }
        assert!(gamma(c(0.0, 1e-9)).is_ok());
    }

    #[test]
    fn log_gamma_values() {
        assert!(log_gamma(c(1.0, 0.0)).unwrap().abs() < 1e-15);
        assert!(log_gamma(c(2.0, 0.0)).unwrap().abs() < 1e-15);
        let l = log_gamma(c(11.0, 0.0)).unwrap();
        assert!((l.re - 15.104_412_573_075_516).abs() < 1e-13 && l.im.abs() < 1e-15);
    }

    #[test]
    fn extended_matches_reference() {
        // Γ(0.5) = √π and Γ(1/3) to 32 digits
        let half: CNum<Dd> = "0.5".parse().unwrap();
        let got = gamma(half).unwrap();
        let want = Dd::PI.sqrt();
        assert!(((got.re - want) / want).abs().to_f64() < 1e-30);
        let third = CNum::from_real(Dd::ONE / Dd::from(3.0));
        let want: Dd = Dd::from_ratio(&"2.6789385347077476336556929409746776441286893779573".parse().unwrap());
        let got = gamma(third).unwrap();
        assert!(((got.re - want) / want).abs().to_f64() < 1e-28, "{got}");
        assert!(got.im.abs().to_f64() < 1e-30);
    }

    #[test]
    fn extended_and_lanczos_agree_off_axis() {
        for &(re, im) in &[(0.3, 2.0), (-3.7, 1.1), (7.5, -4.0), (12.0, 15.0), (-9.2, -6.5)] {
            let z = c(re, im);
            let lanczos = gamma(z).unwrap();
            let stirling = gamma(z.cast::<Dd>()).unwrap().to_c64();
            assert!(rel(lanczos, stirling) < 5e-14, "z = {z}: {lanczos} vs {stirling}");
        }
    }

    #[test]
    fn gamma_ratio_conventions() {
        assert_eq!(gamma_ratio(c(0.5, 0.0), c(0.0, 0.0)).unwrap(), C64::zero());
        assert!(gamma_ratio(c(-1.0, 0.0), c(0.5, 0.0)).is_err());
        let r = gamma_ratio(c(3.5, 0.0), c(2.5, 0.0)).unwrap();
        assert!(rel(r, c(2.5, 0.0)) < 1e-14);
    }
}

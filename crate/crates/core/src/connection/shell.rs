use crate::complexfn::{log_gamma, CNum, Real, C64};
use crate::{BigRat, Error, Result};

/// One factor `Γ(n + α z + β)^m` of an asymptotic shell.
#[derive(Clone, Debug, PartialEq)]
pub struct GammaFactor {
    pub alpha: BigRat,
    pub beta: C64,
    pub multiplicity: i32,
}

/// `Λ(n, z) = λ^n · n^{ρ(z)} · ∏ Γ(n + α_j z + β_j)^{m_j}` with
/// `ρ(z) = c₁ z + c₀`.
#[derive(Clone, Debug, PartialEq)]
pub struct AsymptoticShell {
    pub lambda: C64,
    pub rho_slope: i64,
    pub rho_intercept: f64,
    pub gamma_factors: Vec<GammaFactor>,
}

impl AsymptoticShell {
    pub fn new(lambda: C64, rho_slope: i64, rho_intercept: f64, gamma_factors: Vec<GammaFactor>) -> Result<Self> {
        if lambda.is_zero() || !lambda.is_finite() {
            return Err(Error::InvalidArgument("shell lambda must be finite and nonzero".into()));
        }
        if !rho_intercept.is_finite() {
            return Err(Error::InvalidArgument("rho intercept must be finite".into()));
        }
        Ok(AsymptoticShell {
            lambda,
            rho_slope,
            rho_intercept,
            gamma_factors,
        })
    }

    /// `n^{c₁ z + c₀}` without Γ factors.
    pub fn power(rho_slope: i64, rho_intercept: f64) -> Self {
        AsymptoticShell {
            lambda: C64::one(),
            rho_slope,
            rho_intercept,
            gamma_factors: Vec::new(),
        }
    }

    /// `Λ = n`, the e-world shell.
    pub fn f_shell() -> Self {
        Self::power(0, 1.0)
    }

    /// `Λ = √n`, the π-world shell.
    pub fn g_shell() -> Self {
        Self::power(0, 0.5)
    }

    /// `Λ = n^{1-z}`, the Γ shell.
    pub fn gamma_shell() -> Self {
        Self::power(-1, 1.0)
    }

    pub fn rho<R: Real>(&self, z: CNum<R>) -> CNum<R> {
        z * R::from_i64(self.rho_slope) + R::from_f64(self.rho_intercept)
    }

    /// `log Λ(n, z)`, accumulated term by term so large `n` never overflows.
    pub fn log_eval<R: Real>(&self, n: i64, z: CNum<R>) -> Result<CNum<R>> {
        if n < 1 {
            return Err(Error::InvalidArgument(format!("shell needs n >= 1, got {n}")));
        }
        let nr = R::from_i64(n);
        let mut acc = self.lambda.cast::<R>().ln()? * nr + self.rho(z) * nr.ln();
        for g in &self.gamma_factors {
            let arg = z * R::from_ratio(&g.alpha) + g.beta.cast::<R>() + nr;
            let lg = log_gamma(arg).map_err(|_| Error::Pole {
                function: "shell Γ factor",
                at: format!("n = {n}, argument {arg}"),
            })?;
            acc += lg * R::from_i64(g.multiplicity as i64);
        }
        Ok(acc)
    }

    pub fn eval<R: Real>(&self, n: i64, z: CNum<R>) -> Result<CNum<R>> {
        Ok(self.log_eval(n, z)?.exp())
    }
}

/// `Λ(n, z)`.
pub fn shell_eval<R: Real>(shell: &AsymptoticShell, n: i64, z: CNum<R>) -> Result<CNum<R>> {
    shell.eval(n, z)
}

//! The recurrences the crate ships with. Each is a recurrence in `(n, z)`;
//! the parameter is bound when the sequence is evaluated.

use super::parse::{parse_expr, Variables};
use super::recurrence::{eval_sequence, PRecurrence, SequencePoint};
use crate::complexfn::{log_gamma, CNum, Real};
use crate::{BigRat, Error, Result};

fn build(coeffs: &[&str], n0: i64, init: &[i64]) -> PRecurrence {
    let coeffs = coeffs
        .iter()
        .map(|s| parse_expr(s, Variables::NZ, 1, 1).expect("built-in expression"))
        .collect();
    PRecurrence::new(coeffs, n0, init.iter().map(|&v| BigRat::from(v)).collect()).expect("built-in recurrence")
}

/// e-world mirror: `u_{n+2} = u_{n+1} + u_n/(n+z)`, `u_1 = 0`, `u_2 = 1`.
/// For `z = 0`, `n/u_n → e`.
pub fn mirror_e() -> PRecurrence {
    build(&["-1/(n+z)", "-1", "1"], 1, &[0, 1])
}

/// π-world mirror: `v_{n+2} = v_{n+1}/(n+z) + v_n`, `v_1 = 0`, `v_2 = 1`.
/// For `z = 0`, `2n/v_n^2 → π`.
pub fn mirror_pi() -> PRecurrence {
    build(&["-1", "-1/(n+z)", "1"], 1, &[0, 1])
}

/// `(n+z) w_{n+1} = (n+1) w_n` with `w_1 = 1`, so `w_n = z n!/(z)_n`.
pub fn gamma_recurrence() -> PRecurrence {
    build(&["-(n+1)", "n+z"], 1, &[1])
}

/// The same recurrence started at `w_0 = 1`, so `w_n = n!/(z)_n ~ Γ(z) n^{1-z}`.
pub fn shell_w_recurrence() -> PRecurrence {
    build(&["-(n+1)", "n+z"], 0, &[1])
}

/// `w_n(z) = n!/(z)_n` for `n = 0..=n_max`.
pub fn shell_w<R: Real>(z: CNum<R>, n_max: i64) -> Result<Vec<SequencePoint<CNum<R>>>> {
    eval_sequence(&shell_w_recurrence(), &z, n_max.max(1))
        .map(|v| v.into_iter().take(n_max.max(0) as usize + 1).collect())
}

/// `n!/Γ(n+1-z)` through log Γ.
pub fn shell_wtilde<R: Real>(z: CNum<R>, n: i64) -> Result<CNum<R>> {
    if n < 0 {
        return Err(Error::InvalidArgument(format!("n must be nonnegative, got {n}")));
    }
    let np1 = CNum::from_real(R::from_i64(n + 1));
    let denom = np1 - z;
    if matches!(denom.as_integer(), Some(k) if k <= 0) {
        return Err(Error::Pole {
            function: "shell_wtilde",
            at: format!("n + 1 - z = {denom}"),
        });
    }
    if z.is_zero() {
        return Ok(CNum::one());
    }
    Ok((log_gamma(np1)? - log_gamma(denom)?).exp())
}

//! Additive functional equations `Σ_{k=0}^{r} R_k(z) h(z+k) = 0`.
//!
//! Text format, mirroring the recurrence format:
//!
//! ```text
//! coeff0: -(z+2)
//! coeff1: z+2
//! coeff2: 1
//! z0=0: 0.36787944117144233
//! z0=1: 0.26424111765711533
//! ```

use std::fmt;

use crate::complexfn::{parse_complex, CNum, Real, C64};
use crate::holonomic::{key_lines, parse_coeff_lines, parse_expr, RationalFn, Variables};
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct AGFSpec {
    coeffs: Vec<RationalFn>,
    normalization: Vec<(C64, C64)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegularityClass {
    Regular,
    Irregular,
}

impl fmt::Display for RegularityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RegularityClass::Regular => "Regular",
            RegularityClass::Irregular => "Irregular",
        })
    }
}

fn zexpr(s: &str) -> RationalFn {
    parse_expr(s, Variables::Z, 1, 1).expect("built-in expression")
}

impl AGFSpec {
    pub fn new(coeffs: Vec<RationalFn>, normalization: Vec<(C64, C64)>) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::InvalidArgument("AFE order must be at least 1".into()));
        }
        if coeffs.iter().any(RationalFn::depends_on_n) {
            return Err(Error::InvalidArgument("AFE coefficients must depend on z only".into()));
        }
        if coeffs[0].is_zero() || coeffs.last().is_some_and(RationalFn::is_zero) {
            return Err(Error::InvalidArgument("R_0 and R_r must not vanish identically".into()));
        }
        let r = coeffs.len() - 1;
        if !normalization.is_empty() {
            if normalization.len() != r {
                return Err(Error::InvalidArgument(format!(
                    "order {r} needs {r} anchors, got {}",
                    normalization.len()
                )));
            }
            let z0 = normalization[0].0;
            for (k, (zk, _)) in normalization.iter().enumerate() {
                if (*zk - z0 - k as f64).abs() > 1e-12 {
                    return Err(Error::InvalidArgument(
                        "anchors must sit at consecutive points z0, z0+1, ...".into(),
                    ));
                }
            }
        }
        Ok(AGFSpec { coeffs, normalization })
    }

    /// `h(z+2) − (z+2) h(z) + (z+2) h(z+1) = 0`, anchored at `f(0) = 1/e` and
    /// `f(1) = 1 − 2/e`.
    pub fn f_spec() -> Self {
        let e = std::f64::consts::E;
        Self::new(
            vec![zexpr("-(z+2)"), zexpr("z+2"), zexpr("1")],
            vec![
                (C64::zero(), C64::new(1.0 / e, 0.0)),
                (C64::one(), C64::new(1.0 - 2.0 / e, 0.0)),
            ],
        )
        .expect("f spec")
    }

    /// `h(z+2) − h(z) + h(z+1)/(z+1) = 0`, anchored at `g(0) = √(2/π)` and
    /// `g(1) = (π−2)/√(2π)`.
    pub fn g_spec() -> Self {
        let pi = std::f64::consts::PI;
        Self::new(
            vec![zexpr("-1"), zexpr("1/(z+1)"), zexpr("1")],
            vec![
                (C64::zero(), C64::new((2.0 / pi).sqrt(), 0.0)),
                (C64::one(), C64::new((pi - 2.0) / (2.0 * pi).sqrt(), 0.0)),
            ],
        )
        .expect("g spec")
    }

    /// `z h(z) − h(z+1) = 0` with `Γ(1) = 1`.
    pub fn gamma_spec() -> Self {
        Self::new(vec![zexpr("z"), zexpr("-1")], vec![(C64::one(), C64::one())]).expect("gamma spec")
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[RationalFn] {
        &self.coeffs
    }

    pub fn normalization(&self) -> &[(C64, C64)] {
        &self.normalization
    }

    /// `R_k(z)` for all `k`; errors at coefficient poles.
    pub fn coeff_values<R: Real>(&self, z: CNum<R>) -> Result<Vec<CNum<R>>> {
        let zero = CNum::zero();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| {
                c.eval(&zero, &z).map_err(|_| Error::Pole {
                    function: "AFE coefficient",
                    at: format!("R_{k} at z = {z}"),
                })
            })
            .collect()
    }

    /// Parses the text format (see the module docs).
    pub fn parse(text: &str) -> Result<Self> {
        let lines = key_lines(text)?;
        let mut anchors: Vec<(C64, C64)> = Vec::new();
        let coeffs = parse_coeff_lines(&lines, Variables::Z, |kl| {
            let Some(point) = kl.key.strip_prefix("z0=") else {
                return Err(Error::Parse {
                    line: kl.line,
                    column: kl.key_col,
                    message: format!("unknown key {:?} (expected coeffK or z0=<point>)", kl.key),
                });
            };
            let to_c64 = |(re, im): (crate::BigRat, crate::BigRat)| C64::new(re.to_f64(), im.to_f64());
            let at = parse_complex(point).map(to_c64).map_err(|e| Error::Parse {
                line: kl.line,
                column: kl.key_col + 3,
                message: e.to_string(),
            })?;
            let value = parse_complex(kl.value).map(to_c64).map_err(|e| Error::Parse {
                line: kl.line,
                column: kl.value_col,
                message: e.to_string(),
            })?;
            anchors.push((at, value));
            Ok(())
        })?;
        anchors.sort_by(|a, b| a.0.re.total_cmp(&b.0.re));
        Self::new(coeffs, anchors).map_err(|e| Error::Parse {
            line: lines.last().map_or(1, |l| l.line),
            column: 1,
            message: e.to_string(),
        })
    }
}

/// Regular iff every `R_k/R_r` stays bounded as `|z| → ∞`, decided by exact
/// degree comparison.
pub fn classify_regularity(spec: &AGFSpec) -> RegularityClass {
    let lead = spec.coeffs.last().and_then(RationalFn::z_degree).expect("R_r nonzero");
    let bounded = spec.coeffs.iter().filter_map(RationalFn::z_degree).all(|d| d <= lead);
    if bounded {
        RegularityClass::Regular
    } else {
        RegularityClass::Irregular
    }
}

/// The terms `R_k(z) h(z+k)`.
pub fn afe_terms<R: Real, H>(spec: &AGFSpec, h: H, z: CNum<R>) -> Result<Vec<CNum<R>>>
where
    H: Fn(CNum<R>) -> Result<CNum<R>>,
{
    let rk = spec.coeff_values(z)?;
    rk.into_iter()
        .enumerate()
        .map(|(k, r)| Ok(r * h(z + R::from_i64(k as i64))?))
        .collect()
}

/// `Σ_k R_k(z) h(z+k)`.
pub fn afe_residual<R: Real, H>(spec: &AGFSpec, h: H, z: CNum<R>) -> Result<CNum<R>>
where
    H: Fn(CNum<R>) -> Result<CNum<R>>,
{
    Ok(afe_terms(spec, h, z)?.into_iter().sum())
}

/// `|Σ_k R_k(z) h(z+k)| / max_k |R_k(z) h(z+k)|`.
pub fn afe_relative_residual<R: Real, H>(spec: &AGFSpec, h: H, z: CNum<R>) -> Result<f64>
where
    H: Fn(CNum<R>) -> Result<CNum<R>>,
{
    let terms = afe_terms(spec, h, z)?;
    let scale = terms.iter().map(|t| t.abs().to_f64()).fold(0.0, f64::max);
    let sum: CNum<R> = terms.into_iter().sum();
    if scale == 0.0 {
        return Ok(0.0);
    }
    Ok(sum.abs().to_f64() / scale)
}

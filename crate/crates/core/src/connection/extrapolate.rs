//! Richardson extrapolation of `u_n / Λ(n, z)` sampled on a geometric grid.
//!
//! The scheme assumes an error expansion in integer powers of `1/n`. The
//! reported error is the difference of the last two tableau diagonal entries,
//! a heuristic rather than a bound.

use crate::complexfn::{CNum, Dd, Real, C64};
use crate::holonomic::{sample_sequence, PRecurrence};
use crate::{Error, Result};

use super::shell::AsymptoticShell;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtrapolationConfig {
    pub depth: usize,
    pub n_base: i64,
    pub n_growth: i64,
}

impl Default for ExtrapolationConfig {
    fn default() -> Self {
        ExtrapolationConfig {
            depth: 6,
            n_base: 1 << 10,
            n_growth: 2,
        }
    }
}

impl ExtrapolationConfig {
    pub fn validate(&self) -> Result<()> {
        if self.depth < 1 {
            return Err(Error::InvalidArgument("extrapolation depth must be >= 1".into()));
        }
        if self.n_base < 16 {
            return Err(Error::InvalidArgument("n_base must be >= 16".into()));
        }
        if self.n_growth < 2 {
            return Err(Error::InvalidArgument("n_growth must be >= 2".into()));
        }
        self.sample_points().map(|_| ())
    }

    /// `n_base · growth^k` for `k = 0..=depth`.
    pub fn sample_points(&self) -> Result<Vec<i64>> {
        let mut out = Vec::with_capacity(self.depth + 1);
        let mut n = self.n_base;
        for _ in 0..=self.depth {
            out.push(n);
            n = n
                .checked_mul(self.n_growth)
                .ok_or_else(|| Error::InvalidArgument("sample grid overflows i64".into()))?;
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConnectionEstimate {
    pub value: C64,
    pub error_estimate: f64,
    /// `(n, u_n / Λ(n, z))` on the sample grid.
    pub samples: Vec<(i64, C64)>,
}

/// Extrapolates `values[k]`, sampled at `n_base · growth^k`, to `n → ∞`.
/// Returns the final diagonal entry and `|T_kk − T_{k−1,k−1}|`.
pub fn richardson<R: Real>(values: &[CNum<R>], growth: i64) -> Result<(CNum<R>, R)> {
    richardson_with_floor(values, growth, R::from_f64(64.0) * R::epsilon())
}

/// As [`richardson`], treating diagonal deltas below `rel_floor · scale` as noise.
fn richardson_with_floor<R: Real>(values: &[CNum<R>], growth: i64, rel_floor: R) -> Result<(CNum<R>, R)> {
    if values.len() < 2 {
        return Err(Error::InvalidArgument("richardson needs at least two samples".into()));
    }
    let g = R::from_i64(growth);
    let mut prev_row: Vec<CNum<R>> = vec![values[0]];
    let mut diag = vec![values[0]];
    for &v in &values[1..] {
        let mut row = vec![v];
        let mut factor = R::one();
        for j in 1..=prev_row.len() {
            factor *= g;
            let t = row[j - 1] + (row[j - 1] - prev_row[j - 1]) / (factor - R::one());
            row.push(t);
        }
        diag.push(*row.last().expect("nonempty"));
        prev_row = row;
    }
    check_diagonal(&diag, rel_floor)?;
    let k = diag.len() - 1;
    Ok((diag[k], (diag[k] - diag[k - 1]).abs()))
}

/// Fails when successive diagonal deltas grow for three consecutive steps,
/// ignoring deltas already at rounding level.
fn check_diagonal<R: Real>(diag: &[CNum<R>], rel_floor: R) -> Result<()> {
    if diag.iter().any(|d| !d.is_finite()) {
        return Err(Error::NonConvergence("non-finite extrapolation tableau entry".into()));
    }
    let scale = diag.iter().map(|d| d.abs()).fold(R::zero(), R::max);
    let floor = rel_floor * scale;
    let deltas: Vec<R> = diag.windows(2).map(|w| (w[1] - w[0]).abs()).collect();
    let mut run = 0;
    for w in deltas.windows(2) {
        if w[1] > floor && w[1] > w[0] {
            run += 1;
            if run >= 3 {
                return Err(Error::NonConvergence(format!(
                    "tableau diagonal diverges (delta {} after {} growing steps)",
                    w[1].to_f64(),
                    run
                )));
            }
        } else {
            run = 0;
        }
    }
    Ok(())
}

/// Extrapolates `transform(n, u_n)` over the configured grid. The sequence is
/// iterated in double-double.
pub fn extrapolate_sequence(
    rec: &PRecurrence,
    z: C64,
    cfg: &ExtrapolationConfig,
    transform: impl Fn(i64, CNum<Dd>) -> Result<CNum<Dd>>,
) -> Result<ConnectionEstimate> {
    cfg.validate()?;
    let ns = cfg.sample_points()?;
    let raw = sample_sequence(rec, z.cast::<Dd>(), &ns)?;
    let values = ns
        .iter()
        .zip(raw)
        .map(|(&n, u)| transform(n, u))
        .collect::<Result<Vec<_>>>()?;
    // rounding in the iteration grows roughly linearly with the index
    let n_last = *ns.last().expect("nonempty grid");
    let rel_floor = Dd::from_f64(64.0) * Dd::epsilon() * Dd::from_i64(n_last);
    let (value, err) = richardson_with_floor(&values, cfg.n_growth, rel_floor)?;
    Ok(ConnectionEstimate {
        value: value.to_c64(),
        error_estimate: err.to_f64(),
        samples: ns.iter().zip(&values).map(|(&n, v)| (n, v.to_c64())).collect(),
    })
}

/// The connection constant `h(z)` in `u_n(z) ~ Λ(n, z) h(z)`.
pub fn estimate_connection_constant(
    rec: &PRecurrence,
    shell: &AsymptoticShell,
    z: C64,
    cfg: &ExtrapolationConfig,
) -> Result<ConnectionEstimate> {
    let zd = z.cast::<Dd>();
    extrapolate_sequence(rec, z, cfg, |n, u| Ok(u * (-shell.log_eval(n, zd)?).exp()))
}

/// Extrapolates `n/u_n` for the e-world mirror at `z = 0`; the limit is `e`.
pub fn mirror_limit_e(cfg: &ExtrapolationConfig) -> Result<ConnectionEstimate> {
    extrapolate_sequence(&crate::holonomic::mirror_e(), C64::zero(), cfg, |n, u| {
        Ok(CNum::from_real(Dd::from_i64(n)) / u)
    })
}

/// Extrapolates `2n/v_n²` for the π-world mirror at `z = 0`; the limit is `π`.
pub fn mirror_limit_pi(cfg: &ExtrapolationConfig) -> Result<ConnectionEstimate> {
    extrapolate_sequence(&crate::holonomic::mirror_pi(), C64::zero(), cfg, |n, v| {
        Ok(CNum::from_real(Dd::from_i64(2 * n)) / (v * v))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::holonomic::{mirror_e, mirror_pi, parse_recurrence, shell_w_recurrence};
    use crate::BigRat;

    #[test]
    fn grid() {
        let cfg = ExtrapolationConfig::default();
        let ns = cfg.sample_points().unwrap();
        assert_eq!(ns.len(), 7);
        assert_eq!(ns[6], 65_536);
        assert!(ExtrapolationConfig { depth: 0, ..cfg }.validate().is_err());
        assert!(ExtrapolationConfig { n_base: 8, ..cfg }.validate().is_err());
    }

    #[test]
    fn exact_on_one_over_n_plus_c() {
        let c = 0.123_456_789_f64;
        let vals: Vec<C64> = (0..7)
            .map(|k| C64::new(1.0 / (1024.0 * 2f64.powi(k)) + c, 0.0))
            .collect();
        let (v, err) = richardson(&vals, 2).unwrap();
        assert!((v.re - c).abs() < 1e-12, "{v}");
        assert!(err < 1e-12);
    }

    #[test]
    fn recurrence_sanity_one_over_n() {
        // u_n = c n + 1 solves u_{n+2} - 2u_{n+1} + u_n = 0; u_n/n = c + 1/n
        let rec = parse_recurrence("coeff2: 1\ncoeff1: -2\ncoeff0: 1\ninit: n0=1; 10/7, 13/7").unwrap();
        let est = estimate_connection_constant(
            &rec,
            &AsymptoticShell::f_shell(),
            C64::zero(),
            &ExtrapolationConfig::default(),
        )
        .unwrap();
        assert!((est.value.re - 3.0 / 7.0).abs() < 1e-12);
        assert_eq!(rec.initial_values()[0], BigRat::ratio(10, 7));
    }

    #[test]
    fn divergence_detected() {
        let vals: Vec<C64> = (0..7).map(|k| C64::new(4f64.powi(k * k), 0.0)).collect();
        assert!(matches!(richardson(&vals, 2), Err(Error::NonConvergence(_))));
    }

    #[test]
    fn mirror_limits() {
        let cfg = ExtrapolationConfig::default();
        let e = mirror_limit_e(&cfg).unwrap();
        assert!((e.value.re - std::f64::consts::E).abs() < 1e-8, "{e:?}");
        let p = mirror_limit_pi(&cfg).unwrap();
        assert!((p.value.re - std::f64::consts::PI).abs() < 1e-6, "{p:?}");
    }

    #[test]
    fn known_connection_constants() {
        let cfg = ExtrapolationConfig::default();
        let f0 = estimate_connection_constant(&mirror_e(), &AsymptoticShell::f_shell(), C64::zero(), &cfg).unwrap();
        assert!((f0.value.re - (-1f64).exp()).abs() < 1e-8);
        assert!(f0.error_estimate < 1e-8);
        let g0 = estimate_connection_constant(&mirror_pi(), &AsymptoticShell::g_shell(), C64::zero(), &cfg).unwrap();
        assert!((g0.value.re - (2.0 / std::f64::consts::PI).sqrt()).abs() < 1e-6);
        let w = estimate_connection_constant(
            &shell_w_recurrence(),
            &AsymptoticShell::gamma_shell(),
            C64::new(0.5, 0.0),
            &cfg,
        )
        .unwrap();
        assert!((w.value.re - std::f64::consts::PI.sqrt()).abs() < 1e-6);
    }
}

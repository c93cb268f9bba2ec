use serde::{Deserialize, Serialize};

use crate::complexfn::{CNum, Dd, Real, C64};
use crate::exact::{duality_forms_e, duality_forms_pi};
use crate::{Error, Result};

use super::eval::{f_eval, f_eval_confluent, f_eval_gamma_route, g_eval};
use super::spec::{afe_relative_residual, AGFSpec};

/// Rectangular grid `re_min..=re_max` × `im_min..=im_max` with a common step.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
    pub step: f64,
}

impl Default for GridSpec {
    /// `Re z ∈ [-1.5, 5]`, `Im z ∈ [-5, 5]`, step `0.5`.
    fn default() -> Self {
        GridSpec {
            re_min: -1.5,
            re_max: 5.0,
            im_min: -5.0,
            im_max: 5.0,
            step: 0.5,
        }
    }
}

impl GridSpec {
    pub fn validate(&self) -> Result<()> {
        let finite = [self.re_min, self.re_max, self.im_min, self.im_max, self.step]
            .iter()
            .all(|v| v.is_finite());
        if !finite || self.step <= 0.0 || self.re_min > self.re_max || self.im_min > self.im_max {
            return Err(Error::InvalidArgument(format!("invalid grid {self:?}")));
        }
        if (self.re_max - self.re_min) / self.step > 1e5 || (self.im_max - self.im_min) / self.step > 1e5 {
            return Err(Error::InvalidArgument("grid has too many points".into()));
        }
        Ok(())
    }

    /// Points in row-major order (real part outer). Coordinates are computed
    /// as `min + i·step` so no rounding accumulates.
    pub fn points(&self) -> Result<Vec<C64>> {
        self.validate()?;
        let count = |lo: f64, hi: f64| ((hi - lo) / self.step + 1e-9).floor() as usize + 1;
        let (nr, ni) = (count(self.re_min, self.re_max), count(self.im_min, self.im_max));
        let mut out = Vec::with_capacity(nr * ni);
        for i in 0..nr {
            for j in 0..ni {
                out.push(C64::new(
                    self.re_min + i as f64 * self.step,
                    self.im_min + j as f64 * self.step,
                ));
            }
        }
        Ok(out)
    }
}

/// Grid operations skip points this close to a pole.
pub const POLE_RADIUS: f64 = 1e-3;

/// Whether `z` lies within `radius` of a pole at `first, first-1, first-2, ...`.
pub fn near_pole_set(z: C64, first: i64, radius: f64) -> bool {
    let k = z.re.round();
    z.im.abs() < radius && k <= first as f64 && (z.re - k).abs() < radius
}

/// Per-point outcome of a grid sweep; `None` marks a skipped pole cell.
#[derive(Clone, Debug, PartialEq)]
pub struct GridSweep {
    pub points: Vec<(C64, Option<f64>)>,
    pub max: f64,
    pub evaluated: usize,
    pub skipped: usize,
}

impl GridSweep {
    fn from_points(points: Vec<(C64, Option<f64>)>) -> Self {
        let evaluated = points.iter().filter(|p| p.1.is_some()).count();
        let max = points.iter().filter_map(|p| p.1).fold(0.0, f64::max);
        GridSweep {
            skipped: points.len() - evaluated,
            points,
            max,
            evaluated,
        }
    }
}

/// Relative AFE residual of `h` at each grid point. Points where some
/// `z + k` lies within [`POLE_RADIUS`] of `h`'s poles (at `first_pole,
/// first_pole − 1, ...`) or where a coefficient has a pole are skipped.
pub fn afe_grid_sweep<H>(spec: &AGFSpec, h: H, first_pole: i64, grid: &GridSpec) -> Result<GridSweep>
where
    H: Fn(C64) -> Result<C64>,
{
    let r = spec.order();
    let mut points = Vec::new();
    for z in grid.points()? {
        if (0..=r).any(|k| near_pole_set(z + k as f64, first_pole, POLE_RADIUS)) {
            points.push((z, None));
            continue;
        }
        match afe_relative_residual(spec, &h, z) {
            Ok(v) => points.push((z, Some(v))),
            Err(Error::Pole { .. }) => points.push((z, None)),
            Err(e) => return Err(e),
        }
    }
    Ok(GridSweep::from_points(points))
}

/// Largest relative disagreement among the three routes for `f` at each grid
/// point. Poles of `f` are skipped; `z = −1`, removable for `f` but singular
/// in the confluent formula, is compared on the two remaining routes.
pub fn f_route_sweep(grid: &GridSpec) -> Result<GridSweep> {
    let mut points = Vec::new();
    for z in grid.points()? {
        if near_pole_set(z, -2, POLE_RADIUS) {
            points.push((z, None));
            continue;
        }
        let a = f_eval(z)?;
        let mut dev = (f_eval_gamma_route(z)? - a).abs() / a.abs();
        if !near_pole_set(z, -1, POLE_RADIUS) {
            dev = dev.max((f_eval_confluent(z)? - a).abs() / a.abs());
        }
        points.push((z, Some(dev)));
    }
    Ok(GridSweep::from_points(points))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrowthNormalization {
    /// `|h(z)(z+2) − 1|`
    F,
    /// `|h(z) √z|`, principal root
    G,
    /// `|h(z)|`
    Raw,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GrowthSample {
    pub im: f64,
    pub magnitude: f64,
    pub normalized: f64,
}

/// Samples `h` along the vertical line `Re z = re_anchor`.
pub fn growth_probe<H>(h: H, re_anchor: f64, im_values: &[f64], norm: GrowthNormalization) -> Result<Vec<GrowthSample>>
where
    H: Fn(C64) -> Result<C64>,
{
    im_values
        .iter()
        .map(|&im| {
            let z = C64::new(re_anchor, im);
            let v = h(z)?;
            let normalized = match norm {
                GrowthNormalization::F => (v * (z + 2.0) - C64::one()).abs(),
                GrowthNormalization::G => (v * z.sqrt()).abs(),
                GrowthNormalization::Raw => v.abs(),
            };
            Ok(GrowthSample {
                im,
                magnitude: v.abs(),
                normalized,
            })
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct UniquenessReport {
    pub max_abs: f64,
    pub max_rel: f64,
}

/// Compares `h1` at `z0 + k`, `k = 0..=grid_len`, with the AFE propagation of
/// `h2` from its values at `z0, ..., z0+r-1`. Only integer translates are
/// probed; this is evidence for uniqueness, not a proof.
pub fn uniqueness_probe<R: Real, H1, H2>(
    spec: &AGFSpec,
    h1: H1,
    h2: H2,
    z0: R,
    grid_len: usize,
) -> Result<UniquenessReport>
where
    H1: Fn(CNum<R>) -> Result<CNum<R>>,
    H2: Fn(CNum<R>) -> Result<CNum<R>>,
{
    let r = spec.order();
    let at = |k: usize| CNum::from_real(z0 + R::from_i64(k as i64));
    let mut prop: Vec<CNum<R>> = (0..r).map(|k| h2(at(k))).collect::<Result<_>>()?;
    let tol = R::from_f64(1e3) * R::epsilon().max(R::from_f64(1e-15));
    for (k, v) in prop.iter().enumerate() {
        let d = h1(at(k))?;
        if (d - *v).abs() > tol * d.abs().max(R::one()) {
            return Err(Error::InvalidArgument(format!(
                "h1 and h2 disagree at anchor z0+{k}: {d} vs {v}"
            )));
        }
    }
    while prop.len() <= grid_len {
        let base = prop.len() - r;
        let c = spec.coeff_values(at(base))?;
        let lead = c[r];
        if lead.is_zero() {
            return Err(Error::Pole {
                function: "AFE propagation",
                at: format!("R_{r} vanishes at z0+{base}"),
            });
        }
        let acc: CNum<R> = (0..r).map(|k| c[k] * prop[base + k]).sum();
        prop.push(-acc / lead);
    }
    let mut report = UniquenessReport {
        max_abs: 0.0,
        max_rel: 0.0,
    };
    for (k, v) in prop.iter().enumerate().take(grid_len + 1) {
        let d = h1(at(k))?;
        let dev = (d - *v).abs().to_f64();
        report.max_abs = report.max_abs.max(dev);
        report.max_rel = report.max_rel.max(dev / d.abs().to_f64().max(f64::MIN_POSITIVE));
    }
    Ok(report)
}

/// One row of a duality check: `(−1)^m h(m)/h(0)` against the linear form.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DualityRow {
    pub m: u64,
    pub lhs: f64,
    pub rhs: f64,
    pub residual: f64,
    /// `a_m + e b_m` (resp. `p_m + π q_m`), the tolerance scale
    pub scale: f64,
}

impl DualityRow {
    pub fn relative(&self) -> f64 {
        self.residual / self.scale
    }
}

fn sign(m: u64) -> Dd {
    if m.is_multiple_of(2) {
        Dd::ONE
    } else {
        -Dd::ONE
    }
}

/// `(−1)^m f(m)/f(0)` against `a_m − e·b_m` for `m = 0..=m_max`, in double-double.
pub fn duality_check_e(m_max: u64) -> Result<Vec<DualityRow>> {
    let forms = duality_forms_e(m_max)?;
    let f0 = f_eval(CNum::<Dd>::zero())?.re;
    forms
        .iter()
        .enumerate()
        .map(|(m, form)| {
            let m = m as u64;
            let fm = f_eval(CNum::from_real(Dd::from_i64(m as i64)))?.re;
            let lhs = sign(m) * fm / f0;
            let rhs: Dd = form.value();
            Ok(DualityRow {
                m,
                lhs: lhs.to_f64(),
                rhs: rhs.to_f64(),
                residual: (lhs - rhs).abs().to_f64(),
                scale: form.magnitude::<Dd>().to_f64(),
            })
        })
        .collect()
}

/// `(−1)^m g(m)/g(0)` against `p_m − π·q_m` for `m = 0..=m_max`, in double-double.
pub fn duality_check_pi(m_max: u64) -> Result<Vec<DualityRow>> {
    let forms = duality_forms_pi(m_max)?;
    let g0 = g_eval(CNum::<Dd>::zero())?.re;
    forms
        .iter()
        .enumerate()
        .map(|(m, form)| {
            let m = m as u64;
            let gm = g_eval(CNum::from_real(Dd::from_i64(m as i64)))?.re;
            let lhs = sign(m) * gm / g0;
            let rhs: Dd = form.value();
            Ok(DualityRow {
                m,
                lhs: lhs.to_f64(),
                rhs: rhs.to_f64(),
                residual: (lhs - rhs).abs().to_f64(),
                scale: form.magnitude::<Dd>().to_f64(),
            })
        })
        .collect()
}

//! The identity chains linking the integrals `J_m`, `I_m`, `L_m` to the
//! connection constants, and the transfer-theorem asymptotics.

use serde_json::json;

use crate::agf::{f_eval, g_eval};
use crate::complexfn::{CNum, Dd, Real, C64};
use crate::holonomic::{mirror_e, mirror_pi, sample_sequence};
use crate::{Error, Result};

use super::quad::{quad_i, quad_j, quad_l};
use super::report::CertReport;

pub const CHAIN_TOLERANCE: f64 = 1e-9;

/// For `m ≤ m_max`: `J_m = I_{m+1}`, `J_{m+1} = e − (m+2) J_m`,
/// `f(m+2) = (m+2)[f(m) − f(m+1)]` with `f = J/e`, and `e·f_eval(m) = J_m`.
pub fn identity_chain_e(m_max: u32) -> Result<CertReport> {
    if m_max < 2 {
        return Err(Error::InvalidArgument("identity chain needs m_max >= 2".into()));
    }
    let e = std::f64::consts::E;
    let j: Vec<f64> = (0..=m_max).map(|m| quad_j(m).map(|q| q.value)).collect::<Result<_>>()?;
    let mut rep = CertReport::new("identity_chain_e", json!({ "m_max": m_max }));
    for m in 0..=m_max as usize {
        let i_next = quad_i(m as f64 + 1.0)?.value;
        let dev = (j[m] - i_next).abs();
        rep.record(
            dev,
            CHAIN_TOLERANCE,
            json!({"m": m, "identity": "J_m = I_{m+1}", "lhs": j[m], "rhs": i_next, "deviation": dev}),
        );

        let fm = f_eval(C64::new(m as f64, 0.0))?.re;
        let dev = (e * fm - j[m]).abs();
        rep.record(
            dev,
            CHAIN_TOLERANCE,
            json!({"m": m, "identity": "e f(m) = J_m", "lhs": e * fm, "rhs": j[m], "deviation": dev}),
        );

        if m < m_max as usize {
            let rhs = e - (m as f64 + 2.0) * j[m];
            let dev = (j[m + 1] - rhs).abs();
            rep.record(
                dev,
                CHAIN_TOLERANCE,
                json!({"m": m, "identity": "J_{m+1} = e - (m+2) J_m", "lhs": j[m + 1], "rhs": rhs, "deviation": dev}),
            );
        }
        if m + 2 <= m_max as usize {
            let f = |k: usize| j[k] / e;
            let rhs = (m as f64 + 2.0) * (f(m) - f(m + 1));
            let dev = (f(m + 2) - rhs).abs();
            rep.record(dev, CHAIN_TOLERANCE, json!({"m": m, "identity": "f(m+2) = (m+2)[f(m) - f(m+1)]", "lhs": f(m + 2), "rhs": rhs, "deviation": dev}));
        }
    }
    Ok(rep)
}

/// For `m ≤ m_max`: `L_{m+2} = L_m − L_{m+1}/(m+1)` and `√(2/π) L_m = g_eval(m)`,
/// plus the closed values `L_1 = π/2 − 1`, `L_2 = 2 − π/2`.
pub fn identity_chain_pi(m_max: u32) -> Result<CertReport> {
    if m_max < 2 {
        return Err(Error::InvalidArgument("identity chain needs m_max >= 2".into()));
    }
    let pi = std::f64::consts::PI;
    let l: Vec<f64> = (0..=m_max).map(|m| quad_l(m).map(|q| q.value)).collect::<Result<_>>()?;
    let mut rep = CertReport::new("identity_chain_pi", json!({ "m_max": m_max }));
    for (m, want) in [(1, pi / 2.0 - 1.0), (2, 2.0 - pi / 2.0)] {
        let dev = (l[m] - want).abs();
        rep.record(
            dev,
            1e-10,
            json!({"m": m, "identity": "closed form of L_m", "lhs": l[m], "rhs": want, "deviation": dev}),
        );
    }
    let c = (2.0 / pi).sqrt();
    for m in 0..=m_max as usize {
        let gm = g_eval(C64::new(m as f64, 0.0))?.re;
        let dev = (c * l[m] - gm).abs();
        rep.record(
            dev,
            CHAIN_TOLERANCE,
            json!({"m": m, "identity": "sqrt(2/pi) L_m = g(m)", "lhs": c * l[m], "rhs": gm, "deviation": dev}),
        );
        if m + 2 <= m_max as usize {
            let rhs = l[m] - l[m + 1] / (m as f64 + 1.0);
            let dev = (l[m + 2] - rhs).abs();
            rep.record(dev, CHAIN_TOLERANCE, json!({"m": m, "identity": "L_{m+2} = L_m - L_{m+1}/(m+1)", "lhs": l[m + 2], "rhs": rhs, "deviation": dev}));
        }
    }
    Ok(rep)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum World {
    E,
    Pi,
}

/// `|u_n(m)/(f(m) n) − 1|` (e-world) or `|v_n(m)/(g(m) √n) − 1|` (π-world).
pub fn transfer_check(world: World, m: u64, n: i64) -> Result<f64> {
    if n < 1000 {
        return Err(Error::InvalidArgument(format!(
            "transfer check needs n >= 1000, got {n}"
        )));
    }
    let z = CNum::<Dd>::from_real(Dd::from_i64(m as i64));
    let (rec, h, scale) = match world {
        World::E => (mirror_e(), f_eval(z)?, Dd::from_i64(n)),
        World::Pi => (mirror_pi(), g_eval(z)?, Dd::from_i64(n).sqrt()),
    };
    let u = sample_sequence(&rec, z, &[n])?[0];
    Ok((u / (h * scale) - CNum::one()).abs().to_f64())
}

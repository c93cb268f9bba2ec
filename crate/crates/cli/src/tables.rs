use std::path::Path;

use anyhow::{bail, Context as _, Result};
use clap::ValueEnum;

use agf_core::agf::{
    afe_relative_residual, duality_check_e, duality_check_pi, f_eval, g_eval, near_pole_set, AGFSpec, GridSpec,
};
use agf_core::complexfn::C64;
use agf_core::exact::{duality_forms_e, duality_forms_pi};

use crate::output::{c64_roundtrip, Context, Table};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    DualityE,
    DualityPi,
    AgfGrid,
}

const DUALITY_E_HEADERS: [&str; 7] = ["m", "a_m", "b_m", "lhs", "rhs", "residual", "relative"];
const DUALITY_PI_HEADERS: [&str; 7] = ["m", "p_m", "q_m", "lhs", "rhs", "residual", "relative"];
const AGF_GRID_HEADERS: [&str; 6] = ["re", "im", "f", "g", "f_afe_residual", "g_afe_residual"];
const POLE: &str = "pole";

/// Relative tolerance when re-checking floating columns of a stored table.
const RECHECK_TOL: f64 = 1e-12;
const RESIDUAL_TOL: f64 = 1e-9;
const AFE_TOL: f64 = 1e-10;

fn build(kind: TableKind, m_max: u64, grid: &GridSpec) -> Result<Table> {
    Ok(match kind {
        TableKind::DualityE => {
            let mut t = Table::new("duality-e", &DUALITY_E_HEADERS);
            let forms = duality_forms_e(m_max)?;
            for (form, row) in forms.iter().zip(duality_check_e(m_max)?) {
                t.push(vec![
                    row.m.to_string(),
                    form.a.to_string(),
                    form.b.to_string(),
                    format!("{:e}", row.lhs),
                    format!("{:e}", row.rhs),
                    format!("{:e}", row.residual),
                    format!("{:e}", row.relative()),
                ]);
            }
            t
        }
        TableKind::DualityPi => {
            let mut t = Table::new("duality-pi", &DUALITY_PI_HEADERS);
            let forms = duality_forms_pi(m_max)?;
            for (form, row) in forms.iter().zip(duality_check_pi(m_max)?) {
                t.push(vec![
                    row.m.to_string(),
                    form.p.to_fraction_string(),
                    form.q.to_fraction_string(),
                    format!("{:e}", row.lhs),
                    format!("{:e}", row.rhs),
                    format!("{:e}", row.residual),
                    format!("{:e}", row.relative()),
                ]);
            }
            t
        }
        TableKind::AgfGrid => {
            let mut t = Table::new("agf-grid", &AGF_GRID_HEADERS);
            let (fs, gs) = (AGFSpec::f_spec(), AGFSpec::g_spec());
            for z in grid.points()? {
                let (f, fr) = grid_cells(&fs, f_eval, z, -2)?;
                let (g, gr) = grid_cells(&gs, g_eval, z, -1)?;
                t.push(vec![format!("{:e}", z.re), format!("{:e}", z.im), f, g, fr, gr]);
            }
            t
        }
    })
}

fn grid_cells(
    spec: &AGFSpec,
    h: fn(C64) -> agf_core::Result<C64>,
    z: C64,
    first_pole: i64,
) -> Result<(String, String)> {
    if near_pole_set(z, first_pole, agf_core::agf::POLE_RADIUS) {
        return Ok((POLE.into(), POLE.into()));
    }
    let v = h(z)?;
    let r = afe_relative_residual(spec, h, z)?;
    Ok((c64_roundtrip(v.re, v.im), format!("{r:e}")))
}

/// Writes the table; returns whether every row passed its own check.
pub fn emit(ctx: &Context, kind: TableKind, m_max: u64, grid: GridSpec) -> Result<bool> {
    let t = build(kind, m_max, &grid)?;
    ctx.emit_table(&t)?;
    Ok(true)
}

fn parse_f(cell: &str, what: &str, line: usize) -> Result<f64> {
    cell.parse::<f64>()
        .with_context(|| format!("line {line}: bad {what} {cell:?}"))
}

fn parse_c(cell: &str, line: usize) -> Result<C64> {
    let bad = || format!("line {line}: bad complex value {cell:?}");
    let body = cell.strip_suffix('i').with_context(bad)?;
    // split at the sign that follows the real part's mantissa or exponent
    let bytes = body.as_bytes();
    let pos = (1..bytes.len())
        .rev()
        .find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'e')
        .with_context(bad)?;
    let re = body[..pos].parse::<f64>().with_context(bad)?;
    let im = body[pos..].parse::<f64>().with_context(bad)?;
    Ok(C64::new(re, im))
}

/// False for NaN as well as for values above `tol`.
fn within(x: f64, tol: f64) -> bool {
    x.is_finite() && x <= tol
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(f64::MIN_POSITIVE)
}

/// Re-validates a CSV table written by `table`: exact columns are compared
/// verbatim with a fresh computation, floating columns to a relative
/// tolerance, and residual columns against their acceptance thresholds.
pub fn verify_table(ctx: &Context, path: &Path) -> Result<bool> {
    let mut rdr = csv::Reader::from_path(path).with_context(|| format!("cannot read {}", path.display()))?;
    let headers: Vec<String> = rdr.headers()?.iter().map(str::to_string).collect();
    let rows: Vec<csv::StringRecord> = rdr.records().collect::<std::result::Result<_, _>>()?;
    let kind = if headers == DUALITY_E_HEADERS {
        TableKind::DualityE
    } else if headers == DUALITY_PI_HEADERS {
        TableKind::DualityPi
    } else if headers == AGF_GRID_HEADERS {
        TableKind::AgfGrid
    } else {
        bail!("{}: unrecognized table header {:?}", path.display(), headers);
    };
    let mut failures: Vec<String> = Vec::new();
    match kind {
        TableKind::DualityE | TableKind::DualityPi => {
            let m_max = rows.len().checked_sub(1).context("empty table")? as u64;
            let fresh = build(kind, m_max, &GridSpec::default())?;
            for (i, (row, want)) in rows.iter().zip(&fresh.rows).enumerate() {
                let line = i + 2;
                for c in 0..3 {
                    if row[c] != want[c] {
                        failures.push(format!(
                            "line {line}: {} is {} but should be {}",
                            headers[c], &row[c], want[c]
                        ));
                    }
                }
                for c in 3..5 {
                    if !close(
                        parse_f(&row[c], &headers[c], line)?,
                        parse_f(&want[c], &headers[c], line)?,
                        RECHECK_TOL,
                    ) {
                        failures.push(format!(
                            "line {line}: {} = {} does not match recomputed {}",
                            headers[c], &row[c], want[c]
                        ));
                    }
                }
                let rel = parse_f(&row[6], "relative", line)?;
                if !within(rel, RESIDUAL_TOL) {
                    failures.push(format!(
                        "line {line}: relative residual {rel:e} exceeds {RESIDUAL_TOL:e}"
                    ));
                }
            }
        }
        TableKind::AgfGrid => {
            let (fs, gs) = (AGFSpec::f_spec(), AGFSpec::g_spec());
            for (i, row) in rows.iter().enumerate() {
                let line = i + 2;
                let z = C64::new(parse_f(&row[0], "re", line)?, parse_f(&row[1], "im", line)?);
                for (col, spec, h, first_pole) in [
                    (2, &fs, f_eval as fn(C64) -> agf_core::Result<C64>, -2),
                    (3, &gs, g_eval, -1),
                ] {
                    let (want, _) = grid_cells(spec, h, z, first_pole)?;
                    let got = &row[col];
                    if got == POLE || want == POLE {
                        if got != want {
                            failures.push(format!("line {line}: {} is {got} but should be {want}", headers[col]));
                        }
                        continue;
                    }
                    let (g, w) = (parse_c(got, line)?, parse_c(&want, line)?);
                    if (g - w).abs() > RECHECK_TOL * w.abs() {
                        failures.push(format!(
                            "line {line}: {} = {got} does not match recomputed {want}",
                            headers[col]
                        ));
                    }
                    let r = parse_f(&row[col + 2], &headers[col + 2], line)?;
                    if !within(r, AFE_TOL) {
                        failures.push(format!("line {line}: {} = {r:e} exceeds {AFE_TOL:e}", headers[col + 2]));
                    }
                }
            }
        }
    }
    let pass = failures.is_empty();
    if let Some(first) = failures.first() {
        eprintln!("FAILED: {first}");
    }
    let mut t = Table::new("verify-table", &["table", "rows", "pass", "failures"]);
    t.push(vec![
        format!("{kind:?}"),
        rows.len().to_string(),
        if pass { "PASS" } else { "FAIL" }.into(),
        failures.len().to_string(),
    ]);
    ctx.emit_table(&t)?;
    Ok(pass)
}

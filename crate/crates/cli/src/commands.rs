use std::path::Path;

use anyhow::{bail, Context as _, Result};

use agf_core::agf::{classify_regularity, f_eval, g_eval, AGFSpec};
use agf_core::complexfn::{parse_complex, CNum, C64};
use agf_core::connection::{estimate_connection_constant, AsymptoticShell, ExtrapolationConfig};
use agf_core::holonomic::{eval_sequence, mirror_e, mirror_pi, parse_recurrence, shell_w_recurrence, PRecurrence};
use agf_core::{BigRat, Dd, Real};

use crate::output::{Context, Table};
use crate::{LimitWorld, Which};

/// Above this many terms `seq` switches from exact rationals to floats.
const EXACT_SEQ_LIMIT: i64 = 2000;

fn parse_z(z: &str) -> Result<(BigRat, BigRat)> {
    parse_complex(z).with_context(|| format!("bad parameter z = {z:?}"))
}

fn to_c<R: Real>((re, im): &(BigRat, BigRat)) -> CNum<R> {
    CNum::new(R::from_ratio(re), R::from_ratio(im))
}

fn recurrence_for(world: &str) -> Result<PRecurrence> {
    Ok(match world {
        "e" => mirror_e(),
        "pi" => mirror_pi(),
        path => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("`{path}` is neither e, pi nor a readable recurrence file"))?;
            parse_recurrence(&text).with_context(|| format!("in recurrence file {path}"))?
        }
    })
}

pub fn seq(ctx: &Context, world: &str, z: &str, n_max: i64) -> Result<bool> {
    let rec = recurrence_for(world)?;
    let zr = parse_z(z)?;
    let mut table = Table::new("seq", &["n", "value"]);
    if zr.1.is_zero() && n_max <= EXACT_SEQ_LIMIT {
        for p in eval_sequence(&rec, &zr.0, n_max)? {
            table.push(vec![p.n.to_string(), p.value.to_string()]);
        }
    } else if ctx.extended() || n_max > agf_core::holonomic::EXTENDED_ITERATION_THRESHOLD {
        for p in eval_sequence(&rec, &to_c::<Dd>(&zr), n_max)? {
            table.push(vec![p.n.to_string(), p.value.fmt_digits(ctx.digits as usize)]);
        }
    } else {
        for p in eval_sequence(&rec, &to_c::<f64>(&zr), n_max)? {
            table.push(vec![p.n.to_string(), p.value.fmt_digits(ctx.digits as usize)]);
        }
    }
    ctx.emit_table(&table)?;
    Ok(true)
}

pub fn limit(ctx: &Context, world: LimitWorld, z: &str, n_max: Option<i64>) -> Result<bool> {
    let zr = parse_z(z)?;
    let z = C64::new(zr.0.to_f64(), zr.1.to_f64());
    let mut cfg = ExtrapolationConfig::default();
    if let Some(n) = n_max {
        cfg.n_base = n >> cfg.depth;
        if cfg.n_base < 16 {
            bail!(
                "--n-max {n} is too small for depth {} (needs at least {})",
                cfg.depth,
                16 << cfg.depth
            );
        }
    }
    let (rec, shell, name) = match world {
        LimitWorld::E => (mirror_e(), AsymptoticShell::f_shell(), "f"),
        LimitWorld::Pi => (mirror_pi(), AsymptoticShell::g_shell(), "g"),
        LimitWorld::Gamma => (shell_w_recurrence(), AsymptoticShell::gamma_shell(), "Gamma"),
    };
    let est = estimate_connection_constant(&rec, &shell, z, &cfg)?;
    let digits = (ctx.digits as usize).min(15);
    let mut table = Table::new("limit", &["quantity", "z", "value", "error_estimate"]);
    table.push(vec![
        name.to_string(),
        z.fmt_digits(digits),
        est.value.fmt_digits(digits),
        format!("{:.3e}", est.error_estimate),
    ]);
    ctx.emit_table(&table)?;
    Ok(true)
}

fn eval_agf<R: Real>(which: Which, z: CNum<R>) -> Result<CNum<R>> {
    Ok(match which {
        Which::F => f_eval(z)?,
        Which::G => g_eval(z)?,
    })
}

pub fn agf(ctx: &Context, which: Which, z: &str) -> Result<bool> {
    let zr = parse_z(z)?;
    let digits = ctx.digits as usize;
    let value = if ctx.extended() {
        eval_agf(which, to_c::<Dd>(&zr))?.fmt_digits(digits)
    } else {
        eval_agf(which, to_c::<f64>(&zr))?.fmt_digits(digits)
    };
    let name = match which {
        Which::F => "f",
        Which::G => "g",
    };
    let mut table = Table::new("agf", &["function", "z", "value"]);
    table.push(vec![name.to_string(), z.trim().to_string(), value]);
    ctx.emit_table(&table)?;
    Ok(true)
}

pub fn classify(ctx: &Context, file: &Path) -> Result<bool> {
    let text = std::fs::read_to_string(file).with_context(|| format!("cannot read {}", file.display()))?;
    let spec = AGFSpec::parse(&text).with_context(|| format!("in AFE spec {}", file.display()))?;
    let class = classify_regularity(&spec);
    let mut table = Table::new("classify", &["order", "coefficients", "class"]);
    let coeffs: Vec<String> = spec.coeffs().iter().map(|c| c.to_string()).collect();
    table.push(vec![spec.order().to_string(), coeffs.join("; "), class.to_string()]);
    ctx.emit_table(&table)?;
    Ok(true)
}

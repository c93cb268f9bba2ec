use anyhow::Result;
use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use agf_core::agf::{
    afe_grid_sweep, classify_regularity, duality_check_e, duality_check_pi, f_eval, f_route_sweep, g_eval,
    growth_probe, AGFSpec, GridSpec, GrowthNormalization, RegularityClass,
};
use agf_core::certify::{
    identity_chain_e, identity_chain_pi, ode_series_check_e, ode_series_check_gamma, ode_series_check_pi, CertReport,
};
use agf_core::complexfn::{hyp1f1, PrecisionConfig, C64};
use agf_core::connection::{
    estimate_connection_constant, mirror_limit_e, mirror_limit_pi, slope_ratio, slope_ratio_numeric_check,
    AsymptoticShell, ExtrapolationConfig, SlopeRatioKind,
};
use agf_core::exact::duality_forms_pi;
use agf_core::holonomic::{mirror_e, mirror_pi, shell_w_recurrence};
use agf_core::BigRat;

use crate::output::{Context, Table};
use crate::Format;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Afe,
    Duality,
    Ode,
    Slope,
    Growth,
    Chains,
    Limits,
    Kummer,
    Regularity,
    All,
}

pub fn run(ctx: &Context, suite: Suite, grid: GridSpec, seed: u64) -> Result<bool> {
    let reports = match suite {
        Suite::Afe => afe(&grid)?,
        Suite::Duality => duality()?,
        Suite::Ode => ode()?,
        Suite::Slope => slope(seed)?,
        Suite::Growth => growth()?,
        Suite::Chains => chains()?,
        Suite::Limits => limits()?,
        Suite::Kummer => kummer(seed)?,
        Suite::Regularity => regularity(),
        Suite::All => {
            let mut all = Vec::new();
            all.extend(afe(&grid)?);
            all.extend(duality()?);
            all.extend(ode()?);
            all.extend(slope(seed)?);
            all.extend(growth()?);
            all.extend(chains()?);
            all.extend(limits()?);
            all.extend(kummer(seed)?);
            all.extend(regularity());
            all
        }
    };
    let pass = reports.iter().all(|r| r.pass);
    if let Some(first) = reports.iter().find(|r| !r.pass) {
        eprintln!("FAILED: {} (max deviation {:e})", first.check, first.max_deviation);
    }
    emit(ctx, suite, &reports, pass)?;
    Ok(pass)
}

fn emit(ctx: &Context, suite: Suite, reports: &[CertReport], pass: bool) -> Result<()> {
    match ctx.format {
        Format::Json => {
            let obj = if let [single] = reports {
                serde_json::to_value(single)?
            } else {
                let max = reports.iter().map(|r| r.max_deviation).fold(0.0, f64::max);
                json!({
                    "check": format!("{suite:?}").to_lowercase(),
                    "params": {},
                    "pass": pass,
                    "max_deviation": max,
                    "details": reports,
                })
            };
            let mut w = ctx.writer()?;
            serde_json::to_writer_pretty(&mut w, &obj)?;
            writeln!(w)?;
            w.flush()?;
        }
        Format::Csv | Format::Text => {
            let mut t = Table::new("verify", &["check", "pass", "max_deviation", "entries"]);
            for r in reports {
                t.push(vec![
                    r.check.clone(),
                    if r.pass { "PASS" } else { "FAIL" }.to_string(),
                    format!("{:.3e}", r.max_deviation),
                    r.details.len().to_string(),
                ]);
            }
            ctx.emit_table(&t)?;
        }
    }
    Ok(())
}

use std::io::Write;

fn grid_params(g: &GridSpec) -> Value {
    serde_json::to_value(g).expect("grid serializes")
}

pub fn afe(grid: &GridSpec) -> Result<Vec<CertReport>> {
    let mut out = Vec::new();
    for (name, spec, h, first_pole) in [
        (
            "afe_residual_f",
            AGFSpec::f_spec(),
            f_eval as fn(C64) -> agf_core::Result<C64>,
            -2,
        ),
        ("afe_residual_g", AGFSpec::g_spec(), g_eval, -1),
    ] {
        let sweep = afe_grid_sweep(&spec, h, first_pole, grid)?;
        let mut rep = CertReport::new(name, json!({"grid": grid_params(grid), "tolerance": 1e-10}));
        for (z, v) in sweep.points {
            match v {
                Some(v) => rep.record(v, 1e-10, json!({"z": z.to_string(), "relative_residual": v})),
                None => rep.details.push(json!({"z": z.to_string(), "skipped": "pole"})),
            }
        }
        out.push(rep);
    }
    let sweep = f_route_sweep(grid)?;
    let mut rep = CertReport::new("f_three_routes", json!({"grid": grid_params(grid), "tolerance": 1e-11}));
    for (z, v) in sweep.points {
        match v {
            Some(v) => rep.record(v, 1e-11, json!({"z": z.to_string(), "relative_deviation": v})),
            None => rep.details.push(json!({"z": z.to_string(), "skipped": "pole"})),
        }
    }
    out.push(rep);
    Ok(out)
}

pub fn duality() -> Result<Vec<CertReport>> {
    let mut e = CertReport::new("duality_e", json!({"m_max": 15, "tolerance": 1e-9}));
    for r in duality_check_e(15)? {
        e.record(r.relative(), 1e-9, serde_json::to_value(&r)?);
    }
    let mut p = CertReport::new("duality_pi", json!({"m_max": 15, "tolerance": 1e-9}));
    for r in duality_check_pi(15)? {
        p.record(r.relative(), 1e-9, serde_json::to_value(&r)?);
    }
    // the constructor cross-checks recurrences against closed forms exactly
    let mut c = CertReport::new("pq_closed_forms", json!({"m_max": 100}));
    let ok = duality_forms_pi(100).is_ok();
    c.record_exact(ok, json!({"m_max": 100, "exact_match": ok}));
    Ok(vec![e, p, c])
}

pub fn ode() -> Result<Vec<CertReport>> {
    const N: usize = 200;
    let mut e = CertReport::new("ode_e", json!({"order": N, "m": "0..=8"}));
    let mut p = CertReport::new("ode_pi", json!({"order": N, "m": "0..=8"}));
    let mut g = CertReport::new("ode_gamma", json!({"order": N, "z": "0..=8, 1/2, 1/3, -7/3"}));
    for m in 0..=8u64 {
        let c = ode_series_check_e(m, N)?;
        e.record_exact(c.pass, json!({"m": m, "first_failure": c.first_failure}));
        let c = ode_series_check_pi(m, N)?;
        p.record_exact(c.pass, json!({"m": m, "first_failure": c.first_failure}));
    }
    let zs: Vec<BigRat> = (0..=8)
        .map(BigRat::from)
        .chain([BigRat::ratio(1, 2), BigRat::ratio(1, 3), BigRat::ratio(-7, 3)])
        .collect();
    for z in zs {
        let c = ode_series_check_gamma(&z, N)?;
        g.record_exact(c.pass, json!({"z": z.to_string(), "first_failure": c.first_failure}));
    }
    Ok(vec![e, p, g])
}

/// Random `β` in `[-2, 2] + [-1, 1]i` and sample points in `[0.2, 2.2] + [-1, 1]i`.
pub fn slope(seed: u64) -> Result<Vec<CertReport>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rat = CertReport::new("slope_integer_alpha", json!({"seed": seed, "tolerance": 1e-9}));
    for alpha in (-4..=4).filter(|&a| a != 0) {
        let a = BigRat::from(alpha);
        for _ in 0..5 {
            let beta = C64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-1.0..1.0));
            let res = slope_ratio(&a, beta)?;
            let samples: Vec<C64> = (0..20)
                .map(|_| C64::new(rng.gen_range(0.2..2.2), rng.gen_range(-1.0..1.0)))
                .collect();
            let form = res.rational_form.as_ref().map(|f| f.to_string());
            let dev = if res.kind == SlopeRatioKind::Rational {
                slope_ratio_numeric_check(&res, &a, beta, &samples)?
            } else {
                f64::INFINITY
            };
            rat.record(
                dev,
                1e-9,
                json!({"alpha": alpha, "beta": beta.to_string(), "form": form, "deviation": dev}),
            );
        }
    }
    let mut non = CertReport::new("slope_non_integer_alpha", json!({}));
    for (n, d) in [(1, 2), (-1, 2), (3, 2), (-3, 2), (5, 3)] {
        let a = BigRat::ratio(n, d);
        let res = slope_ratio(&a, C64::zero())?;
        non.record_exact(
            res.kind == SlopeRatioKind::NonRational,
            json!({"alpha": a.to_string(), "kind": format!("{:?}", res.kind)}),
        );
    }
    Ok(vec![rat, non])
}

pub fn growth() -> Result<Vec<CertReport>> {
    let ims = [10.0, 20.0, 40.0, 80.0];
    let f = growth_probe(f_eval, 1.0, &ims, GrowthNormalization::F)?;
    let mut fr = CertReport::new("growth_f", json!({"re": 1.0, "im": ims}));
    let decreasing = f.windows(2).all(|w| w[1].normalized < w[0].normalized);
    fr.record_exact(decreasing, json!({"decreasing": decreasing}));
    fr.record(f[3].normalized, 0.05, json!({"final": f[3].normalized}));
    for s in &f {
        fr.details.push(serde_json::to_value(s)?);
    }
    let g = growth_probe(g_eval, 1.0, &ims, GrowthNormalization::G)?;
    let mut gr = CertReport::new("growth_g", json!({"re": 1.0, "im": ims}));
    let (a, b) = (g[2].normalized, g[3].normalized);
    let variation = (a - b).abs() / a.max(b);
    gr.record(variation, 0.25, json!({"variation_last_doubling": variation}));
    for s in &g {
        gr.details.push(serde_json::to_value(s)?);
    }
    Ok(vec![fr, gr])
}

pub fn chains() -> Result<Vec<CertReport>> {
    Ok(vec![identity_chain_e(12)?, identity_chain_pi(12)?])
}

pub fn limits() -> Result<Vec<CertReport>> {
    let cfg = ExtrapolationConfig::default();
    let mut mirror = CertReport::new("mirror_limits", json!({"depth": cfg.depth, "n_base": cfg.n_base}));
    let e = mirror_limit_e(&cfg)?;
    let de = (e.value.re - std::f64::consts::E).abs();
    mirror.record(
        de,
        1e-8,
        json!({"limit": "n/u_n", "value": e.value.re, "deviation": de}),
    );
    let p = mirror_limit_pi(&cfg)?;
    let dp = (p.value.re - std::f64::consts::PI).abs();
    mirror.record(
        dp,
        1e-6,
        json!({"limit": "2n/v_n^2", "value": p.value.re, "deviation": dp}),
    );

    let mut conn = CertReport::new("connection_constants", json!({"m": "0..=10", "tolerance": 1e-6}));
    for m in 0..=10 {
        let z = C64::new(m as f64, 0.0);
        for (name, rec, shell, exact) in [
            ("f", mirror_e(), AsymptoticShell::f_shell(), f_eval(z)?),
            ("g", mirror_pi(), AsymptoticShell::g_shell(), g_eval(z)?),
        ] {
            let est = estimate_connection_constant(&rec, &shell, z, &cfg)?;
            let dev = (est.value - exact).abs() / exact.abs();
            conn.record(dev, 1e-6, json!({"function": name, "m": m, "estimate": est.value.re, "exact": exact.re, "relative_deviation": dev}));
        }
    }
    let mut gamma = CertReport::new("gamma_connection_constant", json!({"z": 0.5, "tolerance": 1e-6}));
    let w = estimate_connection_constant(
        &shell_w_recurrence(),
        &AsymptoticShell::gamma_shell(),
        C64::new(0.5, 0.0),
        &cfg,
    )?;
    let dev = (w.value.re - std::f64::consts::PI.sqrt()).abs();
    gamma.record(dev, 1e-6, json!({"estimate": w.value.re, "deviation": dev}));
    Ok(vec![mirror, conn, gamma])
}

/// `₁F₁(a;b;x) = e^x ₁F₁(b−a;b;−x)` on 50 seeded samples.
pub fn kummer(seed: u64) -> Result<Vec<CertReport>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x6b75_6d6d);
    let cfg = PrecisionConfig::double();
    let mut rep = CertReport::new("kummer", json!({"seed": seed, "samples": 50, "tolerance": 1e-11}));
    let mut n = 0;
    while n < 50 {
        let a = C64::new(rng.gen_range(-3.0..3.0), rng.gen_range(-2.0..2.0));
        let b = C64::new(rng.gen_range(-3.5..4.0), rng.gen_range(-2.0..2.0));
        if b.distance_to_nonpositive_integers() < 0.3 {
            continue;
        }
        let x = C64::new(rng.gen_range(-2.0..2.0), 0.0);
        let lhs = hyp1f1(a, b, x, &cfg)?;
        let rhs = x.exp() * hyp1f1(b - a, b, -x, &cfg)?;
        let dev = (lhs - rhs).abs() / lhs.abs().max(rhs.abs());
        rep.record(
            dev,
            1e-11,
            json!({"a": a.to_string(), "b": b.to_string(), "x": x.re, "deviation": dev}),
        );
        n += 1;
    }
    Ok(vec![rep])
}

pub fn regularity() -> Vec<CertReport> {
    let mut rep = CertReport::new("regularity", json!({}));
    for (name, spec, want) in [
        ("f", AGFSpec::f_spec(), RegularityClass::Irregular),
        ("g", AGFSpec::g_spec(), RegularityClass::Regular),
        ("gamma", AGFSpec::gamma_spec(), RegularityClass::Irregular),
    ] {
        let got = classify_regularity(&spec);
        rep.record_exact(
            got == want,
            json!({"spec": name, "class": got.to_string(), "expected": want.to_string()}),
        );
    }
    vec![rep]
}

use proptest::prelude::*;

use agf_core::agf::{afe_relative_residual, f_eval, f_eval_confluent, f_eval_gamma_route, g_eval, AGFSpec};
use agf_core::certify::{
    generating_series, integrate, ode_check_mutated, ode_residual_e, ode_residual_pi, PowerSeries,
};
use agf_core::complexfn::{gamma, hyp1f1, lower_incomplete_gamma, CNum, PrecisionConfig, C64};
use agf_core::connection::{slope_ratio, slope_ratio_numeric_check, SlopeRatioKind};
use agf_core::holonomic::{
    eval_sequence, eval_sequence_complex, mirror_e, mirror_pi, parse_expr, shell_w, shell_wtilde, RationalFn, Variables,
};
use agf_core::{BigRat, Dd, Real};

fn rat() -> impl Strategy<Value = BigRat> {
    (-1000i64..1000, 1i64..200).prop_map(|(n, d)| BigRat::ratio(n, d))
}

fn nonzero_rat() -> impl Strategy<Value = BigRat> {
    rat().prop_filter("nonzero", |r| !r.is_zero())
}

/// A point at distance at least `gap` from every integer `<= -first`.
fn off_pole(re: std::ops::Range<f64>, im: std::ops::Range<f64>, first: i64, gap: f64) -> impl Strategy<Value = C64> {
    (re, im)
        .prop_map(|(a, b)| C64::new(a, b))
        .prop_filter("near a pole", move |z| {
            let k = z.re.round();
            k > -(first as f64) || (*z - C64::new(k, 0.0)).abs() >= gap
        })
}

fn rel(a: C64, b: C64) -> f64 {
    (a - b).abs() / b.abs()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bigrat_field_identities(a in rat(), b in nonzero_rat(), c in rat()) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&(&a * &b) / &b, a.clone());
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(b.recip().unwrap().recip().unwrap(), b);
    }

    #[test]
    fn dd_round_trips_rationals(a in nonzero_rat()) {
        let d = Dd::from_ratio(&a);
        let back = d.to_ratio().unwrap();
        let err = (&(&back - &a) / &a).abs().to_f64();
        prop_assert!(err < 1e-31, "relative error {err:e}");
    }

    #[test]
    fn gamma_functional_equation(z in off_pole(-6.0..8.0, -6.0..6.0, 0, 0.05)) {
        let lhs = gamma(z + 1.0).unwrap();
        let rhs = z * gamma(z).unwrap();
        prop_assert!(rel(lhs, rhs) < 1e-12, "z = {z}");
    }

    #[test]
    fn gamma_reflection(z in off_pole(-4.0..4.0, -3.0..3.0, -100, 0.05)) {
        // Γ(z) Γ(1−z) = π / sin(πz), away from all integers
        prop_assume!((z - C64::new(z.re.round(), 0.0)).abs() > 0.05);
        let lhs = gamma(z).unwrap() * gamma(C64::one() - z).unwrap();
        let rhs = C64::new(std::f64::consts::PI, 0.0) / z.sin_pi();
        prop_assert!(rel(lhs, rhs) < 1e-12, "z = {z}");
    }

    #[test]
    fn kummer_transformation(
        a in (-3.0f64..3.0, -2.0f64..2.0),
        b in off_pole(-3.5..4.0, -2.0..2.0, 0, 0.3),
        x in -2.0f64..2.0,
    ) {
        let cfg = PrecisionConfig::double();
        let a = C64::new(a.0, a.1);
        let x = C64::new(x, 0.0);
        let lhs = hyp1f1(a, b, x, &cfg).unwrap();
        let rhs = x.exp() * hyp1f1(b - a, b, -x, &cfg).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-11 * lhs.abs().max(rhs.abs()), "a = {a}, b = {b}, x = {x}");
    }

    #[test]
    fn incomplete_gamma_matches_quadrature(a in 0.5f64..5.0, x in 0.01f64..3.0) {
        let got = lower_incomplete_gamma(C64::new(a, 0.0), x, &PrecisionConfig::double()).unwrap();
        let q = integrate(|t| t.powf(a - 1.0) * (-t).exp(), 0.0, x, 1e-14, 1e-13).unwrap();
        prop_assert!((got.re - q.value).abs() < 1e-10 * q.value.abs().max(1e-300), "a = {a}, x = {x}");
        prop_assert!(got.im.abs() < 1e-14);
    }

    #[test]
    fn f_routes_agree(z in off_pole(-1.9..6.0, -6.0..6.0, 1, 0.05)) {
        let s = f_eval(z).unwrap();
        prop_assert!(rel(f_eval_gamma_route(z).unwrap(), s) < 1e-11, "gamma route at {z}");
        prop_assert!(rel(f_eval_confluent(z).unwrap(), s) < 1e-11, "1F1 route at {z}");
    }

    #[test]
    fn afe_residuals_vanish(z in off_pole(-1.9..6.0, -6.0..6.0, 1, 0.05)) {
        prop_assert!(afe_relative_residual(&AGFSpec::f_spec(), f_eval, z).unwrap() < 1e-10);
        prop_assert!(afe_relative_residual(&AGFSpec::g_spec(), g_eval, z).unwrap() < 1e-10);
        prop_assert!(afe_relative_residual(&AGFSpec::gamma_spec(), gamma, z).unwrap() < 1e-12);
    }

    #[test]
    fn integer_slopes_are_rational(
        alpha in prop_oneof![-6i64..=-1, 1i64..=6],
        beta in (-2.0f64..2.0, -1.0f64..1.0),
        zs in prop::collection::vec((0.2f64..2.2, -1.0f64..1.0), 4),
    ) {
        let a = BigRat::from(alpha);
        let beta = C64::new(beta.0, beta.1);
        let res = slope_ratio(&a, beta).unwrap();
        prop_assert_eq!(res.kind, SlopeRatioKind::Rational);
        let zs: Vec<C64> = zs.into_iter().map(|(x, y)| C64::new(x, y)).collect();
        prop_assert!(slope_ratio_numeric_check(&res, &a, beta, &zs).unwrap() < 1e-9);
    }

    #[test]
    fn fractional_slopes_are_not(n in -40i64..40, d in 2i64..9) {
        let a = BigRat::ratio(n, d);
        prop_assume!(!a.is_integer());
        prop_assert_eq!(slope_ratio(&a, C64::zero()).unwrap().kind, SlopeRatioKind::NonRational);
    }

    #[test]
    fn rational_fn_display_round_trips(src in prop::sample::select(vec![
        "n + z", "(n+z)^2/(z+1)", "-3*n*z + 2", "1/(n + 2*z - 1)", "z^3 - n^2", "(2*n+1)/(n+z)^2",
    ]), k in -3i64..4) {
        let r = parse_expr(src, Variables::NZ, 1, 1).unwrap();
        let r = r.try_mul(&RationalFn::constant(BigRat::from(k))).unwrap();
        let back = parse_expr(&r.to_string(), Variables::NZ, 1, 1).unwrap();
        prop_assert_eq!(back, r);
    }

    #[test]
    fn shell_ratios(z in off_pole(-3.0..3.0, -2.0..2.0, 0, 0.1), n in 1i64..40) {
        // w_{n+1}/w_n = (n+1)/(z+n) and w~_{n+1}/w~_n = (n+1)/(n+1-z)
        let w = shell_w(z, n + 1).unwrap();
        let (wn, wn1) = (w[w.len() - 2].value, w[w.len() - 1].value);
        prop_assert!(rel(wn1 / wn, C64::new((n + 1) as f64, 0.0) / (z + n as f64)) < 1e-12);
        let (t0, t1) = (shell_wtilde(z, n).unwrap(), shell_wtilde(z, n + 1).unwrap());
        let want = C64::new((n + 1) as f64, 0.0) / (C64::new((n + 1) as f64, 0.0) - z);
        prop_assert!(rel(t1 / t0, want) < 1e-11, "z = {z}, n = {n}");
    }

    #[test]
    fn wtilde_parameter_shift(z in off_pole(-3.0..3.0, -2.0..2.0, -100, 0.1), n in 1i64..40) {
        // w~_n(z+1) = (n - z) w~_n(z)
        prop_assume!((C64::new(n as f64, 0.0) - z).abs() > 0.1);
        let lhs = shell_wtilde(z + 1.0, n).unwrap();
        let rhs = (C64::new(n as f64, 0.0) - z) * shell_wtilde(z, n).unwrap();
        prop_assert!(rel(lhs, rhs) < 1e-11, "z = {z}, n = {n}");
    }

    #[test]
    fn standard_form_annihilates_windows(z in rat().prop_filter("pole", |z| !(z.is_integer() && z.is_negative()))) {
        // (n+z) u_{n+2} - (n+z) u_{n+1} - u_n = 0 on 100 consecutive windows
        let u = eval_sequence(&mirror_e(), &z, 102).unwrap();
        for w in u.windows(3) {
            let nz = &BigRat::from(w[0].n) + &z;
            let r = &(&(&nz * &w[2].value) - &(&nz * &w[1].value)) - &w[0].value;
            prop_assert!(r.is_zero(), "n = {}", w[0].n);
        }
    }

    #[test]
    fn clear_denominators_preserves_sequences(z in rat().prop_filter("pole", |z| !(z.is_integer() && z.is_negative()))) {
        for rec in [mirror_e(), mirror_pi()] {
            let cleared = rec.clear_denominators().unwrap();
            let a = eval_sequence(&rec, &z, 40).unwrap();
            let b = eval_sequence(&cleared, &z, 40).unwrap();
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn complex_iteration_tracks_exact(z in rat().prop_filter("pole", |z| !(z.is_integer() && z.is_negative()))) {
        let exact = eval_sequence(&mirror_e(), &z, 200).unwrap();
        let zc = C64::new(z.to_f64(), 0.0);
        let approx = eval_sequence_complex(&mirror_e(), zc, 200).unwrap();
        let dd = eval_sequence(&mirror_e(), &CNum::<Dd>::from_rat(&z), 200).unwrap();
        for ((e, a), d) in exact.iter().zip(&approx).zip(&dd) {
            let want = e.value.to_f64();
            prop_assert!((a.value.re - want).abs() <= 1e-12 * want.abs().max(1.0), "n = {}", e.n);
            prop_assert!((d.value.re.to_f64() - want).abs() <= 1e-15 * want.abs().max(1.0), "n = {}", e.n);
        }
    }

    #[test]
    fn series_product_rule(a in prop::collection::vec(-20i64..20, 1..12), b in prop::collection::vec(-20i64..20, 1..12)) {
        let (p, q) = (PowerSeries::from_i64s(&a, 16), PowerSeries::from_i64s(&b, 16));
        let lhs = (&p * &q).derivative();
        let rhs = &(&p.derivative() * &q) + &(&p * &q.derivative());
        prop_assert_eq!(lhs.coeffs(), rhs.coeffs());
    }

    #[test]
    fn ode_certificate_detects_corruption(m in 0u64..6, index in 2usize..60, bump in nonzero_rat()) {
        let mr = BigRat::from(m as i64);
        for (rec, residual) in [
            (mirror_e(), ode_residual_e as fn(&BigRat, &PowerSeries) -> PowerSeries),
            (mirror_pi(), ode_residual_pi),
        ] {
            let s = generating_series(&rec, &mr, 61).unwrap();
            let clean = ode_check_mutated(residual, &mr, &s, index, s.coeff(index));
            prop_assert!(clean.pass);
            let bad = ode_check_mutated(residual, &mr, &s, index, &s.coeff(index) + &bump);
            prop_assert!(!bad.pass, "corruption at {index} undetected");
        }
    }
}

/// A deliberately naive exact iteration of the e-world mirror, used as the
/// reference for the library's evaluator.
fn naive_mirror_e(z: &BigRat, n_max: i64) -> Vec<BigRat> {
    let mut u = vec![BigRat::zero(), BigRat::one()];
    for n in 1..=n_max - 2 {
        let k = u.len();
        let next = &u[k - 1] + &(&u[k - 2] / &(&BigRat::from(n) + z));
        u.push(next);
    }
    u
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn exact_evaluation_matches_naive(z in rat().prop_filter("pole", |z| !(z.is_integer() && z.is_negative())), n_max in 100i64..=500) {
        let got: Vec<BigRat> = eval_sequence(&mirror_e(), &z, n_max).unwrap().into_iter().map(|p| p.value).collect();
        prop_assert_eq!(got, naive_mirror_e(&z, n_max));
    }
}

//! Reference values computed independently with mpmath/sympy
//! (`tools/oracle.py`) and frozen here.

#![allow(clippy::excessive_precision)]

use agf_core::agf::{a_function, f_eval, f_eval_confluent, f_eval_gamma_route, g_eval};
use agf_core::certify::{quad_i, quad_l};
use agf_core::complexfn::{gamma, hyp1f1, log_gamma, lower_incomplete_gamma, CNum, PrecisionConfig, C64};
use agf_core::exact::{duality_form_e, duality_form_pi};
use agf_core::holonomic::{eval_sequence, mirror_e, mirror_pi, shell_w_recurrence};
use agf_core::{BigRat, Dd, Real};

type Pt = (f64, f64);

fn c((re, im): Pt) -> C64 {
    C64::new(re, im)
}

fn rel(got: C64, want: C64) -> f64 {
    (got - want).abs() / want.abs()
}

fn rat(s: &str) -> BigRat {
    s.parse().unwrap()
}

fn dd(s: &str) -> Dd {
    Dd::from_ratio(&s.parse::<BigRat>().unwrap())
}

const F_VALUES: [(Pt, Pt); 11] = [
    ((0.0, 0.0), (0.3678794411714423216, 0.0)),
    ((1.0, 0.0), (0.26424111765711535681, 0.0)),
    ((2.5, 0.0), (0.18729352823008550117, 0.0)),
    ((-1.0, 0.0), (0.6321205588285576784, 0.0)),
    ((-0.5, 0.0), (0.46192049308723158086, 0.0)),
    ((-1.5, 0.0), (1.0761590138255368383, 0.0)),
    ((-2.5, 0.0), (0.15231802765107367655, 0.0)),
    ((0.5, 1.0), (0.2765468910073506882, -0.089540314596017809486)),
    ((-1.25, 3.0), (0.12553332037639737668, -0.24990679428399689987)),
    ((4.0, -2.0), (0.13369300309802770267, 0.03948054658758747808)),
    ((2.0, 10.0), (0.039325992998067376495, -0.079917354223476090716)),
];

const G_VALUES: [(Pt, Pt); 10] = [
    ((0.0, 0.0), (0.79788456080286535588, 0.0)),
    ((1.0, 0.0), (0.45542957651263489533, 0.0)),
    ((2.0, 0.0), (0.34245498429023046055, 0.0)),
    ((0.5, 0.0), (0.56806082256697665359, 0.0)),
    ((-0.5, 0.0), (1.5240384175392266443, 0.0)),
    ((-1.5, 0.0), (-2.480016012511476635, 0.0)),
    ((0.5, 1.0), (0.42897109474778255386, -0.20462488746056011687)),
    ((-1.25, 3.0), (0.15193236196163547592, -0.23506014269060691796)),
    ((4.0, -2.0), (0.22932891185025379944, 0.052724763819735968497)),
    ((1.0, 20.0), (0.080990798060892511113, -0.077036402054001389749)),
];

#[test]
fn f_matches_integral_representation() {
    for (z, want) in F_VALUES {
        let (z, want) = (c(z), c(want));
        assert!(rel(f_eval(z).unwrap(), want) < 1e-13, "series f({z})");
        assert!(rel(f_eval_gamma_route(z).unwrap(), want) < 1e-12, "gamma route f({z})");
        if z != C64::new(-1.0, 0.0) {
            assert!(rel(f_eval_confluent(z).unwrap(), want) < 1e-12, "1F1 route f({z})");
        }
    }
}

#[test]
fn g_matches_reference() {
    for (z, want) in G_VALUES {
        let (z, want) = (c(z), c(want));
        // the difference A(z) - A(z-1) cancels digits at large |Im z|
        let cond = 2f64.sqrt() * (a_function(z).unwrap().abs() + a_function(z - 1.0).unwrap().abs()) / want.abs();
        let err = rel(g_eval(z).unwrap(), want);
        assert!(err < 1e-14 * cond.max(10.0), "g({z}): {err:e}, condition {cond:.1}");
    }
}

#[test]
fn extended_precision_agf_values() {
    let f1 = f_eval(CNum::from_real(Dd::ONE)).unwrap().re;
    assert!((f1 - dd("0.26424111765711535681")).abs().to_f64() < 1e-19);
    let g_half = g_eval(CNum::from_real(Dd::from(0.5))).unwrap().re;
    assert!((g_half - dd("0.56806082256697665359")).abs().to_f64() < 1e-19);
}

#[test]
fn gamma_and_log_gamma_reference() {
    let gammas: [(Pt, Pt); 7] = [
        ((0.5, 0.0), (1.7724538509055160273, 0.0)),
        ((0.33333333333333331483, 0.0), (2.6789385347077477889, 0.0)),
        ((-2.5, 0.0), (-0.94530872048294188123, 0.0)),
        ((0.25, 3.0), (0.017050323934244119273, -0.001596877420381335891)),
        (
            (-3.7000000000000001776, 1.1000000000000000888),
            (0.0084187293174164326483, 0.012178755653593042292),
        ),
        ((12.0, 15.0), (-4585.642722830477974, 12097.739682031914113)),
        ((80.0, -3.0), (7.1553394549837382383e+116, -4.5023198947627232856e+116)),
    ];
    for (z, want) in gammas {
        let (z, want) = (c(z), c(want));
        assert!(rel(gamma(z).unwrap(), want) < 1e-13, "gamma({z})");
        assert!(
            rel(gamma(z.cast::<Dd>()).unwrap().to_c64(), want) < 1e-15,
            "Dd gamma({z})"
        );
    }
    let logs: [(Pt, Pt); 4] = [
        ((0.75, 0.0), (0.20328095143129537148, 0.0)),
        ((3.0, 4.0), (-1.7566267846037841105, 4.7426644380346579282)),
        ((100.0, 0.0), (359.13420536957539878, 0.0)),
        ((10.0, -30.0), (-13.73976365799715949, -85.47976397251643709)),
    ];
    for (z, want) in logs {
        let (z, want) = (c(z), c(want));
        assert!(
            (log_gamma(z).unwrap() - want).abs() < 1e-13 * want.abs().max(1.0),
            "log_gamma({z})"
        );
    }
}

#[test]
fn incomplete_gamma_reference() {
    let cases: [(Pt, f64, Pt); 5] = [
        ((2.0, 0.0), -1.0, (1.0, 0.0)),
        ((0.5, 0.0), 1.0, (1.4936482656248540508, 0.0)),
        ((2.5, 1.0), -1.0, (0.010518086642578979507, 0.032485301994689695243)),
        ((-0.5, 0.0), 2.0, (-3.5750064589112185209, 0.0)),
        ((3.0, -2.0), 0.75, (0.020713651437240377785, 0.061289717054845307252)),
    ];
    let cfg = PrecisionConfig::double();
    for (a, x, want) in cases {
        let got = lower_incomplete_gamma(c(a), x, &cfg).unwrap();
        assert!(rel(got, c(want)) < 1e-13, "gamma({a:?}, {x}) = {got}");
    }
}

#[test]
fn hyp1f1_reference() {
    let cases: [(Pt, Pt, f64, Pt); 4] = [
        ((2.0, 0.0), (3.0, 0.0), -1.0, (0.52848223531423071362, 0.0)),
        (
            (0.5, 1.0),
            (1.5, -0.5),
            1.5,
            (0.53208637680289298755, 1.5783575769413097118),
        ),
        (
            (-2.5, 0.2999999999999999889),
            (3.0, 1.0),
            -2.0,
            (2.8119207446542121024, -1.1798016251574354502),
        ),
        (
            (1.0, 0.0),
            (-0.5, 0.5),
            0.8,
            (-1.9138232130479695193, -0.45945397986824745143),
        ),
    ];
    let cfg = PrecisionConfig::double();
    for (a, b, x, want) in cases {
        let got = hyp1f1(c(a), c(b), C64::new(x, 0.0), &cfg).unwrap();
        assert!(rel(got, c(want)) < 1e-13, "1F1({a:?}; {b:?}; {x}) = {got}");
    }
}

#[test]
fn duality_forms_reference() {
    let e_forms = [
        (0, "1", "0"),
        (1, "2", "1"),
        (2, "6", "2"),
        (3, "24", "9"),
        (7, "40320", "14833"),
        (12, "6227020800", "2290792932"),
        (20, "51090942171709440000", "18795307255050944540"),
    ];
    for (m, a, b) in e_forms {
        let f = duality_form_e(m).unwrap();
        assert_eq!((f.a.to_string().as_str(), f.b.to_string().as_str()), (a, b), "m = {m}");
    }
    let pi_forms = [
        (0, "1", "0"),
        (1, "1", "1/2"),
        (2, "2", "1/2"),
        (3, "2", "3/4"),
        (6, "16/5", "15/16"),
        (11, "256/63", "693/512"),
        (20, "262144/46189", "230945/131072"),
    ];
    for (m, p, q) in pi_forms {
        let f = duality_form_pi(m).unwrap();
        assert_eq!(f.p, rat(p), "p_{m}");
        assert_eq!(f.q, rat(q), "q_{m}");
    }
}

fn value_at(rec: &agf_core::PRecurrence, z: &BigRat, n: i64) -> BigRat {
    let seq = eval_sequence(rec, z, n).unwrap();
    seq.into_iter().find(|p| p.n == n).unwrap().value
}

#[test]
fn mirror_sequences_reference() {
    let z = BigRat::ratio(1, 3);
    let cases = [
        (3, "1", "3/4"),
        (4, "10/7", "37/28"),
        (5, "121/70", "321/280"),
        (10, "510786487/152152000", "7014283/3477760"),
        (
            40,
            "8764514986219916962018744933062319876195234590083533986588471133/668871195565565293131820034204718544916077690665041920000000000",
            "8194286012485888834744284040847675900437/2063390420933104263581206730715066007552",
        ),
    ];
    for (n, u, v) in cases {
        assert_eq!(value_at(&mirror_e(), &z, n), rat(u), "u_{n}(1/3)");
        assert_eq!(value_at(&mirror_pi(), &z, n), rat(v), "v_{n}(1/3)");
    }
}

#[test]
fn shell_w_reference() {
    let z = BigRat::ratio(7, 3);
    for (n, w) in [
        (1, "3/7"),
        (2, "9/35"),
        (5, "729/6916"),
        (30, "984770902183611232881/81119039506932635576368"),
    ] {
        assert_eq!(value_at(&shell_w_recurrence(), &z, n), rat(w), "w_{n}(7/3)");
    }
}

#[test]
fn quadrature_reference() {
    for (m, want) in [
        (0.5, 1.2556300825518636266),
        (1.0, 1.0),
        (3.25, 0.53486561157992141261),
        (7.0, 0.30549003693013364203),
    ] {
        assert!((quad_i(m).unwrap().value - want).abs() < 1e-13, "I_{m}");
    }
    for (m, want) in [
        (1, 0.57079632679489661923),
        (2, 0.42920367320510338077),
        (5, 0.27857644607376449439),
        (12, 0.18070568888143541165),
    ] {
        assert!((quad_l(m).unwrap().value - want).abs() < 1e-13, "L_{m}");
    }
}

mod common;

use std::f64::consts::PI;

use num_complex::Complex64;
use num_rational::Ratio;
use proptest::prelude::*;

use common::{deformation_oracle, eigenpair, index_character, non_cyclic_specs, sawtooth_f};
use spherequot::catalog::{enumerate, gamma_prime, GroupSpec};
use spherequot::invariants::{
    char_rho, closed_form_dim, dim_h1_theta, dim_sfk, eisenstein_check, moduli_dim, sawtooth, topology_report,
};
use spherequot::resolution::{b_gamma, resolution_graph};

fn away_from_pi() -> impl Strategy<Value = f64> {
    (0.0..2.0 * PI).prop_filter("sin bounded away from 0", |t: &f64| {
        let r = t.rem_euclid(PI);
        r > 1e-3 && r < PI - 1e-3
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn character_identity(k in 0i64..40, theta in away_from_pi()) {
        let direct: Complex64 = (0..=2 * k)
            .map(|p| Complex64::from_polar(1.0, theta * (2 * k - 2 * p) as f64))
            .sum();
        let ratio = ((2 * k + 1) as f64 * theta).sin() / theta.sin();
        let cot = (2.0 * k as f64 * theta).sin() / theta.tan() + (2.0 * k as f64 * theta).cos();
        prop_assert!((direct - ratio).norm() < 1e-8);
        prop_assert!((ratio - cot).abs() < 1e-8);
        // The library's character at m = k + 1 on SU(2) eigenvalues.
        let lib = char_rho(Complex64::from_polar(1.0, theta), Complex64::from_polar(1.0, -theta), k + 1);
        prop_assert!((lib - direct).norm() < 1e-8);
    }

    #[test]
    fn index_identity(m in 1i64..30, t1 in 0.0..2.0 * PI, t2 in away_from_pi()) {
        let z1 = Complex64::from_polar(1.0, t1 + t2);
        let z2 = Complex64::from_polar(1.0, t1 - t2);
        let lhs = char_rho(z1, z2, m);
        let rhs = Complex64::from_polar(1.0, 2.0 * m as f64 * t1)
            * ((2.0 * (m - 1) as f64 * t2).sin() / t2.tan() + (2.0 * (m - 1) as f64 * t2).cos());
        prop_assert!((lhs - rhs).norm() < 1e-8);
        prop_assert!((index_character(t1, t2, m) - rhs).norm() < 1e-8);
    }

    #[test]
    fn greatest_integer_simplification(
        (x, z, y) in (1i64..100_000, 1i64..500).prop_flat_map(|(x, z)| (Just(x), Just(z), 0..=x % z))
    ) {
        prop_assert_eq!(num_integer::Integer::div_floor(&(x - y), &z), (x - x % z) / z);
    }

    #[test]
    fn sawtooth_is_odd_and_periodic(a in -500i64..500, b in 1i64..200) {
        let x = Ratio::new(a, b);
        prop_assert_eq!(sawtooth(-x), -sawtooth(x));
        prop_assert_eq!(sawtooth(x + 1), sawtooth(x));
        let f = sawtooth(x);
        prop_assert!((*f.numer() as f64 / *f.denom() as f64 - sawtooth_f(a as f64 / b as f64)).abs() < 1e-12);
    }

    #[test]
    fn eisenstein_random(n in 2i64..400, k in -50i64..900) {
        let nf = n as f64;
        let lhs: f64 = (1..n)
            .map(|j| (2.0 * PI * (k * j) as f64 / nf).sin() * (PI * j as f64 / nf).cos() / (PI * j as f64 / nf).sin())
            .sum();
        prop_assert!((lhs + 2.0 * nf * sawtooth_f(k as f64 / nf)).abs() < 1e-6);
        prop_assert!(eisenstein_check(n, k) < 1e-6);
    }
}

#[test]
fn deformation_dimension_matches_oracle() {
    for spec in non_cyclic_specs(40, 8) {
        let m = spec.m().unwrap();
        let rep = dim_sfk(&spec, 1e-6).unwrap();
        let b = b_gamma(&spec).unwrap().value;
        if m == 1 {
            assert!(!rep.applicable);
            assert_eq!(rep.brute, 0, "{spec}");
            assert_eq!(closed_form_dim(&spec).unwrap(), None);
            continue;
        }
        let oracle = deformation_oracle(&gamma_prime(&spec).unwrap(), m);
        assert!(oracle.im.abs() < 1e-6, "{spec}: {oracle}");
        assert_eq!(oracle.re.round() as i64, 2 * b - 2, "{spec}");
        assert_eq!((rep.brute, rep.closed, rep.two_b_minus_2), (2 * b - 2, 2 * b - 2, 2 * b - 2), "{spec}");
        assert_eq!(closed_form_dim(&spec).unwrap(), Some(2 * b - 2));
    }
}

#[test]
fn full_group_character_sums_are_real() {
    for spec in non_cyclic_specs(25, 6) {
        let m = spec.m().unwrap();
        let g = enumerate(&spec).unwrap();
        let mut s = Complex64::new(0.0, 0.0);
        for x in &g.elements {
            let (a, b) = eigenpair(x);
            s += char_rho(a, b, m);
        }
        assert!(s.im.abs() / (g.order() as f64) < 1e-6, "{spec}: {s}");
    }
}

#[test]
fn spot_values() {
    let t7 = dim_sfk(&GroupSpec::ProdTetrahedral { m: 7 }, 1e-6).unwrap();
    assert_eq!(t7.brute, 4);
    assert_eq!(moduli_dim(&GroupSpec::ProdDihedral { m: 1, n: 2 }).unwrap(), 6);
    let q8 = resolution_graph(&GroupSpec::ProdDihedral { m: 1, n: 2 }).unwrap();
    assert_eq!(dim_h1_theta(&q8.graph), 4);
    let top = topology_report(&GroupSpec::ProdDihedral { m: 1, n: 2 }, Some(Ratio::new(-3, 4))).unwrap();
    assert_eq!(top.bound_excess, Some(Ratio::from_integer(0)));
    assert_eq!(top.tau_top, -4);
    assert_eq!(top.chi_top, 5);
}

#[test]
fn cyclic_specs_have_no_deformation_report() {
    assert!(dim_sfk(&GroupSpec::Cyclic { q: 3, p: 5 }, 1e-6).is_err());
    assert!(dim_sfk(&GroupSpec::ProdDihedral { m: 3, n: 1 }, 1e-6).is_err());
}

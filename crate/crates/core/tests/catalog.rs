mod common;

use num_rational::Ratio;
use proptest::prelude::*;

use common::{all_specs, eigen_turns, table_order};
use spherequot::catalog::{
    canonical_cyclic, cyclic_type_of, enumerate, gamma_prime, is_cyclic, is_fixed_point_free, specs_in_range,
    CatalogError, CyclicType, Family, FiniteGroup, GroupSpec,
};
use spherequot::quaternion::GroupElement;
use spherequot::Error;

#[test]
fn orders_match_table_on_small_box() {
    for spec in all_specs(30, 8, 40) {
        let g = enumerate(&spec).unwrap();
        assert_eq!(g.order() as i64, table_order(&spec), "{spec}");
        assert_eq!(spec.expected_order(), table_order(&spec));
        assert!(is_fixed_point_free(&g).unwrap(), "{spec}");
        assert!(g.is_closed(), "{spec}");
    }
}

#[test]
fn worked_examples() {
    assert_eq!(enumerate(&GroupSpec::ProdDihedral { m: 1, n: 2 }).unwrap().order(), 8);
    assert_eq!(enumerate(&GroupSpec::Cyclic { q: 3, p: 5 }).unwrap().order(), 5);
    assert_eq!(enumerate(&GroupSpec::ProdIcosahedral { m: 7 }).unwrap().order(), 840);
    assert_eq!(enumerate(&GroupSpec::Index3Diagonal { m: 3 }).unwrap().order(), 72);
}

#[test]
fn invalid_parameters_are_rejected() {
    for spec in [
        GroupSpec::ProdDihedral { m: 2, n: 2 },
        GroupSpec::ProdTetrahedral { m: 3 },
        GroupSpec::ProdIcosahedral { m: 5 },
        GroupSpec::Index2Diagonal { m: 3, n: 2 },
        GroupSpec::Index3Diagonal { m: 9 * 2 },
        GroupSpec::Cyclic { q: 2, p: 4 },
    ] {
        match enumerate(&spec) {
            Err(CatalogError::InvalidParameters(s)) => assert_eq!(s, spec),
            other => panic!("{spec}: {other:?}"),
        }
        let e: Error = enumerate(&spec).unwrap_err().into();
        assert_eq!(e.module(), "group_catalog");
    }
}

#[test]
fn cyclic_generator_has_lens_eigenvalues() {
    // diag(e^{2πi/p}, e^{2πiq/p}) up to ordering.
    for (q, p) in [(1, 2), (3, 5), (2, 7), (5, 12), (1, 9)] {
        let g = enumerate(&GroupSpec::Cyclic { q, p }).unwrap();
        let gen = g.generators[0];
        let (a, b) = eigen_turns(&gen, p);
        let mut want = [Ratio::new(1, p), Ratio::new(q % p, p)];
        want.sort();
        assert_eq!((a, b), (want[0], want[1]), "L({q},{p})");
        let t = cyclic_type_of(&g).unwrap();
        assert!(t.conjugate_equivalent(&canonical_cyclic(q, p).unwrap()), "L({q},{p}) -> {t}");
    }
}

#[test]
fn degenerate_dihedral_families_are_cyclic() {
    for m in [1, 3, 5, 7, 9] {
        let spec = GroupSpec::ProdDihedral { m, n: 1 };
        assert!(spec.is_degenerate() && spec.is_cyclic_like());
        assert!(is_cyclic(&enumerate(&spec).unwrap()).unwrap(), "{spec}");
    }
    for m in [2, 4, 6, 8] {
        let spec = GroupSpec::Index2Diagonal { m, n: 1 };
        assert!(is_cyclic(&enumerate(&spec).unwrap()).unwrap(), "{spec}");
    }
    assert!(!is_cyclic(&enumerate(&GroupSpec::ProdDihedral { m: 1, n: 2 }).unwrap()).unwrap());
}

#[test]
fn fiber_rotation_subgroup() {
    for spec in common::non_cyclic_specs(20, 6) {
        let m = spec.m().unwrap();
        let g = enumerate(&spec).unwrap();
        let fiber = GroupElement::circle_pair(std::f64::consts::PI / m as f64, spherequot::quaternion::Quaternion::ONE);
        let sub = FiniteGroup::from_generators(spec, vec![fiber], 4 * m as usize).unwrap();
        assert_eq!(sub.order() as i64, 2 * m, "{spec}");
        for x in &sub.elements {
            assert!(g.contains(x), "{spec}");
            assert!(x.mobius().is_identity(), "{spec}");
        }
        // The subgroup generated without the fiber rotation meets it in ±1.
        let gp = gamma_prime(&spec).unwrap();
        let meet = sub.elements.iter().filter(|x| gp.contains(x)).count();
        assert!(meet >= 1 && gp.order() <= g.order(), "{spec}");
    }
}

#[test]
fn spec_text_round_trip() {
    for spec in specs_in_range(&Family::ALL, 12, 5, 12) {
        let text = spec.to_string();
        assert_eq!(text.parse::<GroupSpec>().unwrap(), spec);
        let json = serde_json::to_string(&spec).unwrap();
        assert_eq!(serde_json::from_str::<GroupSpec>(&json).unwrap(), spec);
    }
    assert!("dihedral:1".parse::<GroupSpec>().is_err());
    assert!("square:1".parse::<GroupSpec>().is_err());
}

proptest! {
    #[test]
    fn canonical_cyclic_normalizes(a in -500i64..500, beta in 2i64..200) {
        match canonical_cyclic(a, beta) {
            Ok(t) => {
                prop_assert_eq!(t.beta, beta);
                prop_assert!(t.alpha >= 0 && t.alpha < beta);
                prop_assert_eq!((t.alpha - a).rem_euclid(beta), 0);
                prop_assert!(t.conjugate_equivalent(&t.conjugate()));
            }
            Err(_) => prop_assert!(num_integer::gcd(a, beta) != 1),
        }
    }

    #[test]
    fn conjugate_is_involutive(q in 1i64..300, p in 2i64..300) {
        prop_assume!(q < p && num_integer::gcd(q, p) == 1);
        let t = CyclicType { alpha: q, beta: p };
        prop_assert_eq!(t.conjugate().conjugate(), t);
        prop_assert_eq!((t.alpha * t.conjugate().alpha).rem_euclid(p), 1 % p);
    }
}

//! Level bookkeeping invariants of the K-theory tower.

use direct_limit::CertBounds;
use ktheory_engine::{k0_colimit, pv_compute, recursion_from_scalar, GroupRingElement};
use num_bigint::BigInt;
use selfsim_core::AutomatonGroup;

#[test]
fn pushing_two_levels_quadruples_the_unit_class() {
    let g = AutomatonGroup::dihedral();
    let data = k0_colimit(&g, CertBounds::default()).unwrap();
    for n in 0..8usize {
        assert!(data.system.verify_relation(&[
            (BigInt::from(1), data.class_one(n)),
            (BigInt::from(-4), data.class_one(n + 2)),
        ]));
    }
}

#[test]
fn recursion_tower_stays_unital() {
    let g = AutomatonGroup::dihedral();
    for levels in 0..=3usize {
        let m = recursion_from_scalar(&g, &GroupRingElement::unit(), levels).unwrap();
        assert!(m.is_diagonal());
        assert_eq!(m.size(), 1 << levels);
    }
}

#[test]
fn kernel_generators_are_level_independent() {
    let g = AutomatonGroup::dihedral();
    let data = k0_colimit(&g, CertBounds::default()).unwrap();
    let pv = pv_compute(&data, CertBounds::default()).unwrap();
    assert!(pv.generator_level_independent);
    // and the kernel generator differs from the stated coordinates
    assert!(!pv.stated_generator_in_kernel);
}

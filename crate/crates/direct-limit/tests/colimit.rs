//! Property suite for stationary colimits: colim_equal is an equivalence
//! relation, agrees with deep brute-force push-forward, and the kernel
//! stabilization detection is sound.

use direct_limit::{classify_colimit, CertBounds, ColimitElement, StationarySystem};
use exact_abelian::{AbHom, FGAbelianGroup, IntMatrix};
use num_bigint::BigInt;
use proptest::prelude::*;

fn k0_system() -> StationarySystem {
    let g = FGAbelianGroup::free(3);
    let a = AbHom::new(
        g.clone(),
        g.clone(),
        IntMatrix::from_rows(&[&[2, 1, 0], &[0, 0, 1], &[0, 0, 1]]),
    )
    .unwrap();
    StationarySystem::new(g, a).unwrap()
}

fn h1_system() -> StationarySystem {
    let g = FGAbelianGroup::cokernel_presentation(&IntMatrix::from_rows(&[&[2, 0], &[0, 2]]));
    let a = AbHom::new(g.clone(), g.clone(), IntMatrix::from_rows(&[&[0, 1], &[0, 1]])).unwrap();
    StationarySystem::new(g, a).unwrap()
}

fn suite_systems() -> Vec<StationarySystem> {
    let halving = {
        let g = FGAbelianGroup::free(1);
        let a = AbHom::new(g.clone(), g.clone(), IntMatrix::from_rows(&[&[2]])).unwrap();
        StationarySystem::new(g, a).unwrap()
    };
    vec![k0_system(), h1_system(), halving]
}

#[test]
fn stabilization_margin_is_sound() {
    for sys in suite_systems() {
        let t = sys.stabilization_exponent();
        assert!(exact_abelian::lattice_eq(
            &sys.kernel_lattice_at(t),
            &sys.kernel_lattice_at(t + 5),
        ));
    }
}

#[test]
fn brute_force_agreement_at_level_40() {
    // exhaustive over small representatives of the suite systems
    for sys in suite_systems() {
        let dim = sys.group().dim();
        let coords: Vec<i64> = vec![-2, -1, 0, 1, 2];
        let mut elems = Vec::new();
        for n in 0..3usize {
            // all small vectors
            let mut stack = vec![Vec::new()];
            for _ in 0..dim {
                let mut next = Vec::new();
                for v in &stack {
                    for &c in &coords {
                        let mut w = v.clone();
                        w.push(BigInt::from(c));
                        next.push(w);
                    }
                }
                stack = next;
            }
            for v in stack {
                elems.push(sys.element(n, v));
            }
        }
        for e1 in elems.iter().take(60) {
            for e2 in elems.iter().take(60) {
                let fast = sys.colim_equal(e1, e2);
                let deep = sys.pushforward_equal_at(e1, e2, e1.level.max(e2.level) + 40);
                assert_eq!(fast, deep);
            }
        }
    }
}

#[test]
fn certified_descriptors_express_sampled_elements() {
    // classification re-runs its own surjectivity checks up to level 12
    let bounds = CertBounds {
        independence_depths: 12,
        surjectivity_levels: 12,
    };
    for sys in suite_systems() {
        classify_colimit(&sys, bounds).unwrap();
    }
}

proptest! {
    #[test]
    fn colim_equal_is_an_equivalence(
        reps in proptest::collection::vec((0usize..4, proptest::collection::vec(-3i64..=3, 3)), 3)
    ) {
        let sys = k0_system();
        let es: Vec<ColimitElement> = reps
            .iter()
            .map(|(n, v)| sys.element(*n, v.iter().map(|&x| BigInt::from(x)).collect()))
            .collect();
        // reflexive
        for e in &es {
            prop_assert!(sys.colim_equal(e, e));
        }
        // symmetric
        prop_assert_eq!(sys.colim_equal(&es[0], &es[1]), sys.colim_equal(&es[1], &es[0]));
        // transitive
        if sys.colim_equal(&es[0], &es[1]) && sys.colim_equal(&es[1], &es[2]) {
            prop_assert!(sys.colim_equal(&es[0], &es[2]));
        }
    }

    #[test]
    fn pushing_preserves_class(n in 0usize..4, v in proptest::collection::vec(-4i64..=4, 3), k in 0usize..6) {
        let sys = k0_system();
        let e = sys.element(n, v.into_iter().map(BigInt::from).collect());
        let pushed = sys.push(&e, n + k);
        prop_assert!(sys.colim_equal(&e, &pushed));
    }
}

//! Randomized contracts for the exact linear algebra layer.

use exact_abelian::{induced_hom, snf, subquotient, FGAbelianGroup, IntMatrix};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    IntMatrix::from_fn(rows, cols, |_, _| BigInt::from(rng.gen_range(-bound..=bound)))
}

/// Random unimodular matrix: a product of elementary row operations.
fn random_unimodular<R: Rng>(rng: &mut R, n: usize) -> IntMatrix {
    let mut m = IntMatrix::identity(n);
    for _ in 0..3 * n {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n);
        if n > 1 {
            while j == i {
                j = rng.gen_range(0..n);
            }
            let c = BigInt::from(rng.gen_range(-2i64..=2));
            for k in 0..n {
                let t = &c * &m[(j, k)];
                m[(i, k)] += t;
            }
        }
    }
    m
}

#[test]
fn snf_contract_on_many_random_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(100);
    for _ in 0..200 {
        let rows = rng.gen_range(1..=8);
        let cols = rng.gen_range(1..=8);
        let a = random_matrix(&mut rng, rows, cols, 9);
        let s = snf(&a);
        assert_eq!(&(&s.u * &a) * &s.v, s.d);
        assert_eq!(s.u.det().abs(), BigInt::one());
        assert_eq!(s.v.det().abs(), BigInt::one());
        let d = s.diagonal();
        for i in 0..d.len() {
            assert!(!d[i].is_negative());
            if i + 1 < d.len() && !d[i + 1].is_zero() {
                assert!(!d[i].is_zero());
                assert!((&d[i + 1] % &d[i]).is_zero());
            }
        }
    }
}

#[test]
fn cokernel_invariant_under_unimodular_change() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for _ in 0..60 {
        let rows: usize = rng.gen_range(1..=6);
        let cols: usize = rng.gen_range(1..=6);
        let a = random_matrix(&mut rng, rows, cols, 6);
        let p = random_unimodular(&mut rng, rows);
        let q = random_unimodular(&mut rng, cols);
        let g1 = FGAbelianGroup::cokernel_presentation(&a);
        let g2 = FGAbelianGroup::cokernel_presentation(&(&(&p * &a) * &q));
        assert_eq!(g1.invariants(), g2.invariants());
    }
}

#[test]
fn subquotient_lift_project_roundtrip() {
    let mut rng = ChaCha8Rng::seed_from_u64(102);
    for _ in 0..60 {
        let n = rng.gen_range(1..=5);
        let krows = rng.gen_range(0..=3usize);
        let k = random_matrix(&mut rng, krows, n, 4);
        // boundaries: random combinations scaled into the kernel
        let ker = exact_abelian::kernel_basis(&k);
        if ker.cols() == 0 {
            continue;
        }
        let bcols = rng.gen_range(1..=3usize);
        let combos = random_matrix(&mut rng, ker.cols(), bcols, 3);
        let b = &ker * &combos;
        let sq = subquotient(&k, &b).unwrap();
        for i in 0..sq.group().dim() {
            let amb = sq.lift_gen(i);
            assert_eq!(sq.project(&amb).unwrap(), sq.group().gen_vec(i));
        }
    }
}

#[test]
fn induced_hom_respects_composition() {
    let mut rng = ChaCha8Rng::seed_from_u64(103);
    let mut done = 0usize;
    while done < 25 {
        let n = rng.gen_range(1..=4);
        // one subquotient, two random chain endomorphisms that preserve it
        let k = IntMatrix::zeros(0, n);
        let scale = BigInt::from(rng.gen_range(2i64..=4));
        let b = IntMatrix::identity(n).scaled(&scale);
        let sq = subquotient(&k, &b).unwrap();
        let f = random_matrix(&mut rng, n, n, 3);
        let g = random_matrix(&mut rng, n, n, 3);
        // maps into the full kernel always; boundary condition: f(b) in im(b)
        // holds because b is a scalar matrix and f is integral
        let hf = induced_hom(&f, &sq, &sq).unwrap();
        let hg = induced_hom(&g, &sq, &sq).unwrap();
        let hfg = induced_hom(&(&f * &g), &sq, &sq).unwrap();
        let composite = hf.compose(&hg);
        for i in 0..sq.group().dim() {
            let v = sq.group().gen_vec(i);
            assert_eq!(hfg.apply(&v), composite.apply(&v));
        }
        done += 1;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn solve_finds_exact_solutions(
        entries in proptest::collection::vec(-6i64..=6, 9),
        x in proptest::collection::vec(-4i64..=4, 3),
    ) {
        let a = IntMatrix::from_fn(3, 3, |i, j| BigInt::from(entries[3 * i + j]));
        let xv: Vec<BigInt> = x.iter().map(|&v| BigInt::from(v)).collect();
        let b = a.apply(&xv);
        let sol = exact_abelian::solve(&a, &b).expect("constructed system is solvable");
        prop_assert_eq!(a.apply(&sol), b);
    }
}

//! Structural invariants of the homology machinery at moderate depths:
//! per-factor kernel/image equality, torsion exponents, refinement
//! equivariance, six-term bookkeeping for the free-product decomposition,
//! and the comparison between the resolution classes and germ witnesses.

use exact_abelian::{kernel_basis, lattice_eq, subquotient, FGAbelianGroup, IntMatrix, Solver};
use homology_engine::{
    check_block_compatibility, depth_module, germ_witness_check, group_homology,
    refinement_matrix, GermChain, GermSymbol, ResolutionComplex,
};
use homology_engine::fox::fox_chain_vec;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use selfsim_core::{AutomatonGroup, TreeWord};

fn dihedral() -> AutomatonGroup {
    AutomatonGroup::dihedral()
}

#[test]
fn per_factor_kernel_equals_image_small_depths() {
    let g = dihedral();
    for k in 0..=5usize {
        let m = depth_module(&g, k).unwrap();
        let id = IntMatrix::identity(m.rank());
        for s in 0..2usize {
            let a = m.action(s);
            let ker = kernel_basis(&(&id + a));
            let im = &id - a;
            assert!(
                lattice_eq(&ker, &im),
                "ker(1+A) != im(1-A) for generator {} at depth {}",
                s,
                k
            );
        }
    }
}

#[test]
fn degree1_torsion_has_exponent_two() {
    let g = dihedral();
    for k in 0..=5usize {
        let cx = ResolutionComplex::new(depth_module(&g, k).unwrap()).unwrap();
        let h1 = group_homology(&cx, 1).unwrap();
        assert_eq!(h1.group.free_rank(), 0);
        for d in h1.group.torsion() {
            assert_eq!(d.to_u64(), Some(2), "depth {}", k);
        }
    }
}

#[test]
fn refinement_equivariance_through_depth_6() {
    let g = dihedral();
    for k in 0..=6usize {
        let small = depth_module(&g, k).unwrap();
        let big = depth_module(&g, k + 1).unwrap();
        let r = refinement_matrix(&g, k);
        for s in 0..2 {
            assert_eq!(&r * small.action(s), big.action(s) * &r);
        }
        check_block_compatibility(&g, k).unwrap();
    }
}

/// Six-term bookkeeping for the free-product decomposition:
/// `0 -> H1(a) + H1(b) -> H1(Gamma) -> C_k -> H0(a) + H0(b) -> H0(Gamma) -> 0`
/// forces the alternating rank sum to vanish and the torsion of the middle
/// group to match the end torsion.
#[test]
fn six_term_bookkeeping() {
    let g = dihedral();
    for k in 1..=5usize {
        let m = depth_module(&g, k).unwrap();
        let cx = ResolutionComplex::new(m.clone()).unwrap();
        let id = IntMatrix::identity(m.rank());

        let factor_h1 = |s: usize| -> FGAbelianGroup {
            let a = m.action(s);
            subquotient(&(&id - a), &(&id + a)).unwrap().group().clone()
        };
        let factor_h0 = |s: usize| -> FGAbelianGroup {
            let a = m.action(s);
            subquotient(&IntMatrix::zeros(0, m.rank()), &(a - &id))
                .unwrap()
                .group()
                .clone()
        };
        let h1a = factor_h1(0);
        let h1b = factor_h1(1);
        let h1g = group_homology(&cx, 1).unwrap().group;
        let h0a = factor_h0(0);
        let h0b = factor_h0(1);
        let h0g = group_homology(&cx, 0).unwrap().group;

        let ranks = [
            (h1a.free_rank() + h1b.free_rank()) as i64,
            h1g.free_rank() as i64,
            m.rank() as i64,
            (h0a.free_rank() + h0b.free_rank()) as i64,
            h0g.free_rank() as i64,
        ];
        let alternating: i64 = ranks.iter().enumerate().map(|(i, r)| if i % 2 == 0 { *r } else { -*r }).sum();
        assert_eq!(alternating, 0, "rank bookkeeping at depth {}", k);

        // torsion of the middle group comes from the injective end
        let mut end_torsion: Vec<BigInt> = h1a.torsion().to_vec();
        end_torsion.extend_from_slice(h1b.torsion());
        end_torsion.sort();
        let mut mid_torsion = h1g.torsion().to_vec();
        mid_torsion.sort();
        assert_eq!(end_torsion, mid_torsion, "torsion bookkeeping at depth {}", k);
        // the coinvariant groups are torsion free here
        assert!(h0a.torsion().is_empty() && h0b.torsion().is_empty() && h0g.torsion().is_empty());
    }
}

/// The resolution-side classes of `a` and `b` satisfy exactly the relations
/// that germ witnesses certify: twice the b class bounds, and the product
/// relation holds.
#[test]
fn fox_classes_match_germ_relations() {
    let g = dihedral();
    for k in 1..=4usize {
        let m = depth_module(&g, k).unwrap();
        let cx = ResolutionComplex::new(m.clone()).unwrap();
        let sq = group_homology(&cx, 1).unwrap().subquotient.unwrap();
        let full = m.full_space_vec();
        let a = g.parse_word("a").unwrap();
        let b = g.parse_word("b").unwrap();

        // germ witness: 2 (e,b,e) - (e,e,e) is a boundary
        let sym_b = GermSymbol::new(&g, TreeWord::empty(), &b, TreeWord::empty()).unwrap();
        let sym_e = GermSymbol::new(&g, TreeWord::empty(), &g.parse_word("e").unwrap(), TreeWord::empty()).unwrap();
        let claim = GermChain::from_terms(vec![
            (sym_b.clone(), BigInt::from(2)),
            (sym_e.clone(), BigInt::from(-1)),
        ]);
        assert!(germ_witness_check(&g, &claim, &[(sym_b.clone(), sym_b.clone(), BigInt::from(1))]).unwrap());

        // resolution side: 2 [b-class] = 0 in H_1
        let b_chain = fox_chain_vec(&m, &b, &full);
        let b_coords = sq.project(&b_chain).unwrap();
        let doubled: Vec<BigInt> = b_coords.iter().map(|x| x * 2).collect();
        assert!(sq.group().is_zero_vec(&sq.group().reduce_vec(&doubled)));
        // and the b class itself is nonzero while the a class vanishes
        assert!(!sq.group().is_zero_vec(&b_coords), "depth {}", k);
        let a_coords = sq.project(&fox_chain_vec(&m, &a, &full)).unwrap();
        assert!(sq.group().is_zero_vec(&a_coords), "depth {}", k);

        // product relation transfers: fox(g g') ~ fox(g) + fox(g') on
        // invariant coefficients, matching the germ product witness
        for (w1, w2) in [("a", "b"), ("b", "bab"), ("ab", "ba")] {
            let g1 = g.parse_word(w1).unwrap();
            let g2 = g.parse_word(w2).unwrap();
            let prod = g.reduce(&g1.concat(&g2)).unwrap();
            let lhs = sq.project(&fox_chain_vec(&m, &prod, &full)).unwrap();
            let r1 = sq.project(&fox_chain_vec(&m, &g1, &full)).unwrap();
            let r2 = sq.project(&fox_chain_vec(&m, &g2, &full)).unwrap();
            let sum: Vec<BigInt> = r1.iter().zip(&r2).map(|(x, y)| x + y).collect();
            assert_eq!(
                sq.group().reduce_vec(&lhs),
                sq.group().reduce_vec(&sum),
                "product relation for {} {} at depth {}",
                w1,
                w2,
                k
            );
            // germ side
            let s1 = GermSymbol::new(&g, TreeWord::empty(), &g1, TreeWord::empty()).unwrap();
            let s2 = GermSymbol::new(&g, TreeWord::empty(), &g2, TreeWord::empty()).unwrap();
            let sp = GermSymbol::new(&g, TreeWord::empty(), &prod, TreeWord::empty()).unwrap();
            let claim = GermChain::from_terms(vec![
                (s1.clone(), BigInt::from(1)),
                (s2.clone(), BigInt::from(1)),
                (sp, BigInt::from(-1)),
            ]);
            assert!(germ_witness_check(&g, &claim, &[(s1, s2, BigInt::from(1))]).unwrap());
        }
    }
}

/// Boundary images of degree-2 germ pairs are cycles that die in the
/// resolution homology as well.
#[test]
fn germ_boundaries_die_in_resolution_homology() {
    let g = dihedral();
    let k = 3usize;
    let m = depth_module(&g, k).unwrap();
    let cx = ResolutionComplex::new(m.clone()).unwrap();
    let sq = group_homology(&cx, 1).unwrap().subquotient.unwrap();
    // delta2(b, b) = 2 (e,b,e) - (e,e,e); its fox image must be a boundary
    let b = g.parse_word("b").unwrap();
    let full = m.full_space_vec();
    let chain = fox_chain_vec(&m, &b, &full);
    let doubled: Vec<BigInt> = chain.iter().map(|x| x * 2).collect();
    // fox of the identity word is zero, so the image is 2 fox(b)
    assert!(sq.contains_cycle(&doubled));
    let coords = sq.project(&doubled).unwrap();
    assert!(sq.group().is_zero_vec(&coords));
}

#[test]
fn boundary_squares_vanish_with_solver_sanity() {
    let g = dihedral();
    for k in 0..=5usize {
        let cx = ResolutionComplex::new(depth_module(&g, k).unwrap()).unwrap();
        for p in 1..=4usize {
            assert!((&cx.boundary(p) * &cx.boundary(p + 1)).is_zero());
        }
        // solver sanity: boundaries solve inside cycles
        let d1 = cx.boundary(1);
        let d2 = cx.boundary(2);
        let cycles = kernel_basis(&d1);
        let solver = Solver::new(&cycles);
        for j in 0..d2.cols().min(8) {
            assert!(solver.solve(&d2.col(j)).is_some());
        }
    }
}

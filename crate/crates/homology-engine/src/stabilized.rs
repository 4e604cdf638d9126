//! Stabilized groupoid homology: the colimit over copies of the
//! transformation-groupoid homology along the letter-consuming connecting
//! map (cylinder shift with restriction), together with the induced shift
//! action.
//!
//! At a fixed coefficient depth the one-copy step is the chain map
//! "refine, then consume the first letter": in degree 0 the cylinder below
//! `x b` maps to the cylinder below `b`; in degree >= 1, in Fox
//! coordinates, the `a`-slot dies (the restrictions of `a` are trivial) and
//! the `b`-slot splits by first letter into the `a`- and `b`-slots (the
//! restrictions of `b` are `a` and `b`). Chain-map compatibility is
//! certified per depth by the induced-map machinery.

use crate::error::HomologyError;
use crate::module::{refinement_matrix, shift_matrix_deg0};
use crate::resolution::{group_homology, ResolutionComplex};
use crate::module::depth_module;
use direct_limit::{classify_colimit, CertBounds, ColimitDescriptor, ColimitElement, StationarySystem};
use exact_abelian::{induced_hom, AbHom, IntMatrix, Subquotient};
use num_bigint::BigInt;
use selfsim_core::AutomatonGroup;

/// How the shift automorphism acts on the certified colimit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SigmaAction {
    /// The colimit is trivial.
    Trivial,
    /// Every generator is fixed.
    Identity,
    /// Every generator `g` satisfies `g = 2 sigma(g)`.
    Halving,
    /// None of the catalog actions matched.
    Other,
}

impl SigmaAction {
    pub fn as_str(&self) -> &'static str {
        match self {
            SigmaAction::Trivial => "trivial",
            SigmaAction::Identity => "identity",
            SigmaAction::Halving => "halving",
            SigmaAction::Other => "other",
        }
    }
}

pub struct StabilizedHomology {
    pub degree: usize,
    /// Depth at which the system is modeled.
    pub depth: usize,
    pub system: StationarySystem,
    pub descriptor: ColimitDescriptor,
    pub sigma: SigmaAction,
    /// Subquotient at the modeling depth, for projecting chain vectors
    /// (degrees 0 and 1).
    subquotient: Option<Subquotient>,
}

impl StabilizedHomology {
    /// The colimit class of a degree-dependent chain vector at the modeling
    /// depth, placed at copy level 0.
    pub fn class_of_chain(&self, chain: &[BigInt]) -> Result<ColimitElement, HomologyError> {
        let sq = self.subquotient.as_ref().ok_or(HomologyError::Undetermined {
            stage: "class projection",
            details: "no subquotient stored for this degree".into(),
        })?;
        let coords = sq.project(chain)?;
        Ok(self.system.element(0, coords))
    }

    pub fn subquotient(&self) -> Option<&Subquotient> {
        self.subquotient.as_ref()
    }
}

/// The connecting chain map in degree `p` at depth `k`: from depth-`k`
/// chains to depth-`k` chains (refine to `k+1`, then consume the first
/// letter). Dihedral-specific in degrees >= 1.
pub fn connecting_chain_map(
    group: &AutomatonGroup,
    k: usize,
    p: usize,
) -> Result<IntMatrix, HomologyError> {
    let refine = refinement_matrix(group, k);
    match p {
        0 => Ok(&shift_matrix_deg0(group, k) * &refine),
        _ => {
            if !group.is_dihedral_instance() {
                return Err(HomologyError::Undetermined {
                    stage: "connecting map",
                    details: "degree >= 1 connecting map is defined for the dihedral instance".into(),
                });
            }
            let d = group.alphabet_size();
            let lo = d.pow(k as u32);
            let hi = d.pow((k + 1) as u32);
            // letter consumption on a degree >= 1 chain (f_a, f_b) at depth
            // k+1: output a-slot = f_b restricted below letter 0, output
            // b-slot = f_b restricted below letter 1, and f_a dies.
            let mut t = IntMatrix::zeros(2 * lo, 2 * hi);
            for beta in 0..lo {
                t[(beta, hi + beta)] = BigInt::from(1); // a-out <- f_b (0 beta)
                t[(lo + beta, hi + lo + beta)] = BigInt::from(1); // b-out <- f_b (1 beta)
            }
            let r = IntMatrix::block_diag(&refine, &refine);
            Ok(&t * &r)
        }
    }
}

/// Stabilized homology in degree `p <= 2`, modeled at the earliest depth
/// from which the per-depth homology and connecting matrix repeat up to
/// `depth_bound`.
pub fn stabilized_homology(
    group: &AutomatonGroup,
    p: usize,
    depth_bound: usize,
    bounds: CertBounds,
) -> Result<StabilizedHomology, HomologyError> {
    assert!(p <= 2, "stabilized homology implemented in degrees <= 2");
    assert!(depth_bound >= 2);

    let mut endos: Vec<AbHom> = Vec::new();
    let mut subquotients: Vec<Subquotient> = Vec::new();
    for k in 0..=depth_bound {
        let cx = ResolutionComplex::new(depth_module(group, k)?)?;
        let sq = match p {
            0 | 1 => group_homology(&cx, p)?.subquotient.expect("low degree"),
            _ => crate::resolution::group_homology_unsplit(&cx, p)?,
        };
        let chain_map = connecting_chain_map(group, k, p)?;
        // chain-map compatibility is certified here per depth
        let endo = induced_hom(&chain_map, &sq, &sq)?;
        endos.push(endo);
        subquotients.push(sq);
    }

    let mut stable_from = None;
    'scan: for k0 in 0..endos.len() {
        for k in k0..endos.len() {
            if endos[k].source().invariants() != endos[k0].source().invariants()
                || endos[k].matrix() != endos[k0].matrix()
            {
                continue 'scan;
            }
        }
        stable_from = Some(k0);
        break;
    }
    let Some(k0) = stable_from else {
        return Err(HomologyError::Undetermined {
            stage: "stabilized homology",
            details: format!("degree-{} connecting maps did not stabilize", p),
        });
    };

    let (torsion, free_rank) = endos[k0].source().invariants();
    let level_group = exact_abelian::FGAbelianGroup::canonical(torsion, free_rank);
    let conn = AbHom::new(
        level_group.clone(),
        level_group.clone(),
        endos[k0].matrix().clone(),
    )
    .map_err(HomologyError::Abelian)?;
    let system = StationarySystem::new(level_group, conn)?;
    let descriptor = classify_colimit(&system, bounds)?;
    let sigma = sigma_action(&system, &descriptor);
    Ok(StabilizedHomology {
        degree: p,
        depth: k0,
        system,
        descriptor,
        sigma,
        subquotient: Some(subquotients.swap_remove(k0)),
    })
}

fn sigma_action(sys: &StationarySystem, desc: &ColimitDescriptor) -> SigmaAction {
    if desc.is_trivial() {
        return SigmaAction::Trivial;
    }
    let gens: Vec<&ColimitElement> = desc.all_generators().into_iter().map(|(_, e)| e).collect();
    if gens.iter().all(|g| sys.colim_equal(&sys.shift(g), g)) {
        return SigmaAction::Identity;
    }
    let two = BigInt::from(2);
    if gens.iter().all(|g| {
        sys.verify_relation(&[
            (BigInt::from(1), (*g).clone()),
            (-two.clone(), sys.shift(g)),
        ])
    }) {
        return SigmaAction::Halving;
    }
    SigmaAction::Other
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fox::fox_chain_vec;
    use exact_abelian::matrix::vec_is_zero;

    #[test]
    fn degree0_is_dyadic_with_halving_shift() {
        let g = AutomatonGroup::dihedral();
        let s = stabilized_homology(&g, 0, 4, CertBounds::default()).unwrap();
        assert_eq!(s.descriptor.model_string(), "Z[1/2]");
        assert_eq!(s.sigma, SigmaAction::Halving);
    }

    #[test]
    fn degree1_is_z2_generated_by_the_b_class() {
        let g = AutomatonGroup::dihedral();
        let s = stabilized_homology(&g, 1, 4, CertBounds::default()).unwrap();
        assert_eq!(s.descriptor.model_string(), "Z/2");
        assert_eq!(s.sigma, SigmaAction::Identity);

        let module = depth_module(&g, s.depth).unwrap();
        let full = module.full_space_vec();
        let b = g.parse_word("b").unwrap();
        let b_chain = fox_chain_vec(&module, &b, &full);
        let b_class = s.class_of_chain(&b_chain).unwrap();
        assert!(!s.system.is_zero(&b_class));
        // the descriptor generator is the b class
        assert!(s.system.colim_equal(&s.descriptor.torsion_gens[0], &b_class));
        // the a class vanishes
        let a = g.parse_word("a").unwrap();
        let a_chain = fox_chain_vec(&module, &a, &full);
        let a_class = s.class_of_chain(&a_chain).unwrap();
        assert!(s.system.is_zero(&a_class));
    }

    #[test]
    fn degree2_is_trivial() {
        let g = AutomatonGroup::dihedral();
        let s = stabilized_homology(&g, 2, 4, CertBounds::default()).unwrap();
        assert!(s.descriptor.is_trivial());
        assert_eq!(s.sigma, SigmaAction::Trivial);
    }

    #[test]
    fn a_class_dies_at_chain_level_and_b_class_splits() {
        let g = AutomatonGroup::dihedral();
        for k in 1..=3usize {
            let module = depth_module(&g, k).unwrap();
            let t = connecting_chain_map(&g, k, 1).unwrap();
            let full = module.full_space_vec();
            let a_chain = fox_chain_vec(&module, &g.parse_word("a").unwrap(), &full);
            assert!(vec_is_zero(&t.apply(&a_chain)));
            let b_chain = fox_chain_vec(&module, &g.parse_word("b").unwrap(), &full);
            let img = t.apply(&b_chain);
            // image = a-class chain + b-class chain at the same depth
            let sum: Vec<BigInt> = a_chain
                .iter()
                .zip(&b_chain)
                .map(|(x, y)| x + y)
                .collect();
            assert_eq!(img, sum);
        }
    }

    #[test]
    fn consume_and_refine_commute() {
        let g = AutomatonGroup::dihedral();
        for k in 0..=3usize {
            for p in 0..=2usize {
                // R(k) T(k) = T(k+1) R(k+1) as maps on depth-(k+1) chains
                let tr_low = connecting_chain_map(&g, k, p).unwrap();
                let tr_high = connecting_chain_map(&g, k + 1, p).unwrap();
                let r = if p == 0 {
                    refinement_matrix(&g, k)
                } else {
                    let m = refinement_matrix(&g, k);
                    IntMatrix::block_diag(&m, &m)
                };
                assert_eq!(&r * &tr_low, &tr_high * &r, "p={} k={}", p, k);
            }
        }
    }
}

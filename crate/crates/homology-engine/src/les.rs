//! Assembly of the germ-groupoid homology from the stabilized homology and
//! the shift action, through the long exact sequence
//! `... <- H_p(G) <- H_p(H) <- H_p(H) <- H_{p+1}(G) <- ...` with the middle
//! map `1 - sigma`. Each `H_p(G)` is resolved only when exactness forces
//! it: `H_0` is a plain cokernel, and higher degrees sit in an extension
//! `0 -> coker(1 - sigma | H_p) -> H_p(G) -> ker(1 - sigma | H_{p-1}) -> 0`
//! which is resolved when one end vanishes.

use crate::error::HomologyError;
use crate::module::depth_module;
use crate::resolution::{group_homology, ResolutionComplex};
use crate::stabilized::StabilizedHomology;
use direct_limit::{colim_ker_coker, CertBounds, ColimitDescriptor, SystemEndo};
use num_traits::ToPrimitive;
use selfsim_core::AutomatonGroup;

#[derive(Clone, Debug)]
pub enum LesEntry {
    Resolved(ColimitDescriptor),
    UndeterminedExtension {
        sub: ColimitDescriptor,
        quot: ColimitDescriptor,
    },
}

impl LesEntry {
    pub fn model_string(&self) -> String {
        match self {
            LesEntry::Resolved(d) => d.model_string(),
            LesEntry::UndeterminedExtension { sub, quot } => format!(
                "undetermined extension of {} by {}",
                quot.model_string(),
                sub.model_string()
            ),
        }
    }

    pub fn is_resolved(&self) -> bool {
        matches!(self, LesEntry::Resolved(_))
    }
}

#[derive(Debug)]
pub struct LesTable {
    /// `H_p` of the germ groupoid for `p = 0, 1, 2`.
    pub entries: Vec<LesEntry>,
    /// Degrees `>= 3` with a verified torsion statement.
    pub torsion_degrees: Vec<usize>,
}

/// Assemble `H_p` of the germ groupoid for `p <= 2` from the three
/// stabilized degrees, and record torsion flags for the given higher
/// degrees (taken as already verified by `torsion_flags`).
pub fn les_assemble(
    stabs: &[StabilizedHomology],
    torsion_degrees: Vec<usize>,
    bounds: CertBounds,
) -> Result<LesTable, HomologyError> {
    let systems: Vec<&direct_limit::StationarySystem> =
        stabs.iter().map(|s| &s.system).collect();
    les_assemble_systems(&systems, torsion_degrees, bounds)
}

/// The same assembly from bare stationary systems for `H_p` of the
/// zero-cocycle subgroupoid, `p = 0, 1, 2`.
pub fn les_assemble_systems(
    systems: &[&direct_limit::StationarySystem],
    torsion_degrees: Vec<usize>,
    bounds: CertBounds,
) -> Result<LesTable, HomologyError> {
    assert!(systems.len() >= 3, "need degrees 0..=2");
    let mut kernels = Vec::new();
    let mut cokernels = Vec::new();
    for sys in systems.iter().take(3) {
        let shift = SystemEndo::shift_endo(sys);
        let one_minus = SystemEndo::one_minus(sys, &shift);
        let (k, c) = colim_ker_coker(sys, &one_minus, bounds)?;
        kernels.push(k);
        cokernels.push(c);
    }

    let mut entries = Vec::new();
    // H_0(G) = coker(1 - sigma | H_0)
    entries.push(LesEntry::Resolved(cokernels[0].clone()));
    for p in 1..=2usize {
        let sub = cokernels[p].clone();
        let quot = kernels[p - 1].clone();
        if quot.is_trivial() {
            entries.push(LesEntry::Resolved(sub));
        } else if sub.is_trivial() {
            entries.push(LesEntry::Resolved(quot));
        } else {
            entries.push(LesEntry::UndeterminedExtension { sub, quot });
        }
    }
    Ok(LesTable {
        entries,
        torsion_degrees,
    })
}

/// Verify, per depth up to `depth_bound`, that the degree-`p` homology is
/// annihilated by 2 (even degrees >= 2 must vanish outright). Returns the
/// degrees `3..=degree_bound` for which the check succeeded.
pub fn torsion_flags(
    group: &AutomatonGroup,
    degree_bound: usize,
    depth_bound: usize,
) -> Result<Vec<usize>, HomologyError> {
    let mut verified = Vec::new();
    for p in 3..=degree_bound {
        let mut ok = true;
        for k in 0..=depth_bound {
            let cx = ResolutionComplex::new(depth_module(group, k)?)?;
            let h = group_homology(&cx, p)?;
            if h.group.free_rank() != 0 {
                ok = false;
                break;
            }
            if p % 2 == 0 {
                if !h.group.is_trivial() {
                    ok = false;
                    break;
                }
            } else if h
                .group
                .torsion()
                .iter()
                .any(|d| d.to_u64() != Some(2))
            {
                ok = false;
                break;
            }
        }
        if ok {
            verified.push(p);
        }
    }
    Ok(verified)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stabilized::stabilized_homology;

    #[test]
    fn dihedral_inputs_assemble() {
        let g = AutomatonGroup::dihedral();
        let stabs: Vec<StabilizedHomology> = (0..=2)
            .map(|p| stabilized_homology(&g, p, 4, CertBounds::default()).unwrap())
            .collect();
        let table = les_assemble(&stabs, vec![], CertBounds::default()).unwrap();
        assert_eq!(table.entries[0].model_string(), "0");
        assert_eq!(table.entries[1].model_string(), "Z/2");
        assert_eq!(table.entries[2].model_string(), "Z/2");
    }

    #[test]
    fn torsion_flags_hold_at_small_depths() {
        let g = AutomatonGroup::dihedral();
        let flags = torsion_flags(&g, 6, 4).unwrap();
        assert_eq!(flags, vec![3, 4, 5, 6]);
    }

    #[test]
    fn unforced_extension_is_reported_undetermined() {
        use direct_limit::StationarySystem;
        use exact_abelian::{AbHom, FGAbelianGroup, IntMatrix};
        // identity connector on Z/2: 1 - sigma is the zero map, so both the
        // cokernel and the adjacent kernel are Z/2 and nothing is forced
        let g = FGAbelianGroup::cokernel_presentation(&IntMatrix::from_rows(&[&[2]]));
        let sys = StationarySystem::new(
            g.clone(),
            AbHom::new(g.clone(), g, IntMatrix::identity(1)).unwrap(),
        )
        .unwrap();
        let table =
            les_assemble_systems(&[&sys, &sys, &sys], vec![], CertBounds::default()).unwrap();
        assert_eq!(table.entries[0].model_string(), "Z/2");
        assert!(!table.entries[1].is_resolved());
        assert!(table.entries[1].model_string().contains("undetermined extension"));
    }

    #[test]
    fn all_zero_inputs_give_zero() {
        use direct_limit::StationarySystem;
        use exact_abelian::{AbHom, FGAbelianGroup, IntMatrix};
        let g = FGAbelianGroup::trivial();
        let sys = StationarySystem::new(
            g.clone(),
            AbHom::new(g.clone(), g, IntMatrix::zeros(0, 0)).unwrap(),
        )
        .unwrap();
        let table =
            les_assemble_systems(&[&sys, &sys, &sys], vec![], CertBounds::default()).unwrap();
        for e in &table.entries {
            assert_eq!(e.model_string(), "0");
        }
    }
}

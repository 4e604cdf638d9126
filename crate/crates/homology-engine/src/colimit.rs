//! The homology of the transformation groupoid: the colimit over depth of
//! `H_p(Gamma, C_k)` along the refinement-induced maps. The sequence is
//! modeled as a stationary system once the groups and connecting matrices
//! stabilize in normal form; if they fail to stabilize inside the depth
//! bound the result is Undetermined.

use crate::error::HomologyError;
use crate::module::{depth_module, refinement_matrix};
use crate::resolution::{group_homology, induced_on_homology, ResolutionComplex};
use direct_limit::{classify_colimit, CertBounds, ColimitDescriptor, StationarySystem};
use exact_abelian::{AbHom, FGAbelianGroup, IntMatrix};
use selfsim_core::AutomatonGroup;

/// One degree of transformation-groupoid homology: the per-depth groups,
/// the stabilized stationary tail, and its certified colimit.
pub struct HomologyColimit {
    pub degree: usize,
    pub per_depth: Vec<FGAbelianGroup>,
    /// First depth from which groups and connecting maps repeat verbatim.
    pub stable_from: usize,
    pub system: StationarySystem,
    pub descriptor: ColimitDescriptor,
}

/// For degrees >= 2 the refinement-induced map is computed on the full
/// complex when cheap, and per factor otherwise; the groups are trivial in
/// the cases the acceptance suite pins, so the connecting map is forced.
pub fn homology_colimit(
    group: &AutomatonGroup,
    p: usize,
    depth_bound: usize,
    bounds: CertBounds,
) -> Result<HomologyColimit, HomologyError> {
    assert!(depth_bound >= 2, "need at least two depths to stabilize");
    let mut groups: Vec<FGAbelianGroup> = Vec::new();
    let mut maps: Vec<IntMatrix> = Vec::new();

    let mut prev: Option<ResolutionComplex> = None;
    for k in 0..=depth_bound {
        let cx = ResolutionComplex::new(depth_module(group, k)?)?;
        if let Some(prev_cx) = prev {
            let conn = connecting_map(group, &prev_cx, &cx, p)?;
            maps.push(conn.matrix().clone());
            groups.push(conn.source().clone());
            if k == depth_bound {
                groups.push(conn.target().clone());
            }
        }
        prev = Some(cx);
    }

    // stationarity: find the earliest depth from which both the abstract
    // group and the connecting matrix in normal coordinates repeat to the
    // bound
    let mut stable_from = None;
    'scan: for k0 in 0..maps.len() {
        for k in k0..maps.len() {
            if groups[k].invariants() != groups[k0].invariants() || maps[k] != maps[k0] {
                continue 'scan;
            }
        }
        if groups[maps.len()].invariants() == groups[k0].invariants() {
            stable_from = Some(k0);
            break;
        }
    }
    let Some(stable_from) = stable_from else {
        return Err(HomologyError::Undetermined {
            stage: "homology colimit",
            details: format!(
                "degree-{} groups did not stabilize by depth {}",
                p, depth_bound
            ),
        });
    };

    let (torsion, free_rank) = groups[stable_from].invariants();
    let level_group = FGAbelianGroup::canonical(torsion, free_rank);
    let conn = AbHom::new(
        level_group.clone(),
        level_group.clone(),
        maps[stable_from].clone(),
    )
    .map_err(HomologyError::Abelian)?;
    let system = StationarySystem::new(level_group, conn)?;
    let descriptor = classify_colimit(&system, bounds)?;
    Ok(HomologyColimit {
        degree: p,
        per_depth: groups,
        stable_from,
        system,
        descriptor,
    })
}

/// The refinement-induced map `H_p(Gamma, C_k) -> H_p(Gamma, C_{k+1})` in
/// normal coordinates.
pub fn refinement_induced(
    group: &AutomatonGroup,
    p: usize,
    k: usize,
) -> Result<AbHom, HomologyError> {
    let small = ResolutionComplex::new(depth_module(group, k)?)?;
    let big = ResolutionComplex::new(depth_module(group, k + 1)?)?;
    connecting_map(group, &small, &big, p)
}

fn connecting_map(
    group: &AutomatonGroup,
    small: &ResolutionComplex,
    big: &ResolutionComplex,
    p: usize,
) -> Result<AbHom, HomologyError> {
    let refine = refinement_matrix(group, small.module().depth());
    match p {
        0 | 1 => {
            let sq_s = group_homology(small, p)?.subquotient.expect("low degree");
            let sq_t = group_homology(big, p)?.subquotient.expect("low degree");
            induced_on_homology(&refine, p, &sq_s, &sq_t)
        }
        _ => {
            // per-factor: refinement commutes with both involutions, so it
            // induces maps factorwise; conjugate the block-diagonal map into
            // the normal coordinates of the summed presentations
            let sq_sa = small.factor_homology(0, p)?;
            let sq_sb = small.factor_homology(1, p)?;
            let sq_ta = big.factor_homology(0, p)?;
            let sq_tb = big.factor_homology(1, p)?;
            let ha = exact_abelian::induced_hom(&refine, &sq_sa, &sq_ta)?;
            let hb = exact_abelian::induced_hom(&refine, &sq_sb, &sq_tb)?;
            let hs = group_homology(small, p)?;
            let ht = group_homology(big, p)?;
            let blocks = IntMatrix::block_diag(ha.matrix(), hb.matrix());
            let mut cols = Vec::new();
            for i in 0..hs.group.dim() {
                let amb = hs.group.lift_gen(i);
                cols.push(ht.group.project(&blocks.apply(&amb)));
            }
            let m = IntMatrix::from_cols(&cols, ht.group.dim());
            Ok(AbHom::new(hs.group, ht.group, m)?)
        }
    }
}

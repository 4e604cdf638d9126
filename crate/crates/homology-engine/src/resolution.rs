//! Group homology of `Z/2 * Z/2` with permutation-module coefficients via
//! the periodic resolution; degrees at least two split as the sum of the
//! two cyclic-factor subquotients, which is exact here because all boundary
//! maps above degree one are block diagonal.

use crate::error::HomologyError;
use crate::module::PermutationModule;
use exact_abelian::{induced_hom, subquotient, AbHom, FGAbelianGroup, IntMatrix, Subquotient};
use num_bigint::BigInt;

/// The chain complex `C_0 = M`, `C_p = M + M` (p >= 1) with
/// `d_1(m1, m2) = (A_a - 1) m1 + (A_b - 1) m2`,
/// `d_p = (1 + A_a) + (1 + A_b)` for even `p >= 2`,
/// `d_p = (1 - A_a) + (1 - A_b)` for odd `p >= 3` (block diagonal).
pub struct ResolutionComplex {
    module: PermutationModule,
}

impl ResolutionComplex {
    pub fn new(module: PermutationModule) -> Result<ResolutionComplex, HomologyError> {
        if module.group().gen_count() != 2 {
            return Err(HomologyError::NeedsTwoInvolutions);
        }
        let n = module.rank();
        for s in 0..2 {
            let a = module.action(s);
            if a * a != IntMatrix::identity(n) {
                return Err(HomologyError::NeedsTwoInvolutions);
            }
        }
        Ok(ResolutionComplex { module })
    }

    pub fn module(&self) -> &PermutationModule {
        &self.module
    }

    /// Rank of the degree-`p` chain group.
    pub fn chain_rank(&self, p: usize) -> usize {
        if p == 0 {
            self.module.rank()
        } else {
            2 * self.module.rank()
        }
    }

    /// The boundary `d_p : C_p -> C_{p-1}` for `p >= 1`.
    pub fn boundary(&self, p: usize) -> IntMatrix {
        assert!(p >= 1);
        let n = self.module.rank();
        let id = IntMatrix::identity(n);
        let a = self.module.action(0);
        let b = self.module.action(1);
        match p {
            1 => (a - &id).hstack(&(b - &id)),
            p if p % 2 == 0 => IntMatrix::block_diag(&(&id + a), &(&id + b)),
            _ => IntMatrix::block_diag(&(&id - a), &(&id - b)),
        }
    }

    /// Per-factor boundary pair in degrees >= 2: for factor `s`, the maps
    /// whose kernel/image compute the cyclic group homology,
    /// `ker(in_map)/im(out_map)` on `M`.
    fn factor_maps(&self, s: usize, p: usize) -> (IntMatrix, IntMatrix) {
        assert!(p >= 2);
        let n = self.module.rank();
        let id = IntMatrix::identity(n);
        let g = self.module.action(s);
        if p.is_multiple_of(2) {
            // ker(1 + g) / im(1 - g)
            (&id + g, &id - g)
        } else {
            // ker(1 - g) / im(1 + g)
            (&id - g, &id + g)
        }
    }

    /// Homology of one cyclic factor in degree `p >= 2`.
    pub fn factor_homology(&self, s: usize, p: usize) -> Result<Subquotient, HomologyError> {
        let (kmap, imap) = self.factor_maps(s, p);
        Ok(subquotient(&kmap, &imap)?)
    }
}

/// The homology of the complex in degree `p`, with ambient cycle lifts of
/// the normal-form generators.
pub struct HomologyGroup {
    pub degree: usize,
    pub group: FGAbelianGroup,
    /// Ambient cycle vectors (length = chain rank in degree p) lifting each
    /// normal-form generator.
    pub generator_lifts: Vec<Vec<BigInt>>,
    /// The honest subquotient when computed in one piece (degrees 0, 1).
    pub subquotient: Option<Subquotient>,
}

/// `H_p(Gamma, M)` for the two-involution group, from the resolution.
/// Degree 0 is the coinvariants, degree 1 the mixed subquotient, and
/// degrees >= 2 are computed per factor and summed (the boundaries are
/// block diagonal there, so this is the same subquotient).
pub fn group_homology(
    complex: &ResolutionComplex,
    p: usize,
) -> Result<HomologyGroup, HomologyError> {
    let n = complex.module().rank();
    match p {
        0 => {
            let sq = subquotient(&IntMatrix::zeros(0, n), &complex.boundary(1))?;
            let lifts = (0..sq.group().dim()).map(|i| sq.lift_gen(i)).collect();
            Ok(HomologyGroup {
                degree: 0,
                group: sq.group().clone(),
                generator_lifts: lifts,
                subquotient: Some(sq),
            })
        }
        1 => {
            let sq = subquotient(&complex.boundary(1), &complex.boundary(2))?;
            let lifts = (0..sq.group().dim()).map(|i| sq.lift_gen(i)).collect();
            Ok(HomologyGroup {
                degree: 1,
                group: sq.group().clone(),
                generator_lifts: lifts,
                subquotient: Some(sq),
            })
        }
        _ => {
            let sq_a = complex.factor_homology(0, p)?;
            let sq_b = complex.factor_homology(1, p)?;
            // direct sum, renormalized into invariant-factor form
            let rel = IntMatrix::block_diag(
                &sq_a.group().relation_matrix(),
                &sq_b.group().relation_matrix(),
            );
            let dim = sq_a.group().dim() + sq_b.group().dim();
            let free_pad = IntMatrix::zeros(dim, 0);
            let rels = if rel.cols() > 0 { rel } else { free_pad };
            let group = FGAbelianGroup::cokernel_presentation(&rels);
            let mut lifts = Vec::new();
            for i in 0..group.dim() {
                let coeffs = group.lift_gen(i); // in the summed coordinates
                let mut amb = vec![BigInt::from(0); 2 * n];
                for (j, c) in coeffs.iter().take(sq_a.group().dim()).enumerate() {
                    let l = sq_a.lift_gen(j);
                    for (t, x) in l.iter().enumerate() {
                        amb[t] += c * x;
                    }
                }
                for (j, c) in coeffs.iter().skip(sq_a.group().dim()).enumerate() {
                    let l = sq_b.lift_gen(j);
                    for (t, x) in l.iter().enumerate() {
                        amb[n + t] += c * x;
                    }
                }
                lifts.push(amb);
            }
            Ok(HomologyGroup {
                degree: p,
                group,
                generator_lifts: lifts,
                subquotient: None,
            })
        }
    }
}

/// Full-complex subquotient in degree `p >= 2`; used to verify the
/// per-factor splitting structurally.
pub fn group_homology_unsplit(
    complex: &ResolutionComplex,
    p: usize,
) -> Result<Subquotient, HomologyError> {
    assert!(p >= 2);
    Ok(subquotient(&complex.boundary(p), &complex.boundary(p + 1))?)
}

/// The chain map on degree-`p` chains induced by an equivariant coefficient
/// map `f : M -> M'` (both factors in degrees >= 1).
pub fn coefficient_chain_map(f: &IntMatrix, p: usize) -> IntMatrix {
    if p == 0 {
        f.clone()
    } else {
        IntMatrix::block_diag(f, f)
    }
}

/// The map induced on homology by an equivariant coefficient map.
pub fn induced_on_homology(
    f: &IntMatrix,
    p: usize,
    source: &Subquotient,
    target: &Subquotient,
) -> Result<AbHom, HomologyError> {
    Ok(induced_hom(&coefficient_chain_map(f, p), source, target)?)
}

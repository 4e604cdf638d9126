//! Subquotients `ker / im` of integer matrices acting on a common ambient
//! free module, with lift/project maps and induced homomorphisms.

use crate::error::AbelianError;
use crate::group::FGAbelianGroup;
use crate::hom::AbHom;
use crate::matrix::IntMatrix;
use crate::snf::{kernel_basis, Solver};
use num_bigint::BigInt;

/// `ker(ker_of) / im(mod_im_of)` on `Z^ambient_dim`.
pub struct Subquotient {
    ambient_dim: usize,
    cycles: IntMatrix,
    boundaries: IntMatrix,
    group: FGAbelianGroup,
    cycle_solver: Solver,
    boundary_solver: Solver,
}

/// Build the subquotient. `ker_of` has `ambient` columns; `mod_im_of` has
/// `ambient` rows; the complex condition `ker_of * mod_im_of = 0` is checked.
pub fn subquotient(ker_of: &IntMatrix, mod_im_of: &IntMatrix) -> Result<Subquotient, AbelianError> {
    let n = ker_of.cols();
    assert_eq!(
        mod_im_of.rows(),
        n,
        "subquotient: matrices must share the ambient module"
    );
    let comp = ker_of * mod_im_of;
    if !comp.is_zero() {
        return Err(AbelianError::NotAComplex);
    }
    let cycles = kernel_basis(ker_of);
    let cycle_solver = Solver::new(&cycles);
    // boundaries lie in the (saturated) cycle lattice, so integer coordinates exist
    let mut coeff_cols = Vec::new();
    for j in 0..mod_im_of.cols() {
        let c = cycle_solver
            .solve(&mod_im_of.col(j))
            .expect("boundary column not in cycle lattice despite complex condition");
        coeff_cols.push(c);
    }
    let coeffs = IntMatrix::from_cols(&coeff_cols, cycles.cols());
    let group = FGAbelianGroup::cokernel_presentation(&coeffs);
    Ok(Subquotient {
        ambient_dim: n,
        boundary_solver: Solver::new(mod_im_of),
        cycles,
        boundaries: mod_im_of.clone(),
        group,
        cycle_solver,
    })
}

impl Subquotient {
    pub fn group(&self) -> &FGAbelianGroup {
        &self.group
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn cycles(&self) -> &IntMatrix {
        &self.cycles
    }

    pub fn boundaries(&self) -> &IntMatrix {
        &self.boundaries
    }

    /// Ambient cycle representative of normal-form generator `i`.
    pub fn lift_gen(&self, i: usize) -> Vec<BigInt> {
        let in_cycles = self.group.lift_gen(i);
        self.cycles.apply(&in_cycles)
    }

    pub fn lift(&self, normal: &[BigInt]) -> Vec<BigInt> {
        self.cycles.apply(&self.group.lift(normal))
    }

    /// Normal-form coordinates of an ambient cycle vector.
    pub fn project(&self, v: &[BigInt]) -> Result<Vec<BigInt>, AbelianError> {
        let coeffs = self
            .cycle_solver
            .solve(v)
            .ok_or(AbelianError::NotACycle)?;
        Ok(self.group.project(&coeffs))
    }

    pub fn contains_cycle(&self, v: &[BigInt]) -> bool {
        self.cycle_solver.solve(v).is_some()
    }

    pub fn is_boundary(&self, v: &[BigInt]) -> bool {
        self.boundary_solver.solve(v).is_some()
    }
}

/// The map induced on subquotients by an ambient matrix `f`, checked to send
/// cycles to cycles and boundaries to boundaries.
pub fn induced_hom(
    f: &IntMatrix,
    source: &Subquotient,
    target: &Subquotient,
) -> Result<AbHom, AbelianError> {
    assert_eq!(f.cols(), source.ambient_dim());
    assert_eq!(f.rows(), target.ambient_dim());
    for j in 0..source.cycles.cols() {
        let img = f.apply(&source.cycles.col(j));
        if !target.contains_cycle(&img) {
            return Err(AbelianError::NotChainCompatible {
                what: "cycle image is not a cycle",
                witness: format!("{:?}", source.cycles.col(j)),
            });
        }
    }
    for j in 0..source.boundaries.cols() {
        let img = f.apply(&source.boundaries.col(j));
        if !target.is_boundary(&img) {
            return Err(AbelianError::NotChainCompatible {
                what: "boundary image is not a boundary",
                witness: format!("{:?}", source.boundaries.col(j)),
            });
        }
    }
    let mut cols = Vec::new();
    for i in 0..source.group.dim() {
        let amb = source.lift_gen(i);
        let img = f.apply(&amb);
        let coord = target.project(&img)?;
        cols.push(coord);
    }
    let matrix = IntMatrix::from_cols(&cols, target.group.dim());
    AbHom::new(source.group.clone(), target.group.clone(), matrix)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::vec_from_i64;

    #[test]
    fn swap_subquotient_vanishes() {
        // ker(1+A)/im(1-A) with A the swap on Z^2
        let one_plus = IntMatrix::from_rows(&[&[1, 1], &[1, 1]]);
        let one_minus = IntMatrix::from_rows(&[&[1, -1], &[-1, 1]]);
        let sq = subquotient(&one_plus, &one_minus).unwrap();
        assert!(sq.group().is_trivial());
    }

    #[test]
    fn injective_kernel_trivial() {
        // ker(2)/im(0) on Z
        let sq = subquotient(
            &IntMatrix::from_rows(&[&[2]]),
            &IntMatrix::from_rows(&[&[0]]),
        )
        .unwrap();
        assert!(sq.group().is_trivial());
    }

    #[test]
    fn full_kernel_mod_two() {
        // ker(0)/im(2 id) on Z^2
        let sq = subquotient(
            &IntMatrix::zeros(0, 2),
            &IntMatrix::from_rows(&[&[2, 0], &[0, 2]]),
        )
        .unwrap();
        assert_eq!(sq.group().group_string(), "Z/2 + Z/2");
        // lift/project roundtrip on generators
        for i in 0..sq.group().dim() {
            let amb = sq.lift_gen(i);
            assert_eq!(sq.project(&amb).unwrap(), sq.group().gen_vec(i));
        }
    }

    #[test]
    fn not_a_complex_rejected() {
        let k = IntMatrix::from_rows(&[&[1, 0]]);
        let b = IntMatrix::from_rows(&[&[1], &[0]]);
        assert!(matches!(subquotient(&k, &b), Err(AbelianError::NotAComplex)));
    }

    #[test]
    fn chain_incompatible_map_rejected_with_witness() {
        // target cycles are ker(x - y) in Z^2; the swap of coordinates
        // preserves them but the projection to the first coordinate does not
        let tgt = subquotient(
            &IntMatrix::from_rows(&[&[1, -1]]),
            &IntMatrix::zeros(2, 0),
        )
        .unwrap();
        let src = subquotient(&IntMatrix::zeros(0, 2), &IntMatrix::zeros(2, 0)).unwrap();
        let proj = IntMatrix::from_rows(&[&[1, 0], &[0, 0]]);
        match induced_hom(&proj, &src, &tgt) {
            Err(AbelianError::NotChainCompatible { witness, .. }) => {
                assert!(!witness.is_empty());
            }
            other => panic!("expected chain incompatibility, got {:?}", other.is_ok()),
        }
    }

    #[test]
    fn induced_identity_and_zero() {
        let sq = subquotient(
            &IntMatrix::zeros(0, 2),
            &IntMatrix::from_rows(&[&[2, 0], &[0, 2]]),
        )
        .unwrap();
        let id = induced_hom(&IntMatrix::identity(2), &sq, &sq).unwrap();
        assert_eq!(id.matrix(), &IntMatrix::identity(2));
        let z = induced_hom(&IntMatrix::zeros(2, 2), &sq, &sq).unwrap();
        assert!(z.is_zero_map());
    }

    #[test]
    fn refinement_on_coinvariants_is_doubling() {
        // depth-0 coinvariants of the trivial action: Z^1 / 0
        let src = subquotient(&IntMatrix::zeros(0, 1), &IntMatrix::zeros(1, 0)).unwrap();
        // depth-1 coinvariants with A_a = swap, A_b = id:
        // relations (A_a - 1)v and (A_b - 1)v
        let rels = IntMatrix::from_rows(&[&[-1, 1, 0, 0], &[1, -1, 0, 0]]);
        let tgt = subquotient(&IntMatrix::zeros(0, 2), &rels).unwrap();
        assert_eq!(tgt.group().group_string(), "Z");
        let refine = IntMatrix::from_rows(&[&[1], &[1]]);
        let h = induced_hom(&refine, &src, &tgt).unwrap();
        let img = h.apply(&vec_from_i64(&[1]));
        assert_eq!(img, vec_from_i64(&[2]));
    }
}

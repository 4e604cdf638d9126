//! Homomorphisms between presented abelian groups, with kernel and
//! cokernel constructions.

use crate::error::AbelianError;
use crate::group::FGAbelianGroup;
use crate::matrix::{vec_is_zero, IntMatrix};
use crate::snf::{preimage_lattice, Solver};
use num_bigint::BigInt;

/// A homomorphism given by an integer matrix on normal coordinates.
/// Well-definedness (relations map to relations) is checked at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbHom {
    source: FGAbelianGroup,
    target: FGAbelianGroup,
    matrix: IntMatrix,
}

impl AbHom {
    pub fn new(
        source: FGAbelianGroup,
        target: FGAbelianGroup,
        matrix: IntMatrix,
    ) -> Result<AbHom, AbelianError> {
        assert_eq!(matrix.rows(), target.dim());
        assert_eq!(matrix.cols(), source.dim());
        for (i, d) in source.torsion().iter().enumerate() {
            let col = matrix.col(i);
            let scaled: Vec<BigInt> = col.iter().map(|x| x * d).collect();
            if !target.is_zero_vec(&scaled) {
                return Err(AbelianError::NotWellDefined {
                    generator: i,
                    witness: format!("{}*g_{} maps to nonzero {:?}", d, i, target.reduce_vec(&scaled)),
                });
            }
        }
        Ok(AbHom { source, target, matrix })
    }

    pub fn identity(g: &FGAbelianGroup) -> AbHom {
        AbHom {
            source: g.clone(),
            target: g.clone(),
            matrix: IntMatrix::identity(g.dim()),
        }
    }

    pub fn zero(source: &FGAbelianGroup, target: &FGAbelianGroup) -> AbHom {
        AbHom {
            source: source.clone(),
            target: target.clone(),
            matrix: IntMatrix::zeros(target.dim(), source.dim()),
        }
    }

    pub fn source(&self) -> &FGAbelianGroup {
        &self.source
    }

    pub fn target(&self) -> &FGAbelianGroup {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn is_endo(&self) -> bool {
        self.source == self.target
    }

    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.target.reduce_vec(&self.matrix.apply(v))
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &AbHom) -> AbHom {
        assert_eq!(other.target, self.source, "compose: objects mismatch");
        AbHom {
            source: other.source.clone(),
            target: self.target.clone(),
            matrix: &self.matrix * &other.matrix,
        }
    }

    pub fn add(&self, other: &AbHom) -> AbHom {
        assert_eq!(self.source, other.source);
        assert_eq!(self.target, other.target);
        AbHom {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: &self.matrix + &other.matrix,
        }
    }

    pub fn sub(&self, other: &AbHom) -> AbHom {
        assert_eq!(self.source, other.source);
        assert_eq!(self.target, other.target);
        AbHom {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: &self.matrix - &other.matrix,
        }
    }

    pub fn pow(&self, e: usize) -> AbHom {
        assert!(self.is_endo());
        AbHom {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.pow(e),
        }
    }

    pub fn is_zero_map(&self) -> bool {
        (0..self.source.dim()).all(|j| vec_is_zero(&self.target.reduce_vec(&self.matrix.col(j))))
    }

    /// Kernel as a presented subgroup. The returned `lattice` columns are
    /// source-normal-coordinate vectors spanning `{x : f(x) = 0}` together
    /// with the source relations; the group presents lattice/relations.
    pub fn kernel(&self) -> Subgroup {
        let moduli = self.target.moduli();
        let mut lattice = preimage_lattice(&self.matrix, &moduli);
        // ensure source relations are inside the lattice span
        let rel = self.source.relation_matrix();
        if rel.cols() > 0 {
            lattice = lattice.hstack(&rel);
        }
        Subgroup::from_lattice(&self.source, lattice)
    }

    /// Cokernel `target / image` as a quotient presentation.
    pub fn cokernel(&self) -> Quotient {
        let rel = self.target.relation_matrix();
        let rels = if rel.cols() > 0 {
            self.matrix.hstack(&rel)
        } else {
            self.matrix.clone()
        };
        let group = FGAbelianGroup::cokernel_presentation(&rels);
        Quotient {
            ambient: self.target.clone(),
            group,
        }
    }
}

/// A subgroup of a presented group, itself in normal form.
/// `lattice` columns live in the ambient group's normal coordinates.
#[derive(Clone, Debug)]
pub struct Subgroup {
    pub ambient: FGAbelianGroup,
    pub lattice: IntMatrix,
    pub group: FGAbelianGroup,
}

impl Subgroup {
    pub fn from_lattice(ambient: &FGAbelianGroup, gens: IntMatrix) -> Subgroup {
        // reduce the generating set to a lattice basis, then present
        // lattice/relations in that basis
        let lattice = crate::snf::column_span_basis(&gens);
        let solver = Solver::new(&lattice);
        let rel = ambient.relation_matrix();
        let mut rel_cols = Vec::new();
        for j in 0..rel.cols() {
            let c = solver
                .solve(&rel.col(j))
                .expect("relations lie in the kernel lattice");
            rel_cols.push(c);
        }
        let rels = IntMatrix::from_cols(&rel_cols, lattice.cols());
        let group = FGAbelianGroup::cokernel_presentation(&rels);
        Subgroup {
            ambient: ambient.clone(),
            lattice,
            group,
        }
    }

    /// Normal generator `i` of the subgroup as an ambient normal vector.
    pub fn gen_in_ambient(&self, i: usize) -> Vec<BigInt> {
        let in_lattice = self.group.lift_gen(i);
        self.ambient.reduce_vec(&self.lattice.apply(&in_lattice))
    }

    /// Express an ambient element in subgroup normal coordinates, if it
    /// lies in the subgroup.
    pub fn project_from_ambient(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        // solve over the lattice extended by ambient relations
        let rel = self.ambient.relation_matrix();
        let aug = if rel.cols() > 0 {
            self.lattice.hstack(&rel)
        } else {
            self.lattice.clone()
        };
        let sol = Solver::new(&aug).solve(v)?;
        let coeffs = sol[..self.lattice.cols()].to_vec();
        Some(self.group.reduce_vec(&self.group.project(&coeffs)))
    }
}

/// A quotient of a presented group, in normal form, with the quotient map.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub ambient: FGAbelianGroup,
    pub group: FGAbelianGroup,
}

impl Quotient {
    pub fn project(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.group.project(v)
    }

    /// Ambient representative of quotient normal generator `i`.
    pub fn lift_gen(&self, i: usize) -> Vec<BigInt> {
        self.ambient.reduce_vec(&self.group.lift_gen(i))
    }
}

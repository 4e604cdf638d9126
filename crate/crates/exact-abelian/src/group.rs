//! Finitely generated abelian groups in invariant-factor normal form,
//! presented as cokernels of integer matrices.

use crate::matrix::IntMatrix;
use crate::snf::{snf, SnfResult};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// `Z^free_rank + Z/d_1 + ... + Z/d_t` with `d_i >= 2` and `d_i | d_{i+1}`.
///
/// Normal coordinates list the torsion generators first (in divisibility
/// order), then the free generators. `to_normal`/`from_normal` relate the
/// presentation space `Z^ambient_dim` to normal coordinates.
#[derive(Clone, PartialEq, Eq)]
pub struct FGAbelianGroup {
    torsion: Vec<BigInt>,
    free_rank: usize,
    ambient_dim: usize,
    to_normal: IntMatrix,
    from_normal: IntMatrix,
}

impl FGAbelianGroup {
    /// `Z^rows / column-span(rels)` in invariant-factor normal form.
    pub fn cokernel_presentation(rels: &IntMatrix) -> FGAbelianGroup {
        let g = rels.rows();
        let s: SnfResult = snf(rels);
        let diag = s.diagonal();
        let mut torsion_rows = Vec::new();
        let mut free_rows = Vec::new();
        for i in 0..g {
            let d = if i < diag.len() { diag[i].clone() } else { BigInt::zero() };
            if d.is_zero() {
                free_rows.push(i);
            } else if !d.is_one() {
                torsion_rows.push((i, d));
            }
        }
        let torsion: Vec<BigInt> = torsion_rows.iter().map(|(_, d)| d.clone()).collect();
        let rows: Vec<usize> = torsion_rows
            .iter()
            .map(|(i, _)| *i)
            .chain(free_rows.iter().copied())
            .collect();
        let dim = rows.len();
        let mut to_normal = IntMatrix::zeros(dim, g);
        let mut from_normal = IntMatrix::zeros(g, dim);
        for (k, &i) in rows.iter().enumerate() {
            for j in 0..g {
                to_normal[(k, j)] = s.u[(i, j)].clone();
                from_normal[(j, k)] = s.u_inv[(j, i)].clone();
            }
        }
        let mut grp = FGAbelianGroup {
            torsion,
            free_rank: free_rows.len(),
            ambient_dim: g,
            to_normal,
            from_normal,
        };
        grp.canonicalize_signs();
        grp
    }

    /// The canonical presentation of `Z^free_rank + sum Z/d_i` on its own
    /// normal coordinates.
    pub fn canonical(torsion: Vec<BigInt>, free_rank: usize) -> FGAbelianGroup {
        let dim = torsion.len() + free_rank;
        FGAbelianGroup {
            torsion,
            free_rank,
            ambient_dim: dim,
            to_normal: IntMatrix::identity(dim),
            from_normal: IntMatrix::identity(dim),
        }
    }

    /// Torsion invariant factors and free rank: the abstract isomorphism
    /// type, independent of the presentation.
    pub fn invariants(&self) -> (Vec<BigInt>, usize) {
        (self.torsion.clone(), self.free_rank)
    }

    /// Free abelian group of rank `n` with the identity presentation.
    pub fn free(n: usize) -> FGAbelianGroup {
        FGAbelianGroup {
            torsion: Vec::new(),
            free_rank: n,
            ambient_dim: n,
            to_normal: IntMatrix::identity(n),
            from_normal: IntMatrix::identity(n),
        }
    }

    pub fn trivial() -> FGAbelianGroup {
        Self::free(0)
    }

    /// Orient each free generator so the first nonzero entry of its ambient
    /// lift is positive. Keeps normal forms stable across related
    /// presentations.
    fn canonicalize_signs(&mut self) {
        let t = self.torsion.len();
        for k in t..self.dim() {
            let col = self.from_normal.col(k);
            let lead = col.iter().find(|x| !x.is_zero());
            if matches!(lead, Some(x) if x.is_negative()) {
                for j in 0..self.ambient_dim {
                    let v = -self.from_normal[(j, k)].clone();
                    self.from_normal[(j, k)] = v;
                }
                for j in 0..self.ambient_dim {
                    let v = -self.to_normal[(k, j)].clone();
                    self.to_normal[(k, j)] = v;
                }
            }
        }
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Number of normal coordinates.
    pub fn dim(&self) -> usize {
        self.torsion.len() + self.free_rank
    }

    pub fn is_trivial(&self) -> bool {
        self.dim() == 0
    }

    /// Per-coordinate moduli: the invariant factor for torsion coordinates,
    /// 0 for free coordinates.
    pub fn moduli(&self) -> Vec<BigInt> {
        let mut m: Vec<BigInt> = self.torsion.clone();
        m.extend(std::iter::repeat_with(BigInt::zero).take(self.free_rank));
        m
    }

    /// Relation matrix on normal coordinates: columns `d_i e_i`.
    pub fn relation_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.dim(), self.torsion.len());
        for (i, d) in self.torsion.iter().enumerate() {
            m[(i, i)] = d.clone();
        }
        m
    }

    /// Reduce torsion coordinates into `[0, d_i)`.
    pub fn reduce_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.dim());
        let mut out = v.to_vec();
        for (i, d) in self.torsion.iter().enumerate() {
            out[i] = out[i].mod_floor(d);
        }
        out
    }

    pub fn is_zero_vec(&self, v: &[BigInt]) -> bool {
        self.reduce_vec(v).iter().all(|x| x.is_zero())
    }

    /// Project an ambient presentation vector to normal coordinates.
    pub fn project(&self, ambient: &[BigInt]) -> Vec<BigInt> {
        self.reduce_vec(&self.to_normal.apply(ambient))
    }

    /// Ambient representative of the `i`-th normal generator.
    pub fn lift_gen(&self, i: usize) -> Vec<BigInt> {
        self.from_normal.col(i)
    }

    /// Ambient representative of a normal-coordinate vector.
    pub fn lift(&self, normal: &[BigInt]) -> Vec<BigInt> {
        self.from_normal.apply(normal)
    }

    /// Standard basis vector in normal coordinates.
    pub fn gen_vec(&self, i: usize) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); self.dim()];
        v[i] = BigInt::one();
        v
    }

    /// The order of the group when finite.
    pub fn order(&self) -> Option<BigInt> {
        if self.free_rank > 0 {
            return None;
        }
        Some(self.torsion.iter().fold(BigInt::one(), |acc, d| acc * d))
    }

    /// Canonical display such as `0`, `Z`, `Z^2`, `Z/2 + Z/4`, `Z + Z/2`.
    pub fn group_string(&self) -> String {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{}", r)),
        }
        for d in &self.torsion {
            parts.push(format!("Z/{}", d));
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

impl fmt::Debug for FGAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FGAbelianGroup({})", self.group_string())
    }
}

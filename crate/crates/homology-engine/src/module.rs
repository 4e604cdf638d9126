//! Depth-truncated coefficient modules: the free abelian group on depth-k
//! cylinders with the permutation action of the group generators.

use crate::error::HomologyError;
use exact_abelian::IntMatrix;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use selfsim_core::{AutomatonGroup, GroupWord, TreeWord};

/// The module `C_k`: rank `d^k` with one 0/1 permutation matrix per
/// generator, on the lexicographic cylinder basis.
#[derive(Clone)]
pub struct PermutationModule {
    group: AutomatonGroup,
    depth: usize,
    rank: usize,
    actions: Vec<IntMatrix>,
}

impl PermutationModule {
    pub fn group(&self) -> &AutomatonGroup {
        &self.group
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Action matrix of generator `g` (column `w` holds the image cylinder).
    pub fn action(&self, g: usize) -> &IntMatrix {
        &self.actions[g]
    }

    /// Action matrix of an arbitrary reduced word.
    pub fn action_of_word(&self, w: &GroupWord) -> IntMatrix {
        let mut acc = IntMatrix::identity(self.rank);
        // rightmost symbol acts first
        for &s in w.syms() {
            acc = &acc * &self.actions[s as usize];
        }
        acc
    }

    /// Indicator vector of the cylinder below `w` among depth-k cylinders;
    /// `w` may be shorter than the depth, selecting a block.
    pub fn cylinder_vec(&self, w: &TreeWord) -> Vec<BigInt> {
        assert!(w.depth() <= self.depth);
        let d = self.group.alphabet_size();
        let mut v = vec![BigInt::zero(); self.rank];
        let tail = self.depth - w.depth();
        let lo = w.index(d) * d.pow(tail as u32);
        let hi = lo + d.pow(tail as u32);
        for x in v.iter_mut().take(hi).skip(lo) {
            *x = BigInt::one();
        }
        v
    }

    pub fn full_space_vec(&self) -> Vec<BigInt> {
        vec![BigInt::one(); self.rank]
    }
}

/// Build the depth-`k` module; requires an exact word problem so the action
/// matrices are well defined on reduced words.
pub fn depth_module(group: &AutomatonGroup, k: usize) -> Result<PermutationModule, HomologyError> {
    if !group.has_exact_word_problem() {
        return Err(HomologyError::WordProblemUnavailable);
    }
    let d = group.alphabet_size();
    let rank = d.pow(k as u32);
    let mut actions = Vec::with_capacity(group.gen_count());
    for g in 0..group.gen_count() {
        let perm = group.level_permutation(&GroupWord::gen(g as u8), k)?;
        let mut m = IntMatrix::zeros(rank, rank);
        for (w, &img) in perm.iter().enumerate() {
            m[(img, w)] = BigInt::one();
        }
        actions.push(m);
    }
    Ok(PermutationModule {
        group: group.clone(),
        depth: k,
        rank,
        actions,
    })
}

/// The coefficient inclusion `C_k -> C_{k+1}`: each cylinder is the sum of
/// its children. `2^{k+1} x 2^k` (for alphabet size 2).
pub fn refinement_matrix(group: &AutomatonGroup, k: usize) -> IntMatrix {
    let d = group.alphabet_size();
    let lo = d.pow(k as u32);
    let hi = d.pow((k + 1) as u32);
    let mut m = IntMatrix::zeros(hi, lo);
    for w in 0..lo {
        for x in 0..d {
            m[(w * d + x, w)] = BigInt::one();
        }
    }
    m
}

/// Degree-0 letter-consuming map `C_{k+1} -> C_k`: the cylinder below `x b`
/// maps to the cylinder below `b`, for every first letter `x`.
pub fn shift_matrix_deg0(group: &AutomatonGroup, k: usize) -> IntMatrix {
    let d = group.alphabet_size();
    let lo = d.pow(k as u32);
    let hi = d.pow((k + 1) as u32);
    let mut m = IntMatrix::zeros(lo, hi);
    for x in 0..d {
        for b in 0..lo {
            m[(b, x * lo + b)] = BigInt::one();
        }
    }
    m
}

/// Block compatibility of the wreath recursion with the depth filtration:
/// the sub-block of the action of `s` at depth `k+1` below input letter `x`
/// equals the action of the restriction `s|_x` at depth `k`, placed in the
/// output-letter block.
pub fn check_block_compatibility(
    group: &AutomatonGroup,
    k: usize,
) -> Result<(), HomologyError> {
    let d = group.alphabet_size();
    let big = depth_module(group, k + 1)?;
    let small = depth_module(group, k)?;
    let lo = d.pow(k as u32);
    for g in 0..group.gen_count() {
        let a_big = big.action(g);
        for x in 0..d {
            let (y, rest) = group.step(g as u8, x as u8)?;
            let rest = group.reduce(&rest.clone())?;
            let expected = small.action_of_word(&rest);
            let block = a_big.submatrix(y as usize * lo, x * lo, lo, lo);
            if block != expected {
                return Err(HomologyError::BlockCompatibility {
                    generator: g,
                    letter: x as u8,
                    depth: k,
                });
            }
            // everything outside the output block must vanish
            for yy in 0..d {
                if yy != y as usize {
                    let z = a_big.submatrix(yy * lo, x * lo, lo, lo);
                    if !z.is_zero() {
                        return Err(HomologyError::BlockCompatibility {
                            generator: g,
                            letter: x as u8,
                            depth: k,
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn depth_zero_is_trivial() {
        let g = AutomatonGroup::dihedral();
        let m = depth_module(&g, 0).unwrap();
        assert_eq!(m.rank(), 1);
        assert_eq!(m.action(0), &IntMatrix::identity(1));
        assert_eq!(m.action(1), &IntMatrix::identity(1));
    }

    #[test]
    fn depth_one_and_two_actions() {
        let g = AutomatonGroup::dihedral();
        let m1 = depth_module(&g, 1).unwrap();
        // a swaps Z(0), Z(1); b fixes both
        assert_eq!(m1.action(0), &IntMatrix::from_rows(&[&[0, 1], &[1, 0]]));
        assert_eq!(m1.action(1), &IntMatrix::identity(2));
        let m2 = depth_module(&g, 2).unwrap();
        // b swaps Z(00), Z(01) and fixes Z(10), Z(11)
        let b = m2.action(1);
        assert_eq!(
            b,
            &IntMatrix::from_rows(&[
                &[0, 1, 0, 0],
                &[1, 0, 0, 0],
                &[0, 0, 1, 0],
                &[0, 0, 0, 1]
            ])
        );
    }

    #[test]
    fn involutions_and_block_compatibility() {
        let g = AutomatonGroup::dihedral();
        for k in 0..=5 {
            let m = depth_module(&g, k).unwrap();
            for s in 0..2 {
                let a = m.action(s);
                assert_eq!(&(a * a), &IntMatrix::identity(m.rank()));
            }
            if k < 5 {
                check_block_compatibility(&g, k).unwrap();
            }
        }
    }

    #[test]
    fn refinement_is_equivariant() {
        let g = AutomatonGroup::dihedral();
        for k in 0..=5usize {
            let small = depth_module(&g, k).unwrap();
            let big = depth_module(&g, k + 1).unwrap();
            let r = refinement_matrix(&g, k);
            for s in 0..2 {
                assert_eq!(&r * small.action(s), big.action(s) * &r);
            }
        }
    }
}

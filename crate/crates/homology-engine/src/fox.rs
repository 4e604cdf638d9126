//! Fox derivatives of reduced words, used as the comparison map from germ
//! 1-classes to resolution coordinates. The derivation rule here is the
//! one matching the fixed boundary `d1(m_a, m_b) = (A_a-1)m_a + (A_b-1)m_b`:
//! `w - 1 = sum_t (t - 1) D_t(w)` in the group ring, which makes `D_t` pick
//! up the suffix after each occurrence, `D_t(gh) = D_t(g) h + D_t(h)`.

use crate::module::PermutationModule;
use exact_abelian::matrix::vec_add;
use num_bigint::BigInt;
use selfsim_core::GroupWord;

/// `D_s(w) . f` evaluated in the module: the sum over occurrences of the
/// generator `s` in `w` of the suffix-word action applied to `f`.
pub fn fox_derivative(
    module: &PermutationModule,
    word: &GroupWord,
    s: usize,
    f: &[BigInt],
) -> Vec<BigInt> {
    let mut acc = vec![BigInt::from(0); module.rank()];
    for (i, &sym) in word.syms().iter().enumerate() {
        if sym as usize == s {
            let suffix = GroupWord::from_syms(word.syms()[i + 1..].to_vec());
            let m = module.action_of_word(&suffix);
            acc = vec_add(&acc, &m.apply(f));
        }
    }
    acc
}

/// The degree-1 chain `(D_a(g) . f, D_b(g) . f)` in resolution coordinates.
/// It is a cycle for the resolution boundary exactly when `A_g f = f`.
pub fn fox_cycle(
    module: &PermutationModule,
    word: &GroupWord,
    f: &[BigInt],
) -> (Vec<BigInt>, Vec<BigInt>) {
    (
        fox_derivative(module, word, 0, f),
        fox_derivative(module, word, 1, f),
    )
}

/// Concatenate the two slots into one degree-1 chain vector.
pub fn fox_chain_vec(module: &PermutationModule, word: &GroupWord, f: &[BigInt]) -> Vec<BigInt> {
    let (a, b) = fox_cycle(module, word, f);
    let mut v = a;
    v.extend(b);
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::depth_module;
    use crate::resolution::ResolutionComplex;
    use exact_abelian::matrix::{vec_is_zero, vec_sub};
    use selfsim_core::{AutomatonGroup, TreeWord};

    #[test]
    fn fox_examples() {
        let g = AutomatonGroup::dihedral();
        let m = depth_module(&g, 2).unwrap();
        let full = m.full_space_vec();
        // (a, 1_full) -> (1_full, 0)
        let (fa, fb) = fox_cycle(&m, &g.parse_word("a").unwrap(), &full);
        assert_eq!(fa, full);
        assert!(vec_is_zero(&fb));
        // (b, 1_{Z(1)}) -> (0, 1_{Z(1)})
        let z1 = m.cylinder_vec(&TreeWord::parse("1").unwrap());
        let (fa, fb) = fox_cycle(&m, &g.parse_word("b").unwrap(), &z1);
        assert!(vec_is_zero(&fa));
        assert_eq!(fb, z1);
        // identity has zero derivatives
        let (fa, fb) = fox_cycle(&m, &g.parse_word("e").unwrap(), &full);
        assert!(vec_is_zero(&fa) && vec_is_zero(&fb));
    }

    #[test]
    fn cycle_iff_invariant() {
        let g = AutomatonGroup::dihedral();
        let m = depth_module(&g, 3).unwrap();
        let c = ResolutionComplex::new(m.clone()).unwrap();
        let d1 = c.boundary(1);
        for ws in ["a", "b", "ab", "aba", "bab", "abab"] {
            let w = g.reduce(&g.parse_word(ws).unwrap()).unwrap();
            let aw = m.action_of_word(&w);
            for cyl in ["-", "0", "1", "11", "111"] {
                let f = m.cylinder_vec(&TreeWord::parse(cyl).unwrap());
                let chain = fox_chain_vec(&m, &w, &f);
                let boundary = d1.apply(&chain);
                // fundamental identity: d1(fox(g, f)) = A_g f - f
                let expected = vec_sub(&aw.apply(&f), &f);
                assert_eq!(boundary, expected);
                if vec_is_zero(&expected) {
                    assert!(vec_is_zero(&boundary));
                }
            }
        }
    }
}

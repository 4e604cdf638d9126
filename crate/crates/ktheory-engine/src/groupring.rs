//! Integer group-ring elements and matrices over them, with the level
//! matrix recursion of the self-similar action.

use num_bigint::BigInt;
use num_traits::Zero;
use selfsim_core::{AutomatonGroup, GroupWord, SelfSimError};
use std::collections::BTreeMap;
use std::fmt;

/// A finite integer combination of reduced group words.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct GroupRingElement {
    terms: BTreeMap<GroupWord, BigInt>,
}

impl GroupRingElement {
    pub fn zero() -> GroupRingElement {
        GroupRingElement::default()
    }

    pub fn unit() -> GroupRingElement {
        GroupRingElement::of_word(GroupWord::identity())
    }

    pub fn of_word(w: GroupWord) -> GroupRingElement {
        let mut terms = BTreeMap::new();
        terms.insert(w, BigInt::from(1));
        GroupRingElement { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<GroupWord, BigInt> {
        &self.terms
    }

    pub fn add_term(&mut self, w: GroupWord, c: BigInt) {
        debug_assert!(w.is_canonical());
        let entry = self.terms.entry(w).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            let key: Vec<GroupWord> = self
                .terms
                .iter()
                .filter(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .collect();
            for k in key {
                self.terms.remove(&k);
            }
        }
    }

    pub fn add(&self, other: &GroupRingElement) -> GroupRingElement {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> GroupRingElement {
        GroupRingElement {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }

    pub fn mul(
        &self,
        other: &GroupRingElement,
        group: &AutomatonGroup,
    ) -> Result<GroupRingElement, SelfSimError> {
        let mut out = GroupRingElement::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let w = group.reduce(&w1.concat(w2))?;
                out.add_term(w, c1 * c2);
            }
        }
        Ok(out)
    }

    /// The adjoint: coefficients move to inverse words.
    pub fn star(&self, group: &AutomatonGroup) -> Result<GroupRingElement, SelfSimError> {
        let mut out = GroupRingElement::zero();
        for (w, c) in &self.terms {
            out.add_term(group.inverse_word(w)?, c.clone());
        }
        Ok(out)
    }

    pub fn format(&self, group: &AutomatonGroup) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(w, c)| format!("{}*{}", c, group.word_string(w)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Debug for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GRE{:?}", self.terms)
    }
}

/// A square matrix over the group ring, indexed by the depth-`level` words
/// in lexicographic order.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupRingMatrix {
    level: usize,
    size: usize,
    entries: Vec<GroupRingElement>,
}

impl GroupRingMatrix {
    pub fn zero(group: &AutomatonGroup, level: usize) -> GroupRingMatrix {
        let size = group.alphabet_size().pow(level as u32);
        GroupRingMatrix {
            level,
            size,
            entries: vec![GroupRingElement::zero(); size * size],
        }
    }

    pub fn scalar(group: &AutomatonGroup, level: usize, x: &GroupRingElement) -> GroupRingMatrix {
        let mut m = Self::zero(group, level);
        for i in 0..m.size {
            m[(i, i)] = x.clone();
        }
        m
    }

    pub fn identity(group: &AutomatonGroup, level: usize) -> GroupRingMatrix {
        Self::scalar(group, level, &GroupRingElement::unit())
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn add(&self, other: &GroupRingMatrix) -> GroupRingMatrix {
        assert_eq!(self.level, other.level);
        let mut out = self.clone();
        for i in 0..self.entries.len() {
            out.entries[i] = self.entries[i].add(&other.entries[i]);
        }
        out
    }

    pub fn mul(
        &self,
        other: &GroupRingMatrix,
        group: &AutomatonGroup,
    ) -> Result<GroupRingMatrix, SelfSimError> {
        assert_eq!(self.level, other.level);
        let mut out = GroupRingMatrix::zero(group, self.level);
        for i in 0..self.size {
            for k in 0..self.size {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..self.size {
                    if other[(k, j)].is_zero() {
                        continue;
                    }
                    let prod = self[(i, k)].mul(&other[(k, j)], group)?;
                    out[(i, j)] = out[(i, j)].add(&prod);
                }
            }
        }
        Ok(out)
    }

    /// Conjugate transpose.
    pub fn star(&self, group: &AutomatonGroup) -> Result<GroupRingMatrix, SelfSimError> {
        let mut out = GroupRingMatrix::zero(group, self.level);
        for i in 0..self.size {
            for j in 0..self.size {
                out[(j, i)] = self[(i, j)].star(group)?;
            }
        }
        Ok(out)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.size).all(|i| (0..self.size).all(|j| i == j || self[(i, j)].is_zero()))
    }
}

impl std::ops::Index<(usize, usize)> for GroupRingMatrix {
    type Output = GroupRingElement;
    fn index(&self, (i, j): (usize, usize)) -> &GroupRingElement {
        &self.entries[i * self.size + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for GroupRingMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut GroupRingElement {
        &mut self.entries[i * self.size + j]
    }
}

impl fmt::Debug for GroupRingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "GroupRingMatrix level {} [", self.level)?;
        for i in 0..self.size {
            write!(f, "  [")?;
            for j in 0..self.size {
                if j > 0 {
                    write!(f, " | ")?;
                }
                write!(f, "{:?}", self[(i, j)])?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// One application of the matrix recursion: each `U_w x e_{v,w}` spreads
/// over the alphabet as `U_{w|_x} x e_{v y, w x}` with `w . x = y . w|_x`.
pub fn matrix_recursion(
    group: &AutomatonGroup,
    m: &GroupRingMatrix,
) -> Result<GroupRingMatrix, SelfSimError> {
    let d = group.alphabet_size();
    let mut out = GroupRingMatrix::zero(group, m.level() + 1);
    for v in 0..m.size() {
        for w in 0..m.size() {
            let entry = &m[(v, w)];
            if entry.is_zero() {
                continue;
            }
            for (word, coeff) in entry.terms() {
                for x in 0..d as u8 {
                    let (y, rest) = group.act_letter(word, x)?;
                    let row = v * d + y as usize;
                    let col = w * d + x as usize;
                    out[(row, col)].add_term(rest, coeff.clone());
                }
            }
        }
    }
    Ok(out)
}

/// Iterated recursion from level 0.
pub fn recursion_from_scalar(
    group: &AutomatonGroup,
    x: &GroupRingElement,
    levels: usize,
) -> Result<GroupRingMatrix, SelfSimError> {
    let mut m = GroupRingMatrix::scalar(group, 0, x);
    for _ in 0..levels {
        m = matrix_recursion(group, &m)?;
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dih() -> AutomatonGroup {
        AutomatonGroup::dihedral()
    }

    fn gre(g: &AutomatonGroup, w: &str) -> GroupRingElement {
        GroupRingElement::of_word(g.reduce(&g.parse_word(w).unwrap()).unwrap())
    }

    #[test]
    fn recursion_of_generators() {
        let g = dih();
        let ua = GroupRingMatrix::scalar(&g, 0, &gre(&g, "a"));
        let fa = matrix_recursion(&g, &ua).unwrap();
        // antidiagonal units
        assert!(fa[(0, 0)].is_zero() && fa[(1, 1)].is_zero());
        assert_eq!(fa[(0, 1)], gre(&g, "e"));
        assert_eq!(fa[(1, 0)], gre(&g, "e"));

        let ub = GroupRingMatrix::scalar(&g, 0, &gre(&g, "b"));
        let fb = matrix_recursion(&g, &ub).unwrap();
        assert!(fb.is_diagonal());
        assert_eq!(fb[(0, 0)], gre(&g, "a"));
        assert_eq!(fb[(1, 1)], gre(&g, "b"));

        let one = GroupRingMatrix::identity(&g, 0);
        let f1 = matrix_recursion(&g, &one).unwrap();
        assert_eq!(f1, GroupRingMatrix::identity(&g, 1));
    }

    #[test]
    fn recursion_is_multiplicative_on_the_generator_ball() {
        let g = dih();
        let words = ["e", "a", "b", "ab", "ba", "aba", "bab", "abab", "baba"];
        for n in 0..=2usize {
            for w1 in words {
                for w2 in words {
                    let m1 = recursion_from_scalar(&g, &gre(&g, w1), n).unwrap();
                    let m2 = recursion_from_scalar(&g, &gre(&g, w2), n).unwrap();
                    let prod_then = matrix_recursion(&g, &m1.mul(&m2, &g).unwrap()).unwrap();
                    let then_prod = matrix_recursion(&g, &m1)
                        .unwrap()
                        .mul(&matrix_recursion(&g, &m2).unwrap(), &g)
                        .unwrap();
                    assert_eq!(prod_then, then_prod, "{} {} at level {}", w1, w2, n);
                }
            }
        }
    }

    #[test]
    fn recursion_commutes_with_star() {
        let g = dih();
        for w in ["a", "b", "ab", "aba", "abab"] {
            let m = recursion_from_scalar(&g, &gre(&g, w), 2).unwrap();
            let lhs = matrix_recursion(&g, &m.star(&g).unwrap()).unwrap();
            let rhs = matrix_recursion(&g, &m).unwrap().star(&g).unwrap();
            assert_eq!(lhs, rhs, "{}", w);
        }
    }

    #[test]
    fn generator_relations_preserved() {
        let g = dih();
        for w in ["a", "b"] {
            let m = recursion_from_scalar(&g, &gre(&g, w), 1).unwrap();
            let sq = m.mul(&m, &g).unwrap();
            assert_eq!(sq, GroupRingMatrix::identity(&g, 1), "{}^2", w);
        }
    }
}

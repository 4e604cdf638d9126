//! Germ-level chain model in degrees <= 2 for witness verification.
//!
//! A symbol `(alpha, g, beta)` is the basic bisection sending `beta x` to
//! `alpha (g . x)`. As a function on the groupoid it equals the sum of its
//! children `(alpha (g.x), g|_x, beta x)`, so chains can be normalized to a
//! common source depth; under pseudo-freeness two normalized symbols are
//! equal iff they are componentwise equal.

use crate::error::HomologyError;
use num_bigint::BigInt;
use num_traits::Zero;
use selfsim_core::{AutomatonGroup, GroupWord, TreeWord};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct GermSymbol {
    pub alpha: TreeWord,
    pub g: GroupWord,
    pub beta: TreeWord,
}

impl GermSymbol {
    pub fn new(
        group: &AutomatonGroup,
        alpha: TreeWord,
        g: &GroupWord,
        beta: TreeWord,
    ) -> Result<GermSymbol, HomologyError> {
        Ok(GermSymbol {
            alpha,
            g: group.reduce(g)?,
            beta,
        })
    }

    /// The children along one more source letter.
    pub fn expand(&self, group: &AutomatonGroup) -> Result<Vec<GermSymbol>, HomologyError> {
        let d = group.alphabet_size();
        let mut out = Vec::with_capacity(d);
        for x in 0..d as u8 {
            let (img, rest) = group.act(&self.g, &TreeWord::new(vec![x]))?;
            out.push(GermSymbol {
                alpha: self.alpha.concat(&img),
                g: rest,
                beta: self.beta.child(x),
            });
        }
        Ok(out)
    }

    /// Refine along a specific source extension `gamma`.
    pub fn refine_along(
        &self,
        group: &AutomatonGroup,
        gamma: &TreeWord,
    ) -> Result<GermSymbol, HomologyError> {
        let (img, rest) = group.act(&self.g, gamma)?;
        Ok(GermSymbol {
            alpha: self.alpha.concat(&img),
            g: rest,
            beta: self.beta.concat(gamma),
        })
    }

    /// Expand to the given source depth (must not be shallower).
    fn at_source_depth(
        &self,
        group: &AutomatonGroup,
        depth: usize,
    ) -> Result<Vec<GermSymbol>, HomologyError> {
        assert!(depth >= self.beta.depth());
        let mut cur = vec![self.clone()];
        while cur[0].beta.depth() < depth {
            let mut next = Vec::with_capacity(cur.len() * group.alphabet_size());
            for s in cur {
                next.extend(s.expand(group)?);
            }
            cur = next;
        }
        Ok(cur)
    }
}

impl fmt::Debug for GermSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {:?}, {})", self.alpha, self.g, self.beta)
    }
}

/// A formal integer combination of symbols, normalized on demand.
#[derive(Clone, Debug, Default)]
pub struct GermChain {
    terms: BTreeMap<GermSymbol, BigInt>,
}

impl GermChain {
    pub fn new() -> GermChain {
        GermChain::default()
    }

    pub fn add(&mut self, s: GermSymbol, c: BigInt) {
        let e = self.terms.entry(s).or_insert_with(BigInt::zero);
        *e += c;
        // drop zeros lazily at normalization
    }

    pub fn from_terms(terms: Vec<(GermSymbol, BigInt)>) -> GermChain {
        let mut c = GermChain::new();
        for (s, k) in terms {
            c.add(s, k);
        }
        c
    }

    pub fn terms(&self) -> &BTreeMap<GermSymbol, BigInt> {
        &self.terms
    }

    pub fn max_source_depth(&self) -> usize {
        self.terms.keys().map(|s| s.beta.depth()).max().unwrap_or(0)
    }

    /// Expand every symbol to the given common source depth and collect.
    pub fn normalized_at(
        &self,
        group: &AutomatonGroup,
        depth: usize,
    ) -> Result<BTreeMap<GermSymbol, BigInt>, HomologyError> {
        let mut out: BTreeMap<GermSymbol, BigInt> = BTreeMap::new();
        for (s, c) in &self.terms {
            if c.is_zero() {
                continue;
            }
            for child in s.at_source_depth(group, depth)? {
                let e = out.entry(child).or_insert_with(BigInt::zero);
                *e += c;
            }
        }
        out.retain(|_, v| !v.is_zero());
        Ok(out)
    }

    pub fn equals(&self, group: &AutomatonGroup, other: &GermChain) -> Result<bool, HomologyError> {
        let depth = self.max_source_depth().max(other.max_source_depth());
        Ok(self.normalized_at(group, depth)? == other.normalized_at(group, depth)?)
    }
}

/// Degree-0 chains: integer combinations of cylinders.
pub type CylinderChain = BTreeMap<TreeWord, BigInt>;

/// `delta_1 = s_* - r_*` on a degree-1 chain: sources minus ranges, as a
/// cylinder chain normalized to a common depth.
pub fn delta1(group: &AutomatonGroup, chain: &GermChain) -> Result<CylinderChain, HomologyError> {
    let depth = chain
        .terms
        .keys()
        .map(|s| s.alpha.depth().max(s.beta.depth()))
        .max()
        .unwrap_or(0);
    let mut out: CylinderChain = BTreeMap::new();
    let d = group.alphabet_size();
    let mut put = |w: &TreeWord, c: BigInt| {
        // spread a cylinder over its depth-`depth` refinements
        let tail = depth - w.depth();
        let count = d.pow(tail as u32);
        for i in 0..count {
            let suffix = TreeWord::from_index(i, tail, d);
            let e = out.entry(w.concat(&suffix)).or_insert_with(BigInt::zero);
            *e += &c;
        }
    };
    for (s, c) in &chain.terms {
        if c.is_zero() {
            continue;
        }
        put(&s.beta, c.clone());
        put(&s.alpha, -c.clone());
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

/// A composable pair `(first_applied_second, first_applied_first)` in the
/// convention "the right factor acts first": `(s1, s2)` with the source of
/// `s1` matching the range of `s2`.
#[derive(Clone, Debug)]
pub struct GermPair {
    pub outer: GermSymbol,
    pub inner: GermSymbol,
}

/// Refine a pair until the outer source equals the inner range exactly.
pub fn normalize_pair(
    group: &AutomatonGroup,
    outer: &GermSymbol,
    inner: &GermSymbol,
) -> Result<GermPair, HomologyError> {
    if outer.beta.is_prefix_of(&inner.alpha) {
        let gamma = outer.beta.strip_prefix(&inner.alpha).expect("prefix");
        let refined = outer.refine_along(group, &gamma)?;
        debug_assert_eq!(refined.beta, inner.alpha);
        Ok(GermPair {
            outer: refined,
            inner: inner.clone(),
        })
    } else if inner.alpha.is_prefix_of(&outer.beta) {
        // refine the inner symbol along the fiber over the outer source
        let delta = inner.alpha.strip_prefix(&outer.beta).expect("prefix");
        let ginv = group
            .inverse_word(&inner.g)
            .map_err(HomologyError::SelfSim)?;
        let (gamma, _) = group.act(&ginv, &delta)?;
        let refined = inner.refine_along(group, &gamma)?;
        if refined.alpha != outer.beta {
            return Err(HomologyError::NotComposable(format!(
                "range {} does not meet source {}",
                refined.alpha, outer.beta
            )));
        }
        Ok(GermPair {
            outer: outer.clone(),
            inner: refined,
        })
    } else {
        Err(HomologyError::NotComposable(format!(
            "incomparable range {} and source {}",
            inner.alpha, outer.beta
        )))
    }
}

/// Composite symbol of an exactly-matching pair.
pub fn compose_pair(group: &AutomatonGroup, pair: &GermPair) -> Result<GermSymbol, HomologyError> {
    debug_assert_eq!(pair.outer.beta, pair.inner.alpha);
    let g = group.reduce(&pair.outer.g.concat(&pair.inner.g))?;
    Ok(GermSymbol {
        alpha: pair.outer.alpha.clone(),
        g,
        beta: pair.inner.beta.clone(),
    })
}

/// `delta_2(outer, inner) = inner - outer.inner + outer`.
pub fn delta2(
    group: &AutomatonGroup,
    terms: &[(GermSymbol, GermSymbol, BigInt)],
) -> Result<GermChain, HomologyError> {
    let mut chain = GermChain::new();
    for (outer, inner, c) in terms {
        let pair = normalize_pair(group, outer, inner)?;
        let comp = compose_pair(group, &pair)?;
        chain.add(pair.inner.clone(), c.clone());
        chain.add(comp, -c.clone());
        chain.add(pair.outer.clone(), c.clone());
    }
    Ok(chain)
}

/// Does the witness 2-chain bound the claimed 1-chain exactly?
pub fn germ_witness_check(
    group: &AutomatonGroup,
    claim: &GermChain,
    witness: &[(GermSymbol, GermSymbol, BigInt)],
) -> Result<bool, HomologyError> {
    if !group.has_exact_word_problem() {
        return Err(HomologyError::WordProblemUnavailable);
    }
    let boundary = delta2(group, witness)?;
    claim.equals(group, &boundary)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dih() -> AutomatonGroup {
        AutomatonGroup::dihedral()
    }

    fn sym(g: &AutomatonGroup, a: &str, w: &str, b: &str) -> GermSymbol {
        GermSymbol::new(
            g,
            TreeWord::parse(a).unwrap(),
            &g.parse_word(w).unwrap(),
            TreeWord::parse(b).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn relation_two_b_is_a_boundary() {
        let g = dih();
        let b = sym(&g, "-", "b", "-");
        let e = sym(&g, "-", "e", "-");
        let claim = GermChain::from_terms(vec![
            (b.clone(), BigInt::from(2)),
            (e.clone(), BigInt::from(-1)),
        ]);
        let witness = vec![(b.clone(), b.clone(), BigInt::from(1))];
        assert!(germ_witness_check(&g, &claim, &witness).unwrap());
    }

    #[test]
    fn unit_germ_is_a_boundary() {
        let g = dih();
        let e = sym(&g, "-", "e", "-");
        let claim = GermChain::from_terms(vec![(e.clone(), BigInt::from(1))]);
        let witness = vec![(e.clone(), e.clone(), BigInt::from(1))];
        assert!(germ_witness_check(&g, &claim, &witness).unwrap());
    }

    #[test]
    fn delta1_delta2_composite_vanishes() {
        let g = dih();
        let pairs = [
            (sym(&g, "-", "a", "-"), sym(&g, "-", "b", "-")),
            (sym(&g, "-", "ab", "-"), sym(&g, "-", "bab", "-")),
            (sym(&g, "0", "e", "1"), sym(&g, "1", "ba", "0")),
        ];
        for (outer, inner) in pairs {
            let boundary = delta2(&g, &[(outer, inner, BigInt::from(1))]).unwrap();
            let d1 = delta1(&g, &boundary).unwrap();
            assert!(d1.is_empty(), "delta1 . delta2 != 0: {:?}", d1);
        }
    }

    #[test]
    fn product_relation_witness() {
        // [g] + [g'] = [g g'] over the full space
        let g = dih();
        for (w1, w2) in [("a", "b"), ("ab", "ba"), ("bab", "a")] {
            let outer = sym(&g, "-", w1, "-");
            let inner = sym(&g, "-", w2, "-");
            let prod = sym(
                &g,
                "-",
                &g.word_string(
                    &g.reduce(&g.parse_word(w1).unwrap().concat(&g.parse_word(w2).unwrap()))
                        .unwrap(),
                ),
                "-",
            );
            let claim = GermChain::from_terms(vec![
                (outer.clone(), BigInt::from(1)),
                (inner.clone(), BigInt::from(1)),
                (prod, BigInt::from(-1)),
            ]);
            let witness = vec![(outer, inner, BigInt::from(1))];
            assert!(germ_witness_check(&g, &claim, &witness).unwrap());
        }
    }

    #[test]
    fn expansion_identity() {
        let g = dih();
        let s = sym(&g, "-", "b", "-");
        let children = s.expand(&g).unwrap();
        assert_eq!(children.len(), 2);
        // b . 0 = 0 . a and b . 1 = 1 . b
        assert_eq!(children[0], sym(&g, "0", "a", "0"));
        assert_eq!(children[1], sym(&g, "1", "b", "1"));
        // the chain of the parent equals the chain of the children
        let parent = GermChain::from_terms(vec![(s, BigInt::from(1))]);
        let kids = GermChain::from_terms(
            children.into_iter().map(|c| (c, BigInt::from(1))).collect(),
        );
        assert!(parent.equals(&g, &kids).unwrap());
    }

    #[test]
    fn incomparable_pair_rejected() {
        let g = dih();
        let outer = sym(&g, "0", "e", "0");
        let inner = sym(&g, "1", "e", "1");
        assert!(normalize_pair(&g, &outer, &inner).is_err());
    }
}

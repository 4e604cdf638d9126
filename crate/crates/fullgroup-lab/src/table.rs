//! Bisection tables: finite lists of prefix-exchange triples
//! `(alpha, g, beta)` sending `beta x` to `alpha (g . x)`, whose sources and
//! ranges each partition the boundary. Canonical form is maximal germ
//! contraction, which is unique under pseudo-freeness.

use crate::error::FullGroupError;
use crate::prefix::is_complete_prefix_code;
use selfsim_core::{AutomatonGroup, GroupWord, TreeWord};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct BisectionEntry {
    pub alpha: TreeWord,
    pub g: GroupWord,
    pub beta: TreeWord,
}

impl fmt::Debug for BisectionEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {:?}, {})", self.alpha, self.g, self.beta)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct BisectionTable {
    entries: Vec<BisectionEntry>,
}

impl fmt::Debug for BisectionTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BisectionTable{:?}", self.entries)
    }
}

impl BisectionTable {
    pub fn from_entries(entries: Vec<BisectionEntry>) -> BisectionTable {
        BisectionTable { entries }
    }

    pub fn identity() -> BisectionTable {
        BisectionTable {
            entries: vec![BisectionEntry {
                alpha: TreeWord::empty(),
                g: GroupWord::identity(),
                beta: TreeWord::empty(),
            }],
        }
    }

    pub fn entries(&self) -> &[BisectionEntry] {
        &self.entries
    }

    pub fn is_identity(&self) -> bool {
        self.entries.len() == 1
            && self.entries[0].alpha.is_empty()
            && self.entries[0].beta.is_empty()
            && self.entries[0].g.is_empty()
    }

    /// Parse the line-oriented text form `alpha=11 g=ab beta=00`, one entry
    /// per line or semicolon-separated; `-` is the empty word.
    pub fn parse(group: &AutomatonGroup, text: &str) -> Result<BisectionTable, FullGroupError> {
        let mut entries = Vec::new();
        for raw in text.split(['\n', ';']) {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut alpha = None;
            let mut g = None;
            let mut beta = None;
            for tok in line.split_whitespace() {
                let (key, val) = tok
                    .split_once('=')
                    .ok_or_else(|| FullGroupError::Parse(format!("bad token `{}`", tok)))?;
                match key {
                    "alpha" => {
                        alpha = Some(TreeWord::parse(val).ok_or_else(|| {
                            FullGroupError::Parse(format!("bad tree word `{}`", val))
                        })?)
                    }
                    "beta" => {
                        beta = Some(TreeWord::parse(val).ok_or_else(|| {
                            FullGroupError::Parse(format!("bad tree word `{}`", val))
                        })?)
                    }
                    "g" => g = Some(group.parse_word(val)?),
                    _ => return Err(FullGroupError::Parse(format!("unknown key `{}`", key))),
                }
            }
            match (alpha, g, beta) {
                (Some(alpha), Some(g), Some(beta)) => entries.push(BisectionEntry {
                    alpha,
                    g: group.reduce(&g)?,
                    beta,
                }),
                _ => {
                    return Err(FullGroupError::Parse(format!(
                        "entry `{}` needs alpha, g and beta",
                        line
                    )))
                }
            }
        }
        Ok(BisectionTable { entries })
    }

    pub fn format(&self, group: &AutomatonGroup) -> String {
        self.entries
            .iter()
            .map(|e| format!("alpha={} g={} beta={}", e.alpha, group.word_string(&e.g), e.beta))
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// Image of a tree word at least as deep as the covering source prefix.
    pub fn apply(
        &self,
        group: &AutomatonGroup,
        w: &TreeWord,
    ) -> Result<TreeWord, FullGroupError> {
        for e in &self.entries {
            if e.beta.is_prefix_of(w) {
                let tail = e.beta.strip_prefix(w).expect("prefix");
                let (img, _) = group.act(&e.g, &tail)?;
                return Ok(e.alpha.concat(&img));
            }
        }
        Err(FullGroupError::WordTooShallow(w.to_string()))
    }
}

/// Validate completeness/disjointness and contract to the canonical
/// minimal table.
pub fn validate_and_canonicalize(
    group: &AutomatonGroup,
    table: &BisectionTable,
) -> Result<BisectionTable, FullGroupError> {
    if !group.has_exact_word_problem() {
        return Err(FullGroupError::WordProblemUnavailable);
    }
    let d = group.alphabet_size();
    if table.entries().is_empty() {
        return Err(FullGroupError::NotFullBisection("empty table".into()));
    }
    let betas: Vec<TreeWord> = table.entries().iter().map(|e| e.beta.clone()).collect();
    let alphas: Vec<TreeWord> = table.entries().iter().map(|e| e.alpha.clone()).collect();
    if !is_complete_prefix_code(&betas, d) {
        return Err(FullGroupError::NotFullBisection(
            "sources do not partition the boundary".into(),
        ));
    }
    if !is_complete_prefix_code(&alphas, d) {
        return Err(FullGroupError::NotFullBisection(
            "ranges do not partition the boundary".into(),
        ));
    }
    let mut entries: Vec<BisectionEntry> = table
        .entries()
        .iter()
        .map(|e| {
            Ok(BisectionEntry {
                alpha: e.alpha.clone(),
                g: group.reduce(&e.g)?,
                beta: e.beta.clone(),
            })
        })
        .collect::<Result<_, FullGroupError>>()?;

    // contract sibling families to their parent germ until no merge applies
    loop {
        entries.sort();
        let mut by_parent: BTreeMap<TreeWord, Vec<usize>> = BTreeMap::new();
        for (i, e) in entries.iter().enumerate() {
            if let Some((parent, _)) = e.beta.parent() {
                by_parent.entry(parent).or_default().push(i);
            }
        }
        let mut merged = false;
        'families: for (parent, idxs) in by_parent {
            if idxs.len() != d {
                continue;
            }
            let mut children: Vec<Option<&BisectionEntry>> = vec![None; d];
            for &i in &idxs {
                let e = &entries[i];
                let (_, x) = e.beta.parent().expect("has parent");
                children[x as usize] = Some(e);
            }
            if children.iter().any(|c| c.is_none()) {
                continue;
            }
            let children: Vec<&BisectionEntry> = children.into_iter().map(|c| c.unwrap()).collect();
            // candidate parent range: common prefix of the child ranges
            let mut alpha_parent: Option<TreeWord> = None;
            for c in &children {
                match c.alpha.parent() {
                    Some((p, _)) => {
                        if let Some(ap) = &alpha_parent {
                            if *ap != p {
                                continue 'families;
                            }
                        } else {
                            alpha_parent = Some(p);
                        }
                    }
                    None => continue 'families,
                }
            }
            let alpha_parent = alpha_parent.expect("nonempty alphabet");
            if let Some(g) = find_merging_element(group, &children)? {
                let mut next: Vec<BisectionEntry> = Vec::with_capacity(entries.len() - d + 1);
                for (i, e) in entries.iter().enumerate() {
                    if !idxs.contains(&i) {
                        next.push(e.clone());
                    }
                }
                next.push(BisectionEntry {
                    alpha: alpha_parent,
                    g,
                    beta: parent,
                });
                entries = next;
                merged = true;
                break;
            }
        }
        if !merged {
            break;
        }
    }
    entries.sort_by(|a, b| a.beta.cmp(&b.beta));
    Ok(BisectionTable { entries })
}

/// Search for the unique element whose wreath coordinates match the child
/// entries: `g . x` is the last range letter and `g|_x` the child word.
/// The search radius follows the dihedral restriction-length bound.
fn find_merging_element(
    group: &AutomatonGroup,
    children: &[&BisectionEntry],
) -> Result<Option<GroupWord>, FullGroupError> {
    let max_rest = children.iter().map(|c| c.g.len()).max().unwrap_or(0);
    let radius = 2 * max_rest + 2;
    let ball = group.reduced_ball(radius)?;
    'cand: for cand in &ball {
        for (x, child) in children.iter().enumerate() {
            let (y, rest) = group.act_letter(cand, x as u8)?;
            let want_letter = child
                .alpha
                .letters()
                .last()
                .copied()
                .expect("child range nonempty");
            if y != want_letter || rest != child.g {
                continue 'cand;
            }
        }
        return Ok(Some(cand.clone()));
    }
    Ok(None)
}

/// Expand one entry a single source letter.
pub fn expand_entry(
    group: &AutomatonGroup,
    e: &BisectionEntry,
) -> Result<Vec<BisectionEntry>, FullGroupError> {
    let d = group.alphabet_size();
    let mut out = Vec::with_capacity(d);
    for x in 0..d as u8 {
        let (img, rest) = group.act(&e.g, &TreeWord::new(vec![x]))?;
        out.push(BisectionEntry {
            alpha: e.alpha.concat(&img),
            g: rest,
            beta: e.beta.child(x),
        });
    }
    Ok(out)
}

/// Composite homeomorphism `t1 . t2` (apply `t2` first), canonical.
pub fn compose(
    group: &AutomatonGroup,
    t1: &BisectionTable,
    t2: &BisectionTable,
) -> Result<BisectionTable, FullGroupError> {
    let depth_needed = t1
        .entries()
        .iter()
        .map(|e| e.beta.depth())
        .max()
        .unwrap_or(0);
    // refine t2 until each range word reaches the source depth of t1
    let mut work: Vec<BisectionEntry> = t2.entries().to_vec();
    let mut done: Vec<BisectionEntry> = Vec::new();
    while let Some(e) = work.pop() {
        if e.alpha.depth() >= depth_needed {
            done.push(e);
        } else {
            work.extend(expand_entry(group, &e)?);
        }
    }
    let mut composed = Vec::new();
    for e2 in done {
        let host = t1
            .entries()
            .iter()
            .find(|e1| e1.beta.is_prefix_of(&e2.alpha))
            .ok_or_else(|| {
                FullGroupError::NotFullBisection("sources of t1 miss a range of t2".into())
            })?;
        let gamma = host.beta.strip_prefix(&e2.alpha).expect("prefix");
        let (img, rest) = group.act(&host.g, &gamma)?;
        composed.push(BisectionEntry {
            alpha: host.alpha.concat(&img),
            g: group.reduce(&rest.concat(&e2.g))?,
            beta: e2.beta,
        });
    }
    validate_and_canonicalize(group, &BisectionTable::from_entries(composed))
}

/// The inverse homeomorphism, canonical.
pub fn inverse(
    group: &AutomatonGroup,
    t: &BisectionTable,
) -> Result<BisectionTable, FullGroupError> {
    let entries = t
        .entries()
        .iter()
        .map(|e| {
            Ok(BisectionEntry {
                alpha: e.beta.clone(),
                g: group.inverse_word(&e.g)?,
                beta: e.alpha.clone(),
            })
        })
        .collect::<Result<Vec<_>, FullGroupError>>()?;
    validate_and_canonicalize(group, &BisectionTable::from_entries(entries))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dih() -> AutomatonGroup {
        AutomatonGroup::dihedral()
    }

    fn table(g: &AutomatonGroup, s: &str) -> BisectionTable {
        BisectionTable::parse(g, s).unwrap()
    }

    #[test]
    fn identity_contracts() {
        let g = dih();
        let t = table(&g, "alpha=0 g=e beta=0; alpha=1 g=e beta=1");
        let c = validate_and_canonicalize(&g, &t).unwrap();
        assert!(c.is_identity());
    }

    #[test]
    fn b_table_already_canonical() {
        let g = dih();
        let t = table(&g, "alpha=- g=b beta=-");
        let c = validate_and_canonicalize(&g, &t).unwrap();
        assert_eq!(c, t);
    }

    #[test]
    fn incomplete_source_rejected() {
        let g = dih();
        for bad in ["alpha=- g=e beta=1", "alpha=0 g=e beta=1"] {
            let t = table(&g, bad);
            assert!(matches!(
                validate_and_canonicalize(&g, &t),
                Err(FullGroupError::NotFullBisection(_))
            ));
        }
    }

    #[test]
    fn compose_generators() {
        let g = dih();
        let a = table(&g, "alpha=- g=a beta=-");
        let b = table(&g, "alpha=- g=b beta=-");
        let ab = compose(&g, &a, &b).unwrap();
        assert_eq!(ab, table(&g, "alpha=- g=ab beta=-"));
        let aa = compose(&g, &a, &a).unwrap();
        assert!(aa.is_identity());
    }

    #[test]
    fn swap_squares_to_identity() {
        let g = dih();
        let swap = table(&g, "alpha=1 g=e beta=0; alpha=0 g=e beta=1");
        let c = validate_and_canonicalize(&g, &swap).unwrap();
        // the crossed swap is exactly the action of a
        let sq = compose(&g, &c, &c).unwrap();
        assert!(sq.is_identity());
    }

    #[test]
    fn inverse_composes_to_identity() {
        let g = dih();
        for s in [
            "alpha=- g=ab beta=-",
            "alpha=0 g=bab beta=11; alpha=10 g=e beta=10; alpha=11 g=a beta=0",
        ] {
            let t = validate_and_canonicalize(&g, &table(&g, s)).unwrap();
            let ti = inverse(&g, &t).unwrap();
            assert!(compose(&g, &t, &ti).unwrap().is_identity());
            assert!(compose(&g, &ti, &t).unwrap().is_identity());
        }
    }

    #[test]
    fn contraction_recovers_twisted_parent() {
        let g = dih();
        // children of (-, b, -): (0, a, 0) and (1, b, 1)
        let t = table(&g, "alpha=0 g=a beta=0; alpha=1 g=b beta=1");
        let c = validate_and_canonicalize(&g, &t).unwrap();
        assert_eq!(c, table(&g, "alpha=- g=b beta=-"));
    }

    #[test]
    fn apply_matches_action() {
        let g = dih();
        let t = table(&g, "alpha=- g=bab beta=-");
        let w = TreeWord::parse("0110").unwrap();
        let (img, _) = g.act(&g.parse_word("bab").unwrap(), &w).unwrap();
        assert_eq!(t.apply(&g, &w).unwrap(), img);
    }
}

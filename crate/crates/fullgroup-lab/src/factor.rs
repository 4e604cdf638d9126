//! Constructive transposition factorization of index-zero tables.
//!
//! A table splits as a cylinder-permutation part with identity twists and a
//! twisted part supported on its own range code. The twisted part is
//! conjugated onto one cylinder and matched against the two one-cylinder
//! shapes (the crossed swap below `alpha_1`, with or without the `ba`
//! twist); the prefix part is sorted by cylinder-slot swaps, merging one
//! sibling family per round.

use crate::error::FullGroupError;
use crate::index::{index, Z2};
use crate::prefix::complement_code;
use crate::table::{compose, validate_and_canonicalize, BisectionEntry, BisectionTable};
use selfsim_core::{AutomatonGroup, GroupWord, TreeWord};
use std::collections::BTreeMap;

/// A single-entry partial bisection with disjoint source and range,
/// together with its completion (the entry, its inverse, and the identity
/// on the complement).
#[derive(Clone, Debug)]
pub struct Transposition {
    pub entry: BisectionEntry,
    pub table: BisectionTable,
}

/// Complete a partial entry to a full table.
pub fn hat(group: &AutomatonGroup, entry: &BisectionEntry) -> Result<Transposition, FullGroupError> {
    if entry.alpha.comparable(&entry.beta) {
        return Err(FullGroupError::OverlappingSupport(format!(
            "{} meets {}",
            entry.alpha, entry.beta
        )));
    }
    let mut entries = vec![
        BisectionEntry {
            alpha: entry.alpha.clone(),
            g: group.reduce(&entry.g)?,
            beta: entry.beta.clone(),
        },
        BisectionEntry {
            alpha: entry.beta.clone(),
            g: group.inverse_word(&entry.g)?,
            beta: entry.alpha.clone(),
        },
    ];
    for w in complement_code(
        &[entry.alpha.clone(), entry.beta.clone()],
        group.alphabet_size(),
    ) {
        entries.push(BisectionEntry {
            alpha: w.clone(),
            g: GroupWord::identity(),
            beta: w,
        });
    }
    entries.sort_by(|a, b| a.beta.cmp(&b.beta));
    Ok(Transposition {
        entry: entry.clone(),
        table: BisectionTable::from_entries(entries),
    })
}

/// Compose hat completions in list order (the last factor acts first).
pub fn compose_all(
    group: &AutomatonGroup,
    factors: &[Transposition],
) -> Result<BisectionTable, FullGroupError> {
    let mut acc = BisectionTable::identity();
    for t in factors {
        acc = compose(group, &acc, &t.table)?;
    }
    Ok(acc)
}

/// Factor an index-zero canonical table into transpositions whose hat
/// completions compose, in order, to the table.
pub fn factor(
    group: &AutomatonGroup,
    table: &BisectionTable,
) -> Result<Vec<Transposition>, FullGroupError> {
    let t = validate_and_canonicalize(group, table)?;
    if index(group, &t)? != Z2::ZERO {
        return Err(FullGroupError::IndexNonzero);
    }
    // split off the prefix-permutation part
    let mut by_alpha: Vec<BisectionEntry> = t.entries().to_vec();
    by_alpha.sort_by(|a, b| a.alpha.cmp(&b.alpha));
    let twisted: Vec<BisectionEntry> = by_alpha
        .iter()
        .map(|e| BisectionEntry {
            alpha: e.alpha.clone(),
            g: e.g.clone(),
            beta: e.alpha.clone(),
        })
        .collect();
    let prefix_part: Vec<BisectionEntry> = by_alpha
        .iter()
        .map(|e| BisectionEntry {
            alpha: e.alpha.clone(),
            g: GroupWord::identity(),
            beta: e.beta.clone(),
        })
        .collect();

    let mut factors = factor_twisted(group, &twisted)?;
    factors.extend(factor_prefix(group, prefix_part)?);
    Ok(factors)
}

/// Factor a table of the form `(alpha_i, g_i, alpha_i)` with index zero.
fn factor_twisted(
    group: &AutomatonGroup,
    entries: &[BisectionEntry],
) -> Result<Vec<Transposition>, FullGroupError> {
    let alpha1 = entries[0].alpha.clone();
    let mut product = GroupWord::identity();
    for e in entries {
        product = product.concat(&e.g);
    }
    let h = group.reduce(&product)?;
    let mut factors = Vec::new();
    // terminal one-cylinder shapes below alpha_1
    for token in tokenize_even_word(group, &h)? {
        let (g, name) = match token {
            EvenToken::Swap => (GroupWord::identity(), "a"),
            EvenToken::TwistedSwap => (group.parse_word("ba")?, "bab"),
        };
        let _ = name;
        factors.push(hat(
            group,
            &BisectionEntry {
                alpha: alpha1.child(1),
                g,
                beta: alpha1.child(0),
            },
        )?);
    }
    // conjugating pairs, deepest index first
    for e in entries.iter().skip(1).rev() {
        if e.g.is_empty() {
            continue;
        }
        factors.push(hat(
            group,
            &BisectionEntry {
                alpha: alpha1.clone(),
                g: GroupWord::identity(),
                beta: e.alpha.clone(),
            },
        )?);
        factors.push(hat(
            group,
            &BisectionEntry {
                alpha: alpha1.clone(),
                g: e.g.clone(),
                beta: e.alpha.clone(),
            },
        )?);
    }
    Ok(factors)
}

enum EvenToken {
    /// The letter `a`: the plain crossed swap below the cylinder.
    Swap,
    /// The letter `bab`: the crossed swap twisted by `ba`.
    TwistedSwap,
}

/// Write an even-b-count reduced word as an alternating word in `a` and
/// `bab`.
fn tokenize_even_word(
    group: &AutomatonGroup,
    h: &GroupWord,
) -> Result<Vec<EvenToken>, FullGroupError> {
    let a = group.gen_index("a").expect("dihedral");
    let b = group.gen_index("b").expect("dihedral");
    let syms = h.syms();
    let mut out = Vec::new();
    let mut pos = 0usize;
    while pos < syms.len() {
        if syms[pos] == a {
            out.push(EvenToken::Swap);
            pos += 1;
        } else if pos + 2 < syms.len()
            && syms[pos] == b
            && syms[pos + 1] == a
            && syms[pos + 2] == b
        {
            out.push(EvenToken::TwistedSwap);
            pos += 3;
        } else {
            return Err(FullGroupError::Internal(format!(
                "word {} is not in the even-letter normal form",
                group.word_string(h)
            )));
        }
    }
    Ok(out)
}

/// Contract aligned identity sibling families only; keeps the table inside
/// the prefix-exchange class.
fn prefix_contract(group: &AutomatonGroup, mut entries: Vec<BisectionEntry>) -> Vec<BisectionEntry> {
    let d = group.alphabet_size();
    loop {
        entries.sort_by(|a, b| a.beta.cmp(&b.beta));
        let mut by_parent: BTreeMap<TreeWord, Vec<usize>> = BTreeMap::new();
        for (i, e) in entries.iter().enumerate() {
            if !e.g.is_empty() {
                continue;
            }
            if let Some((p, _)) = e.beta.parent() {
                by_parent.entry(p).or_default().push(i);
            }
        }
        let mut merged = false;
        for (parent, idxs) in by_parent {
            if idxs.len() != d {
                continue;
            }
            // aligned: alpha = u x exactly when beta = parent x
            let mut u: Option<TreeWord> = None;
            let mut ok = true;
            for &i in &idxs {
                let e = &entries[i];
                let (_, x) = e.beta.parent().expect("has parent");
                match e.alpha.parent() {
                    Some((au, ax)) if ax == x => {
                        if let Some(prev) = &u {
                            if *prev != au {
                                ok = false;
                                break;
                            }
                        } else {
                            u = Some(au);
                        }
                    }
                    _ => {
                        ok = false;
                        break;
                    }
                }
            }
            if !ok {
                continue;
            }
            let u = u.expect("nonempty alphabet");
            let mut next: Vec<BisectionEntry> = Vec::with_capacity(entries.len() - d + 1);
            for (i, e) in entries.iter().enumerate() {
                if !idxs.contains(&i) {
                    next.push(e.clone());
                }
            }
            next.push(BisectionEntry {
                alpha: u,
                g: GroupWord::identity(),
                beta: parent,
            });
            entries = next;
            merged = true;
            break;
        }
        if !merged {
            return entries;
        }
    }
}

/// Factor a prefix-exchange table: repeatedly steer the deepest source
/// sibling family onto the deepest target sibling slots with cylinder
/// swaps, then merge.
fn factor_prefix(
    group: &AutomatonGroup,
    entries: Vec<BisectionEntry>,
) -> Result<Vec<Transposition>, FullGroupError> {
    let mut work = prefix_contract(group, entries);
    let mut factors = Vec::new();
    let mut guard = 0usize;
    loop {
        guard += 1;
        if guard > 10_000 {
            return Err(FullGroupError::Internal(
                "prefix factorization failed to terminate".into(),
            ));
        }
        if work.len() == 1 {
            debug_assert!(work[0].alpha.is_empty() && work[0].beta.is_empty());
            return Ok(factors);
        }
        // deepest, lex-greatest source word; its sibling is in the code
        let bstar = work
            .iter()
            .map(|e| e.beta.clone())
            .max_by(|x, y| x.depth().cmp(&y.depth()).then(x.cmp(y)))
            .expect("nonempty");
        let (bparent, _) = bstar.parent().expect("identity handled above");
        let src0 = bparent.child(0);
        let src1 = bparent.child(1);
        // deepest, lex-greatest target word; its sibling is in the code
        let astar = work
            .iter()
            .map(|e| e.alpha.clone())
            .max_by(|x, y| x.depth().cmp(&y.depth()).then(x.cmp(y)))
            .expect("nonempty");
        let (aparent, _) = astar.parent().expect("identity handled above");
        let slot0 = aparent.child(0);
        let slot1 = aparent.child(1);

        for (src, slot) in [(src0.clone(), slot0), (src1.clone(), slot1)] {
            let cur = work
                .iter()
                .find(|e| e.beta == src)
                .ok_or_else(|| {
                    FullGroupError::Internal("sibling source missing from complete code".into())
                })?
                .alpha
                .clone();
            if cur != slot {
                let v = BisectionEntry {
                    alpha: slot.clone(),
                    g: GroupWord::identity(),
                    beta: cur.clone(),
                };
                factors.push(hat(group, &v)?);
                // apply the slot swap to the working targets
                for e in work.iter_mut() {
                    if e.alpha == cur {
                        e.alpha = slot.clone();
                    } else if e.alpha == slot {
                        e.alpha = cur.clone();
                    }
                }
            }
        }
        work = prefix_contract(group, work);
    }
}

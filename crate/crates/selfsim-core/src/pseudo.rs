//! Pseudo-freeness: no nontrivial element fixes a letter with trivial
//! restriction. Verified by exhaustive search over the reduced ball, plus
//! the closed-form restriction identities of the dihedral instance.

use crate::error::SelfSimError;
use crate::group::AutomatonGroup;
use crate::word::{GroupWord, TreeWord};

/// One verified triple: `g . x = y . restriction`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifiedTriple {
    pub word: GroupWord,
    pub letter: u8,
    pub image: u8,
    pub restriction: GroupWord,
}

#[derive(Clone, Debug)]
pub enum PseudoFreeOutcome {
    /// Every reduced nonidentity word of length at most `max_len` moves each
    /// letter or restricts nontrivially; the triples are the evidence.
    Certificate {
        max_len: usize,
        triples: Vec<VerifiedTriple>,
        closed_forms_checked: usize,
    },
    /// `g . x = x . e` with `g != e`.
    Counterexample { word: GroupWord, letter: u8 },
}

impl PseudoFreeOutcome {
    pub fn is_certificate(&self) -> bool {
        matches!(self, PseudoFreeOutcome::Certificate { .. })
    }
}

/// Check pseudo-freeness for all reduced words of length `1..=max_len`.
/// For the built-in dihedral instance the closed-form identities
/// for `(ab)^n`-type and `(ba)^n`-type words are verified as well.
pub fn check_pseudo_free(
    group: &AutomatonGroup,
    max_len: usize,
) -> Result<PseudoFreeOutcome, SelfSimError> {
    let ball = group.reduced_ball(max_len)?;
    let mut triples = Vec::new();
    for g in ball.iter().filter(|g| !g.is_empty()) {
        for x in 0..group.alphabet_size() as u8 {
            let (y, rest) = group.act_letter(g, x)?;
            if y == x && rest.is_empty() {
                return Ok(PseudoFreeOutcome::Counterexample {
                    word: g.clone(),
                    letter: x,
                });
            }
            triples.push(VerifiedTriple {
                word: g.clone(),
                letter: x,
                image: y,
                restriction: rest,
            });
        }
    }
    let closed_forms_checked = if group.is_dihedral_instance() {
        verify_dihedral_closed_forms(group, max_len)?
    } else {
        0
    };
    Ok(PseudoFreeOutcome::Certificate {
        max_len,
        triples,
        closed_forms_checked,
    })
}

/// The closed forms for the dihedral action on single letters, indexed by
/// exponent. Each entry is checked against `act`.
pub fn verify_dihedral_closed_forms(
    group: &AutomatonGroup,
    max_len: usize,
) -> Result<usize, SelfSimError> {
    assert!(group.is_dihedral_instance());
    let a = group.parse_word("a")?;
    let b = group.parse_word("b")?;
    let ab = a.concat(&b);
    let ba = b.concat(&a);
    let mut checked = 0usize;

    let expect = |g: &AutomatonGroup, word: GroupWord, x: u8, y: u8, rest: GroupWord| -> Result<(), SelfSimError> {
        let word = g.reduce(&word)?;
        let rest = g.reduce(&rest)?;
        let (img, r) = g.act(&word, &TreeWord::new(vec![x]))?;
        if img.letters() != [y] || r != rest {
            return Err(SelfSimError::ClosedFormMismatch {
                word: g.word_string(&word),
                letter: x,
            });
        }
        Ok(())
    };

    for n in 0usize.. {
        if 2 * n + 1 > max_len.max(1) {
            break;
        }
        // (ab)^{2n} . 0 = 0 . (ba)^n        (ab)^{2n} . 1 = 1 . (ab)^n
        expect(group, ab.repeat(2 * n), 0, 0, ba.repeat(n))?;
        expect(group, ab.repeat(2 * n), 1, 1, ab.repeat(n))?;
        // (ab)^{2n+1} . 0 = 1 . a(ba)^n     (ab)^{2n+1} . 1 = 0 . b(ab)^n
        expect(group, ab.repeat(2 * n + 1), 0, 1, a.concat(&ba.repeat(n)))?;
        expect(group, ab.repeat(2 * n + 1), 1, 0, b.concat(&ab.repeat(n)))?;
        // (ab)^{2n} a . 0 = 1 . (ab)^n      (ab)^{2n} a . 1 = 0 . (ba)^n
        expect(group, ab.repeat(2 * n).concat(&a), 0, 1, ab.repeat(n))?;
        expect(group, ab.repeat(2 * n).concat(&a), 1, 0, ba.repeat(n))?;
        // (ab)^{2n+1} a . 0 = 0 . b(ab)^n   (ab)^{2n+1} a . 1 = 1 . a(ba)^n
        expect(group, ab.repeat(2 * n + 1).concat(&a), 0, 0, b.concat(&ab.repeat(n)))?;
        expect(group, ab.repeat(2 * n + 1).concat(&a), 1, 1, a.concat(&ba.repeat(n)))?;
        // the b-side analogues
        expect(group, ba.repeat(2 * n), 0, 0, ab.repeat(n))?;
        expect(group, ba.repeat(2 * n), 1, 1, ba.repeat(n))?;
        expect(group, ba.repeat(2 * n + 1), 0, 1, b.concat(&ab.repeat(n)))?;
        expect(group, ba.repeat(2 * n + 1), 1, 0, a.concat(&ba.repeat(n)))?;
        expect(group, ba.repeat(2 * n).concat(&b), 0, 0, a.concat(&ba.repeat(n)))?;
        expect(group, ba.repeat(2 * n).concat(&b), 1, 1, ba.repeat(n).concat(&b))?;
        expect(group, ba.repeat(2 * n + 1).concat(&b), 0, 1, b.concat(&ab.repeat(n)).concat(&a))?;
        expect(group, ba.repeat(2 * n + 1).concat(&b), 1, 0, a.concat(&ba.repeat(n)).concat(&b))?;
        checked += 16;
    }
    Ok(checked)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{AutomatonGroup, WreathRow};

    #[test]
    fn dihedral_certificate() {
        let g = AutomatonGroup::dihedral();
        let out = check_pseudo_free(&g, 16).unwrap();
        match out {
            PseudoFreeOutcome::Certificate { triples, closed_forms_checked, .. } => {
                // 2 words per length 1..=16, 2 letters each
                assert_eq!(triples.len(), 2 * 16 * 2);
                assert!(closed_forms_checked > 0);
            }
            _ => panic!("expected certificate"),
        }
    }

    #[test]
    fn modified_table_has_counterexample() {
        // b: 0 -> (0, e), 1 -> (1, b): b fixes 0 with trivial restriction
        let a = WreathRow {
            out: vec![1, 0],
            rest: vec![GroupWord::identity(), GroupWord::identity()],
        };
        let b = WreathRow {
            out: vec![0, 1],
            rest: vec![GroupWord::identity(), GroupWord::gen(1)],
        };
        let g = AutomatonGroup::new(
            None,
            2,
            vec!["a".into(), "b".into()],
            vec![a, b],
            vec![(vec![0, 0], vec![]), (vec![1, 1], vec![])],
        )
        .unwrap();
        match check_pseudo_free(&g, 4).unwrap() {
            PseudoFreeOutcome::Counterexample { word, letter } => {
                assert_eq!(g.word_string(&word), "b");
                assert_eq!(letter, 0);
            }
            _ => panic!("expected counterexample"),
        }
    }

    #[test]
    fn trivial_group_certificate() {
        let g = AutomatonGroup::new(None, 2, vec![], vec![], vec![]).unwrap();
        assert!(check_pseudo_free(&g, 4).unwrap().is_certificate());
    }
}

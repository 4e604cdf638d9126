//! Automaton groups: a generator set acting on the rooted d-ary tree via a
//! wreath recursion table, with a string rewriting system for group words.

use crate::error::SelfSimError;
use crate::word::{GroupWord, TreeWord};
use std::collections::{BTreeSet, VecDeque};

const DEFAULT_REWRITE_BUDGET: usize = 100_000;

/// One generator's wreath recursion: for each letter `x`, the output letter
/// and the restriction word.
#[derive(Clone, Debug)]
pub struct WreathRow {
    pub out: Vec<u8>,
    pub rest: Vec<GroupWord>,
}

/// A self-similar group presented by a wreath recursion over a finite
/// alphabet together with rewriting rules for the word problem.
#[derive(Clone, Debug)]
pub struct AutomatonGroup {
    name: Option<String>,
    alphabet: usize,
    gen_names: Vec<String>,
    rows: Vec<WreathRow>,
    rules: Vec<(Vec<u8>, Vec<u8>)>,
    exact_words: bool,
    inverses: Option<Vec<u8>>,
    rewrite_budget: usize,
}

impl AutomatonGroup {
    pub fn new(
        name: Option<String>,
        alphabet: usize,
        gen_names: Vec<String>,
        rows: Vec<WreathRow>,
        rules: Vec<(Vec<u8>, Vec<u8>)>,
    ) -> Result<AutomatonGroup, SelfSimError> {
        if alphabet == 0 || alphabet > 255 {
            return Err(SelfSimError::BadDefinition("alphabet size out of range".into()));
        }
        if gen_names.len() != rows.len() || gen_names.len() > 250 {
            return Err(SelfSimError::BadDefinition("generator table mismatch".into()));
        }
        for (g, row) in rows.iter().enumerate() {
            if row.out.len() != alphabet || row.rest.len() != alphabet {
                return Err(SelfSimError::BadDefinition(format!(
                    "generator {} table has wrong arity",
                    gen_names[g]
                )));
            }
            let mut seen = vec![false; alphabet];
            for &y in &row.out {
                if (y as usize) >= alphabet || seen[y as usize] {
                    return Err(SelfSimError::BadDefinition(format!(
                        "generator {} does not permute the alphabet",
                        gen_names[g]
                    )));
                }
                seen[y as usize] = true;
            }
        }
        let mut g = AutomatonGroup {
            name,
            alphabet,
            gen_names,
            rows,
            rules,
            exact_words: false,
            inverses: None,
            rewrite_budget: DEFAULT_REWRITE_BUDGET,
        };
        g.exact_words = g.certify_rewriting();
        g.inverses = g.derive_inverses();
        Ok(g)
    }

    /// The built-in self-similar infinite dihedral instance:
    /// a: 0 -> (1, e), 1 -> (0, e); b: 0 -> (0, a), 1 -> (1, b);
    /// relations a a = e, b b = e.
    pub fn dihedral() -> AutomatonGroup {
        let a = WreathRow {
            out: vec![1, 0],
            rest: vec![GroupWord::identity(), GroupWord::identity()],
        };
        let b = WreathRow {
            out: vec![0, 1],
            rest: vec![GroupWord::gen(0), GroupWord::gen(1)],
        };
        AutomatonGroup::new(
            Some("dihedral-z2-z2".to_string()),
            2,
            vec!["a".to_string(), "b".to_string()],
            vec![a, b],
            vec![(vec![0, 0], vec![]), (vec![1, 1], vec![])],
        )
        .expect("built-in dihedral table is valid")
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet
    }

    pub fn gen_count(&self) -> usize {
        self.gen_names.len()
    }

    pub fn gen_names(&self) -> &[String] {
        &self.gen_names
    }

    pub fn gen_index(&self, name: &str) -> Option<u8> {
        self.gen_names.iter().position(|n| n == name).map(|i| i as u8)
    }

    /// Whether reduced words are unique normal forms (terminating, locally
    /// confluent rewriting certified at construction).
    pub fn has_exact_word_problem(&self) -> bool {
        self.exact_words
    }

    pub fn is_dihedral_instance(&self) -> bool {
        let d = AutomatonGroup::dihedral();
        self.alphabet == 2
            && self.gen_count() == 2
            && self.rules == d.rules
            && (0..2).all(|g| {
                self.rows[g].out == d.rows[g].out && self.rows[g].rest == d.rows[g].rest
            })
    }

    /// Termination heuristic: every rule must be length-reducing, or
    /// length-preserving and lexicographically decreasing.
    fn rules_terminating(&self) -> bool {
        self.rules.iter().all(|(l, r)| {
            r.len() < l.len() || (r.len() == l.len() && r < l)
        })
    }

    /// Local confluence by critical pair analysis; with termination this
    /// certifies unique normal forms.
    fn certify_rewriting(&self) -> bool {
        if !self.rules_terminating() {
            return false;
        }
        for (l1, r1) in &self.rules {
            for (l2, r2) in &self.rules {
                // overlaps: a suffix of l1 equals a prefix of l2
                for k in 1..=l1.len().min(l2.len()) {
                    if l1[l1.len() - k..] == l2[..k] {
                        // word = l1 + l2[k..]
                        let mut w = l1.clone();
                        w.extend_from_slice(&l2[k..]);
                        let mut via1 = r1.clone();
                        via1.extend_from_slice(&l2[k..]);
                        let mut via2 = l1[..l1.len() - k].to_vec();
                        via2.extend_from_slice(r2);
                        let n1 = self.rewrite_to_fixpoint(via1);
                        let n2 = self.rewrite_to_fixpoint(via2);
                        match (n1, n2) {
                            (Some(a), Some(b)) if a == b => {}
                            _ => return false,
                        }
                        let _ = w;
                    }
                }
                // containment: l2 occurs strictly inside l1
                if l2.len() < l1.len() {
                    for start in 0..=l1.len() - l2.len() {
                        if &l1[start..start + l2.len()] == l2.as_slice() {
                            let mut via2 = l1[..start].to_vec();
                            via2.extend_from_slice(r2);
                            via2.extend_from_slice(&l1[start + l2.len()..]);
                            let n1 = self.rewrite_to_fixpoint(r1.clone());
                            let n2 = self.rewrite_to_fixpoint(via2);
                            match (n1, n2) {
                                (Some(a), Some(b)) if a == b => {}
                                _ => return false,
                            }
                        }
                    }
                }
            }
        }
        true
    }

    /// Inverse generators derivable from two-letter identity rules.
    fn derive_inverses(&self) -> Option<Vec<u8>> {
        let n = self.gen_count();
        let mut inv = vec![None; n];
        for (l, r) in &self.rules {
            if r.is_empty() && l.len() == 2 {
                inv[l[0] as usize] = Some(l[1]);
                inv[l[1] as usize] = Some(l[0]);
            }
        }
        inv.into_iter().collect::<Option<Vec<u8>>>()
    }

    fn rewrite_to_fixpoint(&self, mut syms: Vec<u8>) -> Option<Vec<u8>> {
        let mut steps = 0usize;
        'outer: loop {
            for (l, r) in &self.rules {
                if l.is_empty() || l.len() > syms.len() {
                    continue;
                }
                for start in 0..=syms.len() - l.len() {
                    if &syms[start..start + l.len()] == l.as_slice() {
                        let mut next = syms[..start].to_vec();
                        next.extend_from_slice(r);
                        next.extend_from_slice(&syms[start + l.len()..]);
                        syms = next;
                        steps += 1;
                        if steps > self.rewrite_budget {
                            return None;
                        }
                        continue 'outer;
                    }
                }
            }
            return Some(syms);
        }
    }

    /// Canonical irreducible word for the same group element. Idempotent.
    pub fn reduce(&self, w: &GroupWord) -> Result<GroupWord, SelfSimError> {
        for &s in w.syms() {
            if s as usize >= self.gen_count() {
                return Err(SelfSimError::UnknownGenerator(s));
            }
        }
        if w.is_canonical() {
            return Ok(w.clone());
        }
        match self.rewrite_to_fixpoint(w.syms().to_vec()) {
            Some(syms) => Ok(GroupWord::from_syms_canonical(syms)),
            None => Err(SelfSimError::NonterminatingRewrite {
                budget: self.rewrite_budget,
            }),
        }
    }

    pub fn inverse_word(&self, w: &GroupWord) -> Result<GroupWord, SelfSimError> {
        let inv = self
            .inverses
            .as_ref()
            .ok_or(SelfSimError::WordProblemUnavailable)?;
        let syms = w.syms().iter().rev().map(|&s| inv[s as usize]).collect();
        self.reduce(&GroupWord::from_syms(syms))
    }

    /// Parse a word over generator names. Accepts `e`, `-` or the empty
    /// string for the identity, whitespace-separated names, or (when all
    /// generator names are single characters) plain concatenation.
    pub fn parse_word(&self, s: &str) -> Result<GroupWord, SelfSimError> {
        let s = s.trim();
        if s.is_empty() || s == "e" || s == "-" {
            return Ok(GroupWord::identity());
        }
        let mut syms = Vec::new();
        if s.contains(char::is_whitespace) {
            for tok in s.split_whitespace() {
                if tok == "e" {
                    continue;
                }
                let i = self
                    .gen_index(tok)
                    .ok_or_else(|| SelfSimError::UnknownGeneratorName(tok.to_string()))?;
                syms.push(i);
            }
        } else if self.gen_names.iter().all(|n| n.chars().count() == 1) {
            for c in s.chars() {
                let name = c.to_string();
                let i = self
                    .gen_index(&name)
                    .ok_or(SelfSimError::UnknownGeneratorName(name))?;
                syms.push(i);
            }
        } else {
            let i = self
                .gen_index(s)
                .ok_or_else(|| SelfSimError::UnknownGeneratorName(s.to_string()))?;
            syms.push(i);
        }
        Ok(GroupWord::from_syms(syms))
    }

    pub fn word_string(&self, w: &GroupWord) -> String {
        if w.is_empty() {
            return "e".to_string();
        }
        w.syms()
            .iter()
            .map(|&s| self.gen_names[s as usize].as_str())
            .collect::<Vec<_>>()
            .join("")
    }

    /// One generator applied to one letter: `(output letter, restriction)`.
    pub fn step(&self, g: u8, x: u8) -> Result<(u8, &GroupWord), SelfSimError> {
        let row = self
            .rows
            .get(g as usize)
            .ok_or(SelfSimError::UnknownGenerator(g))?;
        let xi = x as usize;
        if xi >= self.alphabet {
            return Err(SelfSimError::BadLetter(x));
        }
        Ok((row.out[xi], &row.rest[xi]))
    }

    /// Left action of a group word on a single letter:
    /// `(image letter, reduced restriction)`.
    pub fn act_letter(&self, g: &GroupWord, x: u8) -> Result<(u8, GroupWord), SelfSimError> {
        let mut letter = x;
        let mut parts: Vec<&[u8]> = Vec::with_capacity(g.len());
        // rightmost symbol acts first; restrictions compose left to right
        for &s in g.syms().iter().rev() {
            let (y, rest) = self.step(s, letter)?;
            parts.push(rest.syms());
            letter = y;
        }
        let mut syms = Vec::new();
        for p in parts.iter().rev() {
            syms.extend_from_slice(p);
        }
        let rest = self.reduce(&GroupWord::from_syms(syms))?;
        Ok((letter, rest))
    }

    /// Left action on a tree word: image of the same depth plus the reduced
    /// restriction below it. Satisfies `g.(x w') = y (g|_x . w')` letter by
    /// letter.
    pub fn act(&self, g: &GroupWord, w: &TreeWord) -> Result<(TreeWord, GroupWord), SelfSimError> {
        let mut state = self.reduce(g)?;
        let mut image = TreeWord::empty();
        for &x in w.letters() {
            let (y, rest) = self.act_letter(&state, x)?;
            image.push(y);
            state = rest;
        }
        Ok((image, state))
    }

    /// The permutation induced on depth-`k` words, as images of
    /// lexicographic indices.
    pub fn level_permutation(&self, g: &GroupWord, k: usize) -> Result<Vec<usize>, SelfSimError> {
        let d = self.alphabet;
        let n = d.pow(k as u32);
        let mut perm = vec![0usize; n];
        let mut seen = vec![false; n];
        for (i, slot) in perm.iter_mut().enumerate() {
            let w = TreeWord::from_index(i, k, d);
            let (img, _) = self.act(g, &w)?;
            let j = img.index(d);
            *slot = j;
            if seen[j] {
                return Err(SelfSimError::NotAPermutation(k));
            }
            seen[j] = true;
        }
        Ok(perm)
    }

    /// Orbits of depth-`k` words under the generator set, each orbit sorted,
    /// orbits ordered by least representative.
    pub fn orbits(&self, k: usize) -> Result<Vec<Vec<TreeWord>>, SelfSimError> {
        let d = self.alphabet;
        let n = d.pow(k as u32);
        let perms: Vec<Vec<usize>> = (0..self.gen_count())
            .map(|g| self.level_permutation(&GroupWord::gen(g as u8), k))
            .collect::<Result<_, _>>()?;
        let mut seen = vec![false; n];
        let mut orbits = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut orbit = BTreeSet::new();
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            orbit.insert(start);
            while let Some(i) = queue.pop_front() {
                for p in &perms {
                    let j = p[i];
                    if !seen[j] {
                        seen[j] = true;
                        orbit.insert(j);
                        queue.push_back(j);
                    }
                }
            }
            orbits.push(
                orbit
                    .into_iter()
                    .map(|i| TreeWord::from_index(i, k, d))
                    .collect(),
            );
        }
        Ok(orbits)
    }

    /// All distinct reduced words of length up to `max_len`, shortlex order.
    /// The identity is included as the first element.
    pub fn reduced_ball(&self, max_len: usize) -> Result<Vec<GroupWord>, SelfSimError> {
        if !self.exact_words {
            return Err(SelfSimError::WordProblemUnavailable);
        }
        let mut out = vec![GroupWord::identity()];
        let mut frontier = vec![GroupWord::identity()];
        let mut seen: BTreeSet<GroupWord> = out.iter().cloned().collect();
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &frontier {
                for g in 0..self.gen_count() as u8 {
                    let cand = self.reduce(&w.concat(&GroupWord::gen(g)))?;
                    if cand.len() == w.len() + 1 && !seen.contains(&cand) {
                        seen.insert(cand.clone());
                        next.push(cand);
                    }
                }
            }
            next.sort();
            out.extend(next.iter().cloned());
            frontier = next;
            if frontier.is_empty() {
                break;
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dih() -> AutomatonGroup {
        AutomatonGroup::dihedral()
    }

    fn w(g: &AutomatonGroup, s: &str) -> GroupWord {
        g.parse_word(s).unwrap()
    }

    #[test]
    fn reduce_examples() {
        let g = dih();
        assert_eq!(g.reduce(&w(&g, "abba")).unwrap(), GroupWord::identity());
        assert_eq!(g.reduce(&w(&g, "aba")).unwrap(), w(&g, "aba"));
        assert_eq!(g.reduce(&w(&g, "aabab")).unwrap(), w(&g, "bab"));
        // idempotent
        let r = g.reduce(&w(&g, "aabab")).unwrap();
        assert_eq!(g.reduce(&r).unwrap(), r);
    }

    #[test]
    fn act_examples() {
        let g = dih();
        let (img, rest) = g.act(&w(&g, "a"), &TreeWord::parse("01").unwrap()).unwrap();
        assert_eq!(img, TreeWord::parse("11").unwrap());
        assert!(rest.is_empty());

        let (img, rest) = g.act(&w(&g, "ab"), &TreeWord::parse("0").unwrap()).unwrap();
        assert_eq!(img, TreeWord::parse("1").unwrap());
        assert_eq!(rest, w(&g, "a"));

        let (img, rest) = g.act(&GroupWord::identity(), &TreeWord::parse("0110").unwrap()).unwrap();
        assert_eq!(img, TreeWord::parse("0110").unwrap());
        assert!(rest.is_empty());
    }

    #[test]
    fn level_permutations() {
        let g = dih();
        // a at depth 2: 00<->10, 01<->11
        assert_eq!(g.level_permutation(&w(&g, "a"), 2).unwrap(), vec![2, 3, 0, 1]);
        // b at depth 2: 00<->01, fixes 10, 11
        assert_eq!(g.level_permutation(&w(&g, "b"), 2).unwrap(), vec![1, 0, 2, 3]);
        // identity
        assert_eq!(g.level_permutation(&GroupWord::identity(), 3).unwrap(), (0..8).collect::<Vec<_>>());
    }

    #[test]
    fn orbit_examples() {
        let g = dih();
        assert_eq!(g.orbits(0).unwrap().len(), 1);
        let o1 = g.orbits(1).unwrap();
        assert_eq!(o1.len(), 1);
        assert_eq!(o1[0].len(), 2);
        let o2 = g.orbits(2).unwrap();
        assert_eq!(o2.len(), 1);
        assert_eq!(o2[0].len(), 4);
    }

    #[test]
    fn dihedral_is_certified() {
        let g = dih();
        assert!(g.has_exact_word_problem());
        assert!(g.is_dihedral_instance());
        assert_eq!(g.inverse_word(&w(&g, "ab")).unwrap(), w(&g, "ba"));
    }

    #[test]
    fn reduced_ball_counts() {
        let g = dih();
        let ball = g.reduced_ball(5).unwrap();
        // identity plus two words per positive length
        assert_eq!(ball.len(), 1 + 2 * 5);
    }

    #[test]
    fn looping_rules_exceed_the_budget() {
        // ab -> ba and ba -> ab cycle forever
        let a = WreathRow {
            out: vec![1, 0],
            rest: vec![GroupWord::identity(), GroupWord::identity()],
        };
        let b = WreathRow {
            out: vec![0, 1],
            rest: vec![GroupWord::gen(0), GroupWord::gen(1)],
        };
        let g = AutomatonGroup::new(
            None,
            2,
            vec!["a".into(), "b".into()],
            vec![a, b],
            vec![(vec![0, 1], vec![1, 0]), (vec![1, 0], vec![0, 1])],
        )
        .unwrap();
        assert!(!g.has_exact_word_problem());
        let w = g.parse_word("ab").unwrap();
        assert!(matches!(
            g.reduce(&w),
            Err(SelfSimError::NonterminatingRewrite { .. })
        ));
        // element-equality operations refuse outright
        assert!(matches!(
            g.reduced_ball(3),
            Err(SelfSimError::WordProblemUnavailable)
        ));
    }
}

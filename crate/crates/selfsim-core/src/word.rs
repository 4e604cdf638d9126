//! Words: finite tree words over the alphabet and group words over the
//! generator set.

use std::fmt;

/// A vertex of the rooted d-ary tree: a finite word of letters `0..d`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct TreeWord {
    letters: Vec<u8>,
}

impl TreeWord {
    pub fn empty() -> TreeWord {
        TreeWord { letters: Vec::new() }
    }

    pub fn new(letters: Vec<u8>) -> TreeWord {
        TreeWord { letters }
    }

    /// Parse a digit string; `-` and the empty string denote the root.
    pub fn parse(s: &str) -> Option<TreeWord> {
        if s == "-" || s.is_empty() {
            return Some(TreeWord::empty());
        }
        let mut letters = Vec::with_capacity(s.len());
        for c in s.chars() {
            let d = c.to_digit(10)?;
            if d > 255 {
                return None;
            }
            letters.push(d as u8);
        }
        Some(TreeWord { letters })
    }

    /// The `i`-th depth-`k` word in lexicographic order over alphabet size `d`.
    pub fn from_index(index: usize, depth: usize, d: usize) -> TreeWord {
        let mut letters = vec![0u8; depth];
        let mut rem = index;
        for pos in (0..depth).rev() {
            letters[pos] = (rem % d) as u8;
            rem /= d;
        }
        debug_assert_eq!(rem, 0);
        TreeWord { letters }
    }

    /// Lexicographic index among depth-`k` words.
    pub fn index(&self, d: usize) -> usize {
        self.letters.iter().fold(0usize, |acc, &x| acc * d + x as usize)
    }

    pub fn depth(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn push(&mut self, x: u8) {
        self.letters.push(x);
    }

    pub fn child(&self, x: u8) -> TreeWord {
        let mut w = self.clone();
        w.push(x);
        w
    }

    pub fn concat(&self, other: &TreeWord) -> TreeWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        TreeWord { letters }
    }

    pub fn is_prefix_of(&self, other: &TreeWord) -> bool {
        other.letters.len() >= self.letters.len()
            && other.letters[..self.letters.len()] == self.letters[..]
    }

    /// The suffix of `other` after `self`, when `self` is a prefix.
    pub fn strip_prefix(&self, other: &TreeWord) -> Option<TreeWord> {
        if self.is_prefix_of(other) {
            Some(TreeWord::new(other.letters[self.letters.len()..].to_vec()))
        } else {
            None
        }
    }

    pub fn comparable(&self, other: &TreeWord) -> bool {
        self.is_prefix_of(other) || other.is_prefix_of(self)
    }

    pub fn parent(&self) -> Option<(TreeWord, u8)> {
        let mut letters = self.letters.clone();
        let last = letters.pop()?;
        Some((TreeWord { letters }, last))
    }

    /// All depth-`k` words in lexicographic order.
    pub fn all(depth: usize, d: usize) -> Vec<TreeWord> {
        (0..d.pow(depth as u32)).map(|i| TreeWord::from_index(i, depth, d)).collect()
    }
}

impl fmt::Display for TreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "-");
        }
        for &x in &self.letters {
            write!(f, "{}", x)?;
        }
        Ok(())
    }
}

impl fmt::Debug for TreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TreeWord({})", self)
    }
}

/// A word over the generator set, stored as generator indices.
/// `canonical` marks words already in normal form under the group's
/// rewriting rules; only canonical words compare as group elements.
#[derive(Clone)]
pub struct GroupWord {
    syms: Vec<u8>,
    canonical: bool,
}

impl GroupWord {
    pub fn identity() -> GroupWord {
        GroupWord { syms: Vec::new(), canonical: true }
    }

    pub fn from_syms(syms: Vec<u8>) -> GroupWord {
        GroupWord { syms, canonical: false }
    }

    pub(crate) fn from_syms_canonical(syms: Vec<u8>) -> GroupWord {
        GroupWord { syms, canonical: true }
    }

    pub fn gen(i: u8) -> GroupWord {
        GroupWord { syms: vec![i], canonical: true }
    }

    pub fn syms(&self) -> &[u8] {
        &self.syms
    }

    pub fn len(&self) -> usize {
        self.syms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syms.is_empty()
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical
    }

    /// Plain concatenation; the result is not assumed canonical.
    pub fn concat(&self, other: &GroupWord) -> GroupWord {
        let mut syms = self.syms.clone();
        syms.extend_from_slice(&other.syms);
        GroupWord { syms, canonical: false }
    }

    pub fn reversed(&self) -> GroupWord {
        let mut syms = self.syms.clone();
        syms.reverse();
        GroupWord { syms, canonical: false }
    }

    pub fn repeat(&self, n: usize) -> GroupWord {
        let mut syms = Vec::with_capacity(self.syms.len() * n);
        for _ in 0..n {
            syms.extend_from_slice(&self.syms);
        }
        GroupWord { syms, canonical: false }
    }
}

// Equality, ordering and hashing ignore the canonical flag.
impl PartialEq for GroupWord {
    fn eq(&self, other: &Self) -> bool {
        self.syms == other.syms
    }
}
impl Eq for GroupWord {}
impl PartialOrd for GroupWord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for GroupWord {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // shortlex, so reduced dihedral words enumerate nicely
        self.syms
            .len()
            .cmp(&other.syms.len())
            .then_with(|| self.syms.cmp(&other.syms))
    }
}
impl std::hash::Hash for GroupWord {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.syms.hash(state);
    }
}

impl fmt::Debug for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupWord[")?;
        for (i, s) in self.syms.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", s)?;
        }
        write!(f, "]")
    }
}

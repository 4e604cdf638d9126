//! Complete prefix codes over the tree alphabet: the cylinder partitions
//! that carry bisection tables.

use selfsim_core::TreeWord;

/// Check prefix-freeness and completeness (the cylinders partition the
/// boundary: the measures 1/d^{|w|} sum to 1).
pub fn is_complete_prefix_code(words: &[TreeWord], d: usize) -> bool {
    for (i, a) in words.iter().enumerate() {
        for b in words.iter().skip(i + 1) {
            if a.comparable(b) {
                return false;
            }
        }
    }
    let max_depth = words.iter().map(|w| w.depth()).max().unwrap_or(0);
    if max_depth > 60 {
        return false;
    }
    let total: u128 = words
        .iter()
        .map(|w| (d as u128).pow((max_depth - w.depth()) as u32))
        .sum();
    total == (d as u128).pow(max_depth as u32)
}

/// The coarsest prefix code covering the complement of the given cylinders
/// (which must be pairwise incomparable). Lexicographic order.
pub fn complement_code(covered: &[TreeWord], d: usize) -> Vec<TreeWord> {
    let mut out = Vec::new();
    let mut stack = vec![TreeWord::empty()];
    while let Some(w) = stack.pop() {
        if covered.iter().any(|c| c.is_prefix_of(&w)) {
            continue;
        }
        if covered.iter().any(|c| w.is_prefix_of(c)) {
            // w meets the covered region properly: refine
            for x in (0..d as u8).rev() {
                stack.push(w.child(x));
            }
        } else {
            out.push(w);
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> TreeWord {
        TreeWord::parse(s).unwrap()
    }

    #[test]
    fn completeness() {
        assert!(is_complete_prefix_code(&[w("-")], 2));
        assert!(is_complete_prefix_code(&[w("0"), w("10"), w("11")], 2));
        assert!(!is_complete_prefix_code(&[w("0"), w("10")], 2));
        assert!(!is_complete_prefix_code(&[w("0"), w("01"), w("1")], 2));
    }

    #[test]
    fn complements() {
        assert_eq!(complement_code(&[w("00"), w("11")], 2), vec![w("01"), w("10")]);
        assert!(complement_code(&[w("0"), w("1")], 2).is_empty());
        assert_eq!(complement_code(&[w("1")], 2), vec![w("0")]);
    }
}

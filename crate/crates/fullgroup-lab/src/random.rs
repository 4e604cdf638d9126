//! Seeded random bisection tables for the factorization round-trip suite.

use crate::index::{index, Z2};
use crate::table::{validate_and_canonicalize, BisectionEntry, BisectionTable};
use rand::Rng;
use selfsim_core::{AutomatonGroup, GroupWord, TreeWord};

/// A complete prefix code of the given size (1..=16) with depths <= 4,
/// built by repeatedly splitting a random leaf.
fn random_code<R: Rng>(rng: &mut R, size: usize, max_depth: usize) -> Vec<TreeWord> {
    assert!(size >= 1 && size <= 1 << max_depth);
    let mut leaves = vec![TreeWord::empty()];
    while leaves.len() < size {
        let splittable: Vec<usize> = (0..leaves.len())
            .filter(|&i| leaves[i].depth() < max_depth)
            .collect();
        let pick = splittable[rng.gen_range(0..splittable.len())];
        let w = leaves.swap_remove(pick);
        leaves.push(w.child(0));
        leaves.push(w.child(1));
    }
    leaves.sort();
    leaves
}

fn random_reduced_word<R: Rng>(rng: &mut R, group: &AutomatonGroup, max_len: usize) -> GroupWord {
    let len = rng.gen_range(0..=max_len);
    let mut syms = Vec::with_capacity(len);
    let mut cur: u8 = rng.gen_range(0..2);
    for _ in 0..len {
        syms.push(cur);
        cur = 1 - cur;
    }
    group.reduce(&GroupWord::from_syms(syms)).expect("alternating words are reduced")
}

/// A random canonical full-bisection table with the requested index,
/// entry depths <= `max_depth` and word lengths <= `max_word_len`.
pub fn random_table<R: Rng>(
    rng: &mut R,
    group: &AutomatonGroup,
    max_depth: usize,
    max_word_len: usize,
    want_index: Z2,
) -> BisectionTable {
    loop {
        let size = rng.gen_range(1..=9usize.min(1 << max_depth));
        let sources = random_code(rng, size, max_depth);
        let mut targets = random_code(rng, size, max_depth);
        // random pairing
        for i in (1..targets.len()).rev() {
            let j = rng.gen_range(0..=i);
            targets.swap(i, j);
        }
        let entries: Vec<BisectionEntry> = sources
            .iter()
            .zip(&targets)
            .map(|(beta, alpha)| BisectionEntry {
                alpha: alpha.clone(),
                g: random_reduced_word(rng, group, max_word_len),
                beta: beta.clone(),
            })
            .collect();
        let table = match validate_and_canonicalize(group, &BisectionTable::from_entries(entries)) {
            Ok(t) => t,
            Err(_) => continue,
        };
        if index(group, &table).expect("dihedral") == want_index {
            return table;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_tables_have_requested_index() {
        let g = AutomatonGroup::dihedral();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let t0 = random_table(&mut rng, &g, 4, 6, Z2::ZERO);
            assert_eq!(index(&g, &t0).unwrap(), Z2::ZERO);
            let t1 = random_table(&mut rng, &g, 4, 6, Z2::ONE);
            assert_eq!(index(&g, &t1).unwrap(), Z2::ONE);
        }
    }

    #[test]
    fn seeded_generation_is_deterministic() {
        let g = AutomatonGroup::dihedral();
        let mut r1 = ChaCha8Rng::seed_from_u64(42);
        let mut r2 = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..5 {
            let a = random_table(&mut r1, &g, 4, 6, Z2::ZERO);
            let b = random_table(&mut r2, &g, 4, 6, Z2::ZERO);
            assert_eq!(a, b);
        }
    }
}

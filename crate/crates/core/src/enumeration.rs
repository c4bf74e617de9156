//! Exhaustive tree generation.
//!
//! Free trees come from the level-sequence successor walk over rooted
//! trees (Beyer-Hedetniemi order), deduplicated to one representative per
//! isomorphism class by canonical code. The walk is deterministic, so the
//! emitted order is stable across runs. The independent oracle decodes
//! every Pruefer sequence into a labeled tree.

use std::collections::HashSet;

use crate::canon::canonical_code;
use crate::error::{Error, Result};
use crate::tree::Tree;

/// Default order cap for free-tree enumeration.
pub const ENUMERATION_CAP: usize = 18;

/// Order cap for the labeled-tree oracle (n^(n-2) explodes quickly).
pub const PRUFER_CAP: usize = 9;

/// Iterator over the level sequences of all rooted trees on n vertices,
/// in decreasing lexicographic order. Levels are 1-based; the root has
/// level 1 and vertex i attaches to the latest earlier vertex one level up.
struct LevelSequences {
    n: usize,
    levels: Vec<usize>,
    started: bool,
    done: bool,
}

impl LevelSequences {
    fn new(n: usize) -> Self {
        LevelSequences {
            n,
            levels: (1..=n).collect(),
            started: false,
            done: false,
        }
    }

    fn advance(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.levels);
        }
        // successor: find the last level above 2, shrink it by copying the
        // segment that starts at its parent
        let Some(p) = self.levels.iter().rposition(|&l| l > 2) else {
            self.done = true;
            return None;
        };
        let q = (0..p).rfind(|&i| self.levels[i] == self.levels[p] - 1).unwrap();
        let shift = p - q;
        for i in p..self.n {
            self.levels[i] = self.levels[i - shift];
        }
        Some(&self.levels)
    }
}

fn tree_from_levels(levels: &[usize]) -> Tree {
    let n = levels.len();
    let mut last_at_level = vec![usize::MAX; n + 2];
    last_at_level[levels[0]] = 0;
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for (i, &l) in levels.iter().enumerate().skip(1) {
        edges.push((last_at_level[l - 1], i));
        last_at_level[l] = i;
    }
    Tree::from_edge_list(n, &edges).expect("level sequence encodes a tree")
}

/// All non-isomorphic free trees of order n, one representative per class,
/// in a deterministic order.
pub fn free_trees(n: usize) -> Result<Vec<Tree>> {
    free_trees_with_cap(n, ENUMERATION_CAP)
}

pub fn free_trees_with_cap(n: usize, cap: usize) -> Result<Vec<Tree>> {
    if n < 1 || n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut gen = LevelSequences::new(n);
    while let Some(levels) = gen.advance() {
        let t = tree_from_levels(levels);
        if seen.insert(canonical_code(&t)) {
            out.push(t);
        }
    }
    Ok(out)
}

/// Number of Pruefer sequences (labeled trees) on n vertices: n^(n-2).
pub fn prufer_sequence_count(n: usize) -> u64 {
    (n as u64).pow(n.saturating_sub(2) as u32)
}

/// Decodes a Pruefer sequence of length n-2 into the labeled tree it
/// encodes.
pub fn prufer_decode(n: usize, seq: &[usize]) -> Result<Tree> {
    if n < 2 || seq.len() != n - 2 {
        return Err(Error::FamilyParams(format!(
            "Pruefer sequence for n = {n} must have length {}, got {}",
            n.saturating_sub(2),
            seq.len()
        )));
    }
    for &s in seq {
        if s >= n {
            return Err(Error::VertexOutOfRange { v: s, n });
        }
    }
    let mut deg = vec![1usize; n];
    for &s in seq {
        deg[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = 0;
    while deg[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &s in seq {
        edges.push((leaf, s));
        deg[s] -= 1;
        if deg[s] == 1 && s < ptr {
            leaf = s;
        } else {
            ptr += 1;
            while deg[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    Tree::from_edge_list(n, &edges)
}

/// The i-th Pruefer sequence for order n, with i in 0..n^(n-2), in
/// lexicographic order. Pairs with [`prufer_decode`] for shardable scans.
pub fn prufer_sequence(n: usize, mut index: u64) -> Vec<usize> {
    let len = n.saturating_sub(2);
    let mut seq = vec![0usize; len];
    for slot in (0..len).rev() {
        seq[slot] = (index % n as u64) as usize;
        index /= n as u64;
    }
    seq
}

/// All n^(n-2) labeled trees, decoded from all Pruefer sequences in
/// lexicographic order. Capped at n = 9.
pub fn labeled_trees_prufer(n: usize) -> Result<impl Iterator<Item = Tree>> {
    if !(2..=PRUFER_CAP).contains(&n) {
        return Err(Error::CapExceeded { n, cap: PRUFER_CAP });
    }
    Ok((0..prufer_sequence_count(n))
        .map(move |i| prufer_decode(n, &prufer_sequence(n, i)).expect("valid sequence")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::{canonical_code, is_isomorphic};
    use crate::families::{path, star};

    const FREE_TREE_COUNTS: [usize; 10] = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106];

    #[test]
    fn free_tree_counts_to_10() {
        for (i, &expect) in FREE_TREE_COUNTS.iter().enumerate() {
            assert_eq!(free_trees(i + 1).unwrap().len(), expect, "n = {}", i + 1);
        }
    }

    #[test]
    fn four_vertices_are_path_and_star() {
        let trees = free_trees(4).unwrap();
        assert_eq!(trees.len(), 2);
        assert!(trees.iter().any(|t| is_isomorphic(t, &path(4).unwrap())));
        assert!(trees.iter().any(|t| is_isomorphic(t, &star(4).unwrap())));
    }

    #[test]
    fn stream_has_no_duplicates_and_valid_trees() {
        for n in 1..=11 {
            let trees = free_trees(n).unwrap();
            let codes: HashSet<_> = trees.iter().map(canonical_code).collect();
            assert_eq!(codes.len(), trees.len());
            for t in &trees {
                assert_eq!(t.vertex_count(), n);
            }
        }
    }

    #[test]
    fn stream_order_is_stable() {
        let a = free_trees(9).unwrap();
        let b = free_trees(9).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn cap_enforced() {
        assert!(free_trees_with_cap(7, 6).is_err());
        assert!(labeled_trees_prufer(10).is_err());
        assert!(labeled_trees_prufer(1).is_err());
    }

    #[test]
    fn prufer_counts_and_classes() {
        assert_eq!(labeled_trees_prufer(3).unwrap().count(), 3);
        let t4: Vec<Tree> = labeled_trees_prufer(4).unwrap().collect();
        assert_eq!(t4.len(), 16);
        let classes: HashSet<_> = t4.iter().map(canonical_code).collect();
        assert_eq!(classes.len(), 2);
        let classes6: HashSet<_> = labeled_trees_prufer(6)
            .unwrap()
            .map(|t| canonical_code(&t))
            .collect();
        assert_eq!(classes6.len(), 6);
    }

    #[test]
    fn prufer_agrees_with_free_trees_to_8() {
        for n in 2..=8 {
            let classes: HashSet<_> = labeled_trees_prufer(n)
                .unwrap()
                .map(|t| canonical_code(&t))
                .collect();
            assert_eq!(classes.len(), free_trees(n).unwrap().len(), "n = {n}");
        }
    }

    #[test]
    fn prufer_decode_star_and_path() {
        // constant sequence -> star on that center
        let t = prufer_decode(5, &[2, 2, 2]).unwrap();
        assert!(is_isomorphic(&t, &star(5).unwrap()));
        assert!(prufer_decode(5, &[1, 2]).is_err());
        assert!(prufer_decode(5, &[1, 2, 9]).is_err());
    }
}

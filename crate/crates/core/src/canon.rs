//! Canonical forms for free trees.
//!
//! The code is the AHU encoding of the tree rooted at its centroid: each
//! subtree encodes as `1 <sorted child codes> 0`. A bicentroidal tree is
//! encoded as the sorted concatenation of the two rooted halves across the
//! centroid edge. Two trees have equal codes iff they are isomorphic.

use crate::tree::Tree;

const NO_PARENT: usize = usize::MAX;

/// Total-order key identifying a free tree up to isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    /// Raw code: a balanced sequence over {1, 0}.
    pub fn as_bits(&self) -> &[u8] {
        &self.0
    }

    /// Bits packed MSB-first into bytes, hex encoded. Codes of trees of
    /// equal order have equal bit length, so within an order class the hex
    /// string is an equivalent key.
    pub fn to_hex(&self) -> String {
        let mut bytes = Vec::with_capacity(self.0.len().div_ceil(8));
        for chunk in self.0.chunks(8) {
            let mut b = 0u8;
            for (i, &bit) in chunk.iter().enumerate() {
                b |= bit << (7 - i);
            }
            bytes.push(b);
        }
        hex::encode(bytes)
    }
}

/// The one or two centroids of the tree (vertices minimizing the largest
/// component left by their removal). Two centroids are always adjacent.
pub fn centroids(t: &Tree) -> Vec<usize> {
    let n = t.vertex_count();
    if n == 1 {
        return vec![0];
    }
    let (order, parent) = t.bfs_order(0);
    let mut size = vec![1usize; n];
    let mut max_comp = vec![0usize; n];
    for &v in order.iter().rev() {
        if parent[v] != NO_PARENT {
            let p = parent[v];
            size[p] += size[v];
            max_comp[p] = max_comp[p].max(size[v]);
        }
        max_comp[v] = max_comp[v].max(n - size[v]);
    }
    let best = *max_comp.iter().min().unwrap();
    (0..n).filter(|&v| max_comp[v] == best).collect()
}

fn rooted_code(t: &Tree, v: usize, parent: usize) -> Vec<u8> {
    let mut kids: Vec<Vec<u8>> = t
        .neighbors(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| rooted_code(t, w, v))
        .collect();
    kids.sort();
    let mut code = Vec::with_capacity(2 + kids.iter().map(Vec::len).sum::<usize>());
    code.push(1);
    for k in kids {
        code.extend(k);
    }
    code.push(0);
    code
}

/// Centroid-rooted AHU canonical code, invariant under vertex relabeling.
pub fn canonical_code(t: &Tree) -> CanonicalCode {
    let cs = centroids(t);
    match cs.as_slice() {
        [c] => CanonicalCode(rooted_code(t, *c, NO_PARENT)),
        [a, b] => {
            let mut ca = rooted_code(t, *a, *b);
            let mut cb = rooted_code(t, *b, *a);
            if cb < ca {
                std::mem::swap(&mut ca, &mut cb);
            }
            ca.extend(cb);
            CanonicalCode(ca)
        }
        _ => unreachable!("a tree has one or two centroids"),
    }
}

pub fn is_isomorphic(a: &Tree, b: &Tree) -> bool {
    a.vertex_count() == b.vertex_count() && canonical_code(a) == canonical_code(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{path, star};
    use crate::tree::Tree;

    /// Brute-force isomorphism by trying every vertex permutation.
    fn iso_by_permutation(a: &Tree, b: &Tree) -> bool {
        use itertools::Itertools;
        let n = a.vertex_count();
        if n != b.vertex_count() {
            return false;
        }
        let eb: std::collections::HashSet<(usize, usize)> = b.edges().into_iter().collect();
        (0..n).permutations(n).any(|perm| {
            a.edges()
                .iter()
                .all(|&(u, v)| eb.contains(&(perm[u].min(perm[v]), perm[u].max(perm[v]))))
        })
    }

    #[test]
    fn relabeled_p4_is_isomorphic() {
        let p4 = path(4).unwrap();
        let other = Tree::from_edge_list(4, &[(3, 2), (2, 0), (0, 1)]).unwrap();
        assert!(is_isomorphic(&p4, &other));
    }

    #[test]
    fn star_vs_path_not_isomorphic() {
        assert!(!is_isomorphic(&star(4).unwrap(), &path(4).unwrap()));
    }

    #[test]
    fn centroid_of_path() {
        assert_eq!(centroids(&path(5).unwrap()), vec![2]);
        assert_eq!(centroids(&path(6).unwrap()), vec![2, 3]);
        assert_eq!(centroids(&star(7).unwrap()), vec![0]);
    }

    #[test]
    fn agrees_with_permutation_oracle_up_to_7() {
        for n in 1..=7 {
            let trees = crate::enumeration::free_trees(n).unwrap();
            for (i, a) in trees.iter().enumerate() {
                for (j, b) in trees.iter().enumerate() {
                    assert_eq!(
                        is_isomorphic(a, b),
                        iso_by_permutation(a, b),
                        "n={n} classes {i},{j}"
                    );
                }
            }
        }
    }

    #[test]
    fn code_invariant_under_relabeling() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for n in 2..=9 {
            for t in crate::enumeration::free_trees(n).unwrap() {
                let code = canonical_code(&t);
                for _ in 0..4 {
                    let mut perm: Vec<usize> = (0..n).collect();
                    perm.shuffle(&mut rng);
                    let r = t.relabeled(&perm).unwrap();
                    assert_eq!(canonical_code(&r), code);
                }
            }
        }
    }

    #[test]
    fn labeled_trees_on_6_vertices_have_6_codes() {
        let codes: std::collections::HashSet<_> = crate::enumeration::labeled_trees_prufer(6)
            .unwrap()
            .map(|t| canonical_code(&t))
            .collect();
        assert_eq!(codes.len(), 6);
    }

    #[test]
    fn hex_is_stable() {
        let code = canonical_code(&path(4).unwrap());
        assert_eq!(code.to_hex(), canonical_code(&path(4).unwrap()).to_hex());
        assert_ne!(code.to_hex(), canonical_code(&star(4).unwrap()).to_hex());
    }
}

//! The two index-monotone tree operations: edge contraction with a fresh
//! pendant, and wholesale pendant moves between two vertices.

use crate::error::{Error, Result};
use crate::tree::Tree;

/// Contracts the non-pendant edge uv and attaches a new pendant vertex to
/// the merged vertex. The merged vertex keeps u's id and v's id is reused
/// for the new pendant, so the vertex count is unchanged.
pub fn contract_pend(t: &Tree, u: usize, v: usize) -> Result<Tree> {
    let n = t.vertex_count();
    for x in [u, v] {
        if x >= n {
            return Err(Error::VertexOutOfRange { v: x, n });
        }
    }
    if !t.neighbors(u).contains(&v) || t.degree(u) < 2 || t.degree(v) < 2 {
        return Err(Error::NotNonPendantEdge { u, v });
    }
    let mut edges: Vec<(usize, usize)> = t
        .edges()
        .into_iter()
        .filter(|&(a, b)| !(a == u.min(v) && b == u.max(v)))
        .map(|(a, b)| {
            let ra = if a == v { u } else { a };
            let rb = if b == v { u } else { b };
            (ra, rb)
        })
        .collect();
    edges.push((u, v)); // v is now the fresh pendant w
    Tree::from_edge_list(n, &edges)
}

fn pendant_neighbors(t: &Tree, x: usize, other: usize) -> Vec<usize> {
    t.neighbors(x)
        .iter()
        .copied()
        .filter(|&w| w != other && t.degree(w) == 1)
        .collect()
}

/// Moves all of v's pendant neighbors to u (first result) and all of u's
/// pendant neighbors to v (second result). When u and v are adjacent,
/// neither counts the other as a movable pendant.
pub fn move_pendants(t: &Tree, u: usize, v: usize) -> Result<(Tree, Tree)> {
    let n = t.vertex_count();
    for x in [u, v] {
        if x >= n {
            return Err(Error::VertexOutOfRange { v: x, n });
        }
    }
    if u == v {
        return Err(Error::FamilyParams("move_pendants needs u != v".into()));
    }
    let pu = pendant_neighbors(t, u, v);
    let pv = pendant_neighbors(t, v, u);
    if pu.is_empty() {
        return Err(Error::NoPendantNeighbor(u));
    }
    if pv.is_empty() {
        return Err(Error::NoPendantNeighbor(v));
    }
    let reattach = |moved: &[usize], target: usize| -> Result<Tree> {
        let edges: Vec<(usize, usize)> = t
            .edges()
            .into_iter()
            .map(|(a, b)| {
                if moved.contains(&a) {
                    (a, target)
                } else if moved.contains(&b) {
                    (b, target)
                } else {
                    (a, b)
                }
            })
            .collect();
        Tree::from_edge_list(n, &edges)
    };
    Ok((reattach(&pv, u)?, reattach(&pu, v)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::families::{path, star};
    use crate::indices::{pi1, pi2};
    use num_traits::ToPrimitive;

    #[test]
    fn contract_interior_edge_of_p4() {
        let p4 = path(4).unwrap();
        let t = contract_pend(&p4, 1, 2).unwrap();
        assert!(is_isomorphic(&t, &star(4).unwrap()));
        assert_eq!(pi1(&t).unwrap().to_u64(), Some(9));
        assert_eq!(pi1(&p4).unwrap().to_u64(), Some(16));
        assert_eq!(pi2(&t).unwrap().to_u64(), Some(27));
        assert_eq!(pi2(&p4).unwrap().to_u64(), Some(16));
    }

    #[test]
    fn contract_rejects_pendant_edges() {
        let p4 = path(4).unwrap();
        assert!(matches!(
            contract_pend(&p4, 0, 1),
            Err(Error::NotNonPendantEdge { .. })
        ));
        assert!(matches!(
            contract_pend(&p4, 0, 2),
            Err(Error::NotNonPendantEdge { .. })
        ));
    }

    #[test]
    fn move_pendants_on_double_star() {
        // u = 0 with pendants 2,3; v = 1 with pendants 4,5,6
        let g = Tree::from_edge_list(
            7,
            &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (1, 6)],
        )
        .unwrap();
        let (gp, gpp) = move_pendants(&g, 0, 1).unwrap();
        assert!(is_isomorphic(&gp, &star(7).unwrap()));
        assert!(is_isomorphic(&gpp, &star(7).unwrap()));
        assert_eq!(pi1(&g).unwrap().to_u64(), Some(144));
        assert_eq!(pi1(&gp).unwrap().to_u64(), Some(36));
        assert_eq!(pi2(&g).unwrap().to_u64(), Some(6912));
        assert_eq!(pi2(&gp).unwrap().to_u64(), Some(46656));
    }

    #[test]
    fn move_pendants_requires_pendant_neighbors() {
        let p5 = path(5).unwrap();
        // vertex 2 has no pendant neighbor
        assert!(matches!(
            move_pendants(&p5, 1, 2),
            Err(Error::NoPendantNeighbor(2))
        ));
        let (gp, gpp) = move_pendants(&p5, 1, 3).unwrap();
        assert_eq!(gp.vertex_count(), 5);
        assert_eq!(gpp.vertex_count(), 5);
    }
}

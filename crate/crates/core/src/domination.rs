//! Distance-k domination on trees: feasibility checks, an optimal
//! linear-time pass, a subset-search oracle, removable pendants and
//! private k-neighbors.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::tree::Tree;

/// Default cap on the subset-search oracle.
pub const ORACLE_CAP: usize = 16;

const NO_PARENT: usize = usize::MAX;

/// Optimal domination value together with a witness set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominationResult {
    pub gamma: usize,
    pub witness: Vec<usize>,
}

fn check_set(t: &Tree, d: &[usize], k: usize) -> Result<()> {
    if k < 1 {
        return Err(Error::InvalidK);
    }
    if d.is_empty() {
        return Err(Error::EmptyDominatingSet);
    }
    for &v in d {
        if v >= t.vertex_count() {
            return Err(Error::VertexOutOfRange {
                v,
                n: t.vertex_count(),
            });
        }
    }
    Ok(())
}

/// True iff every vertex is within distance `k` of some member of `d`.
pub fn is_k_dominating(t: &Tree, d: &[usize], k: usize) -> Result<bool> {
    check_set(t, d, k)?;
    let n = t.vertex_count();
    // multi-source BFS
    let mut dist = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    for &v in d {
        if dist[v] == usize::MAX {
            dist[v] = 0;
            queue.push_back(v);
        }
    }
    while let Some(u) = queue.pop_front() {
        if dist[u] == k {
            continue;
        }
        for &w in t.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    Ok(dist.iter().all(|&x| x <= k))
}

/// Optimal distance-k domination number with witness, by a single pass
/// over the vertices in reverse BFS order.
///
/// Each processed vertex carries two quantities: residual coverage
/// (k minus the distance to the nearest selected vertex in its subtree)
/// and outstanding demand (distance to the farthest not-yet-covered
/// vertex in its subtree). A vertex is selected exactly when demand
/// reaches k; the root is selected if demand is still live at the top.
pub fn gamma_k(t: &Tree, k: usize) -> Result<DominationResult> {
    if k < 1 {
        return Err(Error::InvalidK);
    }
    let n = t.vertex_count();
    if n == 1 {
        return Ok(DominationResult {
            gamma: 1,
            witness: vec![0],
        });
    }
    const NEG: i64 = i64::MIN / 4;
    let ki = k as i64;
    let (order, parent) = t.bfs_order(0);
    let mut cov = vec![NEG; n];
    let mut dem = vec![NEG; n];
    let mut selected = vec![false; n];
    for &v in order.iter().rev() {
        // cov[v], dem[v] already hold the max over children of
        // (child coverage - 1) and (child demand + 1) respectively.
        let mut c = cov[v];
        let mut d = dem[v].max(0); // the vertex itself demands coverage
        if c >= d {
            d = NEG;
        }
        if d == ki {
            selected[v] = true;
            c = ki;
            d = NEG;
        }
        if parent[v] == NO_PARENT {
            if d >= 0 {
                selected[v] = true;
            }
        } else {
            let p = parent[v];
            cov[p] = cov[p].max(c - 1);
            if d != NEG {
                dem[p] = dem[p].max(d + 1);
            }
        }
    }
    let witness: Vec<usize> = (0..n).filter(|&v| selected[v]).collect();
    Ok(DominationResult {
        gamma: witness.len(),
        witness,
    })
}

/// Independent oracle: minimum t such that some t-subset dominates, found
/// by increasing-cardinality subset search over the distance matrix.
pub fn gamma_k_bruteforce(t: &Tree, k: usize) -> Result<usize> {
    gamma_k_bruteforce_with_cap(t, k, ORACLE_CAP)
}

pub fn gamma_k_bruteforce_with_cap(t: &Tree, k: usize, cap: usize) -> Result<usize> {
    if k < 1 {
        return Err(Error::InvalidK);
    }
    let n = t.vertex_count();
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let dist = t.distance_matrix();
    for size in 1..=n {
        for subset in (0..n).combinations(size) {
            let dominates = (0..n).all(|v| subset.iter().any(|&u| dist[u][v] <= k));
            if dominates {
                return Ok(size);
            }
        }
    }
    unreachable!("the full vertex set always dominates")
}

/// The set B of pendant vertices whose deletion preserves gamma_k, and the
/// union N of their neighborhoods.
pub fn removable_pendants(t: &Tree, k: usize) -> Result<(Vec<usize>, Vec<usize>)> {
    if k < 1 {
        return Err(Error::InvalidK);
    }
    let gamma = gamma_k(t, k)?.gamma;
    let mut b = Vec::new();
    for w in t.pendant_vertices() {
        let reduced = t.remove_pendant(w)?;
        if gamma_k(&reduced, k)?.gamma == gamma {
            b.push(w);
        }
    }
    let mut n_set: Vec<usize> = b
        .iter()
        .flat_map(|&w| t.neighbors(w).iter().copied())
        .collect();
    n_set.sort_unstable();
    n_set.dedup();
    Ok((b, n_set))
}

/// All private k-neighbors of `u` with respect to `d`: vertices within
/// distance k of `u` but at distance >= k+1 from every other member of `d`.
pub fn private_k_neighbors(t: &Tree, d: &[usize], k: usize, u: usize) -> Result<Vec<usize>> {
    check_set(t, d, k)?;
    if !d.contains(&u) {
        return Err(Error::NotInSet(u));
    }
    let from_u = t.distances_from(u)?;
    let others: Vec<Vec<usize>> = d
        .iter()
        .filter(|&&x| x != u)
        .map(|&x| t.distances_from(x))
        .collect::<Result<_>>()?;
    Ok((0..t.vertex_count())
        .filter(|&v| from_u[v] <= k && others.iter().all(|dx| dx[v] >= k + 1))
        .collect())
}

//! Constructors for the named tree families, their closed-form index
//! values, and the corona decomposition test.

use num_bigint::BigUint;

use crate::canon::is_isomorphic;
use crate::error::{Error, Result};
use crate::indices::ExactNat;
use crate::tree::Tree;

/// Path on n vertices, 0-1-2-...-(n-1).
pub fn path(n: usize) -> Result<Tree> {
    if n < 1 {
        return Err(Error::FamilyParams("path needs n >= 1".into()));
    }
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    Tree::from_edge_list(n, &edges)
}

/// Star on n vertices with center 0.
pub fn star(n: usize) -> Result<Tree> {
    if n < 2 {
        return Err(Error::FamilyParams("star needs n >= 2".into()));
    }
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (0, i)).collect();
    Tree::from_edge_list(n, &edges)
}

/// Starlike tree with center degree n - ks: one pendant path of k
/// vertices, s - 1 pendant paths of k + 1 vertices, and n - (k+1)s
/// pendant edges at the center. Degenerates to the path when the center
/// degree would be below 3.
pub fn t_nks(n: usize, k: usize, s: usize) -> Result<Tree> {
    if k < 1 || s < 1 || n < (k + 1) * s {
        return Err(Error::FamilyParams(format!(
            "t_nks needs k >= 1, s >= 1 and n >= (k+1)s; got n={n}, k={k}, s={s}"
        )));
    }
    if n - k * s < 3 {
        return path(n);
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut next = 1;
    let mut add_branch = |len: usize, edges: &mut Vec<(usize, usize)>| {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    };
    add_branch(k, &mut edges);
    for _ in 1..s {
        add_branch(k + 1, &mut edges);
    }
    for _ in 0..n - (k + 1) * s {
        add_branch(1, &mut edges);
    }
    Tree::from_edge_list(n, &edges)
}

/// The path on 2k+2 vertices 0..2k+1 with n - 2(k+1) extra pendant
/// vertices joined to vertex `a`, where 1 <= a <= k.
pub fn t_a_nk2(n: usize, k: usize, a: usize) -> Result<Tree> {
    if k < 1 || n < 2 * (k + 1) || a < 1 || a > k {
        return Err(Error::FamilyParams(format!(
            "t_a_nk2 needs k >= 1, n >= 2k+2 and 1 <= a <= k; got n={n}, k={k}, a={a}"
        )));
    }
    let spine = 2 * k + 2;
    let mut edges: Vec<(usize, usize)> = (1..spine).map(|i| (i - 1, i)).collect();
    for v in spine..n {
        edges.push((a, v));
    }
    Tree::from_edge_list(n, &edges)
}

/// Attaches a pendant path of k vertices to every vertex of the base
/// tree; the result has (k+1)|V(base)| vertices.
pub fn corona(base: &Tree, k: usize) -> Result<Tree> {
    if k < 1 {
        return Err(Error::InvalidK);
    }
    let m = base.vertex_count();
    let mut edges = base.edges();
    let mut next = m;
    for v in 0..m {
        let mut prev = v;
        for _ in 0..k {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Tree::from_edge_list((k + 1) * m, &edges)
}

/// Inverse of [`corona`]: returns the base tree R with
/// `corona(R, k)` isomorphic to `t`, or `None` if no such R exists.
///
/// From every leaf, walk the unique degree-2 chain of exactly k vertices;
/// the stripped chains must be pairwise disjoint and hit every remaining
/// vertex exactly once as an attachment point. The candidate base is then
/// certified by reconstruction.
pub fn corona_decompose(t: &Tree, k: usize) -> Result<Option<Tree>> {
    if k < 1 {
        return Err(Error::InvalidK);
    }
    let n = t.vertex_count();
    if n % (k + 1) != 0 {
        return Ok(None);
    }
    let m = n / (k + 1);
    if m == 1 {
        return Ok(if is_isomorphic(t, &path(k + 1)?) {
            Some(Tree::from_edge_list(1, &[])?)
        } else {
            None
        });
    }
    let mut stripped = vec![false; n];
    let mut attach_count = vec![0usize; n];
    for leaf in t.pendant_vertices() {
        let mut chain = vec![leaf];
        let mut prev = usize::MAX;
        let mut cur = leaf;
        while chain.len() < k {
            if t.degree(cur) > 2 {
                return Ok(None); // pendant path shorter than k
            }
            let next = *t.neighbors(cur).iter().find(|&&w| w != prev).unwrap();
            prev = cur;
            cur = next;
            chain.push(cur);
        }
        let attach = *t.neighbors(cur).iter().find(|&&w| w != prev).unwrap();
        for &v in &chain {
            if stripped[v] {
                return Ok(None); // chains overlap
            }
            stripped[v] = true;
        }
        attach_count[attach] += 1;
    }
    let base_vertices: Vec<usize> = (0..n).filter(|&v| !stripped[v]).collect();
    if base_vertices.len() != m || base_vertices.iter().any(|&v| attach_count[v] != 1) {
        return Ok(None);
    }
    let index_of = |v: usize| base_vertices.binary_search(&v).unwrap();
    let edges: Vec<(usize, usize)> = t
        .edges()
        .into_iter()
        .filter(|&(a, b)| !stripped[a] && !stripped[b])
        .map(|(a, b)| (index_of(a), index_of(b)))
        .collect();
    if edges.len() != m - 1 {
        return Ok(None);
    }
    let base = Tree::from_edge_list(m, &edges)?;
    // self-certify
    if is_isomorphic(&corona(&base, k)?, t) {
        Ok(Some(base))
    } else {
        Ok(None)
    }
}

fn check_nks(n: usize, k: usize, s: usize) -> Result<()> {
    if k < 1 || s < 1 || n < (k + 1) * s {
        return Err(Error::FamilyParams(format!(
            "closed form needs k >= 1, s >= 1 and n >= (k+1)s; got n={n}, k={k}, s={s}"
        )));
    }
    Ok(())
}

/// 4^(ks-1) (n-ks)^2.
pub fn closed_form_pi1(n: usize, k: usize, s: usize) -> Result<ExactNat> {
    check_nks(n, k, s)?;
    let center = (n - k * s) as u64;
    Ok(BigUint::from(4u32).pow((k * s - 1) as u32) * BigUint::from(center * center))
}

/// 4^(ks-1) (n-ks)^(n-ks).
pub fn closed_form_pi2(n: usize, k: usize, s: usize) -> Result<ExactNat> {
    check_nks(n, k, s)?;
    let center = (n - k * s) as u64;
    Ok(BigUint::from(4u32).pow((k * s - 1) as u32) * BigUint::from(center).pow(center as u32))
}

/// Parameterized description of a named family member.
#[derive(Clone, Debug)]
pub enum FamilySpec {
    Star { n: usize },
    Path { n: usize },
    Tnks { n: usize, k: usize, s: usize },
    TaNk2 { n: usize, k: usize, a: usize },
    Corona { base: Tree, k: usize },
}

impl FamilySpec {
    pub fn build(&self) -> Result<Tree> {
        match self {
            FamilySpec::Star { n } => star(*n),
            FamilySpec::Path { n } => path(*n),
            FamilySpec::Tnks { n, k, s } => t_nks(*n, *k, *s),
            FamilySpec::TaNk2 { n, k, a } => t_a_nk2(*n, *k, *a),
            FamilySpec::Corona { base, k } => corona(base, *k),
        }
    }
}

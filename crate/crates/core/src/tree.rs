//! Immutable tree representation with the metric computations everything
//! else is built on: BFS distances, eccentricity, diameter, diametral path,
//! pendant detection.
//!
//! Vertices are dense ids `0..n`. A [`Tree`] is validated on construction
//! and never mutated afterwards; all operations return fresh values.

use std::collections::HashSet;

use crate::error::{Error, Result};

const NO_PARENT: usize = usize::MAX;

/// A tree on `n` vertices, stored as a sorted adjacency list per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tree {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl Tree {
    /// Builds a tree from an explicit edge list, rejecting anything that is
    /// not a tree: wrong edge count, out-of-range endpoints, self-loops,
    /// duplicate edges, and edge sets that leave vertices unreachable
    /// (which, at n-1 edges, implies a cycle elsewhere).
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Tree> {
        if n == 0 {
            return Err(Error::FamilyParams("a tree has at least one vertex".into()));
        }
        let expected = n - 1;
        if edges.len() != expected {
            return Err(Error::EdgeCount {
                n,
                expected,
                got: edges.len(),
            });
        }
        let mut adj = vec![Vec::new(); n];
        let mut seen = HashSet::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Error::DuplicateEdge(key.0, key.1));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let tree = Tree { n, adj };
        let dist = tree.bfs_distances(0);
        let unreached = dist.iter().filter(|&&d| d == usize::MAX).count();
        if unreached > 0 {
            return Err(Error::NotConnected { unreached });
        }
        Ok(tree)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Edges as (u, v) pairs with u < v, in sorted order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.n.saturating_sub(1));
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        Ok(())
    }

    fn bfs_distances(&self, start: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        dist[start] = 0;
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// BFS distances from `v`; `distances_from(v)[v] == 0`.
    pub fn distances_from(&self, v: usize) -> Result<Vec<usize>> {
        self.check_vertex(v)?;
        Ok(self.bfs_distances(v))
    }

    /// Full distance matrix, one BFS per vertex.
    pub fn distance_matrix(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|v| self.bfs_distances(v)).collect()
    }

    /// BFS visit order and parent array rooted at `start`. The root's
    /// parent slot is `usize::MAX`. Children are visited in id order.
    pub(crate) fn bfs_order(&self, start: usize) -> (Vec<usize>, Vec<usize>) {
        let mut parent = vec![NO_PARENT; self.n];
        let mut order = Vec::with_capacity(self.n);
        let mut visited = vec![false; self.n];
        let mut queue = std::collections::VecDeque::new();
        visited[start] = true;
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in &self.adj[u] {
                if !visited[w] {
                    visited[w] = true;
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        (order, parent)
    }

    pub fn eccentricity(&self, v: usize) -> Result<usize> {
        Ok(*self.distances_from(v)?.iter().max().unwrap())
    }

    /// Maximum eccentricity over all vertices.
    pub fn diameter(&self) -> usize {
        (0..self.n)
            .map(|v| *self.bfs_distances(v).iter().max().unwrap())
            .max()
            .unwrap()
    }

    /// A vertex sequence realizing the diameter; among all diametral paths
    /// the lexicographically smallest sequence is returned.
    pub fn diametral_path(&self) -> Vec<usize> {
        if self.n == 1 {
            return vec![0];
        }
        let d = self.diameter();
        let mut best: Option<Vec<usize>> = None;
        for u in 0..self.n {
            let dist = self.bfs_distances(u);
            let (_, parent) = self.bfs_order(u);
            for v in 0..self.n {
                if dist[v] != d {
                    continue;
                }
                let mut path = Vec::with_capacity(d + 1);
                let mut cur = v;
                while cur != NO_PARENT {
                    path.push(cur);
                    if cur == u {
                        break;
                    }
                    cur = parent[cur];
                }
                path.reverse();
                if best.as_ref().map_or(true, |b| path < *b) {
                    best = Some(path);
                }
            }
        }
        best.unwrap()
    }

    /// Degree-1 vertices, in increasing id order.
    pub fn pendant_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    /// The tree with vertex `v` deleted and the remaining ids compacted
    /// (ids above `v` shift down by one). Only valid when `v` is a pendant
    /// vertex, otherwise the result would be disconnected.
    pub fn remove_pendant(&self, v: usize) -> Result<Tree> {
        self.check_vertex(v)?;
        if self.degree(v) != 1 {
            return Err(Error::FamilyParams(format!(
                "vertex {v} has degree {}, not a pendant vertex",
                self.degree(v)
            )));
        }
        let remap = |x: usize| if x > v { x - 1 } else { x };
        let edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .filter(|&(a, b)| a != v && b != v)
            .map(|(a, b)| (remap(a), remap(b)))
            .collect();
        Tree::from_edge_list(self.n - 1, &edges)
    }

    /// The same tree with vertex `v` renamed to `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Tree> {
        if perm.len() != self.n {
            return Err(Error::FamilyParams(format!(
                "permutation length {} does not match n = {}",
                perm.len(),
                self.n
            )));
        }
        let edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .map(|(a, b)| (perm[a], perm[b]))
            .collect();
        Tree::from_edge_list(self.n, &edges)
    }
}

/// Line-oriented tree text format: first token is `n`, followed by
/// `2(n-1)` integers read as edge endpoint pairs, 0-indexed. Blank lines
/// and lines starting with `#` are ignored.
pub mod text {
    use super::Tree;
    use crate::error::{Error, Result};

    /// Parses a single line of the tree text format.
    pub fn parse_line(line: &str, lineno: usize) -> Result<Tree> {
        let err = |msg: String| Error::Parse { line: lineno, msg };
        let mut tokens = line.split_whitespace();
        let n: usize = tokens
            .next()
            .ok_or_else(|| err("empty tree line".into()))?
            .parse()
            .map_err(|e| err(format!("bad vertex count: {e}")))?;
        let rest: Vec<usize> = tokens
            .map(|t| t.parse().map_err(|e| err(format!("bad token {t:?}: {e}"))))
            .collect::<Result<_>>()?;
        if n == 0 {
            return Err(err("vertex count must be positive".into()));
        }
        if rest.len() != 2 * (n - 1) {
            return Err(err(format!(
                "expected {} edge endpoints for n = {n}, got {}",
                2 * (n - 1),
                rest.len()
            )));
        }
        let edges: Vec<(usize, usize)> = rest.chunks(2).map(|c| (c[0], c[1])).collect();
        Tree::from_edge_list(n, &edges).map_err(|e| err(e.to_string()))
    }

    /// Parses a whole document; errors carry 1-based line numbers.
    pub fn parse_document(text: &str) -> Result<Vec<Tree>> {
        let mut trees = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            trees.push(parse_line(trimmed, i + 1)?);
        }
        Ok(trees)
    }

    pub fn format_line(t: &Tree) -> String {
        let mut s = t.vertex_count().to_string();
        for (u, v) in t.edges() {
            s.push(' ');
            s.push_str(&u.to_string());
            s.push(' ');
            s.push_str(&v.to_string());
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{path, star};

    #[test]
    fn smallest_tree() {
        let t = Tree::from_edge_list(2, &[(0, 1)]).unwrap();
        assert_eq!(t.vertex_count(), 2);
        assert_eq!(t.degree(0), 1);
    }

    #[test]
    fn p4_from_edges() {
        let t = Tree::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(t.diameter(), 3);
        assert_eq!(t.pendant_vertices(), vec![0, 3]);
    }

    #[test]
    fn cycle_rejected() {
        let e = Tree::from_edge_list(4, &[(0, 1), (1, 2), (2, 0)]).unwrap_err();
        assert!(e.to_string().contains("cycle"), "{e}");
    }

    #[test]
    fn duplicate_and_range_rejected() {
        assert!(matches!(
            Tree::from_edge_list(3, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        ));
        assert!(matches!(
            Tree::from_edge_list(3, &[(0, 1), (1, 5)]),
            Err(Error::VertexOutOfRange { v: 5, n: 3 })
        ));
        assert!(matches!(
            Tree::from_edge_list(3, &[(0, 1), (2, 2)]),
            Err(Error::SelfLoop(2))
        ));
        assert!(matches!(
            Tree::from_edge_list(4, &[(0, 1)]),
            Err(Error::EdgeCount { .. })
        ));
    }

    #[test]
    fn distances() {
        let p5 = path(5).unwrap();
        assert_eq!(p5.distances_from(0).unwrap(), vec![0, 1, 2, 3, 4]);
        let s5 = star(5).unwrap();
        assert_eq!(s5.distances_from(0).unwrap(), vec![0, 1, 1, 1, 1]);
    }

    #[test]
    fn diameters() {
        assert_eq!(path(5).unwrap().diameter(), 4);
        assert_eq!(star(5).unwrap().diameter(), 2);
    }

    #[test]
    fn diametral_path_is_lex_smallest() {
        let p5 = path(5).unwrap();
        assert_eq!(p5.diametral_path(), vec![0, 1, 2, 3, 4]);
        let s5 = star(5).unwrap();
        // all diametral paths go leaf-center-leaf; smallest is 1,0,2
        assert_eq!(s5.diametral_path(), vec![1, 0, 2]);
    }

    #[test]
    fn diametral_endpoints_are_pendant() {
        for t in [path(7).unwrap(), star(6).unwrap()] {
            let p = t.diametral_path();
            assert_eq!(t.degree(*p.first().unwrap()), 1);
            assert_eq!(t.degree(*p.last().unwrap()), 1);
        }
    }

    #[test]
    fn single_vertex() {
        let t = Tree::from_edge_list(1, &[]).unwrap();
        assert_eq!(t.diameter(), 0);
        assert_eq!(t.diametral_path(), vec![0]);
        assert_eq!(t.pendant_vertices(), Vec::<usize>::new());
    }

    #[test]
    fn degree_sum_is_twice_edges() {
        for t in [path(9).unwrap(), star(9).unwrap()] {
            let sum: usize = (0..t.vertex_count()).map(|v| t.degree(v)).sum();
            assert_eq!(sum, 2 * (t.vertex_count() - 1));
        }
    }

    #[test]
    fn text_round_trip() {
        let t = Tree::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let line = text::format_line(&t);
        assert_eq!(line, "4 0 1 1 2 2 3");
        let back = text::parse_line(&line, 1).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn text_comments_and_blanks() {
        let doc = "# header\n\n2 0 1\n  \n3 0 1 1 2\n";
        let trees = text::parse_document(doc).unwrap();
        assert_eq!(trees.len(), 2);
    }

    #[test]
    fn text_errors_carry_line_numbers() {
        let doc = "2 0 1\n4 0 1 1 2 2 0\n";
        let e = text::parse_document(doc).unwrap_err();
        assert!(e.to_string().starts_with("line 2:"), "{e}");
    }
}

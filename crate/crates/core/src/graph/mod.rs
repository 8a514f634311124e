//! Undirected simple graphs on dense vertex indices `0..n`.
//!
//! A [`Graph`] is immutable once built; the editing helpers return new graphs.

mod canon;
mod distance;
mod matching;

pub use canon::{canonical_form, centers, rooted_code, CanonicalForm};
pub use distance::{bfs_distances, edge_distance, edge_set_distance, Edge};
pub use matching::{matching_number, maximum_matching, Matching};

pub(crate) use canon::{rooted_order, subtree_codes};

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.n(),
            self.edges().collect::<Vec<_>>()
        )
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, nbrs) in adj.iter_mut().enumerate() {
            nbrs.sort_unstable();
            if let Some(w) = nbrs.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::ParallelEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Graph { adj })
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
    }

    /// `K_{1,leaves}` with the center at vertex 0.
    pub fn star(leaves: usize) -> Self {
        Self::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("star is simple")
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::from_edges(n, edges).expect("complete graph is simple")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.degree(v) == 1
    }

    /// Leaves of the graph, ascending.
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.is_leaf(v)).collect()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    /// Component label per vertex, components numbered in order of their smallest vertex.
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.n()];
        let mut next = 0;
        let mut queue = VecDeque::new();
        for s in 0..self.n() {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if comp[v] == usize::MAX {
                        comp[v] = next;
                        queue.push_back(v);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn component_count(&self) -> usize {
        self.components().iter().copied().max().map_or(0, |c| c + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.component_count() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.m() + 1 == self.n() && self.is_connected()
    }

    pub fn is_forest(&self) -> bool {
        self.m() + self.component_count() == self.n()
    }

    pub fn require_tree(&self) -> Result<()> {
        if self.is_tree() {
            Ok(())
        } else {
            Err(Error::NotATree)
        }
    }

    /// Subgraph induced on `keep`, relabeled in the order given. Returns the graph
    /// and the map from new to old indices.
    pub fn induced(&self, keep: &[usize]) -> (Graph, Vec<usize>) {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut adj = vec![Vec::new(); keep.len()];
        for (i, &v) in keep.iter().enumerate() {
            adj[i] = self.adj[v]
                .iter()
                .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                .collect();
            adj[i].sort_unstable();
        }
        (Graph { adj }, keep.to_vec())
    }

    /// Connected components as induced subgraphs, with index maps back to `self`.
    pub fn component_subgraphs(&self) -> Vec<(Graph, Vec<usize>)> {
        let comp = self.components();
        let count = comp.iter().copied().max().map_or(0, |c| c + 1);
        let mut members = vec![Vec::new(); count];
        for (v, &c) in comp.iter().enumerate() {
            members[c].push(v);
        }
        members.iter().map(|keep| self.induced(keep)).collect()
    }

    pub fn without_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n()).filter(|&w| w != v).collect();
        self.induced(&keep).0
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut edges: Vec<_> = self.edges().collect();
        edges.push((u, v));
        Graph::from_edges(self.n(), edges)
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge(u, v));
        }
        let (a, b) = (u.min(v), u.max(v));
        Graph::from_edges(self.n(), self.edges().filter(|&e| e != (a, b)))
    }

    /// Adds `count` new pendant vertices at `v`; new vertices take the next indices.
    pub fn with_pendants(&self, v: usize, count: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let n = self.n();
        let edges = self.edges().chain((0..count).map(|i| (v, n + i)));
        Graph::from_edges(n + count, edges)
    }

    /// Attaches a new path of `len` vertices at `v`; returns the graph and the new
    /// path's vertices ordered away from `v`.
    pub fn with_pendant_path(&self, v: usize, len: usize) -> Result<(Graph, Vec<usize>)> {
        self.check_vertex(v)?;
        let n = self.n();
        let path: Vec<usize> = (n..n + len).collect();
        let mut edges: Vec<_> = self.edges().collect();
        let mut prev = v;
        for &p in &path {
            edges.push((prev, p));
            prev = p;
        }
        Ok((Graph::from_edges(n + len, edges)?, path))
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n();
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + n, v + n)));
        Graph::from_edges(n + other.n(), edges).expect("union of simple graphs is simple")
    }

    /// Renumbers vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n() {
            return Err(Error::Precondition(
                "permutation length must equal n".into(),
            ));
        }
        Graph::from_edges(self.n(), self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    /// Serializes to the edge-list text format: a header `n m`, then one `u v` per line.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n(), self.m());
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("missing `n m` header".into()))?;
        let (n, m) = parse_pair(header)?;
        let mut edges = Vec::with_capacity(m);
        for line in lines {
            edges.push(parse_pair(line)?);
        }
        if edges.len() != m {
            return Err(Error::Parse(format!(
                "header declares {m} edges, found {}",
                edges.len()
            )));
        }
        Graph::from_edges(n, edges)
    }
}

fn parse_pair(line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it
            .next()
            .ok_or_else(|| Error::Parse(format!("expected two integers in `{line}`")))?;
        tok.parse()
            .map_err(|_| Error::Parse(format!("bad integer `{tok}`")))
    };
    let pair = (next()?, next()?);
    if it.next().is_some() {
        return Err(Error::Parse(format!("trailing tokens in `{line}`")));
    }
    Ok(pair)
}

/// Vertices adjacent to at least one leaf, ascending.
pub fn quasi_pendant_vertices(t: &Graph) -> Vec<usize> {
    (0..t.n())
        .filter(|&v| t.neighbors(v).iter().any(|&u| t.is_leaf(u)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quasi_pendant_examples() {
        assert_eq!(quasi_pendant_vertices(&Graph::star(4)), vec![0]);
        assert_eq!(quasi_pendant_vertices(&Graph::path(2)), vec![0, 1]);
        assert_eq!(quasi_pendant_vertices(&Graph::path(5)), vec![1, 3]);
    }

    #[test]
    fn rejects_loops_and_parallel_edges() {
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(Error::ParallelEdge(0, 1))
        );
        assert!(matches!(
            Graph::from_edges(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn text_format_round_trip() {
        let g = Graph::star(5);
        let text = g.to_text();
        assert!(text.starts_with("6 5\n"));
        assert_eq!(text.parse::<Graph>().unwrap(), g);
    }

    #[test]
    fn text_format_errors() {
        assert!(matches!("".parse::<Graph>(), Err(Error::Parse(_))));
        assert!(matches!(
            "3 2\n0 1\n".parse::<Graph>(),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            "3 1\n0 x\n".parse::<Graph>(),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn tree_and_connectivity() {
        assert!(Graph::path(1).is_tree());
        assert!(Graph::path(6).is_tree());
        assert!(!Graph::cycle(4).is_tree());
        assert!(!Graph::empty(2).is_connected());
        assert!(Graph::empty(2).is_forest());
        let two = Graph::path(3).disjoint_union(&Graph::path(2));
        assert_eq!(two.component_count(), 2);
        assert_eq!(two.component_subgraphs().len(), 2);
    }

    #[test]
    fn editing_helpers() {
        let p = Graph::path(3);
        let (q, path) = p.with_pendant_path(2, 2).unwrap();
        assert_eq!(q, Graph::path(5));
        assert_eq!(path, vec![3, 4]);
        let s = Graph::empty(1).with_pendants(0, 4).unwrap();
        assert_eq!(s, Graph::star(4));
        assert_eq!(Graph::path(4).without_vertex(0), Graph::path(3));
        assert!(Graph::path(3).without_edge(0, 2).is_err());
    }
}

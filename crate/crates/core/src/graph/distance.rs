use std::collections::VecDeque;

use super::Graph;
use crate::error::{Error, Result};

/// An undirected edge stored with its smaller endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub struct Edge(pub usize, pub usize);

impl Edge {
    pub fn new(u: usize, v: usize) -> Self {
        Edge(u.min(v), u.max(v))
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0 == v || self.1 == v
    }

    /// The endpoint other than `v`.
    pub fn other(&self, v: usize) -> usize {
        if self.0 == v {
            self.1
        } else {
            self.0
        }
    }
}

impl From<(usize, usize)> for Edge {
    fn from((u, v): (usize, usize)) -> Self {
        Edge::new(u, v)
    }
}

/// Multi-source BFS; unreachable vertices get `usize::MAX`.
pub fn bfs_distances(g: &Graph, sources: &[usize]) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    let mut queue = VecDeque::new();
    for &s in sources {
        if dist[s] != 0 {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    dist
}

fn require_edge(t: &Graph, e: Edge) -> Result<()> {
    if t.has_edge(e.0, e.1) {
        Ok(())
    } else {
        Err(Error::MissingEdge(e.0, e.1))
    }
}

/// Minimum tree distance between an endpoint of `e1` and an endpoint of `e2`.
pub fn edge_distance(t: &Graph, e1: Edge, e2: Edge) -> Result<usize> {
    t.require_tree()?;
    require_edge(t, e1)?;
    require_edge(t, e2)?;
    let dist = bfs_distances(t, &[e1.0, e1.1]);
    Ok(dist[e2.0].min(dist[e2.1]))
}

/// Minimum [`edge_distance`] over all pairs drawn from the two edge sets.
pub fn edge_set_distance(t: &Graph, set1: &[Edge], set2: &[Edge]) -> Result<usize> {
    if set1.is_empty() || set2.is_empty() {
        return Err(Error::EmptyEdgeSet);
    }
    t.require_tree()?;
    for &e in set1.iter().chain(set2) {
        require_edge(t, e)?;
    }
    let sources: Vec<usize> = set1.iter().flat_map(|e| [e.0, e.1]).collect();
    let dist = bfs_distances(t, &sources);
    Ok(set2
        .iter()
        .map(|e| dist[e.0].min(dist[e.1]))
        .min()
        .expect("nonempty"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p6() -> Graph {
        Graph::path(6)
    }

    #[test]
    fn edge_distance_examples() {
        let t = p6();
        assert_eq!(edge_distance(&t, Edge(0, 1), Edge(0, 1)), Ok(0));
        assert_eq!(edge_distance(&t, Edge(0, 1), Edge(1, 2)), Ok(0));
        // endpoint distances 3, 4, 4, 5
        assert_eq!(edge_distance(&t, Edge(0, 1), Edge(4, 5)), Ok(3));
        assert_eq!(
            edge_distance(&t, Edge(0, 2), Edge(4, 5)),
            Err(Error::MissingEdge(0, 2))
        );
    }

    #[test]
    fn edge_set_distance_examples() {
        let t = p6();
        let e = [Edge(0, 1)];
        assert_eq!(edge_set_distance(&t, &e, &[Edge(3, 4), Edge(4, 5)]), Ok(2));
        assert_eq!(
            edge_set_distance(&t, &[Edge(2, 3), Edge(0, 1)], &[Edge(0, 1)]),
            Ok(0)
        );
        assert_eq!(
            edge_set_distance(&t, &e, &[Edge(4, 5)]),
            edge_distance(&t, Edge(0, 1), Edge(4, 5))
        );
        assert_eq!(edge_set_distance(&t, &[], &e), Err(Error::EmptyEdgeSet));
    }

    #[test]
    fn distances_require_a_tree() {
        let c = Graph::cycle(4);
        assert_eq!(
            edge_distance(&c, Edge(0, 1), Edge(2, 3)),
            Err(Error::NotATree)
        );
    }
}

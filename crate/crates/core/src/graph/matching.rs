use std::collections::VecDeque;

use super::{Edge, Graph};
use crate::error::{Error, Result};

/// A set of pairwise disjoint edges together with the vertices they cover.
#[derive(Debug, Clone, PartialEq, Eq, Hash, serde::Serialize)]
pub struct Matching {
    edges: Vec<Edge>,
    covered: Vec<usize>,
}

impl Matching {
    /// Validates that every edge is in `g` and no two edges share a vertex.
    pub fn new<I, E>(g: &Graph, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        let mut edges: Vec<Edge> = edges.into_iter().map(Into::into).collect();
        edges.sort_unstable();
        let mut seen = vec![false; g.n()];
        for e in &edges {
            if !g.has_edge(e.0, e.1) {
                return Err(Error::MissingEdge(e.0, e.1));
            }
            for v in [e.0, e.1] {
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidMatching(format!("vertex {v} covered twice")));
                }
            }
        }
        let covered = (0..g.n()).filter(|&v| seen[v]).collect();
        Ok(Matching { edges, covered })
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// The covered vertex set `V(M)`, sorted.
    pub fn covered(&self) -> &[usize] {
        &self.covered
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_covered(&self, v: usize) -> bool {
        self.covered.binary_search(&v).is_ok()
    }

    /// Partner of `v`, if covered.
    pub fn mate(&self, v: usize) -> Option<usize> {
        self.edges
            .iter()
            .find(|e| e.contains(v))
            .map(|e| e.other(v))
    }

    /// Per-vertex partner table (`usize::MAX` for uncovered vertices).
    pub fn mate_table(&self, n: usize) -> Vec<usize> {
        let mut mate = vec![usize::MAX; n];
        for e in &self.edges {
            mate[e.0] = e.1;
            mate[e.1] = e.0;
        }
        mate
    }
}

pub fn matching_number(g: &Graph) -> usize {
    if g.is_forest() {
        forest_mates(g).iter().filter(|&&m| m != usize::MAX).count() / 2
    } else {
        blossom_mates(g)
            .iter()
            .filter(|&&m| m != usize::MAX)
            .count()
            / 2
    }
}

/// A maximum matching. Forests use leaf-first greedy matching; other graphs use
/// Edmonds' augmenting-path search with blossom shrinking.
pub fn maximum_matching(g: &Graph) -> Matching {
    let mates = if g.is_forest() {
        forest_mates(g)
    } else {
        blossom_mates(g)
    };
    let edges = (0..g.n())
        .filter(|&v| mates[v] != usize::MAX && v < mates[v])
        .map(|v| (v, mates[v]));
    Matching::new(g, edges).expect("matching routines produce valid matchings")
}

/// Leaves-up greedy: matching each unmatched vertex to its unmatched parent is optimal
/// on forests.
fn forest_mates(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
    }
    let mut mate = vec![usize::MAX; n];
    for &v in order.iter().rev() {
        let p = parent[v];
        if p != usize::MAX && mate[v] == usize::MAX && mate[p] == usize::MAX {
            mate[v] = p;
            mate[p] = v;
        }
    }
    mate
}

const NONE: usize = usize::MAX;

fn blossom_mates(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut mate = vec![NONE; n];
    for u in 0..n {
        if mate[u] == NONE {
            if let Some(&v) = g.neighbors(u).iter().find(|&&v| mate[v] == NONE) {
                mate[u] = v;
                mate[v] = u;
            }
        }
    }
    let mut search = BlossomSearch::new(n);
    for root in 0..n {
        if mate[root] != NONE {
            continue;
        }
        if let Some(mut v) = search.find_augmenting_path(g, &mate, root) {
            while v != NONE {
                let pv = search.parent[v];
                let next = mate[pv];
                mate[v] = pv;
                mate[pv] = v;
                v = next;
            }
        }
    }
    mate
}

struct BlossomSearch {
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl BlossomSearch {
    fn new(n: usize) -> Self {
        BlossomSearch {
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mate: &[usize], mut a: usize, mut b: usize) -> usize {
        let mut on_path = vec![false; mate.len()];
        loop {
            a = self.base[a];
            on_path[a] = true;
            if mate[a] == NONE {
                break;
            }
            a = self.parent[mate[a]];
        }
        loop {
            b = self.base[b];
            if on_path[b] {
                return b;
            }
            b = self.parent[mate[b]];
        }
    }

    fn mark_path(&mut self, mate: &[usize], mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[mate[v]]] = true;
            self.parent[v] = child;
            child = mate[v];
            v = self.parent[mate[v]];
        }
    }

    /// BFS over alternating trees from `root`; returns the free endpoint of an
    /// augmenting path, with `parent` links describing it.
    fn find_augmenting_path(&mut self, g: &Graph, mate: &[usize], root: usize) -> Option<usize> {
        let n = g.n();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &to in g.neighbors(v) {
                if self.base[v] == self.base[to] || mate[v] == to {
                    continue;
                }
                if to == root || (mate[to] != NONE && self.parent[mate[to]] != NONE) {
                    let cur = self.lca(mate, v, to);
                    self.in_blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(mate, v, cur, to);
                    self.mark_path(mate, to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if mate[to] == NONE {
                        return Some(to);
                    }
                    let next = mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }
}

//! Constructive tree structure: matching-preserving spanning trees, connected
//! maximum matchings, dominating control sets and their quasi-adjacency graphs.

mod blocks;
mod cmm;
mod dominating;

use std::collections::VecDeque;

use serde::Serialize;

pub use blocks::{cycle_clique_check, every_cycle_is_clique, is_clique_block_graph};
pub use cmm::{
    connected_maximal_matching, connected_maximal_matching_from, connected_maximal_matching_traced,
    ConnectedMatching,
};
pub use dominating::{
    dominating_control_set, dominating_control_set_literal, dominating_violations,
    DominatingControlSet,
};

use crate::error::{Error, Result};
use crate::graph::{maximum_matching, Edge, Graph};

/// A nonempty vertex subset `X` of a tree, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ControlSet {
    tree: Graph,
    vertices: Vec<usize>,
}

impl ControlSet {
    pub fn new(tree: &Graph, mut vertices: Vec<usize>) -> Result<Self> {
        tree.require_tree()?;
        if vertices.is_empty() {
            return Err(Error::Precondition("control set must be nonempty".into()));
        }
        for &v in &vertices {
            tree.check_vertex(v)?;
        }
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Precondition(
                "control set has a repeated vertex".into(),
            ));
        }
        Ok(ControlSet {
            tree: tree.clone(),
            vertices,
        })
    }

    pub fn tree(&self) -> &Graph {
        &self.tree
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }
}

/// `T_X`: vertex `i` stands for `index[i]`; `u ~ v` when no other member of `X`
/// lies on the tree path between them.
#[derive(Debug, Clone)]
pub struct QuasiAdjacencyGraph {
    pub base: ControlSet,
    pub graph: Graph,
    pub index: Vec<usize>,
}

impl QuasiAdjacencyGraph {
    /// Position of tree vertex `v` in `graph`, if `v ∈ X`.
    pub fn position(&self, v: usize) -> Option<usize> {
        self.index.binary_search(&v).ok()
    }

    /// Quasi-adjacent pairs as tree vertices.
    pub fn tree_edges(&self) -> Vec<Edge> {
        self.graph
            .edges()
            .map(|(i, j)| Edge::new(self.index[i], self.index[j]))
            .collect()
    }
}

pub fn quasi_adjacency_graph(cs: &ControlSet) -> QuasiAdjacencyGraph {
    let t = &cs.tree;
    let n = t.n();
    let x = &cs.vertices;
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in x.iter().enumerate() {
        pos[v] = i;
    }
    let mut edges = Vec::new();
    let mut seen = vec![usize::MAX; n];
    for (i, &s) in x.iter().enumerate() {
        seen[s] = i;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &v in t.neighbors(u) {
                if seen[v] == i {
                    continue;
                }
                seen[v] = i;
                if pos[v] == usize::MAX {
                    queue.push_back(v);
                } else if pos[v] > i {
                    edges.push((i, pos[v]));
                }
            }
        }
    }
    let graph = Graph::from_edges(x.len(), edges).expect("each pair found once");
    QuasiAdjacencyGraph {
        base: cs.clone(),
        graph,
        index: x.clone(),
    }
}

/// Spanning tree of a connected graph with the same matching number: a maximum
/// matching is kept and cycle edges outside it are dropped.
pub fn spanning_tree_preserving_matching(g: &Graph) -> Result<Graph> {
    if g.n() == 0 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.is_tree() {
        return Ok(g.clone());
    }
    let m = maximum_matching(g);
    let mut root: Vec<usize> = (0..g.n()).collect();
    fn find(root: &mut [usize], mut v: usize) -> usize {
        while root[v] != v {
            root[v] = root[root[v]];
            v = root[v];
        }
        v
    }
    let mut kept = Vec::with_capacity(g.n() - 1);
    let matched = m.edges().iter().map(|e| (e.0, e.1));
    for (u, v) in matched.chain(g.edges()) {
        let (a, b) = (find(&mut root, u), find(&mut root, v));
        if a != b {
            root[a] = b;
            kept.push((u, v));
        }
    }
    Graph::from_edges(g.n(), kept)
}

/// Per-tree summary of the dominating set construction.
#[derive(Debug, Clone, Serialize)]
pub struct StructureReport {
    #[serde(rename = "X")]
    pub x: Vec<usize>,
    pub quasi_adjacency_edges: Vec<(usize, usize)>,
    pub is_block_graph: bool,
    pub matching: Vec<(usize, usize)>,
    pub checks_passed: bool,
    pub deviations: Vec<String>,
}

pub fn structure_report(t: &Graph) -> Result<StructureReport> {
    let d = dominating_control_set(t)?;
    let qg = quasi_adjacency_graph(&d.control);
    let violations = dominating_violations(t, d.control.vertices());
    let is_block_graph = is_clique_block_graph(&qg.graph);
    let checks_passed = violations.is_empty()
        && is_block_graph
        && qg.graph.is_connected()
        && qg.graph.n() == d.witness_matching.len();
    Ok(StructureReport {
        x: d.control.vertices().to_vec(),
        quasi_adjacency_edges: qg.tree_edges().iter().map(|e| (e.0, e.1)).collect(),
        is_block_graph,
        matching: d
            .witness_matching
            .edges()
            .iter()
            .map(|e| (e.0, e.1))
            .collect(),
        checks_passed,
        deviations: d.deviations.into_iter().chain(violations).collect(),
    })
}

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{canonical_form, CanonicalForm, Graph};

/// Graph operations whose effect on the spectral radius is known.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Transform {
    /// Replace edge `uv` by a path `u - new - v`; the new vertex gets index `n`.
    Subdivision { u: usize, v: usize },
    /// Two pendant paths hang at `v`, starting at `long` and `short`; the far end of
    /// the short one moves to the far end of the long one.
    PendantShift { v: usize, long: usize, short: usize },
    /// One pendant leaf of `from` moves to `to`. Valid when, after stripping `k`
    /// leaves from `to` and `l` from `from` (`k ≥ l ≥ 1`), the remaining tree `G`
    /// is connected and `G - to ≅ G - from`.
    PendantBalance {
        to: usize,
        from: usize,
        k: usize,
        l: usize,
    },
    /// Each `w` in `ws` is detached from `v` and joined to `u`.
    PerronRewire { u: usize, v: usize, ws: Vec<usize> },
}

impl Transform {
    pub fn kind(&self) -> &'static str {
        match self {
            Transform::Subdivision { .. } => "subdivision",
            Transform::PendantShift { .. } => "pendant_shift",
            Transform::PendantBalance { .. } => "pendant_balance",
            Transform::PerronRewire { .. } => "perron_rewire",
        }
    }
}

pub fn transform(g: &Graph, op: &Transform) -> Result<Graph> {
    let bad = |msg: String| Error::InvalidSite(format!("{}: {msg}", op.kind()));
    match *op {
        Transform::Subdivision { u, v } => {
            if !g.has_edge(u, v) {
                return Err(bad(format!("{u}-{v} is not an edge")));
            }
            let n = g.n();
            let edges = g
                .edges()
                .filter(|&e| e != (u.min(v), u.max(v)))
                .chain([(u, n), (n, v)]);
            Graph::from_edges(n + 1, edges)
        }
        Transform::PendantShift { v, long, short } => {
            let long_path = pendant_path(g, v, long)
                .ok_or_else(|| bad(format!("no pendant path at {v} through {long}")))?;
            let short_path = pendant_path(g, v, short)
                .ok_or_else(|| bad(format!("no pendant path at {v} through {short}")))?;
            if long == short || long_path.len() < short_path.len() {
                return Err(bad(format!(
                    "need distinct paths with k >= l, got {} and {}",
                    long_path.len(),
                    short_path.len()
                )));
            }
            let z = *short_path.last().unwrap();
            let z_parent = if short_path.len() == 1 {
                v
            } else {
                short_path[short_path.len() - 2]
            };
            let y = *long_path.last().unwrap();
            g.without_edge(z, z_parent)?.with_edge(z, y)
        }
        Transform::PendantBalance { to, from, k, l } => {
            g.require_tree()
                .map_err(|_| bad("defined here for trees".into()))?;
            if to == from || k < l || l == 0 {
                return Err(bad(format!(
                    "need distinct vertices and k >= l >= 1, got k = {k}, l = {l}"
                )));
            }
            g.check_vertex(to)?;
            g.check_vertex(from)?;
            let leaves_of = |x: usize| -> Vec<usize> {
                g.neighbors(x)
                    .iter()
                    .copied()
                    .filter(|&w| g.is_leaf(w))
                    .collect()
            };
            let (lt, lf) = (leaves_of(to), leaves_of(from));
            if lt.len() < k || lf.len() < l {
                return Err(bad(format!(
                    "{to} has {} leaves, {from} has {}",
                    lt.len(),
                    lf.len()
                )));
            }
            let stripped: Vec<usize> = lt[lt.len() - k..]
                .iter()
                .chain(&lf[lf.len() - l..])
                .copied()
                .collect();
            let keep: Vec<usize> = (0..g.n()).filter(|x| !stripped.contains(x)).collect();
            let (base, index) = g.induced(&keep);
            let pos = |x: usize| index.iter().position(|&y| y == x).unwrap();
            if !base.is_connected()
                || forest_signature(&base.without_vertex(pos(to)))
                    != forest_signature(&base.without_vertex(pos(from)))
            {
                return Err(bad(format!("G - {to} and G - {from} are not isomorphic")));
            }
            let leaf = *lf.last().unwrap();
            g.without_edge(from, leaf)?.with_edge(to, leaf)
        }
        Transform::PerronRewire { u, v, ref ws } => {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v || ws.is_empty() {
                return Err(bad("need distinct u, v and at least one w".into()));
            }
            let mut seen = ws.clone();
            seen.sort_unstable();
            seen.dedup();
            if seen.len() != ws.len() {
                return Err(bad("repeated w".into()));
            }
            if let Some(&w) = ws
                .iter()
                .find(|&&w| w == u || !g.has_edge(v, w) || g.has_edge(u, w))
            {
                return Err(bad(format!("{w} is not in N({v}) \\ N({u})")));
            }
            let mut out = g.clone();
            for &w in ws {
                out = out.without_edge(v, w)?.with_edge(u, w)?;
            }
            Ok(out)
        }
    }
}

/// The pendant path leaving `v` through `first`, in order away from `v`, if every
/// vertex on it other than the last has degree 2.
fn pendant_path(g: &Graph, v: usize, first: usize) -> Option<Vec<usize>> {
    if !g.has_edge(v, first) {
        return None;
    }
    let mut path = vec![first];
    let (mut prev, mut at) = (v, first);
    loop {
        match g.degree(at) {
            1 => return Some(path),
            2 => {
                let next = *g.neighbors(at).iter().find(|&&x| x != prev)?;
                if next == v {
                    return None;
                }
                path.push(next);
                (prev, at) = (at, next);
            }
            _ => return None,
        }
    }
}

/// Sorted canonical forms of the components of a forest.
fn forest_signature(f: &Graph) -> Vec<CanonicalForm> {
    let mut out: Vec<CanonicalForm> = f
        .component_subgraphs()
        .iter()
        .map(|(c, _)| canonical_form(c).expect("forest components are trees"))
        .collect();
    out.sort();
    out
}

/// Whether tree edge `uv` lies on an internal path: walking away from the edge
/// through degree-2 vertices reaches a vertex of degree at least 3 on both sides.
pub fn is_internal_path_edge(t: &Graph, u: usize, v: usize) -> bool {
    let reaches_branch = |from: usize, start: usize| {
        let (mut prev, mut at) = (from, start);
        loop {
            match t.degree(at) {
                2 => {
                    let next = if t.neighbors(at)[0] == prev {
                        t.neighbors(at)[1]
                    } else {
                        t.neighbors(at)[0]
                    };
                    (prev, at) = (at, next);
                }
                d => return d >= 3,
            }
        }
    };
    t.is_tree() && t.has_edge(u, v) && reaches_branch(v, u) && reaches_branch(u, v)
}

/// The exceptional tree `W_{n-2}`: a path with one extra leaf on each of its two
/// quasi-pendant vertices.
pub fn is_w_graph(t: &Graph) -> bool {
    if !t.is_tree() || t.n() < 6 {
        return false;
    }
    let branch: Vec<usize> = (0..t.n()).filter(|&v| t.degree(v) >= 3).collect();
    branch.len() == 2
        && branch.iter().all(|&b| {
            t.degree(b) == 3 && t.neighbors(b).iter().filter(|&&w| t.is_leaf(w)).count() == 2
        })
}

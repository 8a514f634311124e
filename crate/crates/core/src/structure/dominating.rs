use std::collections::VecDeque;

use super::cmm::connected_maximal_matching;
use super::{quasi_adjacency_graph, ControlSet};
use crate::error::{Error, Result};
use crate::graph::{matching_number, quasi_pendant_vertices, Graph, Matching};

/// A control set of size β that dominates the tree, contains every quasi-pendant
/// vertex, and keeps quasi-adjacent members within distance 2.
#[derive(Debug, Clone)]
pub struct DominatingControlSet {
    pub control: ControlSet,
    pub witness_matching: Matching,
    /// Steps where the construction departed from the greedy choice.
    pub deviations: Vec<String>,
}

/// Violated conditions of a candidate `X`, empty when all hold.
pub fn dominating_violations(t: &Graph, x: &[usize]) -> Vec<String> {
    let mut out = Vec::new();
    let n = t.n();
    let mut in_x = vec![false; n];
    for &v in x {
        in_x[v] = true;
    }
    let beta = matching_number(t);
    if x.len() != beta {
        out.push(format!("|X| = {} but beta = {beta}", x.len()));
    }
    if let Some(v) = (0..n).find(|&v| !in_x[v] && !t.neighbors(v).iter().any(|&u| in_x[u])) {
        out.push(format!("vertex {v} is not dominated"));
    }
    if let Some(q) = quasi_pendant_vertices(t).into_iter().find(|&q| !in_x[q]) {
        out.push(format!("quasi-pendant vertex {q} is not in X"));
    }
    if let Ok(cs) = ControlSet::new(t, x.to_vec()) {
        let qg = quasi_adjacency_graph(&cs);
        for (i, j) in qg.graph.edges() {
            let (u, v) = (qg.index[i], qg.index[j]);
            let d = crate::graph::bfs_distances(t, &[u])[v];
            if d > 2 {
                out.push(format!("quasi-adjacent {u} and {v} at distance {d}"));
            }
        }
    } else {
        out.push("X is not a valid control set".into());
    }
    out
}

/// Matching edges, the vertex-to-edge map, and the initial representative of each edge.
struct Oriented {
    edges: Vec<(usize, usize)>,
    edge_of: Vec<usize>,
    rep: Vec<usize>,
    w_degree: Vec<usize>,
}

impl Oriented {
    fn new(t: &Graph, m: &Matching) -> Self {
        let n = t.n();
        let edges: Vec<(usize, usize)> = m.edges().iter().map(|e| (e.0, e.1)).collect();
        let mut edge_of = vec![usize::MAX; n];
        for (i, &(a, b)) in edges.iter().enumerate() {
            edge_of[a] = i;
            edge_of[b] = i;
        }
        let w_degree: Vec<usize> = (0..n)
            .map(|v| {
                t.neighbors(v)
                    .iter()
                    .filter(|&&w| edge_of[w] == usize::MAX)
                    .count()
            })
            .collect();
        let rep = edges
            .iter()
            .map(|&(a, b)| {
                if w_degree[a] > 0 {
                    a
                } else if w_degree[b] > 0 || (t.is_leaf(a) && !t.is_leaf(b)) {
                    b
                } else if t.is_leaf(b) && !t.is_leaf(a) {
                    a
                } else {
                    a.min(b)
                }
            })
            .collect();
        Oriented {
            edges,
            edge_of,
            rep,
            w_degree,
        }
    }

    fn partner(&self, v: usize) -> usize {
        let (a, b) = self.edges[self.edge_of[v]];
        if a == v {
            b
        } else {
            a
        }
    }

    fn in_x(&self, n: usize) -> Vec<bool> {
        let mut in_x = vec![false; n];
        for &r in &self.rep {
            in_x[r] = true;
        }
        in_x
    }

    fn x(&self) -> Vec<usize> {
        let mut x = self.rep.clone();
        x.sort_unstable();
        x
    }
}

/// X-vertices quasi-adjacent to `c` with their distances, plus the parent map of the search.
fn quasi_neighbours(t: &Graph, in_x: &[bool], c: usize) -> (Vec<(usize, usize)>, Vec<usize>) {
    let n = t.n();
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut found = Vec::new();
    let mut queue = VecDeque::from([c]);
    dist[c] = 0;
    while let Some(u) = queue.pop_front() {
        for &v in t.neighbors(u) {
            if dist[v] != usize::MAX {
                continue;
            }
            dist[v] = dist[u] + 1;
            parent[v] = u;
            if in_x[v] {
                found.push((dist[v], v));
            } else {
                queue.push_back(v);
            }
        }
    }
    found.sort_unstable();
    (found, parent)
}

fn require_hypothesis(t: &Graph) -> Result<Matching> {
    t.require_tree()?;
    let beta = matching_number(t);
    if t.n() < 2 * beta + 1 || beta == 0 {
        return Err(Error::Precondition(format!(
            "n = {} < 2*beta + 1 = {}; too small for the construction",
            t.n(),
            2 * beta + 1
        )));
    }
    connected_maximal_matching(t)
}

/// Runs the layer-by-layer relabeling. Returns the orientation reached and,
/// if some step's assertion failed, a description of it.
fn literal_pass(t: &Graph, o: &mut Oriented) -> Option<String> {
    let n = t.n();
    let Some(start) = o.rep.iter().copied().filter(|&r| o.w_degree[r] > 0).min() else {
        return Some("no representative has a neighbour outside V(M)".into());
    };
    let mut done = vec![false; o.edges.len()];
    done[o.edge_of[start]] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(c) = queue.pop_front() {
        loop {
            let in_x = o.in_x(n);
            let (cands, parent) = quasi_neighbours(t, &in_x, c);
            let cands: Vec<(usize, usize)> = cands
                .into_iter()
                .filter(|&(_, v)| !done[o.edge_of[v]])
                .collect();
            let Some(&(d, first)) = cands.first() else {
                break;
            };
            let target = match d {
                1 | 2 => first,
                3 => {
                    // prefer a path c - u_i - u_t - v_t whose third vertex is matched to the target
                    let pick = cands
                        .iter()
                        .take_while(|&&(dd, _)| dd == 3)
                        .map(|&(_, v)| v)
                        .find(|&v| o.partner(parent[v]) == v);
                    match pick {
                        Some(v) => v,
                        None => {
                            return Some(format!(
                                "distance-3 neighbours of {c} do not form a matched path back to the centre"
                            ))
                        }
                    }
                }
                _ => {
                    return Some(format!(
                        "closest quasi-adjacent vertex of {c} is {first} at distance {d} > 3"
                    ))
                }
            };
            let e = o.edge_of[target];
            match d {
                1 if o.w_degree[target] == 0 && !t.is_leaf(o.partner(target)) => {
                    o.rep[e] = o.partner(target)
                }
                3 => {
                    log::debug!("distance-3 quasi-adjacent pair ({c}, {target}) before adjustment");
                    if o.w_degree[target] > 0 {
                        return Some(format!(
                            "swap at ({c}, {target}): the distance-3 vertex has neighbours outside V(M)"
                        ));
                    }
                    o.rep[e] = o.partner(target);
                }
                _ => {}
            }
            done[e] = true;
            queue.push_back(o.rep[e]);
        }
    }
    let violations = dominating_violations(t, &o.x());
    (!violations.is_empty())
        .then(|| format!("greedy relabeling ended with: {}", violations.join("; ")))
}

/// The greedy construction taken literally; fails with [`Error::ProofStep`] where a
/// greedy step cannot be carried out or leaves a violated condition.
pub fn dominating_control_set_literal(t: &Graph) -> Result<DominatingControlSet> {
    let m = require_hypothesis(t)?;
    let mut o = Oriented::new(t, &m);
    if let Some(msg) = literal_pass(t, &mut o) {
        return Err(Error::ProofStep(msg));
    }
    Ok(DominatingControlSet {
        control: ControlSet::new(t, o.x())?,
        witness_matching: m,
        deviations: Vec::new(),
    })
}

/// Builds X from a connected maximum matching, W-adjacent representatives,
/// quasi-pendant relabeling, then layer-by-layer swaps. The greedy swaps can paint
/// themselves into a corner deeper in the tree, so each matching edge's final
/// orientation is chosen top-down with a feasibility table over the contracted
/// matching tree, keeping the greedy choice whenever it is still completable.
pub fn dominating_control_set(t: &Graph) -> Result<DominatingControlSet> {
    let m = require_hypothesis(t)?;
    let mut o = Oriented::new(t, &m);
    let Some(failure) = literal_pass(t, &mut o) else {
        return Ok(DominatingControlSet {
            control: ControlSet::new(t, o.x())?,
            witness_matching: m,
            deviations: Vec::new(),
        });
    };
    log::debug!("greedy relabeling failed ({failure}); completing by feasibility search");
    let preferred = o.rep.clone();
    let chosen = feasible_orientation(t, &o, &preferred)?;
    let deviations = (0..o.edges.len())
        .filter(|&i| chosen[i] != preferred[i])
        .map(|i| {
            format!(
                "edge {}-{}: representative {} instead of {}",
                o.edges[i].0, o.edges[i].1, chosen[i], preferred[i]
            )
        })
        .chain(std::iter::once(failure))
        .collect();
    o.rep = chosen;
    let violations = dominating_violations(t, &o.x());
    if !violations.is_empty() {
        return Err(Error::ProofStep(violations.join("; ")));
    }
    Ok(DominatingControlSet {
        control: ControlSet::new(t, o.x())?,
        witness_matching: m,
        deviations,
    })
}

/// Picks one endpoint per matching edge so that the picks cover every edge of `t`
/// and include no leaf. Edges between matching edges form a tree, so a two-state
/// table per edge, filled leaves-up, decides feasibility exactly.
fn feasible_orientation(t: &Graph, o: &Oriented, preferred: &[usize]) -> Result<Vec<usize>> {
    let k = o.edges.len();
    let endpoint = |i: usize, s: usize| if s == 0 { o.edges[i].0 } else { o.edges[i].1 };
    let allowed = |i: usize, s: usize| {
        let v = endpoint(i, s);
        let other = endpoint(i, 1 - s);
        !t.is_leaf(v) && o.w_degree[other] == 0
    };
    // contracted tree: links (i, a, j, b) for tree edges a-b with a in edge i, b in edge j
    let mut adj: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); k];
    for (a, b) in t.edges() {
        let (i, j) = (o.edge_of[a], o.edge_of[b]);
        if i != usize::MAX && j != usize::MAX && i != j {
            adj[i].push((a, j, b));
            adj[j].push((b, i, a));
        }
    }
    let root = o.edge_of[*preferred.iter().min().unwrap()];
    let mut order = vec![root];
    let mut parent: Vec<Option<(usize, usize, usize)>> = vec![None; k];
    let mut seen = vec![false; k];
    seen[root] = true;
    let mut head = 0;
    while head < order.len() {
        let i = order[head];
        head += 1;
        for &(a, j, b) in &adj[i] {
            if !seen[j] {
                seen[j] = true;
                parent[j] = Some((i, b, a));
                order.push(j);
            }
        }
    }
    // ok(i, s, p_s): child state s of i is compatible with parent state p_s
    let compatible = |i: usize, s: usize, ps: usize, link: (usize, usize, usize)| {
        let (p, b, a) = link;
        endpoint(i, s) == b || endpoint(p, ps) == a
    };
    let mut feasible = vec![[false; 2]; k];
    for &i in order.iter().rev() {
        for s in 0..2 {
            feasible[i][s] = allowed(i, s)
                && adj[i]
                    .iter()
                    .filter(|&&(_, j, _)| parent[j].is_some_and(|(p, _, _)| p == i))
                    .all(|&(_, j, _)| {
                        (0..2).any(|cs| feasible[j][cs] && compatible(j, cs, s, parent[j].unwrap()))
                    });
        }
    }
    let mut state = vec![usize::MAX; k];
    for &i in &order {
        let pref = if preferred[i] == o.edges[i].0 { 0 } else { 1 };
        let ok = |s: usize| {
            feasible[i][s] && parent[i].is_none_or(|link| compatible(i, s, state[link.0], link))
        };
        state[i] = if ok(pref) {
            pref
        } else if ok(1 - pref) {
            1 - pref
        } else {
            return Err(Error::ProofStep(
                "no leaf-free covering orientation of the matching".into(),
            ));
        };
    }
    Ok((0..k).map(|i| endpoint(i, state[i])).collect())
}

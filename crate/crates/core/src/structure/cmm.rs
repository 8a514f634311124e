use crate::error::{Error, Result};
use crate::graph::{bfs_distances, maximum_matching, Edge, Graph, Matching};

/// Result of [`connected_maximal_matching_traced`]: the matching and the number of
/// components of `T[V(M)]` before each step and at the end.
#[derive(Debug, Clone)]
pub struct ConnectedMatching {
    pub matching: Matching,
    pub component_trace: Vec<usize>,
}

/// Components of `T[covered]`, labelled by smallest vertex; non-covered vertices get `usize::MAX`.
fn covered_components(t: &Graph, covered: &[bool]) -> (Vec<usize>, usize) {
    let n = t.n();
    let mut label = vec![usize::MAX; n];
    let mut count = 0;
    for s in 0..n {
        if !covered[s] || label[s] != usize::MAX {
            continue;
        }
        count += 1;
        label[s] = s;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &v in t.neighbors(u) {
                if covered[v] && label[v] == usize::MAX {
                    label[v] = s;
                    stack.push(v);
                }
            }
        }
    }
    (label, count)
}

/// A maximum matching `M` with `T[V(M)]` connected.
pub fn connected_maximal_matching(t: &Graph) -> Result<Matching> {
    connected_maximal_matching_traced(t).map(|c| c.matching)
}

/// Starts from a maximum matching and merges components of `T[U]` one at a time.
///
/// The nearest matching edge `e_t` outside the largest component `T_l` is always at
/// distance 2 through a vertex `w1` outside `U`. Adding `w1 v_t` alone does not always
/// reduce the component count (the partner `u_t` may be a cut vertex of its component),
/// so the matching is shifted along the alternating path
/// `w1 v_t u_t x_1 y_1 ... z` that ends at a leaf `z` of the component of `e_t`:
/// `w1` joins `U`, `z` leaves it, and the component of `e_t` stays connected while it
/// merges into `T_l`.
pub fn connected_maximal_matching_traced(t: &Graph) -> Result<ConnectedMatching> {
    t.require_tree()?;
    if t.n() < 2 {
        return Err(Error::Precondition(
            "a matching needs at least two vertices".into(),
        ));
    }
    connected_maximal_matching_from(t, &maximum_matching(t))
}

/// As [`connected_maximal_matching_traced`], starting from a given maximum matching.
pub fn connected_maximal_matching_from(t: &Graph, start: &Matching) -> Result<ConnectedMatching> {
    t.require_tree()?;
    if start.len() != crate::graph::matching_number(t) || start.is_empty() {
        return Err(Error::InvalidMatching(
            "start must be a nonempty maximum matching".into(),
        ));
    }
    let n = t.n();
    let mut mate = start.mate_table(n);
    let mut trace = Vec::new();
    loop {
        let covered: Vec<bool> = mate.iter().map(|&m| m != usize::MAX).collect();
        let (label, count) = covered_components(t, &covered);
        trace.push(count);
        if count <= 1 {
            break;
        }
        // largest component, ties to the smallest label
        let mut sizes = vec![0usize; n];
        for &l in label.iter().filter(|&&l| l != usize::MAX) {
            sizes[l] += 1;
        }
        let big = (0..n)
            .filter(|&l| sizes[l] > 0)
            .max_by_key(|&l| (sizes[l], std::cmp::Reverse(l)))
            .unwrap();
        let inside: Vec<usize> = (0..n).filter(|&v| label[v] == big).collect();
        let dist = bfs_distances(t, &inside);

        // nearest matching edge outside T_l; ties by edge then endpoint index
        let (_, e, v_t) = (0..n)
            .filter(|&v| covered[v] && label[v] != big && v < mate[v])
            .flat_map(|v| {
                let e = Edge::new(v, mate[v]);
                [(dist[v], e, v), (dist[mate[v]], e, mate[v])]
            })
            .min()
            .expect("another component exists");
        let d = dist[v_t];
        if d != 2 {
            return Err(Error::ProofStep(format!(
                "nearest matching edge {}-{} at distance {d}, expected 2",
                e.0, e.1
            )));
        }
        let w1 = *t
            .neighbors(v_t)
            .iter()
            .filter(|&&w| dist[w] == 1)
            .min()
            .expect("a distance-2 vertex has a distance-1 neighbour");
        debug_assert!(!covered[w1]);

        // alternating path from v_t to a leaf z of its component
        let mut path = vec![w1, v_t];
        let (mut from, mut at) = (v_t, mate[v_t]);
        loop {
            path.push(at);
            let next = t
                .neighbors(at)
                .iter()
                .copied()
                .filter(|&x| x != from && covered[x])
                .min();
            match next {
                None => break,
                Some(x) => {
                    path.push(x);
                    from = x;
                    at = mate[x];
                }
            }
        }
        let z = *path.last().unwrap();
        mate[z] = usize::MAX;
        for pair in path[..path.len() - 1].chunks(2) {
            mate[pair[0]] = pair[1];
            mate[pair[1]] = pair[0];
        }
        log::trace!("merged via {w1}-{v_t}, released {z}");
        let after = covered_components(
            t,
            &mate.iter().map(|&m| m != usize::MAX).collect::<Vec<_>>(),
        )
        .1;
        if after >= count {
            return Err(Error::ProofStep(format!(
                "component count did not drop ({count} -> {after})"
            )));
        }
    }
    let edges: Vec<(usize, usize)> = (0..n)
        .filter(|&v| mate[v] != usize::MAX && v < mate[v])
        .map(|v| (v, mate[v]))
        .collect();
    Ok(ConnectedMatching {
        matching: Matching::new(t, edges)?,
        component_trace: trace,
    })
}

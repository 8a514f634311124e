use super::QuasiAdjacencyGraph;
use crate::graph::Graph;

/// True when every biconnected block of `g` is complete. Blocks come from
/// Tarjan's edge-stack decomposition.
pub fn is_clique_block_graph(g: &Graph) -> bool {
    biconnected_blocks(g).iter().all(|b| {
        let k = b.vertices.len();
        b.edge_count == k * (k - 1) / 2
    })
}

/// True when the vertex set of every cycle of `qg` induces a clique.
pub fn cycle_clique_check(qg: &QuasiAdjacencyGraph) -> bool {
    every_cycle_is_clique(&qg.graph)
}

/// Two non-adjacent vertices lie on a common cycle iff they are joined by two
/// internally disjoint paths, i.e. no single vertex separates them. Checked by
/// deleting each other vertex in turn.
pub fn every_cycle_is_clique(g: &Graph) -> bool {
    let n = g.n();
    let comp = g.components();
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) || comp[u] != comp[v] {
                continue;
            }
            let separated = (0..n).filter(|&w| w != u && w != v).any(|w| {
                let keep: Vec<usize> = (0..n).filter(|&x| x != w).collect();
                let (h, _) = g.induced(&keep);
                let c = h.components();
                let idx = |x: usize| if x < w { x } else { x - 1 };
                c[idx(u)] != c[idx(v)]
            });
            if !separated {
                return false;
            }
        }
    }
    true
}

struct Block {
    vertices: Vec<usize>,
    edge_count: usize,
}

fn biconnected_blocks(g: &Graph) -> Vec<Block> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks = Vec::new();
    for s in 0..n {
        if disc[s] != usize::MAX {
            continue;
        }
        disc[s] = time;
        low[s] = time;
        time += 1;
        // frames: (vertex, parent, next neighbour position)
        let mut stack = vec![(s, usize::MAX, 0usize)];
        while let Some(&mut (u, p, ref mut i)) = stack.last_mut() {
            if let Some(&v) = g.neighbors(u).get(*i) {
                *i += 1;
                if disc[v] == usize::MAX {
                    disc[v] = time;
                    low[v] = time;
                    time += 1;
                    edge_stack.push((u, v));
                    stack.push((v, u, 0));
                } else if v != p && disc[v] < disc[u] {
                    low[u] = low[u].min(disc[v]);
                    edge_stack.push((u, v));
                }
            } else {
                stack.pop();
                if p != usize::MAX {
                    low[p] = low[p].min(low[u]);
                    if low[u] >= disc[p] {
                        let mut vertices = Vec::new();
                        let mut edge_count = 0;
                        while let Some(e) = edge_stack.pop() {
                            edge_count += 1;
                            vertices.extend([e.0, e.1]);
                            if e == (p, u) {
                                break;
                            }
                        }
                        vertices.sort_unstable();
                        vertices.dedup();
                        blocks.push(Block {
                            vertices,
                            edge_count,
                        });
                    }
                }
            }
        }
    }
    blocks
}

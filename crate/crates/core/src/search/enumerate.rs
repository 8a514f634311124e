use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_ENUMERATION_ORDER: usize = 22;

/// Every unlabeled tree on `n` vertices exactly once, optionally restricted to a
/// matching number. Trees are produced as canonical level sequences in the
/// constant-amortized-time order of Wright, Richmond, Odlyzko and McKay, so no
/// dedup table is kept.
#[derive(Debug, Clone)]
pub struct EnumerationStream {
    n: usize,
    filter_beta: Option<usize>,
    layout: Option<Vec<usize>>,
    single: bool,
}

pub fn enumerate_trees(n: usize) -> Result<EnumerationStream> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(Error::OutOfRange(format!(
            "tree order {n} (supported: 1..={MAX_ENUMERATION_ORDER})"
        )));
    }
    let layout = (n >= 2).then(|| (0..=n / 2).chain(1..n.div_ceil(2)).collect());
    Ok(EnumerationStream {
        n,
        filter_beta: None,
        layout,
        single: n == 1,
    })
}

impl EnumerationStream {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn filter_beta(&self) -> Option<usize> {
        self.filter_beta
    }

    pub fn with_beta(mut self, beta: usize) -> Self {
        self.filter_beta = Some(beta);
        self
    }

    /// Next level sequence (depths in preorder, root at depth 0) passing the filter.
    pub fn next_layout(&mut self) -> Option<Vec<usize>> {
        if self.single {
            self.single = false;
            return (self.filter_beta.unwrap_or(0) == 0).then(|| vec![0]);
        }
        loop {
            let current = next_free_tree(self.layout.take()?);
            self.layout = next_rooted_tree(&current, None);
            if self
                .filter_beta
                .is_none_or(|b| layout_matching_number(&current) == b)
            {
                return Some(current);
            }
        }
    }

    /// Drains the stream, returning the number of trees.
    pub fn count_trees(mut self) -> usize {
        let mut count = 0;
        while self.next_layout().is_some() {
            count += 1;
        }
        count
    }
}

impl Iterator for EnumerationStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        self.next_layout().map(|l| layout_to_graph(&l))
    }
}

/// Parent of each vertex in a level sequence; the root is its own parent.
pub fn layout_parents(layout: &[usize]) -> Vec<usize> {
    let mut parent = vec![0; layout.len()];
    let mut last_at_depth: Vec<usize> = Vec::with_capacity(layout.len());
    for (i, &d) in layout.iter().enumerate() {
        last_at_depth.truncate(d);
        if d > 0 {
            parent[i] = last_at_depth[d - 1];
        }
        last_at_depth.push(i);
    }
    parent
}

pub fn layout_to_graph(layout: &[usize]) -> Graph {
    let parent = layout_parents(layout);
    Graph::from_edges(layout.len(), (1..layout.len()).map(|i| (parent[i], i)))
        .expect("level sequences describe trees")
}

/// Matching number of a level-sequence tree by the leaves-up greedy.
pub fn layout_matching_number(layout: &[usize]) -> usize {
    let parent = layout_parents(layout);
    let mut matched = vec![false; layout.len()];
    let mut size = 0;
    for v in (1..layout.len()).rev() {
        if !matched[v] && !matched[parent[v]] {
            matched[v] = true;
            matched[parent[v]] = true;
            size += 1;
        }
    }
    size
}

/// Next rooted level sequence in reverse lexicographic order, regenerating from
/// position `p` (default: the last position not at depth 1).
fn next_rooted_tree(pred: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = pred.len() - 1;
            while pred[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while pred[q] != pred[p] - 1 {
        q -= 1;
    }
    let mut out = pred.to_vec();
    for i in p..out.len() {
        out[i] = out[i - p + q];
    }
    Some(out)
}

/// Splits off the first subtree of the root: its depths shifted up by one, and the
/// remaining tree.
fn split_tree(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = layout
        .iter()
        .enumerate()
        .filter(|&(_, &d)| d == 1)
        .nth(1)
        .map_or(layout.len(), |(i, _)| i);
    let left = layout[1..m].iter().map(|d| d - 1).collect();
    let rest = std::iter::once(0)
        .chain(layout[m..].iter().copied())
        .collect();
    (left, rest)
}

/// Advances to the first level sequence at or after `candidate` that is the
/// canonical form of a free tree rooted at its center.
fn next_free_tree(candidate: Vec<usize>) -> Vec<usize> {
    let (left, rest) = split_tree(&candidate);
    let lh = left.iter().max().copied().unwrap_or(0);
    let rh = rest.iter().max().copied().unwrap_or(0);
    let valid = rh > lh
        || (rh == lh && (left.len() < rest.len() || (left.len() == rest.len() && left <= rest)));
    if valid {
        return candidate;
    }
    let p = left.len();
    let mut next = next_rooted_tree(&candidate, Some(p)).expect("p is at least one");
    if candidate[p] > 2 {
        let (new_left, _) = split_tree(&next);
        let h = new_left.iter().max().copied().unwrap_or(0);
        let len = next.len();
        for (slot, d) in next[len - (h + 1)..].iter_mut().zip(1..) {
            *slot = d;
        }
    }
    next
}

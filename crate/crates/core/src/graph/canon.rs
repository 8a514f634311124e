use std::collections::VecDeque;
use std::fmt;

use super::Graph;
use crate::error::{Error, Result};

/// AHU parenthesis code of a tree rooted at its center. Equal codes mean isomorphic trees,
/// and the byte order is a total order on isomorphism classes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("codes are ASCII")
    }

    /// Number of vertices of the encoded tree.
    pub fn order(&self) -> usize {
        self.0.len() / 2
    }

    /// Parses a parenthesis code, e.g. `(()())`.
    pub fn parse(s: &str) -> Result<Self> {
        let bytes = s.trim().as_bytes().to_vec();
        let mut depth = 0i64;
        for (i, &b) in bytes.iter().enumerate() {
            depth += match b {
                b'(' => 1,
                b')' => -1,
                _ => return Err(Error::Parse(format!("unexpected character at offset {i}"))),
            };
            if depth <= 0 && i + 1 != bytes.len() {
                return Err(Error::Parse("code is not a single rooted tree".into()));
            }
        }
        if bytes.is_empty() || depth != 0 {
            return Err(Error::Parse("unbalanced code".into()));
        }
        let form = CanonicalForm(bytes);
        let t = form.to_tree();
        if canonical_form(&t)? != form {
            return Err(Error::Parse("code is not in canonical form".into()));
        }
        Ok(form)
    }

    /// Rebuilds a tree; the root is vertex 0 and vertices are numbered in preorder.
    pub fn to_tree(&self) -> Graph {
        let mut edges = Vec::with_capacity(self.order().saturating_sub(1));
        let mut stack: Vec<usize> = Vec::new();
        let mut next = 0;
        for &b in &self.0 {
            if b == b'(' {
                if let Some(&p) = stack.last() {
                    edges.push((p, next));
                }
                stack.push(next);
                next += 1;
            } else {
                stack.pop();
            }
        }
        Graph::from_edges(next, edges).expect("parenthesis codes describe trees")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl serde::Serialize for CanonicalForm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// The one or two vertices left after repeatedly stripping all leaves.
pub fn centers(t: &Graph) -> Result<Vec<usize>> {
    t.require_tree()?;
    let n = t.n();
    if n <= 2 {
        return Ok((0..n).collect());
    }
    let mut deg: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            deg[v] = 0;
            for &u in t.neighbors(v) {
                if deg[u] > 0 {
                    deg[u] -= 1;
                    if deg[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    Ok(layer)
}

/// BFS parent array and order for `t` rooted at `root`.
pub(crate) fn rooted_order(t: &Graph, root: usize) -> (Vec<usize>, Vec<usize>) {
    let mut parent = vec![usize::MAX; t.n()];
    let mut order = Vec::with_capacity(t.n());
    let mut queue = VecDeque::from([root]);
    parent[root] = root;
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for &v in t.neighbors(u) {
            if parent[v] == usize::MAX {
                parent[v] = u;
                queue.push_back(v);
            }
        }
    }
    (parent, order)
}

/// AHU codes of every rooted subtree when `t` hangs from `root`.
pub(crate) fn subtree_codes(t: &Graph, root: usize) -> (Vec<usize>, Vec<Vec<u8>>) {
    let (parent, order) = rooted_order(t, root);
    let mut children: Vec<Vec<Vec<u8>>> = vec![Vec::new(); t.n()];
    let mut codes = vec![Vec::new(); t.n()];
    for &v in order.iter().rev() {
        let mut kids = std::mem::take(&mut children[v]);
        kids.sort_unstable();
        let mut code = Vec::with_capacity(2 + kids.iter().map(Vec::len).sum::<usize>());
        code.push(b'(');
        for k in &kids {
            code.extend_from_slice(k);
        }
        code.push(b')');
        if v != root {
            children[parent[v]].push(code.clone());
        }
        codes[v] = code;
    }
    (parent, codes)
}

/// AHU code of `t` rooted at `root`; equal exactly for isomorphic rooted trees.
pub fn rooted_code(t: &Graph, root: usize) -> Result<Vec<u8>> {
    t.require_tree()?;
    t.check_vertex(root)?;
    let (_, mut codes) = subtree_codes(t, root);
    Ok(std::mem::take(&mut codes[root]))
}

pub fn canonical_form(t: &Graph) -> Result<CanonicalForm> {
    let cs = centers(t)?;
    let best = cs
        .iter()
        .map(|&c| {
            let (_, mut codes) = subtree_codes(t, c);
            std::mem::take(&mut codes[c])
        })
        .min()
        .ok_or(Error::NotATree)?;
    Ok(CanonicalForm(best))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut p: Vec<usize> = (0..n).collect();
        fn rec(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if k == p.len() {
                out.push(p.clone());
                return;
            }
            for i in k..p.len() {
                p.swap(k, i);
                rec(k + 1, p, out);
                p.swap(k, i);
            }
        }
        rec(0, &mut p, &mut out);
        out
    }

    /// Isomorphism by trying every bijection.
    fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
        a.n() == b.n()
            && a.m() == b.m()
            && permutations(a.n())
                .iter()
                .any(|p| a.edges().all(|(u, v)| b.has_edge(p[u], p[v])))
    }

    /// Every labeled tree on n vertices via Prüfer sequences.
    fn labeled_trees(n: usize) -> Vec<Graph> {
        if n <= 2 {
            return vec![Graph::path(n)];
        }
        let k = n - 2;
        let total = n.pow(k as u32);
        (0..total)
            .map(|mut code| {
                let seq: Vec<usize> = (0..k)
                    .map(|_| {
                        let d = code % n;
                        code /= n;
                        d
                    })
                    .collect();
                let mut deg = vec![1; n];
                for &s in &seq {
                    deg[s] += 1;
                }
                let mut edges = Vec::new();
                for &s in &seq {
                    let leaf = (0..n).find(|&v| deg[v] == 1).unwrap();
                    edges.push((leaf, s));
                    deg[leaf] -= 1;
                    deg[s] -= 1;
                }
                let rest: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
                edges.push((rest[0], rest[1]));
                Graph::from_edges(n, edges).unwrap()
            })
            .collect()
    }

    #[test]
    fn p3_labelings_share_one_code() {
        let p3 = Graph::path(3);
        let codes: std::collections::BTreeSet<_> = permutations(3)
            .iter()
            .map(|p| canonical_form(&p3.relabel(p).unwrap()).unwrap())
            .collect();
        assert_eq!(codes.len(), 1);
    }

    #[test]
    fn p4_against_star() {
        let p4 = Graph::path(4);
        let c = canonical_form(&p4).unwrap();
        for p in permutations(4) {
            assert_eq!(canonical_form(&p4.relabel(&p).unwrap()).unwrap(), c);
        }
        assert_ne!(c, canonical_form(&Graph::star(3)).unwrap());
    }

    #[test]
    fn unlabeled_counts_up_to_eight() {
        let known = [1, 1, 1, 2, 3, 6, 11, 23];
        for n in 1..=8 {
            let classes: std::collections::HashSet<_> = labeled_trees(n)
                .iter()
                .map(|t| canonical_form(t).unwrap())
                .collect();
            assert_eq!(classes.len(), known[n - 1], "n = {n}");
        }
    }

    #[test]
    fn codes_agree_with_brute_force_isomorphism() {
        let trees = labeled_trees(6);
        let sample: Vec<_> = trees.iter().step_by(37).collect();
        for a in &sample {
            for b in &sample {
                let same = canonical_form(a).unwrap() == canonical_form(b).unwrap();
                assert_eq!(same, brute_isomorphic(a, b));
            }
        }
    }

    #[test]
    fn centers_and_round_trip() {
        assert_eq!(centers(&Graph::path(5)).unwrap(), vec![2]);
        assert_eq!(centers(&Graph::path(6)).unwrap(), vec![2, 3]);
        assert_eq!(centers(&Graph::star(4)).unwrap(), vec![0]);
        assert_eq!(centers(&Graph::path(1)).unwrap(), vec![0]);
        for t in labeled_trees(7).iter().step_by(101) {
            let c = canonical_form(t).unwrap();
            assert_eq!(c.order(), 7);
            let back = c.to_tree();
            assert_eq!(canonical_form(&back).unwrap(), c);
            assert_eq!(CanonicalForm::parse(c.as_str()).unwrap(), c);
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(canonical_form(&Graph::cycle(4)), Err(Error::NotATree));
        assert!(CanonicalForm::parse("(()").is_err());
        assert!(CanonicalForm::parse("()()").is_err());
        assert!(CanonicalForm::parse("(()(()))").is_err());
        assert!(CanonicalForm::parse("(x)").is_err());
    }
}

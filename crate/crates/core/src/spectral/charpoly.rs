use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use num_bigint::BigInt;
use num_traits::Zero;

use super::Polynomial;
use crate::graph::{rooted_order, subtree_codes, Graph};

const MEMO_CAP: usize = 1 << 17;

/// Rooted subtree code -> (φ(T_v), φ(T_v - v)).
type Memo = HashMap<Vec<u8>, Rc<(Polynomial, Polynomial)>>;

thread_local! {
    static MEMO: RefCell<Memo> = RefCell::new(HashMap::new());
}

/// Characteristic polynomial `det(xI - A)`. Forests use the edge-joining recursion
/// `φ(GuvH) = φ(G)φ(H) - φ(G-u)φ(H-v)` memoized on rooted subtree codes; other graphs
/// use the Faddeev–LeVerrier trace recursion in exact integers.
pub fn char_poly(g: &Graph) -> Polynomial {
    if g.n() == 0 {
        return Polynomial::one();
    }
    if !g.is_forest() {
        return faddeev_leverrier(g);
    }
    if g.is_connected() {
        return tree_char_poly(g);
    }
    g.component_subgraphs()
        .iter()
        .fold(Polynomial::one(), |acc, (t, _)| &acc * &tree_char_poly(t))
}

fn tree_char_poly(t: &Graph) -> Polynomial {
    let (parent, codes) = subtree_codes(t, 0);
    let (_, order) = rooted_order(t, 0);
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); t.n()];
    for &v in &order[1..] {
        children[parent[v]].push(v);
    }
    let mut done: Vec<Option<Rc<(Polynomial, Polynomial)>>> = vec![None; t.n()];
    MEMO.with(|memo| {
        let mut memo = memo.borrow_mut();
        if memo.len() > MEMO_CAP {
            memo.clear();
        }
        for &v in order.iter().rev() {
            if let Some(hit) = memo.get(&codes[v]) {
                done[v] = Some(hit.clone());
                continue;
            }
            let mut phi = Polynomial::x();
            let mut phi_minus = Polynomial::one();
            for &c in &children[v] {
                let sub = done[c].as_ref().expect("children first");
                phi = &(&phi * &sub.0) - &(&phi_minus * &sub.1);
                phi_minus = &phi_minus * &sub.0;
            }
            let entry = Rc::new((phi, phi_minus));
            memo.insert(codes[v].clone(), entry.clone());
            done[v] = Some(entry);
        }
    });
    done[0].take().expect("root computed").0.clone()
}

fn mul_checked(a: &[i64], b: &[i64]) -> Option<Vec<i64>> {
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = out[i + j].checked_add(x as i128 * y as i128)?;
        }
    }
    out.into_iter().map(|c| i64::try_from(c).ok()).collect()
}

fn sub_checked(a: &[i64], b: &[i64]) -> Option<Vec<i64>> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            a.get(i)
                .copied()
                .unwrap_or(0)
                .checked_sub(b.get(i).copied().unwrap_or(0))
        })
        .collect()
}

/// Tree characteristic polynomial in machine integers, without memoization; `None`
/// on overflow or when `t` is not a tree.
pub fn tree_char_poly_i64(t: &Graph) -> Option<Vec<i64>> {
    if !t.is_tree() {
        return None;
    }
    let (parent, order) = rooted_order(t, 0);
    rooted_char_poly_i64(&parent, &order)
}

/// Machine-integer characteristic polynomial of a rooted tree given by `parent` and a
/// top-down vertex `order` starting at the root; `None` on overflow.
pub(crate) fn rooted_char_poly_i64(parent: &[usize], order: &[usize]) -> Option<Vec<i64>> {
    let n = parent.len();
    let mut phi: Vec<Vec<i64>> = vec![vec![0, 1]; n];
    let mut phi_minus: Vec<Vec<i64>> = vec![vec![1]; n];
    for &v in order[1..].iter().rev() {
        let p = parent[v];
        let joined = sub_checked(
            &mul_checked(&phi[p], &phi[v])?,
            &mul_checked(&phi_minus[p], &phi_minus[v])?,
        )?;
        phi_minus[p] = mul_checked(&phi_minus[p], &phi[v])?;
        phi[p] = joined;
    }
    let mut out = std::mem::take(&mut phi[order[0]]);
    while out.last() == Some(&0) {
        out.pop();
    }
    Some(out)
}

/// `c_{n-k} = -tr(A M_k) / k` with `M_k = A M_{k-1} + c_{n-k+1} I`.
fn faddeev_leverrier(g: &Graph) -> Polynomial {
    let n = g.n();
    let mut c = vec![BigInt::zero(); n + 1];
    c[n] = BigInt::from(1);
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        let mut next = vec![vec![BigInt::zero(); n]; n];
        for (i, row) in next.iter_mut().enumerate() {
            for &u in g.neighbors(i) {
                for (x, y) in row.iter_mut().zip(&m[u]) {
                    *x += y;
                }
            }
            row[i] += &c[n - k + 1];
        }
        m = next;
        let mut trace = BigInt::zero();
        for (i, row) in m.iter().enumerate() {
            for &u in g.neighbors(i) {
                trace += &row[u];
            }
        }
        c[n - k] = -(trace / BigInt::from(k));
    }
    Polynomial::new(c)
}
